// Copyright 2026 The syzcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "syzcert/curve.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <regex>

namespace syzcert {

std::string coeff_text(const FieldElem& c) {
  std::string s = c.to_string();
  return s.find('+') == std::string::npos ? s : "(" + s + ")";
}

std::string coeff_text(const UniPoly& c) {
  std::string s = c.to_string("t");
  return s.find(' ') == std::string::npos && s.find('(') == std::string::npos ? s : "(" + s + ")";
}

std::string monomial_text(const Exp3& e) {
  std::string out;
  const std::array<std::pair<char, int>, 3> parts{{{'x', e.i}, {'y', e.j}, {'z', e.k}}};
  for (const auto& [v, n] : parts) {
    if (n == 0) continue;
    if (!out.empty()) out += '*';
    out += v;
    if (n > 1) out += "^" + std::to_string(n);
  }
  return out;
}

FPoly3 specialize_coeffs(const TPoly3& f, const FieldElem& t0) {
  return f.map_coeffs([&](const UniPoly& c) { return c.is_zero() ? t0.ctx().zero() : c.eval(t0); });
}

TPoly3 as_family(const FPoly3& f) {
  return f.map_coeffs([](const FieldElem& c) { return UniPoly::constant(c); });
}

CurveFamily standard_family(std::uint32_t p, int delta) {
  if (delta <= 0 || delta % 2 != 0) throw PreconditionError("curve degree must be a positive even number");
  const FieldCtx& fp = ff_create(p, 1);
  const UniPoly one = UniPoly::constant(fp.one());
  TPoly3 G(UniPoly(fp), delta);
  G.add_term({delta, 0, 0}, one);
  G.add_term({0, delta, 0}, one);
  G.add_term({delta / 2, delta / 2, 0}, UniPoly::variable(fp));
  G.add_term({0, 0, delta}, -one);
  return {p, delta, G};
}

CurveSpec make_curve(const FieldCtx& field, const FPoly3& G) {
  if (G.coeff({0, 0, G.degree()}).is_zero()) {
    throw PreconditionError("curve equation is not monic in z: " + G.to_string());
  }
  return {&field, G.degree(), G};
}

CurveSpec fermat_curve(const FieldCtx& field, int delta) {
  FPoly3 G(field.zero(), delta);
  G.add_term({delta, 0, 0}, field.one());
  G.add_term({0, delta, 0}, field.one());
  G.add_term({0, 0, delta}, -field.one());
  return make_curve(field, G);
}

CurveSpec specialize(const CurveFamily& family, const FieldElem& t0) {
  if (t0.ctx().p() != family.p) throw PreconditionError("parameter lies in a field of another characteristic");
  return make_curve(t0.ctx(), specialize_coeffs(family.G, t0));
}

const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::kSmooth:
      return "smooth";
    case Smoothness::kSingular:
      return "singular";
    case Smoothness::kInseparable:
      return "inseparable (all partial derivatives vanish)";
  }
  return "?";
}

Smoothness smoothness(const CurveSpec& curve) {
  std::vector<FPoly3> elems;
  for (int v = 0; v < 3; ++v) {
    FPoly3 d = curve.G.partial(v);
    if (!d.is_zero()) elems.push_back(std::move(d));
  }
  if (elems.empty()) return Smoothness::kInseparable;
  elems.push_back(curve.G);
  const GradedRing ring = GradedRing::polynomial(curve.field->zero());
  return quotient_vanishes(ring, elems, curve.delta) ? Smoothness::kSmooth : Smoothness::kSingular;
}

bool is_smooth_fibre(const CurveSpec& curve) { return smoothness(curve) == Smoothness::kSmooth; }

GradedRing curve_ring(const CurveSpec& curve) { return GradedRing::curve(curve.G); }

FPoly3 normal_form(const FPoly3& f, const CurveSpec& curve) { return curve_ring(curve).normal_form(f); }

std::size_t graded_dim(const CurveSpec& curve, int d) {
  if (d < 0) throw PreconditionError("negative degree");
  return curve_ring(curve).dim(d);
}

namespace {

void accumulate(GFMatrix& m, std::size_t r, std::size_t c, const FieldElem& v) {
  const ExtArith& ar = m.arith();
  m.set(r, c, ar.add(m.at(r, c), v.to_ext()));
}

}  // namespace

GFMatrix mult_matrix(const GradedRing& ring, const FPoly3& f, int m) {
  const FPoly3 gens[] = {f};
  return block_matrix(ring, gens, m + f.degree());
}

GFMatrix mult_matrix(const CurveSpec& curve, const FPoly3& f, int m) { return mult_matrix(curve_ring(curve), f, m); }

GFMatrix block_matrix(const GradedRing& ring, std::span<const FPoly3> gens, int m, std::vector<std::size_t>* offsets) {
  std::size_t cols = 0;
  for (const auto& g : gens) cols += ring.dim(m - g.degree());
  GFMatrix out(ring.zero().ctx(), ring.dim(m), cols);
  auto off = ring.scatter_block(gens, m, [&](std::size_t r, std::size_t c, const FieldElem& v) { accumulate(out, r, c, v); });
  if (offsets) *offsets = std::move(off);
  return out;
}

std::size_t quotient_hilbert(const GradedRing& ring, std::span<const FPoly3> elems, int d) {
  const std::size_t total = ring.dim(d);
  if (total == 0) return 0;
  return total - rank(block_matrix(ring, elems, d));
}

bool quotient_vanishes(const GradedRing& ring, std::span<const FPoly3> elems, int delta_hint) {
  if (elems.empty()) return false;
  std::vector<int> degs;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    degs.push_back(e.degree());
  }
  if (degs.empty()) return false;
  std::sort(degs.begin(), degs.end());
  int sum = 0;
  for (int d : degs) sum += d;
  const int dmax = sum + 3 * delta_hint;

  int lower = 0;
  for (; lower < dmax; ++lower) {
    std::size_t cols = 0;
    for (int d : degs) cols += ring.dim(lower - d);
    if (cols >= ring.dim(lower)) break;
  }
  std::vector<int> probes{lower, dmax};
  const std::size_t n = degs.size();
  if (ring.kind() == RingKind::kCurve && n >= 2) probes.push_back(ring.delta() + degs[0] + degs[1] - 2);
  if (ring.kind() == RingKind::kPolynomial && n >= 3) probes.push_back(degs[0] + degs[1] + degs[2] - 2);
  if (ring.kind() == RingKind::kBinary && n >= 2) probes.push_back(degs[0] + degs[1] - 1);
  std::sort(probes.begin(), probes.end());
  for (int d : probes) {
    if (d < lower || d > dmax) continue;
    if (quotient_hilbert(ring, elems, d) == 0) return true;
  }
  return false;
}

std::vector<UniPoly> power_coeffs(const HomPoly2<UniPoly>& f, int l) {
  if (l < 0) throw PreconditionError("negative exponent");
  return f.pow(l).coeffs();
}

HomPoly2<UniPoly> standard_binary_form(std::uint32_t p, int delta) {
  const FieldCtx& fp = ff_create(p, 1);
  HomPoly2<UniPoly> f(UniPoly(fp), delta);
  f.set_coeff(0, UniPoly::constant(fp.one()));
  f.set_coeff(delta, UniPoly::constant(fp.one()));
  f.set_coeff(delta / 2, f.coeff(delta / 2) + UniPoly::variable(fp));
  return f;
}

// ---------------------------------------------------------------------------
// Text parsing into a general sparse polynomial in x, y, z, t, w.

namespace {

using Key = std::array<int, 5>;  // exponents of x, y, z, t, w
using Gen = std::map<Key, std::int64_t>;

class Parser {
 public:
  Parser(std::string_view s, std::uint32_t p) : s_(s), p_(p) {}

  Gen parse_all() {
    Gen g = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PreconditionError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  std::int64_t reduce(std::int64_t v) const { return static_cast<std::int64_t>(reduce_int(v, p_)); }

  Gen add(Gen a, const Gen& b, std::int64_t sign) const {
    for (const auto& [k, c] : b) {
      std::int64_t& slot = a[k];
      slot = reduce(slot + sign * c);
      if (slot == 0) a.erase(k);
    }
    return a;
  }
  Gen mul(const Gen& a, const Gen& b) const {
    Gen out;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        Key k;
        for (int i = 0; i < 5; ++i) k[static_cast<std::size_t>(i)] = ka[static_cast<std::size_t>(i)] + kb[static_cast<std::size_t>(i)];
        std::int64_t& slot = out[k];
        slot = reduce(slot + reduce(ca * cb));
        if (slot == 0) out.erase(k);
      }
    return out;
  }

  std::int64_t number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + (s_[pos_] - '0')) % static_cast<std::int64_t>(p_);
      ++pos_;
    }
    return v;
  }
  int exponent() {
    skip();
    int v = 0;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an exponent");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return v;
  }

  Gen expr() {
    Gen acc;
    std::int64_t sign = 1;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      sign = -1;
    }
    acc = add(acc, term(), sign);
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = add(acc, term(), 1);
      } else if (peek('-')) {
        ++pos_;
        acc = add(acc, term(), -1);
      } else {
        return acc;
      }
    }
  }

  bool factor_starts() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::string_view("xyztw").find(c) != std::string_view::npos;
  }

  Gen term() {
    Gen acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, factor());
      } else if (factor_starts()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Gen factor() {
    Gen base = primary();
    if (peek('^')) {
      ++pos_;
      const int e = exponent();
      Gen out{{Key{}, 1}};
      for (int i = 0; i < e; ++i) out = mul(out, base);
      return out;
    }
    return base;
  }

  Gen primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Gen g = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return g;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::int64_t v = number();
      return v == 0 ? Gen{} : Gen{{Key{}, v}};
    }
    const auto slot = std::string_view("xyztw").find(c);
    if (slot == std::string_view::npos) fail(std::string("unknown symbol '") + c + "'");
    ++pos_;
    Key k{};
    k[slot] = 1;
    return Gen{{k, 1}};
  }

  std::string_view s_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

int common_degree(const Gen& g, std::string_view text) {
  int degree = -1;
  for (const auto& [k, c] : g) {
    const int d = k[0] + k[1] + k[2];
    if (degree >= 0 && d != degree) throw PreconditionError("not homogeneous in x, y, z: " + std::string(text));
    degree = d;
  }
  return std::max(degree, 0);
}

}  // namespace

TPoly3 parse_tpoly3(const FieldCtx& prime_field, std::string_view text) {
  const Gen g = Parser(text, prime_field.p()).parse_all();
  TPoly3 out(UniPoly(prime_field), common_degree(g, text));
  for (const auto& [k, c] : g) {
    if (k[4] != 0) throw PreconditionError("w is not allowed in a family over F_p[t]");
    out.add_term({k[0], k[1], k[2]}, UniPoly::monomial(prime_field.from_int(c), static_cast<std::size_t>(k[3])));
  }
  return out;
}

FPoly3 parse_fpoly3(const FieldCtx& field, std::string_view text) {
  const Gen g = Parser(text, field.p()).parse_all();
  FPoly3 out(field.zero(), common_degree(g, text));
  for (const auto& [k, c] : g) {
    if (k[3] != 0) throw PreconditionError("the parameter t cannot appear in a single curve");
    FieldElem v = field.from_int(c);
    if (k[4] > 0) v = v * field.generator().pow(static_cast<std::uint64_t>(k[4]));
    out.add_term({k[0], k[1], k[2]}, v);
  }
  return out;
}

CurveFamily parse_family(std::string_view text) {
  const std::string s(text);
  std::smatch mp, md, mg;
  if (!std::regex_search(s, mp, std::regex(R"(\bp\s*=\s*(\d+))"))) throw PreconditionError("missing p=<prime>");
  if (!std::regex_search(s, md, std::regex(R"(\bdelta\s*=\s*(\d+))"))) throw PreconditionError("missing delta=<degree>");
  if (!std::regex_search(s, mg, std::regex(R"(\bG\s*=\s*(.+)$)"))) throw PreconditionError("missing G = <equation>");
  const std::uint32_t p = static_cast<std::uint32_t>(std::stoul(mp[1].str()));
  const int delta = std::stoi(md[1].str());
  const FieldCtx& fp = ff_create(p, 1);
  TPoly3 G = parse_tpoly3(fp, mg[1].str());
  if (G.degree() != delta) throw PreconditionError("G has degree " + std::to_string(G.degree()) + ", expected delta");
  if (!is_unit(G.coeff({0, 0, delta}))) throw PreconditionError("G is not monic in z");
  return {p, delta, G};
}

}  // namespace syzcert
