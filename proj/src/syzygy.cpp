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
#include "syzcert/syzygy.hpp"

#include <algorithm>
#include <regex>

#include "syzcert/residue.hpp"

namespace syzcert {

namespace {

FieldElem frob_coeff(const FieldElem& c, std::uint64_t q) { return c.pow(q); }

UniPoly frob_coeff(const UniPoly& c, std::uint64_t q) {
  UniPoly out(c.ctx());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i <= *c.degree(); ++i) {
    const FieldElem ci = c.coeff(i);
    if (!ci.is_zero()) out = out + UniPoly::monomial(ci.pow(q), i * q);
  }
  return out;
}

std::optional<FieldElem> exact_div(const FieldElem& a, const FieldElem& b) { return a / b; }

std::optional<UniPoly> exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::vector<std::uint32_t> uint_range(std::span<const FPoly3> gens) {
  std::vector<std::uint32_t> d;
  for (const auto& g : gens) d.push_back(static_cast<std::uint32_t>(g.degree()));
  return d;
}

}  // namespace

template <class C>
HomPoly3<C> frobenius_power(const HomPoly3<C>& f, std::uint64_t q) {
  HomPoly3<C> out(f.zero_coeff(), static_cast<int>(static_cast<std::uint64_t>(f.degree()) * q));
  const int qi = static_cast<int>(q);
  for (const auto& [e, c] : f.terms()) out.add_term({e.i * qi, e.j * qi, e.k * qi}, frob_coeff(c, q));
  return out;
}

template HomPoly3<FieldElem> frobenius_power(const HomPoly3<FieldElem>&, std::uint64_t);
template HomPoly3<UniPoly> frobenius_power(const HomPoly3<UniPoly>&, std::uint64_t);

GeneratorTuple frobenius_gens(std::span<const FPoly3> gens, int e) {
  if (e < 0) throw PreconditionError("negative Frobenius exponent");
  GeneratorTuple out;
  for (const auto& g : gens) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) q *= g.zero_coeff().ctx().p();
    out.push_back(frobenius_power(g, q));
  }
  return out;
}

GeneratorTuple monomial_gens(const FieldCtx& field, int a) {
  return {FPoly3::monomial(field.one(), {a, 0, 0}), FPoly3::monomial(field.one(), {0, a, 0}),
          FPoly3::monomial(field.one(), {0, 0, a})};
}

std::vector<SyzygyVector> syzygy_space(const GradedRing& ring, std::span<const FPoly3> gens, int m) {
  if (m < 0) throw PreconditionError("negative total degree");
  std::vector<std::size_t> offsets;
  const GFMatrix mat = block_matrix(ring, gens, m, &offsets);
  const FieldCtx& field = ring.zero().ctx();
  std::vector<SyzygyVector> out;
  if (mat.cols() == 0) return out;
  for (const auto& v : kernel_basis(mat)) {
    SyzygyVector s;
    s.degree = m;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::vector<FieldElem> coords;
      for (std::size_t c = offsets[i]; c < offsets[i + 1]; ++c) coords.push_back(FieldElem::from_ext(field, v[c]));
      const int d = m - gens[i].degree();
      s.comps.push_back(d < 0 ? FPoly3(field.zero(), 0) : ring.from_coordinates(d, coords));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SyzygyVector> syzygy_space(const CurveSpec& curve, std::span<const FPoly3> gens, int m) {
  return syzygy_space(curve_ring(curve), gens, m);
}

std::size_t syzygy_dimension(const GradedRing& ring, std::span<const FPoly3> gens, int m) {
  const GFMatrix mat = block_matrix(ring, gens, m);
  return mat.cols() - rank(mat);
}

std::optional<MinimalSyzygies> first_syzygies(const GradedRing& ring, std::span<const FPoly3> gens, int from, int to) {
  for (int m = std::max(from, 0); m <= to; ++m) {
    if (syzygy_dimension(ring, gens, m) == 0) continue;
    return MinimalSyzygies{m, syzygy_space(ring, gens, m)};
  }
  return std::nullopt;
}

MinimalSyzygies minimal_syzygy_degree(std::span<const FPoly3> gens) {
  if (gens.size() < 2) throw PreconditionError("need at least two generators");
  for (const auto& g : gens) {
    if (g.is_zero()) throw PreconditionError("zero generator");
    if (g.max_z_degree() > 0) throw PreconditionError("generator involves z; expected a binary form");
  }
  const auto degs = uint_range(gens);
  int lo = static_cast<int>(*std::min_element(degs.begin(), degs.end()));
  int hi = INT_MAX;
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = i + 1; j < degs.size(); ++j) hi = std::min(hi, static_cast<int>(degs[i] + degs[j]));
  const GradedRing ring = GradedRing::binary(gens[0].zero_coeff());
  auto found = first_syzygies(ring, gens, lo, hi);
  if (!found) throw ConsistencyError("no syzygy up to the Koszul degree");
  return *found;
}

const char* to_string(Which w) { return w == Which::kFl ? "F_l" : "F_l+1"; }

SyzygyVector lift_section(const CurveSpec& curve, int aq, const SyzygyVector& s, Which which, int r) {
  const int delta = curve.delta;
  if (r <= 0 || r >= delta) throw PreconditionError("remainder r must satisfy 0 < r < delta");
  if (s.comps.size() != 3) throw PreconditionError("lifting needs a triple");
  const FieldCtx& field = *curve.field;
  auto embed = [&](const FPoly3& f) { return f.map_coeffs([&](const FieldElem& c) { return field.embed(c); }); };
  SyzygyVector out;
  if (which == Which::kFl) {
    out.degree = s.degree + r;
    out.comps = {embed(s.comps[0]).shifted({0, 0, r}), embed(s.comps[1]).shifted({0, 0, r}), embed(s.comps[2])};
  } else {
    out.degree = s.degree;
    out.comps = {embed(s.comps[0]), embed(s.comps[1]), embed(s.comps[2]).shifted({0, 0, delta - r})};
  }
  // zero components carry the right degree
  const int gd[] = {aq, aq, aq};
  for (int i = 0; i < 3; ++i) {
    if (out.comps[static_cast<std::size_t>(i)].is_zero()) out.comps[static_cast<std::size_t>(i)] = FPoly3(field.zero(), out.degree - gd[i]);
  }
  if (s.is_zero()) return out;
  for (const auto& c : out.comps) {
    if (!c.is_zero() && c.degree() != out.degree - aq) {
      throw ConsistencyError("lifted components do not match degree " + std::to_string(out.degree) + " for x^aq");
    }
  }
  const GradedRing ring = curve_ring(curve);
  for (auto& c : out.comps) c = ring.normal_form(c);
  const GeneratorTuple gens = monomial_gens(field, aq);
  if (!verify_syzygy<FieldElem>(ring, gens, out)) {
    throw ConsistencyError("lifted section is not a syzygy of (x^aq, y^aq, z^aq): " + out.to_string());
  }
  return out;
}

std::size_t hilbert_function(const CurveSpec& curve, std::span<const FPoly3> elems, int d) {
  return quotient_hilbert(curve_ring(curve), elems, d);
}

bool is_primary(const CurveSpec& curve, std::span<const FPoly3> elems) {
  std::vector<FPoly3> nz;
  for (const auto& e : elems)
    if (!e.is_zero()) nz.push_back(e);
  return quotient_vanishes(curve_ring(curve), nz, curve.delta);
}

bool is_primary_generic(const GradedRingT<UniPoly>& ring, std::span<const TPoly3> elems) {
  std::vector<TPoly3> nz;
  for (const auto& e : elems)
    if (!e.is_zero()) nz.push_back(e);
  if (nz.empty()) return false;
  const FieldCtx& fp = ring.zero().ctx();
  int sum = 0;
  for (const auto& e : nz) sum += e.degree();
  const int dmax = sum + 3 * std::max(ring.delta(), 1);
  std::vector<int> probes;
  if (nz.size() >= 2) {
    std::vector<int> degs;
    for (const auto& e : nz) degs.push_back(e.degree());
    std::sort(degs.begin(), degs.end());
    probes.push_back(ring.delta() + degs[0] + degs[1] - 2);
  }
  probes.push_back(dmax);
  for (int d : probes) {
    if (d > dmax || d < 0) continue;
    std::size_t cols = 0;
    for (const auto& e : nz) cols += ring.dim(d - e.degree());
    std::vector<std::vector<UniPoly>> m(ring.dim(d), std::vector<UniPoly>(cols, UniPoly(fp)));
    ring.scatter_block(std::span<const TPoly3>(nz), d,
                       [&](std::size_t r, std::size_t c, const UniPoly& v) { m[r][c] = m[r][c] + v; });
    if (generic_rank(m, fp) == ring.dim(d)) return true;
  }
  return false;
}

template <class C>
std::optional<C> rank2_trivialization_check(const GradedRingT<C>& ring, std::span<const HomPoly3<C>> gens,
                                            const SyzygyVectorT<C>& s, const SyzygyVectorT<C>& u) {
  if (gens.size() != 3 || s.comps.size() != 3 || u.comps.size() != 3) {
    throw PreconditionError("trivialization check needs three generators and two triples");
  }
  if (!verify_syzygy(ring, gens, s) || !verify_syzygy(ring, gens, u)) {
    throw PreconditionError("trivialization check received a non-syzygy");
  }
  if (s.degree + u.degree != gens[0].degree() + gens[1].degree() + gens[2].degree()) {
    throw PreconditionError("section degrees do not add up to the sum of generator degrees");
  }
  auto minor = [&](int a, int b, int deg) {
    HomPoly3<C> out(ring.zero(), deg);
    const auto& sa = s.comps[static_cast<std::size_t>(a)];
    const auto& sb = s.comps[static_cast<std::size_t>(b)];
    const auto& ua = u.comps[static_cast<std::size_t>(a)];
    const auto& ub = u.comps[static_cast<std::size_t>(b)];
    if (!sa.is_zero() && !ub.is_zero()) out = out + sa * ub;
    if (!sb.is_zero() && !ua.is_zero()) out = out - sb * ua;
    return ring.normal_form(out);
  };
  const HomPoly3<C> mins[3] = {minor(1, 2, gens[0].degree()), minor(2, 0, gens[1].degree()),
                               minor(0, 1, gens[2].degree())};
  std::optional<C> c;
  for (int i = 0; i < 3 && !c; ++i) {
    const HomPoly3<C> f = ring.normal_form(gens[static_cast<std::size_t>(i)]);
    if (f.is_zero()) continue;
    const auto& [e, lead] = *f.terms().begin();
    c = exact_div(mins[i].coeff(e), lead);
    if (!c) return std::nullopt;
  }
  if (!c || c->is_zero()) return std::nullopt;
  for (int i = 0; i < 3; ++i) {
    if (mins[i] != *c * ring.normal_form(gens[static_cast<std::size_t>(i)])) return std::nullopt;
  }
  return c;
}

template std::optional<FieldElem> rank2_trivialization_check(const GradedRingT<FieldElem>&, std::span<const FPoly3>,
                                                             const SyzygyVectorT<FieldElem>&,
                                                             const SyzygyVectorT<FieldElem>&);
template std::optional<UniPoly> rank2_trivialization_check(const GradedRingT<UniPoly>&, std::span<const TPoly3>,
                                                           const SyzygyVectorT<UniPoly>&, const SyzygyVectorT<UniPoly>&);

SyzygyVector parse_syzygy(const FieldCtx& field, std::string_view text, std::span<const FPoly3> gens) {
  static const std::regex re(R"(^\s*\(([^)]*(?:\([^)]*\)[^)]*)*)\)\s*(?:@\s*degree\s*(-?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw PreconditionError("syzygy text must look like (s1; s2; s3) @ degree m");
  std::vector<std::string> parts;
  std::string body = m[1].str();
  std::size_t start = 0;
  for (std::size_t pos; (pos = body.find(';', start)) != std::string::npos; start = pos + 1) parts.push_back(body.substr(start, pos - start));
  parts.push_back(body.substr(start));
  if (parts.size() != gens.size()) throw PreconditionError("syzygy has the wrong number of components");
  SyzygyVector out;
  std::optional<int> deg;
  if (m[2].matched) deg = std::stoi(m[2].str());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    FPoly3 c = parse_fpoly3(field, parts[i]);
    if (!c.is_zero()) {
      const int d = c.degree() + gens[i].degree();
      if (deg && *deg != d) throw PreconditionError("component " + std::to_string(i + 1) + " has inconsistent degree");
      deg = d;
    }
    out.comps.push_back(std::move(c));
  }
  if (!deg) throw PreconditionError("zero syzygy needs an explicit degree");
  out.degree = *deg;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (out.comps[i].is_zero()) out.comps[i] = FPoly3(field.zero(), std::max(0, *deg - gens[i].degree()));
  return out;
}

}  // namespace syzcert
