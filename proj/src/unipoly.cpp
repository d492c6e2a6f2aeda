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

#include "syzcert/unipoly.hpp"

#include <algorithm>
#include <set>

#include "syzcert/error.hpp"
#include "syzcert/simd/kernels.hpp"

namespace syzcert {

namespace {

void check_same(const UniPoly& a, const UniPoly& b) {
  if (&a.ctx() != &b.ctx()) {
    throw PreconditionError("polynomial context mismatch: " + a.ctx().name() + " vs " + b.ctx().name());
  }
}

}  // namespace

UniPoly::UniPoly(const FieldCtx& ctx, const std::vector<FieldElem>& coeffs) : ctx_(&ctx) {
  resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const FieldElem c = ctx.embed(coeffs[i]);
    planes_[0][i] = c.coord(0);
    if (ctx.ext_degree() == 2) planes_[1][i] = c.coord(1);
  }
  normalize();
}

UniPoly UniPoly::from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(ctx, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

UniPoly UniPoly::from_ints(const FieldCtx& ctx, std::span<const std::int64_t> coeffs) {
  UniPoly r(ctx);
  r.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.planes_[0][i] = reduce_int(coeffs[i], ctx.p());
  r.normalize();
  return r;
}

UniPoly UniPoly::monomial(const FieldElem& c, std::size_t degree) {
  UniPoly r(c.ctx());
  if (c.is_zero()) return r;
  r.resize(degree + 1);
  r.planes_[0][degree] = c.coord(0);
  if (c.ctx().ext_degree() == 2) r.planes_[1][degree] = c.coord(1);
  return r;
}

void UniPoly::resize(std::size_t n) {
  planes_[0].resize(n, 0);
  if (ctx_->ext_degree() == 2) planes_[1].resize(n, 0);
}

void UniPoly::normalize() {
  std::size_t n = planes_[0].size();
  const bool two = ctx_->ext_degree() == 2;
  while (n > 0 && planes_[0][n - 1] == 0 && (!two || planes_[1][n - 1] == 0)) --n;
  resize(n);
}

FieldElem UniPoly::coeff(std::size_t i) const {
  if (i >= size()) return ctx_->zero();
  return FieldElem(*ctx_, planes_[0][i], ctx_->ext_degree() == 2 ? planes_[1][i] : 0);
}

FieldElem UniPoly::leading() const {
  if (is_zero()) return ctx_->zero();
  return coeff(size() - 1);
}

void UniPoly::set_coeff(std::size_t i, const FieldElem& c) {
  const FieldElem e = ctx_->embed(c);
  if (i >= size()) {
    if (e.is_zero()) return;
    resize(i + 1);
  }
  planes_[0][i] = e.coord(0);
  if (ctx_->ext_degree() == 2) planes_[1][i] = e.coord(1);
  normalize();
}

FieldElem UniPoly::eval(const FieldElem& c) const {
  const FieldCtx& target = c.ctx();
  if (target.p() != ctx_->p()) throw PreconditionError("evaluation point in a different characteristic");
  if (target.ext_degree() < ctx_->ext_degree()) throw PreconditionError("evaluation point in a subfield");
  FieldElem acc = target.zero();
  for (std::size_t i = size(); i-- > 0;) acc = acc * c + target.embed(coeff(i));
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
  UniPoly r(*ctx_);
  if (size() <= 1) return r;
  std::vector<FieldElem> c;
  c.reserve(size() - 1);
  for (std::size_t i = 1; i < size(); ++i) c.push_back(coeff(i) * ctx_->from_int(static_cast<std::int64_t>(i % ctx_->p())));
  return UniPoly(*ctx_, c);
}

UniPoly UniPoly::embed(const FieldCtx& to) const {
  if (&to == ctx_) return *this;
  if (to.p() != ctx_->p()) throw PreconditionError("embedding across characteristics");
  UniPoly r(to);
  if (to.ext_degree() == 2 && ctx_->ext_degree() == 1) {
    r.planes_[0] = planes_[0];
    r.planes_[1].assign(planes_[0].size(), 0);
    return r;
  }
  if (!coefficients_in_prime_field()) throw PreconditionError("polynomial does not descend to " + to.name());
  r.planes_[0] = planes_[0];
  return r;
}

bool UniPoly::coefficients_in_prime_field() const {
  if (ctx_->ext_degree() == 1) return true;
  return std::all_of(planes_[1].begin(), planes_[1].end(), [](std::uint32_t v) { return v == 0; });
}

UniPoly UniPoly::restrict_to_prime_field() const { return embed(ctx_->prime_subfield()); }

UniPoly UniPoly::operator-() const {
  UniPoly r(*ctx_);
  r.planes_ = planes_;
  const std::uint32_t p = ctx_->p();
  for (auto& pl : r.planes_) {
    for (auto& v : pl) v = v == 0 ? 0 : p - v;
  }
  return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  UniPoly r = a.size() >= b.size() ? a : b;
  const UniPoly& s = a.size() >= b.size() ? b : a;
  const std::uint32_t p = a.ctx().p();
  for (int pl = 0; pl < a.ctx().ext_degree(); ++pl) {
    simd::axpy(r.planes_[static_cast<std::size_t>(pl)].data(), s.planes_[static_cast<std::size_t>(pl)].data(), 1, s.size(), p);
  }
  r.normalize();
  return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const FieldElem& c) {
  const FieldElem e = a.ctx().embed(c);
  if (e.is_zero()) return UniPoly(a.ctx());
  UniPoly r(a.ctx());
  if (a.ctx().ext_degree() == 1) {
    r.planes_[0] = a.planes_[0];
    simd::scale(r.planes_[0].data(), e.coord(0), r.size(), a.ctx().p());
    r.normalize();
    return r;
  }
  r.resize(a.size());
  std::uint32_t mm[4];
  a.ctx().arith().mul_matrix(e.to_ext(), mm);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      simd::axpy(r.planes_[static_cast<std::size_t>(x)].data(), a.planes_[static_cast<std::size_t>(y)].data(), mm[x * 2 + y], a.size(),
                 a.ctx().p());
    }
  }
  r.normalize();
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  UniPoly r(a.ctx());
  if (a.is_zero() || b.is_zero()) return r;
  const FieldCtx& ctx = a.ctx();
  const std::uint32_t p = ctx.p();
  r.resize(a.size() + b.size() - 1);
  const UniPoly& small = a.size() <= b.size() ? a : b;
  const UniPoly& big = a.size() <= b.size() ? b : a;
  if (ctx.ext_degree() == 1) {
    for (std::size_t i = 0; i < small.size(); ++i) {
      simd::axpy(r.planes_[0].data() + i, big.planes_[0].data(), small.planes_[0][i], big.size(), p);
    }
  } else {
    std::uint32_t mm[4];
    for (std::size_t i = 0; i < small.size(); ++i) {
      const FieldElem c = small.coeff(i);
      if (c.is_zero()) continue;
      ctx.arith().mul_matrix(c.to_ext(), mm);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          simd::axpy(r.planes_[static_cast<std::size_t>(x)].data() + i, big.planes_[static_cast<std::size_t>(y)].data(), mm[x * 2 + y],
                     big.size(), p);
        }
      }
    }
  }
  r.normalize();
  return r;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const FieldCtx& ctx = a.ctx();
  UniPoly q(ctx);
  UniPoly r = a;
  if (a.size() < b.size()) return {q, r};
  const std::size_t db = b.size() - 1;
  const FieldElem lc_inv = b.leading().inverse();
  const std::uint32_t p = ctx.p();
  q.resize(a.size() - db);
  std::uint32_t mm[4];
  for (std::size_t d = a.size(); d-- > db;) {
    const FieldElem c = r.coeff(d) * lc_inv;
    if (c.is_zero()) continue;
    const std::size_t shift = d - db;
    q.planes_[0][shift] = c.coord(0);
    if (ctx.ext_degree() == 2) q.planes_[1][shift] = c.coord(1);
    const FieldElem neg = -c;
    if (ctx.ext_degree() == 1) {
      simd::axpy(r.planes_[0].data() + shift, b.planes_[0].data(), neg.coord(0), b.size(), p);
    } else {
      ctx.arith().mul_matrix(neg.to_ext(), mm);
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          simd::axpy(r.planes_[static_cast<std::size_t>(x)].data() + shift, b.planes_[static_cast<std::size_t>(y)].data(),
                     mm[x * 2 + y], b.size(), p);
        }
      }
    }
  }
  q.normalize();
  r.normalize();
  return {q, r};
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
  check_same(base, m);
  UniPoly result = UniPoly::constant(m.ctx().one()) % m;
  UniPoly b = base % m;
  while (e != 0) {
    if (e & 1U) result = (result * b) % m;
    e >>= 1U;
    if (e != 0) b = (b * b) % m;
  }
  return result;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  check_same(a, b);
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<FieldElem> poly_roots(const UniPoly& a, const FieldCtx& ctx) {
  if (a.is_zero()) throw PreconditionError("poly_roots of the zero polynomial: every element is a root");
  const UniPoly f = a.embed(ctx);
  std::vector<FieldElem> roots;
  if (f.degree() == 0U) return roots;
  const UniPoly t = UniPoly::variable(ctx);
  const UniPoly h = powmod(t, ctx.order(), f) - t;
  const UniPoly g = poly_gcd(f, h);
  const std::size_t expected = *g.degree();
  if (expected == 0) return roots;
  for (std::uint64_t i = 0; i < ctx.order() && roots.size() < expected; ++i) {
    const FieldElem c = ctx.element_at(i);
    if (g.eval(c).is_zero()) roots.push_back(c);
  }
  if (roots.size() != expected) throw ConsistencyError("root extraction found fewer roots than gcd degree");
  return roots;
}

UniPoly poly_interpolate(std::span<const std::pair<FieldElem, FieldElem>> points, const FieldCtx& ctx) {
  if (points.empty()) throw PreconditionError("interpolation needs at least one point");
  std::set<FieldElem> seen;
  std::vector<FieldElem> xs;
  std::vector<FieldElem> coef;
  for (const auto& [x, y] : points) {
    const FieldElem xe = ctx.embed(x);
    if (!seen.insert(xe).second) throw PreconditionError("duplicate interpolation node " + xe.to_string());
    xs.push_back(xe);
    coef.push_back(ctx.embed(y));
  }
  // Newton divided differences.
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  UniPoly result = UniPoly::constant(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * UniPoly(ctx, {-xs[i], ctx.one()}) + UniPoly::constant(coef[i]);
  }
  return result;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = size(); i-- > 0;) {
    const FieldElem c = coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string cs = c.to_string();
    if (!c.in_prime_field() && i > 0) cs = "(" + cs + ")";
    if (i == 0) {
      out += c.to_string();
      continue;
    }
    if (!c.is_one()) out += cs;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace syzcert
