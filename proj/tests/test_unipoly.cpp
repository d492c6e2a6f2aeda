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
#include <random>

#include "doctest.h"
#include "syzcert/error.hpp"
#include "syzcert/unipoly.hpp"

using namespace syzcert;

namespace {

// Naive power-sum evaluation, independent of Horner.
FieldElem eval_by_power_sum(const UniPoly& a, const FieldElem& c) {
  FieldElem acc = c.ctx().zero();
  if (a.is_zero()) return acc;
  for (std::size_t i = 0; i <= *a.degree(); ++i) {
    FieldElem term = c.ctx().embed(a.coeff(i));
    for (std::size_t k = 0; k < i; ++k) term = term * c;
    acc = acc + term;
  }
  return acc;
}

UniPoly random_poly(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t max_deg) {
  std::uniform_int_distribution<std::uint64_t> e(0, ctx.order() - 1);
  std::uniform_int_distribution<std::size_t> d(0, max_deg);
  std::vector<FieldElem> c(d(rng) + 1);
  for (auto& x : c) x = ctx.element_at(e(rng));
  return UniPoly(ctx, c);
}

}  // namespace

TEST_CASE("zero polynomial has the sentinel degree") {
  const FieldCtx& f = ff_create(7, 1);
  UniPoly z(f);
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(UniPoly::from_ints(f, {0, 0, 7}).is_zero());
  CHECK(UniPoly::from_ints(f, {1, 2, 0}).degree() == 1U);
  CHECK(z.to_string() == "0");
  CHECK(UniPoly::from_ints(f, {0, 2, 0, 4, 0, 1}).to_string() == "t^5 + 4t^3 + 2t");
}

TEST_CASE("poly_gcd examples") {
  const FieldCtx& f = ff_create(7, 1);
  const UniPoly a = UniPoly::from_ints(f, {-1, 0, 1});
  const UniPoly b = UniPoly::from_ints(f, {-1, 1});
  CHECK(poly_gcd(a, b) == b);
  const UniPoly c = UniPoly::from_ints(f, {3, 0, 2});
  CHECK(poly_gcd(c, UniPoly(f)) == c.monic());
  CHECK(poly_gcd(UniPoly(f), UniPoly(f)).is_zero());

  // gcd(t^5+4t^3+2t, t^2+2) = 1: t^2+2 has no root in F_7 (so it is
  // irreducible) and leaves a nonzero remainder.
  const UniPoly d = UniPoly::from_ints(f, {0, 2, 0, 4, 0, 1});
  const UniPoly q = UniPoly::from_ints(f, {2, 0, 1});
  for (std::uint64_t i = 0; i < 7; ++i) CHECK_FALSE(q.eval(f.element_at(i)).is_zero());
  CHECK_FALSE((d % q).is_zero());
  CHECK(poly_gcd(d, q) == UniPoly::constant(f.one()));

  CHECK_THROWS_AS(poly_gcd(a, UniPoly::from_ints(ff_create(5, 1), {1, 1})), PreconditionError);
}

TEST_CASE("poly_roots examples") {
  const FieldCtx& f7 = ff_create(7, 1);
  const UniPoly d = UniPoly::from_ints(f7, {0, 2, 0, 4, 0, 1});
  std::vector<std::uint32_t> r;
  for (const auto& x : poly_roots(d, f7)) r.push_back(x.coord(0));
  CHECK(r == std::vector<std::uint32_t>{0, 1, 3, 4, 6});

  const FieldCtx& f3 = ff_create(3, 1);
  const auto r3 = poly_roots(UniPoly::variable(f3), f3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].is_zero());

  const UniPoly q = UniPoly::from_ints(f7, {2, 0, 1});
  CHECK(poly_roots(q, f7).empty());
  const auto r49 = poly_roots(q, ff_create(7, 2));
  REQUIRE(r49.size() == 2);
  for (const auto& x : r49) CHECK((x * x + ff_create(7, 2).from_int(2)).is_zero());

  CHECK_THROWS_AS(poly_roots(UniPoly(f7), f7), PreconditionError);
  CHECK(poly_roots(UniPoly::constant(f7.from_int(3)), f7).empty());
}

TEST_CASE("poly_interpolate examples") {
  const FieldCtx& f5 = ff_create(5, 1);
  auto pt = [&](int x, int y) { return std::pair{f5.from_int(x), f5.from_int(y)}; };
  std::vector<std::pair<FieldElem, FieldElem>> c{pt(0, 1), pt(1, 1)};
  CHECK(poly_interpolate(c, f5) == UniPoly::constant(f5.one()));
  std::vector<std::pair<FieldElem, FieldElem>> sq;
  for (int x = 0; x < 5; ++x) sq.push_back(pt(x, x * x));
  CHECK(sq[3].second == f5.from_int(4));
  CHECK(poly_interpolate(sq, f5) == UniPoly::from_ints(f5, {0, 0, 1}));
  std::vector<std::pair<FieldElem, FieldElem>> dup{pt(1, 1), pt(1, 2)};
  CHECK_THROWS_AS(poly_interpolate(dup, f5), PreconditionError);
  std::vector<std::pair<FieldElem, FieldElem>> none;
  CHECK_THROWS_AS(poly_interpolate(none, f5), PreconditionError);
}

TEST_CASE("interpolation identity and evaluation oracle on random polynomials") {
  std::mt19937_64 rng(7);
  for (const FieldCtx* ctx : {&ff_create(101, 1), &ff_create(13, 2), &ff_create(2, 2)}) {
    for (int rep = 0; rep < 30; ++rep) {
      const UniPoly a = random_poly(rng, *ctx, 8);
      const std::size_t n = a.is_zero() ? 1 : *a.degree() + 1;
      if (n > ctx->order()) continue;
      std::vector<std::pair<FieldElem, FieldElem>> pts;
      for (std::size_t i = 0; i < n; ++i) {
        const FieldElem x = ctx->element_at(i);
        pts.emplace_back(x, a.eval(x));
        CHECK(a.eval(x) == eval_by_power_sum(a, x));
      }
      CHECK(poly_interpolate(pts, *ctx) == a);
    }
  }
}

TEST_CASE("gcd divides and scales on random inputs") {
  std::mt19937_64 rng(11);
  const FieldCtx& f = ff_create(13, 1);
  for (int rep = 0; rep < 40; ++rep) {
    const UniPoly a = random_poly(rng, f, 6);
    const UniPoly b = random_poly(rng, f, 6);
    UniPoly g = random_poly(rng, f, 3);
    if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
    g = g.monic();
    const UniPoly d = poly_gcd(a, b);
    CHECK(d.leading().is_one());
    CHECK((a % d).is_zero());
    CHECK((b % d).is_zero());
    CHECK(poly_gcd(a * g, b * g) == (g * d).monic());
  }
}

TEST_CASE("roots agree with exhaustive evaluation") {
  std::mt19937_64 rng(5);
  for (const FieldCtx* ctx : {&ff_create(7, 1), &ff_create(5, 2), &ff_create(3, 2)}) {
    for (int rep = 0; rep < 25; ++rep) {
      const UniPoly a = random_poly(rng, *ctx, 7);
      if (a.is_zero()) continue;
      std::vector<FieldElem> brute;
      for (std::uint64_t i = 0; i < ctx->order(); ++i) {
        if (a.eval(ctx->element_at(i)).is_zero()) brute.push_back(ctx->element_at(i));
      }
      CHECK(poly_roots(a, *ctx) == brute);
    }
  }
}

TEST_CASE("division identity") {
  std::mt19937_64 rng(3);
  const FieldCtx& f = ff_create(7, 2);
  for (int rep = 0; rep < 30; ++rep) {
    const UniPoly a = random_poly(rng, f, 9);
    const UniPoly b = random_poly(rng, f, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
  }
}
