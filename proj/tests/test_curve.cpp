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
#include "syzcert/curve.hpp"

using namespace syzcert;

namespace {

// Brute force: projective points over `field` where G and all partials vanish.
bool has_singular_point_over(const CurveSpec& c, const FieldCtx& field) {
  const FPoly3 gs[] = {c.G, c.G.partial(0), c.G.partial(1), c.G.partial(2)};
  auto eval = [&](const FPoly3& f, const FieldElem& x, const FieldElem& y, const FieldElem& z) {
    FieldElem acc = field.zero();
    for (const auto& [e, k] : f.terms()) acc = acc + field.embed(k) * x.pow(e.i) * y.pow(e.j) * z.pow(e.k);
    return acc;
  };
  auto singular = [&](const FieldElem& x, const FieldElem& y, const FieldElem& z) {
    for (const auto& g : gs)
      if (!eval(g, x, y, z).is_zero()) return false;
    return true;
  };
  const std::uint64_t n = field.order();
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      if (singular(field.element_at(a), field.element_at(b), field.one())) return true;
  for (std::uint64_t a = 0; a < n; ++a)
    if (singular(field.element_at(a), field.one(), field.zero())) return true;
  return singular(field.one(), field.zero(), field.zero());
}

FPoly3 random_form(std::mt19937_64& rng, const FieldCtx& f, int d, int zmax) {
  FPoly3 out(f.zero(), d);
  std::uniform_int_distribution<std::uint64_t> e(0, f.order() - 1);
  for (int k = 0; k <= std::min(d, zmax); ++k)
    for (int i = 0; i <= d - k; ++i)
      if (rng() % 3 == 0) out.add_term({i, d - k - i, k}, f.element_at(e(rng)));
  return out;
}

}  // namespace

TEST_CASE("specialize the quartic family") {
  const CurveFamily fam = standard_family(7, 4);
  const FieldCtx& f7 = ff_create(7, 1);
  const CurveSpec c0 = specialize(fam, f7.zero());
  CHECK(c0.G == fermat_curve(f7, 4).G);
  const CurveSpec c2 = specialize(fam, f7.from_int(2));
  CHECK(c2.G == parse_fpoly3(f7, "x^4 + y^4 + 2*x^2*y^2 - z^4"));
  CHECK(c2.genus() == 3);
  CHECK(c2.hyperplane_degree() == 4);
  const CurveSpec cw = specialize(fam, ff_create(7, 2).generator());
  CHECK(cw.field == &ff_create(7, 2));
}

TEST_CASE("smoothness of fibres") {
  const CurveFamily fam = standard_family(7, 4);
  const FieldCtx& f7 = ff_create(7, 1);
  for (int t = 0; t < 7; ++t) {
    const CurveSpec c = specialize(fam, f7.from_int(t));
    const bool expect_singular = (t == 2 || t == 5);
    CHECK(is_smooth_fibre(c) == !expect_singular);
    CHECK(has_singular_point_over(c, ff_create(7, 2)) == expect_singular);
  }
  CHECK(is_smooth_fibre(fermat_curve(ff_create(3, 1), 4)));
  CHECK(smoothness(fermat_curve(ff_create(2, 1), 4)) == Smoothness::kInseparable);
  CHECK_FALSE(is_smooth_fibre(fermat_curve(ff_create(2, 1), 4)));
  CHECK(is_smooth_fibre(fermat_curve(ff_create(2, 1), 5)));
  CHECK(is_smooth_fibre(make_curve(ff_create(2, 1), parse_fpoly3(ff_create(2, 1), "x^5 + y^5 + z^5 + x^2*y^3"))));
}

TEST_CASE("graded dimensions") {
  const CurveSpec c = fermat_curve(ff_create(5, 1), 4);
  CHECK(graded_dim(c, 3) == 10);
  CHECK(graded_dim(c, 4) == 14);
  CHECK(graded_dim(c, 8) == 30);
  const GradedRing ring = curve_ring(c);
  for (int d = 0; d <= 12; ++d) {
    std::size_t count = 0;
    for (int k = 0; k < 4 && k <= d; ++k) count += static_cast<std::size_t>(d - k + 1);
    CHECK(ring.dim(d) == count);
    for (std::size_t idx = 0; idx < ring.dim(d); ++idx) {
      const Exp3 e = ring.monomial(d, idx);
      CHECK(e.degree() == d);
      CHECK(e.k < 4);
      CHECK(ring.index(e) == idx);
      if (idx > 0) CHECK(BasisOrder{}(ring.monomial(d, idx - 1), e));
    }
  }
}

TEST_CASE("normal forms") {
  const FieldCtx& f3 = ff_create(3, 1);
  const CurveSpec fermat = fermat_curve(f3, 4);
  CHECK(normal_form(parse_fpoly3(f3, "z^4"), fermat) == parse_fpoly3(f3, "x^4 + y^4"));
  const FPoly3 low = parse_fpoly3(f3, "x^2*z^3 + 2*y^5");
  CHECK(normal_form(low, fermat) == low);

  const FieldCtx& f2 = ff_create(2, 1);
  const TPoly3 quintic = parse_tpoly3(f2, "x^5 + y^5 + z^5 + t*x^2*y^3");
  const auto ring = GradedRingT<UniPoly>::curve(quintic);
  CHECK(ring.normal_form(parse_tpoly3(f2, "y^4*z^20")) == parse_tpoly3(f2, "x^20*y^4 + y^24 + t^4*x^8*y^16"));
}

TEST_CASE("normal form is a ring homomorphism and idempotent") {
  std::mt19937_64 rng(9);
  const FieldCtx& f = ff_create(7, 2);
  const CurveSpec c = specialize(standard_family(7, 4), f.generator());
  const GradedRing ring = curve_ring(c);
  for (int rep = 0; rep < 25; ++rep) {
    const FPoly3 a = random_form(rng, f, 1 + static_cast<int>(rng() % 5), 7);
    const FPoly3 b = random_form(rng, f, 1 + static_cast<int>(rng() % 5), 7);
    const FPoly3 na = ring.normal_form(a);
    CHECK(na.max_z_degree() < 4);
    CHECK(ring.normal_form(na) == na);
    CHECK(ring.normal_form(a * b) == ring.normal_form(na * ring.normal_form(b)));
  }
}

TEST_CASE("multiplication matrices") {
  const FieldCtx& f3 = ff_create(3, 1);
  const CurveSpec c = fermat_curve(f3, 4);
  const FPoly3 one = FPoly3::monomial(f3.one(), {});
  const GFMatrix id = mult_matrix(c, one, 5);
  CHECK(id.rows() == 18);
  CHECK(id.cols() == 18);
  CHECK(rank(id) == 18);
  for (std::size_t r = 0; r < 18; ++r)
    for (std::size_t k = 0; k < 18; ++k) CHECK(id.get(f3, r, k) == (r == k ? f3.one() : f3.zero()));

  const GFMatrix mx = mult_matrix(c, parse_fpoly3(f3, "x"), 0);
  CHECK(mx.cols() == 1);
  const GradedRing ring = curve_ring(c);
  for (std::size_t r = 0; r < mx.rows(); ++r) CHECK(mx.get(f3, r, 0).is_one() == (ring.monomial(1, r) == Exp3{1, 0, 0}));

  CHECK(rank(mult_matrix(c, parse_fpoly3(f3, "x^4 + y^4"), 0)) == 1);
}

TEST_CASE("multiplication matrices compose") {
  std::mt19937_64 rng(21);
  const FieldCtx& f = ff_create(11, 1);
  const CurveSpec c = specialize(standard_family(11, 4), f.from_int(3));
  const ExtArith& ar = f.arith();
  for (int rep = 0; rep < 10; ++rep) {
    const FPoly3 a = random_form(rng, f, 2, 2);
    const FPoly3 b = random_form(rng, f, 3, 3);
    const int m = 2 + static_cast<int>(rng() % 3);
    const GFMatrix ma = mult_matrix(c, a, m);
    const GFMatrix mb = mult_matrix(c, b, m + 2);
    const GFMatrix mab = mult_matrix(c, a * b, m);
    for (std::size_t i = 0; i < mab.rows(); ++i)
      for (std::size_t j = 0; j < mab.cols(); ++j) {
        ExtArith::Elem s = ExtArith::zero();
        for (std::size_t k = 0; k < ma.rows(); ++k) s = ar.add(s, ar.mul(mb.at(i, k), ma.at(k, j)));
        CHECK(s == mab.at(i, j));
      }
  }
}

TEST_CASE("power coefficients of the binary quartic") {
  const FieldCtx& f7 = ff_create(7, 1);
  const auto f = standard_binary_form(7, 4);
  const auto d0 = power_coeffs(f, 0);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0] == UniPoly::constant(f7.one()));

  const auto d1 = power_coeffs(f, 1);
  const std::vector<UniPoly> e1{UniPoly::from_ints(f7, {1}), UniPoly(f7), UniPoly::from_ints(f7, {0, 1}), UniPoly(f7),
                                UniPoly::from_ints(f7, {1})};
  CHECK(d1 == e1);

  // direct expansion of (x^4 + y^4 + t x^2 y^2)^2 as an oracle
  const TPoly3 g = parse_tpoly3(f7, "x^4 + y^4 + t*x^2*y^2");
  const TPoly3 g2 = g * g;
  const auto d2 = power_coeffs(f, 2);
  REQUIRE(d2.size() == 9);
  for (int i = 0; i <= 8; ++i) CHECK(d2[static_cast<std::size_t>(i)] == g2.coeff({i, 8 - i, 0}));
  CHECK(d2[4] == UniPoly::from_ints(f7, {2, 0, 1}));
  CHECK(d2[2] == UniPoly::from_ints(f7, {0, 2}));

  for (std::uint32_t p : {3U, 5U, 13U}) {
    const auto fp = standard_binary_form(p, 4);
    for (int l = 1; l <= 6; ++l) {
      const auto d = power_coeffs(fp, l);
      for (int j = 0; j <= 4 * l; ++j) {
        const UniPoly& c = d[static_cast<std::size_t>(j)];
        if (j == 2 * l) {
          CHECK(c.degree() == static_cast<std::size_t>(l));
          CHECK(c.leading().is_one());
        } else if (!c.is_zero()) {
          CHECK(*c.degree() < static_cast<std::size_t>(l));
        }
      }
    }
  }
}

TEST_CASE("family text format") {
  const CurveFamily fam = parse_family("p=7 delta=4 G = x^4 + y^4 + t*x^2*y^2 - z^4");
  CHECK(fam.p == 7);
  CHECK(fam.delta == 4);
  CHECK(fam.G == standard_family(7, 4).G);
  CHECK(parse_family("p = 7  delta=4  G=x^4+y^4+t x^2 y^2+6z^4").G == fam.G);
  CHECK_THROWS_AS(parse_family("p=7 delta=4 G = x^4 + y^3*z"), PreconditionError);
  CHECK_THROWS_AS(parse_family("p=7 delta=4 G = x^4 + y^4 + x*z^3"), PreconditionError);
  CHECK_THROWS_AS(parse_family("p=8 delta=4 G = x^4 + y^4 - z^4"), PreconditionError);
  CHECK_THROWS_AS(parse_fpoly3(ff_create(7, 1), "x + q"), PreconditionError);

  const FieldCtx& f49 = ff_create(7, 2);
  const FPoly3 h = parse_fpoly3(f49, "(3+2w)*x^2*y + 5*x*y*z");
  CHECK(parse_fpoly3(f49, h.to_string()) == h);
  const TPoly3 k = parse_tpoly3(ff_create(7, 1), "(t^2 + 2)*x^3 + 2t*y^3");
  CHECK(parse_tpoly3(ff_create(7, 1), k.to_string()) == k);
}
