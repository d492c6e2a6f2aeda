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
#include "property_suites.hpp"

#include <algorithm>
#include <random>

#include "syzcert/curve.hpp"
#include "syzcert/det_family.hpp"
#include "syzcert/syzygy.hpp"

namespace syzcert::props {
namespace {

using Rng = std::mt19937_64;

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13, 101};

std::uint32_t pick_prime(Rng& rng, bool odd = false) {
  for (;;) {
    const auto p = kPrimes[rng() % kPrimes.size()];
    if (!odd || p != 2) return p;
  }
}

FieldElem random_elem(const FieldCtx& f, Rng& rng) { return f.element_at(rng() % f.order()); }

FieldElem random_unit(const FieldCtx& f, Rng& rng) {
  for (;;) {
    FieldElem e = random_elem(f, rng);
    if (!e.is_zero()) return e;
  }
}

// Random form of degree d, restricted to monomials accepted by keep.
template <class Keep>
FPoly3 random_form(const FieldCtx& f, int d, Rng& rng, Keep keep) {
  FPoly3 out(f.zero(), d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) {
      const Exp3 e{i, j, d - i - j};
      if (keep(e)) out.add_term(e, random_elem(f, rng));
    }
  return out;
}

FPoly3 random_form(const FieldCtx& f, int d, Rng& rng) {
  return random_form(f, d, rng, [](const Exp3&) { return true; });
}

FPoly3 mono(const FieldCtx& f, int i, int j, int k) { return FPoly3::monomial(f.one(), {i, j, k}); }

std::int64_t h(std::int64_t k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

void fail(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.notes.size() < 5) r.notes.push_back(what);
}

// Triangular regular sequence: x^d1 + y(..) + z(..), y^d2 + z(..), c z^d3.
std::vector<FPoly3> regular_triple(const FieldCtx& f, Rng& rng, int d1, int d2, int d3) {
  const FPoly3 f1 = mono(f, d1, 0, 0) + random_form(f, d1, rng, [&](const Exp3& e) { return e.i < d1; });
  const FPoly3 f2 = mono(f, 0, d2, 0) + random_form(f, d2, rng, [](const Exp3& e) { return e.i == 0 && e.k > 0; });
  const FPoly3 f3 = random_unit(f, rng) * mono(f, 0, 0, d3);
  return {f1, f2, f3};
}

}  // namespace

// For a regular sequence in k[x,y,z] every syzygy is Koszul: the degree-m
// syzygy space has dimension sum_{i<j} h(m - d_i - d_j) - h(m - d_1 - d_2 - d_3),
// and the three Koszul vectors lie in it.
SuiteResult koszul_completeness(std::uint64_t seed, int n) {
  SuiteResult r{"Koszul completeness"};
  Rng rng(seed);
  for (int it = 0; it < n; ++it) {
    const FieldCtx& f = ff_create(pick_prime(rng), 1 + static_cast<int>(rng() % 2));
    const int d[3] = {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3)};
    const auto gens = regular_triple(f, rng, d[0], d[1], d[2]);
    const GradedRing ring = GradedRing::polynomial(f.zero());
    const int m = d[0] + d[1] + static_cast<int>(rng() % (d[2] + 3));
    std::int64_t want = -h(m - d[0] - d[1] - d[2]);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) want += h(m - d[i] - d[j]);
    const auto got = syzygy_dimension(ring, gens, m);
    bool ok = static_cast<std::int64_t>(got) == want;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3; ++j) {
        SyzygyVector k;
        k.degree = d[i] + d[j];
        k.comps = {FPoly3(f.zero(), k.degree - d[0]), FPoly3(f.zero(), k.degree - d[1]),
                   FPoly3(f.zero(), k.degree - d[2])};
        k.comps[i] = gens[j];
        k.comps[j] = -gens[i];
        ok = ok && verify_syzygy<FieldElem>(ring, gens, k);
      }
    ++r.instances;
    if (!ok)
      fail(r, f.name() + " degrees " + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
                  std::to_string(d[2]) + " m=" + std::to_string(m) + " got " + std::to_string(got) + " want " +
                  std::to_string(want));
  }
  return r;
}

// A degree-m syzygy of (f_i) on a fibre defined over F_p gives, after the
// p-th power on every component, a degree p*m syzygy of (f_i^p).
SuiteResult frobenius_lifting(std::uint64_t seed, int n) {
  SuiteResult r{"Frobenius degree lifting"};
  Rng rng(seed);
  int tries = 0;
  while (r.instances < n && tries < 20 * n) {
    ++tries;
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7}[rng() % 3];
    const FieldCtx& f = ff_create(p, 1);
    const CurveSpec curve = specialize(standard_family(p, 4), random_elem(f, rng));
    if (!is_smooth_fibre(curve)) continue;
    std::vector<FPoly3> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_form(f, 1 + static_cast<int>(rng() % 2), rng));
    if (std::any_of(gens.begin(), gens.end(), [](const FPoly3& g) { return g.is_zero(); })) continue;
    int dmax = 0;
    for (const auto& g : gens) dmax = std::max(dmax, g.degree());
    const GradedRing ring = GradedRing::curve(curve.G);
    const int m = dmax + 1 + static_cast<int>(rng() % 2);
    const auto basis = syzygy_space(curve, gens, m);
    if (basis.empty()) continue;
    SyzygyVector s = basis[rng() % basis.size()];
    for (const auto& b : basis) {
      const FieldElem c = random_elem(f, rng);
      for (std::size_t i = 0; i < 3; ++i) s.comps[i] = s.comps[i] + c * b.comps[i];
    }
    if (s.is_zero()) continue;
    SyzygyVector lifted;
    lifted.degree = static_cast<int>(p) * m;
    for (const auto& c : s.comps) lifted.comps.push_back(frobenius_power(c, p));
    const auto fgens = frobenius_gens(gens, 1);
    ++r.instances;
    const bool ok = verify_syzygy<FieldElem>(ring, gens, s) && verify_syzygy<FieldElem>(ring, fgens, lifted) &&
                    lifted.comps[0].degree() == static_cast<int>(p) * s.comps[0].degree();
    if (!ok) fail(r, "p=" + std::to_string(p) + " m=" + std::to_string(m) + " " + s.to_string());
  }
  return r;
}

SuiteResult field_axioms(std::uint64_t seed, int n) {
  SuiteResult r{"field axioms"};
  Rng rng(seed);
  for (int it = 0; it < n; ++it) {
    const std::uint32_t p = pick_prime(rng);
    const FieldCtx& f = ff_create(p, 1 + static_cast<int>(rng() % 2));
    const FieldElem a = random_elem(f, rng), b = random_elem(f, rng), c = random_elem(f, rng);
    bool ok = (a + b) + c == a + (b + c) && a + b == b + a && (a * b) * c == a * (b * c) && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + f.zero() == a && a * f.one() == a && a - a == f.zero() &&
              (a + b).frobenius() == a.frobenius() + b.frobenius() &&
              (a * b).frobenius() == a.frobenius() * b.frobenius() && a.pow(f.order()) == a &&
              f.element_at(f.index_of(a)) == a && f.parse(a.to_string()) == a;
    if (!a.is_zero()) ok = ok && a * a.inverse() == f.one() && (b / a) * a == b && a.pow(f.order() - 1) == f.one();
    // Elements fixed by Frobenius are exactly the prime field.
    ok = ok && ((a.frobenius() == a) == a.in_prime_field());
    ++r.instances;
    if (!ok) fail(r, f.name() + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string());
  }
  return r;
}

// Cofactor expansion oracle against the CRT route for random matrices of size <= 6.
SuiteResult determinant_oracles(std::uint64_t seed, int n) {
  SuiteResult r{"interpolation vs cofactor determinant"};
  Rng rng(seed);
  for (int it = 0; it < n; ++it) {
    const FieldCtx& f = ff_create(pick_prime(rng), 1);
    const int size = 1 + static_cast<int>(rng() % 6);
    const int max_deg = static_cast<int>(rng() % 4);
    std::vector<std::vector<UniPoly>> m(size, std::vector<UniPoly>(size, UniPoly(f)));
    for (auto& row : m)
      for (auto& e : row) {
        std::vector<FieldElem> cs;
        const int d = static_cast<int>(rng() % (max_deg + 1));
        for (int k = 0; k <= d; ++k) cs.push_back(random_elem(f, rng));
        // Sparse entries make singular and low-degree cases common.
        e = rng() % 3 == 0 ? UniPoly(f) : UniPoly(f, cs);
      }
    const UniPoly want = det_cofactor(m);
    const UniPoly got = det_poly(m, static_cast<std::size_t>(size * max_deg));
    ++r.instances;
    if (got != want)
      fail(r, f.name() + " size " + std::to_string(size) + ": " + got.to_string() + " vs " + want.to_string());
  }
  return r;
}

// Enlarging a primary tuple keeps it primary; scaling and squaring an
// element do not change the answer (same radical).
SuiteResult primary_monotonicity(std::uint64_t seed, int n) {
  SuiteResult r{"is_primary monotonicity"};
  Rng rng(seed);
  int primary_seen = 0, non_primary_seen = 0;
  while (r.instances < n) {
    const std::uint32_t p = std::vector<std::uint32_t>{3, 5, 7, 11}[rng() % 4];
    const FieldCtx& f = ff_create(p, 1);
    const CurveSpec curve = specialize(standard_family(p, 4), random_elem(f, rng));
    if (!is_smooth_fibre(curve)) continue;
    std::vector<FPoly3> s;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      // Mix monomials (often primary) with random forms (often not).
      const int d = 1 + static_cast<int>(rng() % 2);
      if (rng() % 2) {
        const int v = static_cast<int>(rng() % 3);
        s.push_back(mono(f, v == 0 ? d : 0, v == 1 ? d : 0, v == 2 ? d : 0));
      } else {
        s.push_back(random_form(f, d, rng));
      }
    }
    const bool base = is_primary(curve, s);
    auto bigger = s;
    bigger.push_back(random_form(f, 1 + static_cast<int>(rng() % 2), rng));
    const bool grown = is_primary(curve, bigger);
    auto scaled = s;
    scaled[0] = random_unit(f, rng) * scaled[0];
    auto squared = s;
    squared[0] = squared[0] * squared[0];
    const bool ok = (!base || grown) && is_primary(curve, scaled) == base && is_primary(curve, squared) == base;
    (base ? primary_seen : non_primary_seen)++;
    ++r.instances;
    if (!ok) fail(r, "p=" + std::to_string(p) + " tuple of " + std::to_string(s.size()));
  }
  r.notes.insert(r.notes.begin(), std::to_string(primary_seen) + " primary, " + std::to_string(non_primary_seen) +
                                      " not primary");
  return r;
}

std::vector<SuiteResult> all_suites(std::uint64_t seed, int n) {
  return {koszul_completeness(seed, n), frobenius_lifting(seed + 1, n), field_axioms(seed + 2, n),
          determinant_oracles(seed + 3, n), primary_monotonicity(seed + 4, n)};
}

}  // namespace syzcert::props
