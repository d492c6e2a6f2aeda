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
#include "syzcert/search.hpp"

#include <algorithm>
#include <mutex>

#include "syzcert/log.hpp"
#include "syzcert/parallel.hpp"

namespace syzcert {

const char* to_string(Method m) {
  switch (m) {
    case Method::kGcdStrip:
      return "1";
    case Method::kPrimeScan:
      return "2";
    case Method::kExtScan:
      return "3";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kFound:
      return "found";
    case Outcome::kNotFound:
      return "not-found";
    case Outcome::kSkipped:
      return "skipped";
    case Outcome::kNotApplicable:
      return "n/a";
  }
  return "?";
}

SyzygyVector normalized(const SyzygyVector& s) {
  for (auto it = s.comps.rbegin(); it != s.comps.rend(); ++it) {
    if (it->is_zero()) continue;
    const FieldElem inv = it->terms().rbegin()->second.inverse();
    SyzygyVector out = s;
    for (auto& c : out.comps) c = inv * c;
    return out;
  }
  return s;
}

bool reverify(const SearchHit& hit);

namespace {

// The bundle whose first pullback carries level-e witnesses.
BundleSpec bundle_below(const CurveSpec& curve, int a, int e) {
  return syzygy_bundle(curve, frobenius_gens(monomial_gens(*curve.field, a), e - 1));
}

void check_scope(int delta, int a, const SearchOptions& opt) {
  if ((delta != 4 || a != 1) && !opt.experimental)
    throw PreconditionError("the search methods are set up for delta = 4, a = 1; pass the experimental flag otherwise");
}

// Minimal two-variable sections of F_l and F_{l+1}, lifted, at or below the destabilising degrees.
std::vector<SyzygyVector> lifted_candidates(const CurveSpec& curve, const DetFamilySpec& spec, const FieldElem& t0) {
  std::vector<SyzygyVector> out;
  for (Which w : {Which::kFl, Which::kFl1}) {
    const MinimalSyzygies ms = minimal_syzygy_degree(family_generators(spec, w, t0));
    if (ms.degree > spec.destab_degree(w)) continue;
    for (const auto& s : ms.basis) {
      SyzygyVector l = lift_section(curve, static_cast<int>(spec.aq), s, w, static_cast<int>(spec.r));
      if (!l.is_zero()) out.push_back(normalized(l));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.degree < y.degree; });
  return out;
}

std::optional<SearchHit> first_hit(const std::vector<SyzygyVector>& cands, const BundleSpec& bundle,
                                   const DetFamilySpec& spec, const FieldElem& t0, Method method) {
  for (const auto& s : cands) {
    const HnfClauses c = hnf_clauses(bundle, s);
    if (c.all()) return SearchHit{spec.p, spec.delta, spec.a, spec.e, t0, s, c, method};
  }
  return std::nullopt;
}

std::vector<SearchHit> collect(std::vector<std::optional<SearchHit>>& slots) {
  std::vector<SearchHit> out;
  for (auto& s : slots)
    if (s) {
      if (!reverify(*s)) throw ConsistencyError("search hit failed re-verification at t0 = " + s->t0.to_string());
      out.push_back(std::move(*s));
    }
  return out;
}

// One level up the vanishing of D at t0 (with r = 1) hands us a section at the critical degree;
// if it has no zeros the HNF test on the first pullback settles t0.
std::optional<SearchHit> ext_scan_next_level(std::uint32_t p, int delta, int a, const SearchOptions& opt) {
  const DetFamilySpec s2 = derive_spec(p, delta, a, opt.e + 1);
  if (s2.r != 1) return std::nullopt;
  const FieldCtx& f2 = ff_create(p, 2);
  const BandedMatrix m2 = build_matrix(s2, Which::kFl);
  const std::size_t batch = std::max<std::size_t>(4, 4 * static_cast<std::size_t>(opt.jobs));
  for (std::uint64_t base = 0; base < f2.order(); base += batch) {
    const std::size_t n = static_cast<std::size_t>(std::min<std::uint64_t>(batch, f2.order() - base));
    std::vector<char> zero(n, 0);
    parallel_for(n, opt.jobs, [&](std::size_t k) {
      const FieldElem t0 = f2.element_at(base + k);
      if (t0.in_prime_field()) return;
      if (!is_smooth_fibre(specialize(standard_family(p, delta), t0))) return;
      zero[k] = det_at(m2, t0).is_zero();
    });
    for (std::size_t k = 0; k < n; ++k) {
      if (!zero[k]) continue;
      const FieldElem t0 = f2.element_at(base + k);
      const CurveSpec curve = specialize(standard_family(p, delta), t0);
      const auto space = syzygy_space(GradedRing::binary(f2.zero()), family_generators(s2, Which::kFl, t0),
                                      static_cast<int>(s2.m_cert_l));
      if (space.empty()) throw ConsistencyError("determinant vanishes without a section at t0 = " + t0.to_string());
      std::vector<SyzygyVector> lifts;
      for (const auto& s : space)
        lifts.push_back(normalized(
            lift_section(curve, static_cast<int>(s2.aq), s, Which::kFl, static_cast<int>(s2.r))));
      if (auto h = first_hit(lifts, bundle_below(curve, a, s2.e), s2, t0, Method::kExtScan)) {
        if (!reverify(*h)) throw ConsistencyError("search hit failed re-verification at t0 = " + t0.to_string());
        log_debug("extension scan settled p = " + std::to_string(p) + " one Frobenius level up");
        return h;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool reverify(const SearchHit& hit) {
  const CurveSpec curve = specialize(standard_family(hit.p, hit.delta), hit.t0);
  if (!is_smooth_fibre(curve)) return false;
  const BundleSpec bundle = bundle_below(curve, hit.a, hit.level);
  const GeneratorTuple gq = frobenius_gens(bundle.gens, 1);
  if (hit.witness.is_zero() || !verify_syzygy<FieldElem>(curve_ring(curve), gq, hit.witness)) return false;
  const HnfClauses c = hnf_clauses(bundle, hit.witness);
  return c.all() && c.degree_bound == hit.checks.degree_bound && c.indivisible == hit.checks.indivisible &&
         c.primary == hit.checks.primary;
}

std::vector<SearchHit> method_prime_scan(std::uint32_t p, int delta, int a, const SearchOptions& opt) {
  check_scope(delta, a, opt);
  if (p == 2) throw PreconditionError("the prime scan needs odd p");
  const DetFamilySpec spec = derive_spec(p, delta, a, opt.e);
  const FieldCtx& fp = ff_create(p, 1);
  std::vector<std::optional<SearchHit>> slots(p);
  parallel_for(p, opt.jobs, [&](std::size_t i) {
    const FieldElem t0 = fp.element_at(i);
    const CurveSpec curve = specialize(standard_family(p, delta), t0);
    if (!is_smooth_fibre(curve)) return;
    slots[i] = first_hit(lifted_candidates(curve, spec, t0), bundle_below(curve, a, opt.e), spec, t0,
                         Method::kPrimeScan);
  });
  return collect(slots);
}

std::vector<SearchHit> method_ext_scan(std::uint32_t p, int delta, int a, const SearchOptions& opt) {
  check_scope(delta, a, opt);
  if (p == 2) throw PreconditionError("the extension scan needs odd p");
  const DetFamilySpec spec = derive_spec(p, delta, a, opt.e);
  DetCache local(std::nullopt, false);
  DetCache& cache = opt.cache ? *opt.cache : local;
  const FieldCtx& f2 = ff_create(p, 2);
  std::vector<FieldElem> roots;
  for (Which w : {Which::kFl, Which::kFl1})
    for (const auto& r : poly_roots(cache.get(spec, w, opt.jobs), f2))
      if (!r.in_prime_field()) roots.push_back(r);
  std::sort(roots.begin(), roots.end(),
            [&](const FieldElem& x, const FieldElem& y) { return f2.index_of(x) < f2.index_of(y); });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  const GeneratorTuple gens = frobenius_gens(monomial_gens(f2, a), opt.e);
  std::vector<std::optional<SearchHit>> slots(roots.size());
  parallel_for(roots.size(), opt.jobs, [&](std::size_t i) {
    const FieldElem& t0 = roots[i];
    const CurveSpec curve = specialize(standard_family(p, delta), t0);
    if (!is_smooth_fibre(curve)) return;
    // Every section on the curve splits by z-degree mod delta into lifts, so the two-variable
    // minimum is the three-variable minimum; the direct computation starts there.
    const auto lifts = lifted_candidates(curve, spec, t0);
    if (lifts.empty()) return;
    const int m0 = lifts.front().degree;
    const GradedRing ring = curve_ring(curve);
    if (syzygy_dimension(ring, gens, m0 - 1) != 0)
      throw ConsistencyError("direct syzygy below the lifted minimum at t0 = " + t0.to_string());
    std::vector<SyzygyVector> direct;
    for (const auto& s : syzygy_space(ring, gens, m0)) direct.push_back(normalized(s));
    slots[i] = first_hit(direct, bundle_below(curve, a, opt.e), spec, t0, Method::kExtScan);
  });
  auto hits = collect(slots);
  if (hits.empty() && opt.fallback) {
    if (auto h = ext_scan_next_level(p, delta, a, opt)) hits.push_back(std::move(*h));
  }
  return hits;
}

GcdStripResult method_gcd_strip(std::uint32_t p, int delta, int a, int e, bool quadratic, const SearchOptions& opt) {
  if (delta <= 0 || (p - 1) % static_cast<std::uint32_t>(delta) != 0)
    throw PreconditionError("the gcd method needs p = 1 mod delta so that r = 1 at every level; " +
                            std::to_string(p) + " mod " + std::to_string(delta) + " = " +
                            std::to_string(p % static_cast<std::uint32_t>(std::max(delta, 1))));
  const DetFamilySpec sq = derive_spec(p, delta, a, e);
  const DetFamilySpec sqp = derive_spec(p, delta, a, e + 1);
  DetCache local(std::nullopt, false);
  DetCache& cache = opt.cache ? *opt.cache : local;
  const UniPoly H = cache.get(sq, Which::kFl, opt.jobs) * cache.get(sq, Which::kFl1, opt.jobs);
  GcdStripResult res{cache.get(sqp, Which::kFl, opt.jobs), 0, {}};
  for (;;) {
    const UniPoly g = poly_gcd(H, res.residual);
    if (g.degree().value_or(0) == 0) break;
    res.residual = res.residual / g;
    ++res.iterations;
  }
  res.residual = res.residual.monic();
  if (res.residual.degree().value_or(0) == 0) return res;

  const std::uint64_t bound = static_cast<std::uint64_t>(delta) * (delta - 1) / 2 + 1;
  const FieldCtx& field = ff_create(p, quadratic ? 2 : 1);
  for (const auto& t0 : poly_roots(res.residual, field)) {
    const CurveSpec curve = specialize(standard_family(p, delta), t0);
    if (!is_smooth_fibre(curve)) continue;
    GcdCandidate c{t0, false, std::nullopt, false, {}};
    c.facts.push_back("H(t0) != 0 at q = " + std::to_string(sq.q));
    c.facts.push_back("D(t0) = 0 at q = " + std::to_string(sqp.q) + ", r = " + std::to_string(sqp.r));
    // section of F_l at the certifying degree, lifted to the critical degree of level e + 1
    const auto space = syzygy_space(GradedRing::binary(field.zero()), family_generators(sqp, Which::kFl, t0),
                                    static_cast<int>(sqp.m_cert_l));
    if (space.empty()) throw ConsistencyError("determinant vanishes without a section at t0 = " + t0.to_string());
    SyzygyVector w = normalized(lift_section(curve, static_cast<int>(sqp.aq), space.front(), Which::kFl,
                                             static_cast<int>(sqp.r)));
    const GeneratorTuple g1 = frobenius_gens(monomial_gens(field, a), e + 1);
    c.confirmed_direct = syzygy_dimension(curve_ring(curve), g1, w.degree) > 0 &&
                         verify_syzygy<FieldElem>(curve_ring(curve), g1, w);
    if (sq.q >= bound) {
      c.semistable = true;
      c.facts.push_back("semistable: determinants nonzero at q >= " + std::to_string(bound));
    } else if (hnf_check(bundle_below(curve, a, e + 1), w)) {
      c.semistable = true;
      c.facts.push_back("semistable: the level " + std::to_string(e + 1) + " section passes the HNF test");
    } else {
      c.facts.push_back("q below " + std::to_string(bound) + " and the HNF test fails; semistability open");
    }
    if (sqp.r == 1) c.facts.push_back("not strongly semistable");
    c.witness = std::move(w);
    res.candidates.push_back(std::move(c));
  }
  return res;
}

std::vector<TableRow> prime_table(std::uint32_t p_max, const std::vector<Method>& methods, const TableOptions& opt) {
  const std::uint32_t ceiling = opt.full_range ? 3433 : opt.budget;
  if (p_max > ceiling)
    throw PreconditionError("p_max " + std::to_string(p_max) + " exceeds the budget " + std::to_string(ceiling));
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 3; p <= p_max; p += 2)
    if (is_prime(p) && opt.delta % static_cast<int>(p) != 0) primes.push_back(p);
  std::vector<TableRow> rows(primes.size());
  SearchOptions inner = opt.search;
  inner.jobs = 1;
  inner.fallback = true;
  auto has = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
  parallel_for(primes.size(), opt.search.jobs, [&](std::size_t i) {
    const std::uint32_t p = primes[i];
    TableRow& row = rows[i];
    row.p = p;
    auto take = [&](Method m, const std::vector<SearchHit>& hits) {
      row.outcomes.emplace_back(m, hits.empty() ? Outcome::kNotFound : Outcome::kFound);
      if (!row.hit && !hits.empty()) row.hit = hits.front();
    };
    if (has(Method::kPrimeScan)) take(Method::kPrimeScan, method_prime_scan(p, opt.delta, opt.a, inner));
    if (has(Method::kExtScan)) {
      // only where the cheaper scan came up empty
      if (row.hit)
        row.outcomes.emplace_back(Method::kExtScan, Outcome::kSkipped);
      else
        take(Method::kExtScan, method_ext_scan(p, opt.delta, opt.a, inner));
    }
    if (has(Method::kGcdStrip)) {
      if ((p - 1) % static_cast<std::uint32_t>(opt.delta) != 0) {
        row.outcomes.emplace_back(Method::kGcdStrip, Outcome::kNotApplicable);
      } else if (static_cast<std::uint64_t>(p) * p > opt.gcd_budget) {
        row.outcomes.emplace_back(Method::kGcdStrip, Outcome::kSkipped);
      } else {
        const GcdStripResult g = method_gcd_strip(p, opt.delta, opt.a, 1, true, inner);
        bool any = false;
        for (const auto& c : g.candidates) any = any || (c.semistable && c.confirmed_direct);
        row.outcomes.emplace_back(Method::kGcdStrip, any ? Outcome::kFound : Outcome::kNotFound);
      }
    }
  });
  return rows;
}

bool RegressionReport::ok() const {
  for (const auto& l : lines)
    if (!l.ok) return false;
  return !lines.empty();
}

FixedCurveReport fixed_curve_regression(std::uint32_t p, int delta) {
  if (delta < 5) throw PreconditionError("the fixed-curve family needs delta >= 5");
  if (static_cast<std::uint32_t>(delta) % p == 0) throw PreconditionError("p divides delta");
  FixedCurveReport rep;
  rep.e = residue_destab_condition(p, delta);
  rep.lines.push_back({"numeric condition", true,
                       rep.e ? "holds at e = " + std::to_string(*rep.e)
                             : std::string("numeric criterion inapplicable for p mod delta = ") +
                                   std::to_string(p % static_cast<std::uint32_t>(delta))});

  const FieldCtx& fp = ff_create(p, 1);
  const CurveSpec curve = fermat_curve(fp, delta);
  const GradedRing ring = curve_ring(curve);
  const GeneratorTuple g0{parse_fpoly3(fp, "x^2"), parse_fpoly3(fp, "y^2"), parse_fpoly3(fp, "x*y")};
  const auto c = rank2_trivialization_check<FieldElem>(ring, g0, parse_syzygy(fp, "(0; x; -y)", g0),
                                                       parse_syzygy(fp, "(y; 0; -x)", g0));
  rep.lines.push_back({"t=0 trivialization", c && !c->is_zero(),
                       c ? "determinant scalar " + c->to_string() : std::string("sections do not trivialize")});

  if (rep.e) {
    const GeneratorTuple g1 = frobenius_gens(monomial_gens(fp, 2), *rep.e);
    const BundleSpec b = syzygy_bundle(curve, monomial_gens(fp, 2));
    std::uint64_t q = 1;
    for (int i = 0; i < *rep.e; ++i) q *= p;
    const int crit = static_cast<int>(critical_total_degree(b, q));
    const auto found = first_syzygies(ring, g1, static_cast<int>(2 * q), crit);
    if (found) rep.witness = normalized(found->basis.front());
    rep.lines.push_back({"t=1 destabilising section", found.has_value(),
                         found ? rep.witness->to_string() : "none up to degree " + std::to_string(crit)});
  }
  return rep;
}

namespace {

SyzygyVectorT<UniPoly> parse_t_syzygy(const FieldCtx& fp, const std::string& text, int degree) {
  SyzygyVectorT<UniPoly> s;
  s.degree = degree;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(';', start);
    s.comps.push_back(parse_tpoly3(fp, text.substr(start, end == std::string::npos ? end : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return s;
}

}  // namespace

RegressionReport char2_regression() {
  RegressionReport rep;
  const FieldCtx& f2 = ff_create(2, 1);

  const CurveSpec c0 = make_curve(f2, parse_fpoly3(f2, "x^5 + y^5 - z^5"));
  const BundleSpec b0 = syzygy_bundle(c0, monomial_gens(f2, 2));
  const SyzygyVector s0 = parse_syzygy(f2, "(x; y; z)", frobenius_gens(b0.gens, 1));
  const HnfClauses h = hnf_clauses(b0, s0);
  rep.lines.push_back({"t=0 degree bound", h.degree_bound, "5 < 6"});
  rep.lines.push_back({"t=0 indivisibility", h.indivisible, "2 does not divide 25"});
  rep.lines.push_back({"t=0 no zeros", h.primary, "(x, y, z) primary"});

  const TPoly3 G = parse_tpoly3(f2, "x^5 + y^5 - z^5 + t*x^2*y^3");
  const GradedRingT<UniPoly> ring = GradedRingT<UniPoly>::curve(G);
  const std::vector<TPoly3> gens{parse_tpoly3(f2, "x^16"), parse_tpoly3(f2, "y^16"), parse_tpoly3(f2, "z^16")};
  const auto s1 = parse_t_syzygy(f2, "x^4*y^4; x^8*t^4 + y^8; y^4*z^4", 24);
  const auto s2 = parse_t_syzygy(
      f2,
      "x^2*y^5*z*t^5 + y^7*z*t^4 + x^2*y^5*z + x^2*z^6;"
      "x^6*y*z*t^9 + x^4*y^3*z*t^8 + x^2*y^5*z*t^7 + x^5*y^2*z*t^6 + y^7*z*t^6 + x^6*y*z*t^4 + x*y^6*z*t^4"
      " + x^2*y^5*z*t^2 + x^5*y^2*z*t + y^2*z^6*t + x^3*y^4*z;"
      "y^8*t^6 + x^3*y^5*t^5 + x*y^7*t^4 + x^2*y^6*t^2 + y^8*t + x^8 + x^3*y^5",
      24);
  const bool v1 = verify_syzygy<UniPoly>(ring, gens, s1);
  const bool v2 = verify_syzygy<UniPoly>(ring, gens, s2);
  rep.lines.push_back({"generic s1 syzygy", v1, "degree 24 over F_2[t]"});
  rep.lines.push_back({"generic s2 syzygy", v2, "degree 24 over F_2[t]"});
  rep.lines.push_back({"generic s1 no zeros", is_primary_generic(ring, s1.comps), "primary over F_2(t)"});
  std::optional<UniPoly> det;
  if (v1 && v2) det = rank2_trivialization_check<UniPoly>(ring, gens, s1, s2);
  rep.lines.push_back({"generic trivialization", det && !det->is_zero(),
                       det ? "determinant " + det->to_string("t") : std::string("not verified")});
  return rep;
}

}  // namespace syzcert
