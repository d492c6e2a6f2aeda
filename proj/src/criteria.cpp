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
#include "syzcert/criteria.hpp"

#include <algorithm>
#include <set>

#include "syzcert/log.hpp"

namespace syzcert {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw PreconditionError("division by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t BundleSpec::degree() const {
  std::int64_t sum = 0;
  for (const auto& g : gens) sum += g.degree();
  return static_cast<std::int64_t>(curve->delta) * (static_cast<std::int64_t>(twist) * rank() - sum);
}

BundleSpec syzygy_bundle(const CurveSpec& curve, GeneratorTuple gens, int twist) {
  if (gens.size() < 2) throw PreconditionError("a syzygy bundle needs at least two generators");
  for (const auto& g : gens)
    if (g.is_zero()) throw PreconditionError("zero generator");
  return BundleSpec{std::move(gens), twist, &curve};
}

std::int64_t critical_degree(const BundleSpec& bundle, std::uint64_t q) {
  if (q < 1) throw PreconditionError("q must be a positive power of p");
  const std::int64_t num = bundle.slope_num() * static_cast<std::int64_t>(q);
  const std::int64_t den = bundle.slope_den() * static_cast<std::int64_t>(bundle.curve->hyperplane_degree());
  return -(floor_div(num, den) + 1);
}

std::int64_t critical_total_degree(const BundleSpec& bundle, std::uint64_t q) {
  return static_cast<std::int64_t>(bundle.twist) * static_cast<std::int64_t>(q) + critical_degree(bundle, q);
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kStronglySemistableCertified:
      return "StronglySemistableCertified";
    case VerdictKind::kSemistable:
      return "Semistable";
    case VerdictKind::kNotStronglySemistable:
      return "NotStronglySemistable";
    case VerdictKind::kNotSemistableAtLevel:
      return "NotSemistableAtLevel";
    case VerdictKind::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string VerdictItem::label() const {
  switch (kind) {
    case VerdictKind::kStronglySemistableCertified:
      return std::string(to_string(kind)) + "(e_max=" + std::to_string(e) + ")";
    case VerdictKind::kNotStronglySemistable:
    case VerdictKind::kNotSemistableAtLevel:
      return std::string(to_string(kind)) + "(e=" + std::to_string(e) + ")";
    default:
      return to_string(kind);
  }
}

const VerdictItem* Verdict::find(VerdictKind k) const {
  for (const auto& it : items)
    if (it.kind == k) return &it;
  return nullptr;
}

bool Verdict::has(VerdictKind k) const { return find(k) != nullptr; }

void Verdict::add(VerdictItem item) {
  if (!has(item.kind)) items.push_back(std::move(item));
}

std::string Verdict::summary() const {
  std::string out;
  for (const auto& it : items) {
    if (!out.empty()) out += " + ";
    out += it.label();
  }
  return out.empty() ? "none" : out;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<SyzygyVector> sections_at(const BundleSpec& b, int e, std::int64_t m) {
  const GeneratorTuple gq = frobenius_gens(b.gens, e);
  for (const auto& g : gq)
    if (m >= g.degree()) return syzygy_space(*b.curve, gq, static_cast<int>(m));
  return {};
}

std::string qtext(std::uint64_t q) { return "q = " + std::to_string(q); }

}  // namespace

Verdict check_semistable(const BundleSpec& bundle) {
  const CurveSpec& curve = *bundle.curve;
  if (curve.genus() <= 0) throw PreconditionError("the semistability criterion needs positive genus");
  const std::uint32_t p = curve.field->p();
  const std::uint64_t need = static_cast<std::uint64_t>(curve.genus() + curve.hyperplane_degree());
  int e = 0;
  while (ipow(p, e) < need) ++e;
  const std::uint64_t q = ipow(p, e);
  const std::int64_t m = critical_total_degree(bundle, q);
  Verdict v;
  const auto space = sections_at(bundle, e, m);
  if (space.empty()) {
    v.facts.push_back("no section of the pullback at total degree " + std::to_string(m) + " for " + qtext(q));
    v.add({VerdictKind::kSemistable, e, std::nullopt, "critical degree empty at " + qtext(q)});
  } else {
    v.facts.push_back(std::to_string(space.size()) + " independent sections at total degree " + std::to_string(m) +
                      " for " + qtext(q));
    v.add({VerdictKind::kInconclusive, e, std::nullopt, "critical-degree sections exist; criterion is one-sided"});
  }
  return v;
}

Verdict check_strongly_semistable_up_to(const BundleSpec& bundle, int e_max) {
  if (bundle.curve->genus() <= 0) throw PreconditionError("the semistability criterion needs positive genus");
  const std::uint32_t p = bundle.curve->field->p();
  Verdict v;
  for (int e = 1; e <= e_max; ++e) {
    const std::uint64_t q = ipow(p, e);
    const std::int64_t m = critical_total_degree(bundle, q);
    auto space = sections_at(bundle, e, m);
    if (!space.empty()) {
      v.facts.push_back("section at total degree " + std::to_string(m) + " for " + qtext(q));
      v.add({VerdictKind::kNotStronglySemistable, e, space.front(), "pullback has a critical-degree section"});
      return v;
    }
    v.facts.push_back("critical degree " + std::to_string(m) + " empty for " + qtext(q));
  }
  v.add({VerdictKind::kStronglySemistableCertified, e_max, std::nullopt, "critical degrees empty up to e_max"});
  return v;
}

HnfClauses hnf_clauses(const BundleSpec& bundle, const SyzygyVector& s) {
  if (bundle.rank() != 2) throw PreconditionError("the HNF criterion is for rank 2 bundles");
  const CurveSpec& curve = *bundle.curve;
  const std::int64_t p = curve.field->p();
  const GeneratorTuple g1 = frobenius_gens(bundle.gens, 1);
  if (!verify_syzygy<FieldElem>(curve_ring(curve), g1, s))
    throw PreconditionError("not a syzygy of the first Frobenius pullback: " + s.to_string());
  const std::int64_t deg_o = curve.hyperplane_degree();
  const std::int64_t m = s.degree - static_cast<std::int64_t>(bundle.twist) * p;
  HnfClauses c;
  c.degree_bound = 2 * deg_o * m < -p * bundle.degree();
  c.indivisible = ((m * deg_o) % p + p) % p != 0;
  c.primary = is_primary(curve, s.comps);
  return c;
}

bool hnf_check(const BundleSpec& bundle, const SyzygyVector& s) { return hnf_clauses(bundle, s).all(); }

std::optional<int> residue_destab_condition(std::uint32_t p, int delta) {
  if (delta < 5) throw PreconditionError("the numeric condition needs delta >= 5");
  const std::int64_t d = delta;
  const std::int64_t r = p % static_cast<std::uint32_t>(delta);
  std::set<std::int64_t> seen;
  std::int64_t v = r;
  for (int e = 1; seen.insert(v).second; ++e) {
    if (2 * v < d && d < 3 * v) return e;
    v = (v * r) % d;
  }
  return std::nullopt;
}

GeneratorTuple family_generators(const DetFamilySpec& spec, Which which, const FieldElem& t0) {
  const FieldCtx& field = t0.ctx();
  const HomPoly2<UniPoly> f = standard_binary_form(spec.p, spec.delta);
  std::vector<FieldElem> c;
  for (const auto& u : f.coeffs()) c.push_back(u.eval(t0));
  const FPoly3 fl = HomPoly2<FieldElem>(c).pow(static_cast<int>(spec.power(which))).to_hom3();
  const int aq = static_cast<int>(spec.aq);
  return {FPoly3::monomial(field.one(), {aq, 0, 0}), FPoly3::monomial(field.one(), {0, aq, 0}), fl};
}

namespace {

std::optional<SyzygyVector> lift_checked(const CurveSpec& curve, const DetFamilySpec& spec, const SyzygyVector& s,
                                         Which w) {
  SyzygyVector out = lift_section(curve, static_cast<int>(spec.aq), s, w, static_cast<int>(spec.r));
  if (out.is_zero()) return std::nullopt;
  return out;
}

}  // namespace

FibreReport classify_fibre(std::uint32_t p, int delta, int a, const FieldElem& t0, const ClassifyOptions& opt) {
  const FieldCtx& field = t0.ctx();
  if (field.p() != p) throw PreconditionError("t0 lives in characteristic " + std::to_string(field.p()));
  if (opt.e_max < 1) throw PreconditionError("e_max must be at least 1");
  derive_spec(p, delta, a, 1);
  const CurveSpec curve = specialize(standard_family(p, delta), t0);
  const Smoothness sm = smoothness(curve);
  if (sm != Smoothness::kSmooth)
    throw PreconditionError("fibre at t0 = " + t0.to_string() + " is " + to_string(sm) + ", not smooth");

  FibreReport rep{p, delta, a, t0, opt.e_max, {}};
  Verdict& v = rep.verdict;
  const BundleSpec bundle = syzygy_bundle(curve, monomial_gens(field, a));
  const GradedRing binary = GradedRing::binary(field.zero());
  const std::uint64_t ss_bound = static_cast<std::uint64_t>(delta) * (delta - 1) / 2 + 1;
  int certified = 0;

  for (int e = 1; e <= opt.e_max; ++e) {
    const DetFamilySpec spec = derive_spec(p, delta, a, e);
    const std::string qs = qtext(spec.q);
    const bool dz = det_at(build_matrix(spec, Which::kFl), t0).is_zero();
    const bool ez = det_at(build_matrix(spec, Which::kFl1), t0).is_zero();
    if (!dz && !ez) {
      certified = e;
      v.facts.push_back("D and E nonzero at t0 for " + qs);
      if (spec.q >= ss_bound)
        v.add({VerdictKind::kSemistable, e, std::nullopt, "determinants nonzero at " + qs + " past the genus bound"});
      continue;
    }
    if (dz) v.facts.push_back("D vanishes at t0 for " + qs);
    if (ez) v.facts.push_back("E vanishes at t0 for " + qs);

    if (dz) {
      const GeneratorTuple gens = family_generators(spec, Which::kFl, t0);
      const auto space = syzygy_space(binary, gens, static_cast<int>(spec.m_cert_l));
      if (space.empty()) throw ConsistencyError("D vanishes but F_l has no section at the certifying degree");
      if (spec.r == 1) {
        v.add({VerdictKind::kNotStronglySemistable, e, lift_checked(curve, spec, space.front(), Which::kFl),
               "D vanishes with r = 1"});
      } else {
        v.facts.push_back("r = " + std::to_string(spec.r) + " at " + qs + ", so the vanishing of D is not upgraded");
      }
    }

    std::vector<SyzygyVector> lifted;
    for (Which w : {Which::kFl, Which::kFl1}) {
      const GeneratorTuple gens = family_generators(spec, w, t0);
      const auto found = first_syzygies(binary, gens, 0, static_cast<int>(spec.destab_degree(w)));
      if (!found) continue;
      v.facts.push_back(std::string(to_string(w)) + " has a section of degree " + std::to_string(found->degree) +
                        " at " + qs);
      for (const auto& s : found->basis)
        if (auto l = lift_checked(curve, spec, s, w)) lifted.push_back(*l);
    }
    std::stable_sort(lifted.begin(), lifted.end(),
                     [](const SyzygyVector& x, const SyzygyVector& y) { return x.degree < y.degree; });
    if (!lifted.empty()) {
      v.add({VerdictKind::kNotSemistableAtLevel, e, lifted.front(), "destabilising section of the pullback"});
      v.add({VerdictKind::kNotStronglySemistable, e, lifted.front(), "a pullback is not semistable"});
      if (e == 1) {
        for (const auto& s : lifted) {
          if (hnf_check(bundle, s)) {
            v.add({VerdictKind::kSemistable, 1, s, "nowhere-vanishing destabilising section at level 1"});
            break;
          }
        }
      }
    } else {
      v.facts.push_back("no section of F_l or F_l+1 at the destabilising degrees for " + qs);
    }
    break;
  }
  if (certified == opt.e_max)
    v.add({VerdictKind::kStronglySemistableCertified, opt.e_max, std::nullopt,
           "determinants nonzero for every level up to e_max"});
  if (v.items.empty()) v.add({VerdictKind::kInconclusive, 0, std::nullopt, "no criterion applies; see facts"});
  if (!witnesses_verify(rep)) throw ConsistencyError("a witness failed re-verification at t0 = " + t0.to_string());
  return rep;
}

bool witnesses_verify(const FibreReport& report) {
  const FieldCtx& field = report.t0.ctx();
  const CurveSpec curve = specialize(standard_family(report.p, report.delta), report.t0);
  const GradedRing ring = curve_ring(curve);
  const BundleSpec bundle = syzygy_bundle(curve, monomial_gens(field, report.a));
  for (const auto& it : report.verdict.items) {
    if (!it.witness) continue;
    const GeneratorTuple gq = frobenius_gens(bundle.gens, it.e);
    if (it.witness->is_zero() || !verify_syzygy<FieldElem>(ring, gq, *it.witness)) return false;
    const std::uint64_t q = ipow(report.p, it.e);
    if (it.witness->degree > critical_total_degree(bundle, q)) return false;
    if (it.kind == VerdictKind::kSemistable && !hnf_check(bundle, *it.witness)) return false;
  }
  return true;
}

}  // namespace syzcert
