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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzcert/det_family.hpp"
#include "syzcert/syzygy.hpp"

namespace syzcert {

// Syz(gens)(twist) on a plane curve. Rank n - 1, degree delta (twist (n-1) - sum deg).
struct BundleSpec {
  GeneratorTuple gens;
  int twist = 0;
  const CurveSpec* curve = nullptr;

  int rank() const { return static_cast<int>(gens.size()) - 1; }
  std::int64_t degree() const;
  // slope as the exact fraction degree / rank
  std::int64_t slope_num() const { return degree(); }
  std::int64_t slope_den() const { return rank(); }
};

BundleSpec syzygy_bundle(const CurveSpec& curve, GeneratorTuple gens, int twist = 0);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

// m = -(floor(mu q / deg O(1)) + 1): the twist of the q-th pullback with a destabilising section.
std::int64_t critical_degree(const BundleSpec& bundle, std::uint64_t q);
// The same as a total degree for syzygies of the q-th powers: twist * q + m.
std::int64_t critical_total_degree(const BundleSpec& bundle, std::uint64_t q);

enum class VerdictKind {
  kStronglySemistableCertified,
  kSemistable,
  kNotStronglySemistable,
  kNotSemistableAtLevel,
  kInconclusive,
};
const char* to_string(VerdictKind k);

struct VerdictItem {
  VerdictKind kind = VerdictKind::kInconclusive;
  int e = 0;  // Frobenius level, or the certified bound
  std::optional<SyzygyVector> witness;
  std::string reason;
  std::string label() const;  // "NotStronglySemistable(e=1)"
};

struct Verdict {
  std::vector<VerdictItem> items;
  std::vector<std::string> facts;

  bool has(VerdictKind k) const;
  const VerdictItem* find(VerdictKind k) const;
  void add(VerdictItem item);
  std::string summary() const;
};

Verdict check_semistable(const BundleSpec& bundle);
Verdict check_strongly_semistable_up_to(const BundleSpec& bundle, int e_max);

struct HnfClauses {
  bool degree_bound = false;  // m < -p deg S / (2 deg O(1))
  bool indivisible = false;   // p does not divide m deg O(1)
  bool primary = false;       // no zeros on the curve
  bool all() const { return degree_bound && indivisible && primary; }
};

// s: a syzygy of the first Frobenius pullback of a rank-2 bundle.
HnfClauses hnf_clauses(const BundleSpec& bundle, const SyzygyVector& s);
bool hnf_check(const BundleSpec& bundle, const SyzygyVector& s);

// Smallest e with 2v < delta < 3v for v = p^e mod delta: then the e-th Frobenius
// pullback of Syz(x^2, y^2, z^2) on a smooth degree-delta curve is not semistable.
std::optional<int> residue_destab_condition(std::uint32_t p, int delta);

// Generators (x^aq, y^aq, f(t0)^l) resp. f^(l+1), as z-free forms over the field of t0.
GeneratorTuple family_generators(const DetFamilySpec& spec, Which which, const FieldElem& t0);

struct ClassifyOptions {
  int e_max = 4;
  unsigned jobs = 1;
};

struct FibreReport {
  std::uint32_t p = 0;
  int delta = 0;
  int a = 0;
  FieldElem t0;
  int e_max = 0;
  Verdict verdict;
};

// Throws PreconditionError when the fibre at t0 is not smooth.
FibreReport classify_fibre(std::uint32_t p, int delta, int a, const FieldElem& t0, const ClassifyOptions& opt = {});

// Re-check every attached witness from scratch.
bool witnesses_verify(const FibreReport& report);

}  // namespace syzcert
