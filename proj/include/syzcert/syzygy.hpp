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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzcert/curve.hpp"

namespace syzcert {

// (s_1, ..., s_n) of total degree m: deg s_i = m - d_i, sum s_i f_i = 0.
template <class C>
struct SyzygyVectorT {
  std::vector<HomPoly3<C>> comps;
  int degree = 0;

  bool is_zero() const {
    for (const auto& c : comps)
      if (!c.is_zero()) return false;
    return true;
  }
  // "(s1; s2; s3) @ degree m"
  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (i) out += "; ";
      out += comps[i].to_string();
    }
    return out + ") @ degree " + std::to_string(degree);
  }
  friend bool operator==(const SyzygyVectorT&, const SyzygyVectorT&) = default;
};

using SyzygyVector = SyzygyVectorT<FieldElem>;
using GeneratorTuple = std::vector<FPoly3>;

// Normal form of sum s_i f_i.
template <class C>
HomPoly3<C> syzygy_residual(const GradedRingT<C>& ring, std::span<const HomPoly3<C>> gens, const SyzygyVectorT<C>& s) {
  if (s.comps.size() != gens.size()) throw PreconditionError("syzygy length differs from the generator count");
  HomPoly3<C> acc(ring.zero(), s.degree);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (s.comps[i].is_zero()) continue;
    if (s.comps[i].degree() + gens[i].degree() != s.degree) throw PreconditionError("component degree mismatch");
    acc = acc + s.comps[i] * gens[i];
  }
  return ring.normal_form(acc);
}

template <class C>
bool verify_syzygy(const GradedRingT<C>& ring, std::span<const HomPoly3<C>> gens, const SyzygyVectorT<C>& s) {
  return syzygy_residual(ring, gens, s).is_zero();
}

SyzygyVector parse_syzygy(const FieldCtx& field, std::string_view text, std::span<const FPoly3> gens);

// Basis of the degree-m syzygies of gens in ring (curve, k[x,y] or k[x,y,z]).
std::vector<SyzygyVector> syzygy_space(const GradedRing& ring, std::span<const FPoly3> gens, int m);
std::vector<SyzygyVector> syzygy_space(const CurveSpec& curve, std::span<const FPoly3> gens, int m);
std::size_t syzygy_dimension(const GradedRing& ring, std::span<const FPoly3> gens, int m);

struct MinimalSyzygies {
  int degree = 0;
  std::vector<SyzygyVector> basis;
};

// Lowest degree in [from, to] with a nonzero syzygy, or nothing.
std::optional<MinimalSyzygies> first_syzygies(const GradedRing& ring, std::span<const FPoly3> gens, int from, int to);
// Two-variable search from the smallest generator degree up to the smallest
// pairwise Koszul degree.
MinimalSyzygies minimal_syzygy_degree(std::span<const FPoly3> gens);

enum class Which { kFl, kFl1 };
const char* to_string(Which w);

// F_l section (s1, s2, s3) -> (z^r s1, z^r s2, s3) at degree m + r;
// F_{l+1} section (t1, t2, t3) -> (t1, t2, z^(delta-r) t3) at degree m.
// The result is checked against (x^aq, y^aq, z^aq) on the curve.
SyzygyVector lift_section(const CurveSpec& curve, int aq, const SyzygyVector& s, Which which, int r);

GeneratorTuple monomial_gens(const FieldCtx& field, int a);  // (x^a, y^a, z^a)
// f_i -> f_i^(p^e) by the Frobenius on coefficients and exponents.
GeneratorTuple frobenius_gens(std::span<const FPoly3> gens, int e);
template <class C>
HomPoly3<C> frobenius_power(const HomPoly3<C>& f, std::uint64_t q);

std::size_t hilbert_function(const CurveSpec& curve, std::span<const FPoly3> elems, int d);
// Components generate an ideal primary to the irrelevant ideal: the section
// has no zeros. Zero components are ignored.
bool is_primary(const CurveSpec& curve, std::span<const FPoly3> elems);
// Same over F_p(t) for a family, using exact ranks over the function field.
bool is_primary_generic(const GradedRingT<UniPoly>& ring, std::span<const TPoly3> elems);

// Three 2x2 minors of (s, u); returns c if they equal c * (f_1, f_2, f_3)
// for a nonzero scalar c, nothing otherwise.
template <class C>
std::optional<C> rank2_trivialization_check(const GradedRingT<C>& ring, std::span<const HomPoly3<C>> gens,
                                            const SyzygyVectorT<C>& s, const SyzygyVectorT<C>& u);

}  // namespace syzcert
