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
#include <vector>

#include "syzcert/field.hpp"
#include "syzcert/unipoly.hpp"

namespace syzcert {

// Monic irreducible polynomials over F_p in a fixed order: t - c for
// c = 0, 1, ..., p-1, then degree 2, 3, ... with candidates enumerated by the
// base-p number c_0 + c_1 p + ... of their lower coefficients.
class IrreducibleSequence {
 public:
  explicit IrreducibleSequence(std::uint32_t p, int max_degree = kMaxExtDegree);

  // Lower coefficients g_0..g_{k-1} of the next modulus g = t^k + ...; throws
  // once max_degree is exhausted.
  std::vector<std::uint32_t> next();

 private:
  std::uint32_t p_;
  int max_degree_;
  int degree_ = 1;
  std::uint64_t candidate_ = 0;
};

bool is_irreducible(const UniPoly& g);

// Lower coefficients of the first monic irreducible of degree k in the order
// used by IrreducibleSequence.
std::vector<std::uint32_t> first_irreducible(std::uint32_t p, int k);

// Image of a (coefficients in F_p) in F_p[u]/(g).
ExtArith::Elem reduce_mod(const UniPoly& a, const ExtArith& ar);
// Residue as a polynomial of degree < k.
UniPoly residue_poly(const ExtArith::Elem& e, const ExtArith& ar, const FieldCtx& prime_field);
UniPoly modulus_poly(const ExtArith& ar, const FieldCtx& prime_field);

// Exact rank over F_p(t) of a matrix with entries in F_p[t]. A nonzero r x r
// minor has degree at most r * max entry degree, so it survives reduction
// modulo at least one of any set of distinct irreducibles whose degrees sum
// past that bound; the rank is the maximum over such a set.
std::size_t generic_rank(const std::vector<std::vector<UniPoly>>& m, const FieldCtx& prime_field);

}  // namespace syzcert
