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

#include <climits>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "syzcert/gf_matrix.hpp"
#include "syzcert/homogeneous.hpp"

namespace syzcert {

// One-parameter family: G_t homogeneous of degree delta over F_p[t], with a
// constant unit as coefficient of z^delta.
struct CurveFamily {
  std::uint32_t p = 0;
  int delta = 0;
  TPoly3 G;
};

// A plane curve over F_p or F_{p^2}, monic in z up to a unit.
struct CurveSpec {
  const FieldCtx* field = nullptr;
  int delta = 0;
  FPoly3 G;

  int genus() const { return (delta - 1) * (delta - 2) / 2; }
  int hyperplane_degree() const { return delta; }
};

// x^delta + y^delta + t x^(delta/2) y^(delta/2) - z^delta over F_p[t].
CurveFamily standard_family(std::uint32_t p, int delta);
// Fermat curve x^delta + y^delta - z^delta.
CurveSpec fermat_curve(const FieldCtx& field, int delta);

CurveSpec specialize(const CurveFamily& family, const FieldElem& t0);
CurveSpec make_curve(const FieldCtx& field, const FPoly3& G);

enum class Smoothness { kSmooth, kSingular, kInseparable };
const char* to_string(Smoothness s);

Smoothness smoothness(const CurveSpec& curve);
bool is_smooth_fibre(const CurveSpec& curve);

inline long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

enum class RingKind {
  kBinary,      // k[x, y]
  kPolynomial,  // k[x, y, z]
  kCurve,       // k[x, y, z]/(G), basis monomials with z-degree < delta
};

// Standard graded ring with a fixed monomial basis in each degree, ordered
// lexicographically on (z-degree, x-degree). Normal forms of z^n are memoised
// and shared between copies.
template <class C>
class GradedRingT {
 public:
  static GradedRingT binary(const C& zero) { return GradedRingT(RingKind::kBinary, zero, 0, std::nullopt); }
  static GradedRingT polynomial(const C& zero) { return GradedRingT(RingKind::kPolynomial, zero, 0, std::nullopt); }
  static GradedRingT curve(const HomPoly3<C>& G) {
    return GradedRingT(RingKind::kCurve, G.zero_coeff(), G.degree(), G);
  }

  RingKind kind() const { return kind_; }
  int delta() const { return delta_; }
  const C& zero() const { return zero_; }
  int zcap() const { return kind_ == RingKind::kBinary ? 1 : kind_ == RingKind::kCurve ? delta_ : INT_MAX; }

  std::size_t dim(int d) const {
    if (d < 0) return 0;
    switch (kind_) {
      case RingKind::kBinary:
        return static_cast<std::size_t>(d) + 1;
      case RingKind::kPolynomial:
        return static_cast<std::size_t>(binom2(d + 2));
      case RingKind::kCurve:
        return static_cast<std::size_t>(binom2(d + 2) - binom2(d - delta_ + 2));
    }
    return 0;
  }

  std::size_t index(const Exp3& e) const {
    const long long d = e.degree();
    const long long k = e.k;
    return static_cast<std::size_t>(k * (d + 1) - k * (k - 1) / 2 + e.i);
  }

  Exp3 monomial(int d, std::size_t idx) const {
    int k = 0;
    while (idx > static_cast<std::size_t>(d - k)) {
      idx -= static_cast<std::size_t>(d - k + 1);
      ++k;
    }
    const int i = static_cast<int>(idx);
    return {i, d - k - i, k};
  }

  // Calls add(row, coeff) for the normal form of c * x^e.i y^e.j z^e.k,
  // rows indexed in the basis of degree e.degree(). Rows may repeat.
  template <class Add>
  void scatter_monomial(const Exp3& e, const C& c, Add&& add) const {
    if (e.k < zcap()) {
      add(index(e), c);
      return;
    }
    if (kind_ != RingKind::kCurve) throw PreconditionError("z does not occur in a binary form ring");
    const HomPoly3<C>& nz = z_power_nf(e.k);
    for (const auto& [r, cr] : nz.terms()) add(index({e.i + r.i, e.j + r.j, r.k}), c * cr);
  }

  HomPoly3<C> normal_form(const HomPoly3<C>& f) const {
    HomPoly3<C> out(zero_, f.degree());
    for (const auto& [e, c] : f.terms()) {
      scatter_monomial(e, c, [&](std::size_t row, const C& v) { out.add_term(monomial(f.degree(), row), v); });
    }
    return out;
  }

  // Dense coordinates of the normal form of f in the basis of its degree.
  std::vector<C> coordinates(const HomPoly3<C>& f) const {
    std::vector<C> v(dim(f.degree()), zero_);
    for (const auto& [e, c] : f.terms()) {
      scatter_monomial(e, c, [&](std::size_t row, const C& val) { v[row] = v[row] + val; });
    }
    return v;
  }

  HomPoly3<C> from_coordinates(int d, std::span<const C> v) const {
    HomPoly3<C> out(zero_, d);
    for (std::size_t r = 0; r < v.size(); ++r) out.add_term(monomial(d, r), v[r]);
    return out;
  }

  // Block map S_{m-d_1} + ... + S_{m-d_n} -> S_m, v -> sum v_i g_i, as calls
  // add(row, col, coeff). Returns the column offsets of each block.
  template <class Add>
  std::vector<std::size_t> scatter_block(std::span<const HomPoly3<C>> gens, int m, Add&& add) const {
    std::vector<std::size_t> offsets;
    std::size_t col = 0;
    for (const auto& g : gens) {
      offsets.push_back(col);
      const int src = m - g.degree();
      for (std::size_t b = 0; b < dim(src); ++b, ++col) {
        const Exp3 eb = monomial(src, b);
        for (const auto& [e, c] : g.terms()) {
          scatter_monomial({e.i + eb.i, e.j + eb.j, e.k + eb.k}, c,
                           [&](std::size_t row, const C& v) { add(row, col, v); });
        }
      }
    }
    offsets.push_back(col);
    return offsets;
  }

  const HomPoly3<C>& z_power_nf(int n) const {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto& cache = memo_->zpow;
    while (static_cast<int>(cache.size()) + delta_ <= n) {
      if (cache.empty()) {
        cache.push_back(reduction_);
        continue;
      }
      const HomPoly3<C>& prev = cache.back();
      HomPoly3<C> next(zero_, prev.degree() + 1);
      for (const auto& [e, c] : prev.terms()) {
        if (e.k + 1 < delta_) {
          next.add_term({e.i, e.j, e.k + 1}, c);
        } else {
          for (const auto& [r, cr] : reduction_.terms()) next.add_term({e.i + r.i, e.j + r.j, r.k}, c * cr);
        }
      }
      cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(n - delta_)];
  }

 private:
  struct Memo {
    std::mutex mu;
    std::deque<HomPoly3<C>> zpow;  // stable references; zpow[n - delta] = normal form of z^n
  };

  GradedRingT(RingKind kind, const C& zero, int delta, std::optional<HomPoly3<C>> G)
      : kind_(kind), zero_(zero_like(zero)), delta_(delta), reduction_(zero_, delta), memo_(std::make_shared<Memo>()) {
    if (kind_ != RingKind::kCurve) return;
    const Exp3 top{0, 0, delta_};
    const C lead = G->coeff(top);
    if (!is_unit(lead)) throw PreconditionError("curve equation is not monic in z: " + G->to_string());
    if (G->max_z_degree() != delta_) throw PreconditionError("curve equation has z-degree above its degree");
    const C inv = unit_inverse(lead);
    for (const auto& [e, c] : G->terms()) {
      if (e.k != delta_) reduction_.add_term(e, -(inv * c));
    }
  }

  RingKind kind_;
  C zero_;
  int delta_;
  HomPoly3<C> reduction_;  // normal form of z^delta
  std::shared_ptr<Memo> memo_;
};

using GradedRing = GradedRingT<FieldElem>;

GradedRing curve_ring(const CurveSpec& curve);

// Normal form modulo the curve equation; idempotent, z-degrees below delta.
FPoly3 normal_form(const FPoly3& f, const CurveSpec& curve);
std::size_t graded_dim(const CurveSpec& curve, int d);

// Matrix of multiplication by f from S_m to S_{m + deg f}.
GFMatrix mult_matrix(const GradedRing& ring, const FPoly3& f, int m);
GFMatrix mult_matrix(const CurveSpec& curve, const FPoly3& f, int m);

// Block matrix of v -> sum v_i g_i into degree m.
GFMatrix block_matrix(const GradedRing& ring, std::span<const FPoly3> gens, int m,
                      std::vector<std::size_t>* offsets = nullptr);

// Hilbert function of ring/(elems) in degree d.
std::size_t quotient_hilbert(const GradedRing& ring, std::span<const FPoly3> elems, int d);

// True iff the Hilbert function of ring/(elems) reaches zero at or below
// sum(deg) + 3 * delta_hint. A few earlier probe degrees allow early exit;
// since vanishing is absorbing this decides the same as a full scan.
bool quotient_vanishes(const GradedRing& ring, std::span<const FPoly3> elems, int delta_hint);

// Coefficient list of f^l by x-degree.
std::vector<UniPoly> power_coeffs(const HomPoly2<UniPoly>& f, int l);
// x^delta + y^delta + t x^(delta/2) y^(delta/2) as a binary form over F_p[t].
HomPoly2<UniPoly> standard_binary_form(std::uint32_t p, int delta);

// Text input. Variables x, y, z; t is the family parameter; w is the
// generator of F_{p^2}. Integer coefficients are reduced mod p.
TPoly3 parse_tpoly3(const FieldCtx& prime_field, std::string_view text);
FPoly3 parse_fpoly3(const FieldCtx& field, std::string_view text);
// "p=7 delta=4 G = x^4 + y^4 + t*x^2*y^2 - z^4"
CurveFamily parse_family(std::string_view text);

}  // namespace syzcert
