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

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "syzcert/error.hpp"
#include "syzcert/field.hpp"
#include "syzcert/unipoly.hpp"

namespace syzcert {

// Coefficient helpers shared by FieldElem and UniPoly coefficients.
inline FieldElem zero_like(const FieldElem& c) { return c.ctx().zero(); }
inline UniPoly zero_like(const UniPoly& c) { return UniPoly(c.ctx()); }
inline FieldElem one_like(const FieldElem& c) { return c.ctx().one(); }
inline UniPoly one_like(const UniPoly& c) { return UniPoly::constant(c.ctx().one()); }
inline FieldElem int_like(const FieldElem& c, std::int64_t v) { return c.ctx().from_int(v); }
inline UniPoly int_like(const UniPoly& c, std::int64_t v) { return UniPoly::constant(c.ctx().from_int(v)); }

inline bool is_unit(const FieldElem& c) { return !c.is_zero(); }
inline bool is_unit(const UniPoly& c) { return c.degree() == 0U; }
inline FieldElem unit_inverse(const FieldElem& c) { return c.inverse(); }
inline UniPoly unit_inverse(const UniPoly& c) {
  if (!is_unit(c)) throw PreconditionError("coefficient " + c.to_string() + " is not a unit");
  return UniPoly::constant(c.coeff(0).inverse());
}

// Coefficient text, parenthesised when it is a sum.
std::string coeff_text(const FieldElem& c);
std::string coeff_text(const UniPoly& c);

struct Exp3 {
  int i = 0;
  int j = 0;
  int k = 0;
  int degree() const { return i + j + k; }
  friend bool operator==(const Exp3&, const Exp3&) = default;
};

// Basis order: lexicographic on (k, i), ascending. j is implied within one
// degree and only breaks ties across degrees.
struct BasisOrder {
  bool operator()(const Exp3& a, const Exp3& b) const {
    if (a.k != b.k) return a.k < b.k;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::string monomial_text(const Exp3& e);

// Homogeneous polynomial in x, y, z with sparse nonzero terms.
template <class C>
class HomPoly3 {
 public:
  using Terms = std::map<Exp3, C, BasisOrder>;

  HomPoly3(C zero, int degree) : zero_(std::move(zero)), degree_(degree) {}

  static HomPoly3 monomial(const C& c, Exp3 e) {
    HomPoly3 out(zero_like(c), e.degree());
    out.add_term(e, c);
    return out;
  }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  const C& zero_coeff() const { return zero_; }

  C coeff(const Exp3& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(const Exp3& e, const C& c) {
    if (e.degree() != degree_ || e.i < 0 || e.j < 0 || e.k < 0) {
      throw PreconditionError("monomial " + monomial_text(e) + " not of degree " + std::to_string(degree_));
    }
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int max_z_degree() const {
    int m = -1;
    for (const auto& [e, c] : terms_) m = std::max(m, e.k);
    return m;
  }

  HomPoly3 operator-() const {
    HomPoly3 out(zero_, degree_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend HomPoly3 operator+(const HomPoly3& a, const HomPoly3& b) {
    if (a.is_zero() && a.degree_ != b.degree_) return b;
    if (b.is_zero() && a.degree_ != b.degree_) return a;
    check_same_degree(a, b);
    HomPoly3 out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend HomPoly3 operator-(const HomPoly3& a, const HomPoly3& b) { return a + (-b); }
  friend HomPoly3 operator*(const HomPoly3& a, const HomPoly3& b) {
    HomPoly3 out(a.zero_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term({ea.i + eb.i, ea.j + eb.j, ea.k + eb.k}, ca * cb);
    return out;
  }
  friend HomPoly3 operator*(const C& s, const HomPoly3& a) {
    HomPoly3 out(a.zero_, a.degree_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const HomPoly3& a, const HomPoly3& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HomPoly3& a, const HomPoly3& b) { return !(a == b); }

  // Multiply by x^a y^b z^c.
  HomPoly3 shifted(const Exp3& s) const {
    HomPoly3 out(zero_, degree_ + s.degree());
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exp3{e.i + s.i, e.j + s.j, e.k + s.k}, c);
    return out;
  }

  HomPoly3 pow(std::uint64_t n) const {
    HomPoly3 result = monomial(one_like(zero_), {});
    HomPoly3 base = *this;
    while (n > 0) {
      if (n & 1U) result = result * base;
      n >>= 1U;
      if (n > 0) base = base * base;
    }
    return result;
  }

  // Partial derivative in variable v (0 = x, 1 = y, 2 = z).
  HomPoly3 partial(int v) const {
    HomPoly3 out(zero_, degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [e, c] : terms_) {
      const int ex = v == 0 ? e.i : v == 1 ? e.j : e.k;
      if (ex == 0) continue;
      Exp3 d = e;
      (v == 0 ? d.i : v == 1 ? d.j : d.k) -= 1;
      out.add_term(d, int_like(zero_, ex) * c);
    }
    return out;
  }

  template <class F>
  auto map_coeffs(F&& fn) const -> HomPoly3<std::invoke_result_t<F, const C&>> {
    HomPoly3<std::invoke_result_t<F, const C&>> out(fn(zero_), degree_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      const std::string m = monomial_text(e);
      const std::string ct = coeff_text(c);
      if (m.empty()) {
        out += ct;
      } else if (ct == "1") {
        out += m;
      } else {
        out += ct + "*" + m;
      }
    }
    return out;
  }

 private:
  static void check_same_degree(const HomPoly3& a, const HomPoly3& b) {
    if (a.degree_ != b.degree_) {
      throw PreconditionError("adding homogeneous polynomials of degrees " + std::to_string(a.degree_) + " and " +
                              std::to_string(b.degree_));
    }
  }

  C zero_;
  int degree_;
  Terms terms_;
};

// Dense binary form: coeffs[i] is the coefficient of x^i y^(d-i).
template <class C>
class HomPoly2 {
 public:
  HomPoly2(C zero, int degree) : zero_(zero), coeffs_(static_cast<std::size_t>(degree) + 1, zero) {}
  explicit HomPoly2(std::vector<C> coeffs) : zero_(zero_like(coeffs.at(0))), coeffs_(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  // Out-of-range x-degrees read as zero.
  C coeff(int i) const { return (i < 0 || i > degree()) ? zero_ : coeffs_[static_cast<std::size_t>(i)]; }
  void set_coeff(int i, const C& c) { coeffs_.at(static_cast<std::size_t>(i)) = c; }

  friend HomPoly2 operator*(const HomPoly2& a, const HomPoly2& b) {
    HomPoly2 out(a.zero_, a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j <= b.degree(); ++j) {
        auto& slot = out.coeffs_[static_cast<std::size_t>(i + j)];
        slot = slot + a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return out;
  }

  HomPoly2 pow(int n) const {
    HomPoly2 result(std::vector<C>{one_like(zero_)});
    for (int k = 0; k < n; ++k) result = result * *this;
    return result;
  }

  HomPoly3<C> to_hom3() const {
    HomPoly3<C> out(zero_, degree());
    for (int i = 0; i <= degree(); ++i) out.add_term({i, degree() - i, 0}, coeffs_[static_cast<std::size_t>(i)]);
    return out;
  }

 private:
  C zero_;
  std::vector<C> coeffs_;
};

using FPoly3 = HomPoly3<FieldElem>;
using TPoly3 = HomPoly3<UniPoly>;

// Evaluate every F_p[t] coefficient at t0 (t0 may live in F_{p^2}).
FPoly3 specialize_coeffs(const TPoly3& f, const FieldElem& t0);
// Constant coefficients viewed in F_p[t].
TPoly3 as_family(const FPoly3& f);

}  // namespace syzcert
