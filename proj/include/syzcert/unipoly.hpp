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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzcert/field.hpp"

namespace syzcert {

// Dense univariate polynomial over a FieldCtx. Coefficients are held as
// coordinate planes (one plane for F_p, two for F_{p^2}); the stored length is
// always degree + 1, and zero for the zero polynomial.
class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& ctx) : ctx_(&ctx) {}
  UniPoly(const FieldCtx& ctx, const std::vector<FieldElem>& coeffs);

  // Low-to-high integer coefficients reduced mod p.
  static UniPoly from_ints(const FieldCtx& ctx, std::initializer_list<std::int64_t> coeffs);
  static UniPoly from_ints(const FieldCtx& ctx, std::span<const std::int64_t> coeffs);
  static UniPoly monomial(const FieldElem& c, std::size_t degree);
  static UniPoly constant(const FieldElem& c) { return monomial(c, 0); }
  static UniPoly variable(const FieldCtx& ctx) { return monomial(ctx.one(), 1); }

  const FieldCtx& ctx() const { return *ctx_; }
  std::optional<std::size_t> degree() const {
    if (planes_[0].empty()) return std::nullopt;
    return planes_[0].size() - 1;
  }
  bool is_zero() const { return planes_[0].empty(); }
  std::size_t size() const { return planes_[0].size(); }

  FieldElem coeff(std::size_t i) const;
  FieldElem leading() const;
  void set_coeff(std::size_t i, const FieldElem& c);

  // Horner evaluation; `c` may live in an extension of the coefficient field.
  FieldElem eval(const FieldElem& c) const;

  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly embed(const FieldCtx& to) const;
  bool coefficients_in_prime_field() const;
  // Inverse of embed for polynomials whose coefficients lie in F_p.
  UniPoly restrict_to_prime_field() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const FieldElem& c);
  friend UniPoly operator*(const FieldElem& c, const UniPoly& a) { return a * c; }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.ctx_ == b.ctx_ && a.planes_ == b.planes_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  // "t^5 + 4t^3 + 2t"; "0" for the zero polynomial.
  std::string to_string(std::string_view var = "t") const;

  const std::vector<std::uint32_t>& plane(int a) const { return planes_[static_cast<std::size_t>(a)]; }

 private:
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  void normalize();
  void resize(std::size_t n);

  const FieldCtx* ctx_;
  std::array<std::vector<std::uint32_t>, 2> planes_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
inline UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
inline UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

// base^e mod m
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);

// Monic gcd; gcd(0, 0) = 0. Throws on mismatched contexts.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// All c in ctx with a(c) = 0, in the field's enumeration order. `a` may have
// coefficients in the prime subfield of ctx. Throws for the zero polynomial.
std::vector<FieldElem> poly_roots(const UniPoly& a, const FieldCtx& ctx);

// Unique polynomial of degree < points.size() through the points.
UniPoly poly_interpolate(std::span<const std::pair<FieldElem, FieldElem>> points, const FieldCtx& ctx);

}  // namespace syzcert
