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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace syzcert {

inline constexpr int kMaxExtDegree = 16;

bool is_prime(std::uint64_t n);

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Reduce an arbitrary integer into [0, p).
std::uint32_t reduce_int(std::int64_t v, std::uint32_t p);

// Arithmetic in F_p[u]/(g) for a monic irreducible g of degree k. k = 1 with
// g = u is the prime field. Elements are coordinate vectors in the basis
// 1, u, ..., u^{k-1}; coordinates past k stay zero.
class ExtArith {
 public:
  using Elem = std::array<std::uint32_t, kMaxExtDegree>;

  // `low` holds g_0..g_{k-1} with g = u^k + g_{k-1} u^{k-1} + ... + g_0.
  ExtArith(std::uint32_t p, std::vector<std::uint32_t> low);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  const std::vector<std::uint32_t>& modulus_low() const { return low_; }

  static Elem zero() { return Elem{}; }
  Elem one() const {
    Elem e{};
    e[0] = 1;
    return e;
  }
  Elem constant(std::uint32_t c) const {
    Elem e{};
    e[0] = c % p_;
    return e;
  }
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;

  // Row-major k x k matrix M with (c * v) = M v on coordinate vectors.
  void mul_matrix(const Elem& c, std::uint32_t* out) const;

 private:
  std::uint32_t p_;
  int k_;
  std::vector<std::uint32_t> low_;
};

class FieldElem;

// F_p (ext_degree 1) or F_{p^2} (ext_degree 2). Contexts are interned: one
// immutable instance per (p, ext_degree) lives for the whole process, so
// references and pointers to it never dangle and context identity is address
// identity.
class FieldCtx {
 public:
  // Throws PreconditionError for non-prime p or ext_degree outside {1, 2}.
  static const FieldCtx& get(std::uint32_t p, int ext_degree);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  int ext_degree() const { return ext_; }
  std::uint64_t order() const { return order_; }
  const ExtArith& arith() const { return arith_; }

  // Coefficients (low to high, monic) of the defining quadratic; empty for F_p.
  std::vector<std::uint32_t> modulus_poly() const;

  const FieldCtx& prime_subfield() const { return get(p_, 1); }
  const FieldCtx& quadratic_extension() const { return get(p_, 2); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t v) const;
  FieldElem make(std::uint32_t c0, std::uint32_t c1 = 0) const;
  // Class of t in F_p[t]/(modulus); throws for the prime field.
  FieldElem generator() const;
  // Fixed enumeration: index = c0 + p * c1.
  FieldElem element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElem& e) const;

  // Image of an element of this field or of its prime subfield.
  FieldElem embed(const FieldElem& e) const;

  // "F_7", "F_49"
  std::string name() const;

  // Parses "5", "-2", "3+2w", "2*w", "w" (w = generator).
  FieldElem parse(std::string_view text) const;

 private:
  FieldCtx(std::uint32_t p, int ext, ExtArith arith);
  std::uint32_t p_;
  int ext_;
  std::uint64_t order_;
  ExtArith arith_;
};

// ff_create: interned field context.
inline const FieldCtx& ff_create(std::uint32_t p, int ext_degree) {
  return FieldCtx::get(p, ext_degree);
}

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx& ctx, std::uint32_t c0, std::uint32_t c1) : ctx_(&ctx), c_{c0, c1} {}

  const FieldCtx& ctx() const { return *ctx_; }
  bool valid() const { return ctx_ != nullptr; }
  std::uint32_t coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0; }
  bool is_one() const { return c_[0] == 1 && c_[1] == 0; }
  bool in_prime_field() const { return c_[1] == 0; }

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  FieldElem frobenius() const { return pow(ctx_->p()); }

  std::string to_string() const;

  ExtArith::Elem to_ext() const {
    ExtArith::Elem e{};
    e[0] = c_[0];
    e[1] = c_[1];
    return e;
  }
  static FieldElem from_ext(const FieldCtx& ctx, const ExtArith::Elem& e) {
    return FieldElem(ctx, e[0], ctx.ext_degree() == 2 ? e[1] : 0);
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.c_ == b.c_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  // Structural order (by coordinates) for use as map keys.
  friend bool operator<(const FieldElem& a, const FieldElem& b) {
    if (a.c_[1] != b.c_[1]) return a.c_[1] < b.c_[1];
    return a.c_[0] < b.c_[0];
  }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, 2> c_{0, 0};
};

}  // namespace syzcert
