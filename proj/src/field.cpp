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

#include "syzcert/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "syzcert/error.hpp"

namespace syzcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p;
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = r * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  std::int64_t r = p;
  std::int64_t new_r = a % p;
  if (new_r == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p));
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce_int(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// ---------------------------------------------------------------------------
// ExtArith

ExtArith::ExtArith(std::uint32_t p, std::vector<std::uint32_t> low)
    : p_(p), k_(static_cast<int>(low.size())), low_(std::move(low)) {
  if (k_ < 1 || k_ > kMaxExtDegree) {
    throw PreconditionError("extension degree out of range: " + std::to_string(k_));
  }
  for (auto& c : low_) c %= p_;
}

bool ExtArith::is_zero(const Elem& a) const {
  for (int i = 0; i < k_; ++i) {
    if (a[static_cast<std::size_t>(i)] != 0) return false;
  }
  return true;
}

ExtArith::Elem ExtArith::add(const Elem& a, const Elem& b) const {
  Elem r{};
  for (int i = 0; i < k_; ++i) {
    const auto s = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(i)] = s >= p_ ? s - p_ : s;
  }
  return r;
}

ExtArith::Elem ExtArith::sub(const Elem& a, const Elem& b) const {
  Elem r{};
  for (int i = 0; i < k_; ++i) {
    const auto x = a[static_cast<std::size_t>(i)];
    const auto y = b[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(i)] = x >= y ? x - y : x + p_ - y;
  }
  return r;
}

ExtArith::Elem ExtArith::neg(const Elem& a) const { return sub(zero(), a); }

ExtArith::Elem ExtArith::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) {
    Elem r{};
    r[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[0]) * b[0] % p_);
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxExtDegree> prod{};
  for (int i = 0; i < k_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] +
           static_cast<std::uint64_t>(a[static_cast<std::size_t>(i)]) *
               b[static_cast<std::size_t>(j)]) %
          p_;
    }
  }
  // u^k = -(g_{k-1} u^{k-1} + ... + g_0)
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t c = prod[static_cast<std::size_t>(d)] % p_;
    if (c == 0) continue;
    prod[static_cast<std::size_t>(d)] = 0;
    for (int i = 0; i < k_; ++i) {
      const std::uint64_t sub = c * low_[static_cast<std::size_t>(i)] % p_;
      auto& slot = prod[static_cast<std::size_t>(d - k_ + i)];
      slot = (slot + p_ - sub) % p_;
    }
  }
  Elem r{};
  for (int i = 0; i < k_; ++i) r[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(prod[static_cast<std::size_t>(i)] % p_);
  return r;
}

void ExtArith::mul_matrix(const Elem& c, std::uint32_t* out) const {
  // Column b is c * u^b.
  Elem col = c;
  Elem u{};
  if (k_ > 1) u[1] = 1;
  for (int b = 0; b < k_; ++b) {
    for (int a = 0; a < k_; ++a) out[a * k_ + b] = col[static_cast<std::size_t>(a)];
    if (b + 1 < k_) col = mul(col, u);
  }
}

ExtArith::Elem ExtArith::inv(const Elem& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero in extension field");
  if (k_ == 1) {
    Elem r{};
    r[0] = mod_inverse(a[0], p_);
    return r;
  }
  // Solve M_a x = 1 by Gauss-Jordan on the k x (k+1) augmented system.
  const auto k = static_cast<std::size_t>(k_);
  std::vector<std::uint32_t> m(k * k);
  mul_matrix(a, m.data());
  std::vector<std::vector<std::uint64_t>> aug(k, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[i * k + j];
  }
  aug[0][k] = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && aug[piv][col] == 0) ++piv;
    if (piv == k) throw ConsistencyError("extension modulus is not irreducible");
    std::swap(aug[piv], aug[col]);
    const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(aug[col][col]), p_);
    for (auto& v : aug[col]) v = v * inv % p_;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const std::uint64_t f = aug[r][col];
      for (std::size_t j = 0; j <= k; ++j) {
        aug[r][j] = (aug[r][j] + (p_ - f) * aug[col][j]) % p_;
      }
    }
  }
  Elem r{};
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(aug[i][k]);
  return r;
}

// ---------------------------------------------------------------------------
// FieldCtx

namespace {

std::uint32_t least_nonresidue(std::uint32_t p) {
  for (std::uint32_t u = 2; u < p; ++u) {
    if (mod_pow(u, (p - 1) / 2, p) == p - 1) return u;
  }
  throw ConsistencyError("no quadratic nonresidue found");
}

ExtArith make_arith(std::uint32_t p, int ext) {
  if (ext == 1) return ExtArith(p, {0});
  if (p == 2) return ExtArith(p, {1, 1});  // t^2 + t + 1
  return ExtArith(p, {p - least_nonresidue(p), 0});  // t^2 - u
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, int ext, ExtArith arith)
    : p_(p), ext_(ext), order_(ext == 1 ? p : static_cast<std::uint64_t>(p) * p), arith_(std::move(arith)) {}

const FieldCtx& FieldCtx::get(std::uint32_t p, int ext_degree) {
  if (!is_prime(p)) throw PreconditionError("not a prime: " + std::to_string(p));
  if (ext_degree != 1 && ext_degree != 2) {
    throw PreconditionError("ext_degree must be 1 or 2, got " + std::to_string(ext_degree));
  }
  if (p >= (1U << 31)) throw PreconditionError("prime too large: " + std::to_string(p));
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<FieldCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, ext_degree}];
  if (!slot) slot.reset(new FieldCtx(p, ext_degree, make_arith(p, ext_degree)));
  return *slot;
}

std::vector<std::uint32_t> FieldCtx::modulus_poly() const {
  if (ext_ == 1) return {};
  return {arith_.modulus_low()[0], arith_.modulus_low()[1], 1};
}

FieldElem FieldCtx::zero() const { return FieldElem(*this, 0, 0); }
FieldElem FieldCtx::one() const { return FieldElem(*this, 1, 0); }

FieldElem FieldCtx::from_int(std::int64_t v) const { return FieldElem(*this, reduce_int(v, p_), 0); }

FieldElem FieldCtx::make(std::uint32_t c0, std::uint32_t c1) const {
  if (ext_ == 1 && c1 % p_ != 0) throw PreconditionError("second coordinate in prime field");
  return FieldElem(*this, c0 % p_, ext_ == 1 ? 0 : c1 % p_);
}

FieldElem FieldCtx::generator() const {
  if (ext_ == 1) throw PreconditionError("prime field has no extension generator");
  return FieldElem(*this, 0, 1);
}

FieldElem FieldCtx::element_at(std::uint64_t index) const {
  if (index >= order_) throw PreconditionError("element index out of range");
  return FieldElem(*this, static_cast<std::uint32_t>(index % p_), static_cast<std::uint32_t>(index / p_));
}

std::uint64_t FieldCtx::index_of(const FieldElem& e) const {
  return e.coord(0) + static_cast<std::uint64_t>(p_) * e.coord(1);
}

FieldElem FieldCtx::embed(const FieldElem& e) const {
  if (&e.ctx() == this) return e;
  if (e.ctx().p() != p_) throw PreconditionError("embedding across characteristics");
  if (e.ctx().ext_degree() == 1) return FieldElem(*this, e.coord(0), 0);
  if (e.in_prime_field()) return FieldElem(*this, e.coord(0), 0);
  throw PreconditionError("element of " + e.ctx().name() + " does not lie in " + name());
}

std::string FieldCtx::name() const { return "F_" + std::to_string(order_); }

FieldElem FieldCtx::parse(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s.push_back(ch);
  }
  if (s.empty()) throw PreconditionError("empty field element");
  FieldElem acc = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_digits = false;
    std::int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = (v * 10 + (s[i] - '0')) % static_cast<std::int64_t>(p_);
      have_digits = true;
      ++i;
    }
    if (have_digits) coef = v;
    FieldElem term = from_int(sign * coef);
    if (i < s.size() && s[i] == 'w') {
      term = term * generator();
      ++i;
    } else if (!have_digits) {
      throw PreconditionError("cannot parse field element: " + std::string(text));
    }
    acc += term;
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw PreconditionError("cannot parse field element: " + std::string(text));
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (&a.ctx() != &b.ctx()) {
    throw PreconditionError("field context mismatch: " + a.ctx().name() + " vs " + b.ctx().name());
  }
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem::from_ext(a.ctx(), a.ctx().arith().add(a.to_ext(), b.to_ext()));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem::from_ext(a.ctx(), a.ctx().arith().sub(a.to_ext(), b.to_ext()));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return FieldElem::from_ext(a.ctx(), a.ctx().arith().mul(a.to_ext(), b.to_ext()));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

FieldElem operator-(const FieldElem& a) {
  return FieldElem::from_ext(a.ctx(), a.ctx().arith().neg(a.to_ext()));
}

FieldElem FieldElem::inverse() const {
  return from_ext(*ctx_, ctx_->arith().inv(to_ext()));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem base = *this;
  FieldElem r = ctx_->one();
  while (e != 0) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

std::string FieldElem::to_string() const {
  if (c_[1] == 0) return std::to_string(c_[0]);
  std::string im = c_[1] == 1 ? "w" : std::to_string(c_[1]) + "w";
  if (c_[0] == 0) return im;
  return std::to_string(c_[0]) + "+" + im;
}

}  // namespace syzcert
