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
#include "syzcert/residue.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "syzcert/error.hpp"
#include "syzcert/gf_matrix.hpp"

namespace syzcert {

namespace {

std::vector<std::uint32_t> prime_factors(int n) {
  std::vector<std::uint32_t> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace

bool is_irreducible(const UniPoly& g) {
  if (g.is_zero() || *g.degree() == 0) return false;
  const std::size_t k = *g.degree();
  if (k == 1) return true;
  const FieldCtx& f = g.ctx();
  const std::uint64_t q = f.order();
  const UniPoly t = UniPoly::variable(f);
  // t^(q^i) mod g for i = 1..k by repeated q-th powering
  std::vector<UniPoly> frob{t % g};
  for (std::size_t i = 1; i <= k; ++i) frob.push_back(powmod(frob.back(), q, g));
  if (frob[k] != frob[0]) return false;
  for (std::uint32_t d : prime_factors(static_cast<int>(k))) {
    const UniPoly h = frob[k / d] - t;
    if (poly_gcd(h, g).degree() != 0U) return false;
  }
  return true;
}

IrreducibleSequence::IrreducibleSequence(std::uint32_t p, int max_degree) : p_(p), max_degree_(max_degree) {
  if (!is_prime(p)) throw PreconditionError("modulus sequence needs a prime");
}

std::vector<std::uint32_t> IrreducibleSequence::next() {
  const FieldCtx& fp = ff_create(p_, 1);
  while (degree_ <= max_degree_) {
    std::uint64_t total = 1;
    for (int i = 0; i < degree_; ++i) total *= p_;
    while (candidate_ < total) {
      std::vector<std::uint32_t> low(static_cast<std::size_t>(degree_));
      std::uint64_t n = candidate_++;
      for (auto& c : low) {
        c = static_cast<std::uint32_t>(n % p_);
        n /= p_;
      }
      if (degree_ == 1) {
        // t - c with c = candidate, so that roots come out as 0, 1, 2, ...
        low[0] = (p_ - low[0]) % p_;
        return low;
      }
      std::vector<FieldElem> coeffs;
      for (auto c : low) coeffs.push_back(fp.make(c));
      coeffs.push_back(fp.one());
      if (is_irreducible(UniPoly(fp, coeffs))) return low;
    }
    ++degree_;
    candidate_ = 0;
  }
  throw PreconditionError("ran out of irreducible moduli of degree <= " + std::to_string(max_degree_));
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, int k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::vector<std::uint32_t>> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find({p, k}); it != memo.end()) return it->second;
  const FieldCtx& fp = ff_create(p, 1);
  std::vector<std::uint32_t> low(static_cast<std::size_t>(k), 0);
  while (true) {
    std::vector<FieldElem> coeffs;
    for (auto c : low) coeffs.push_back(fp.make(c));
    coeffs.push_back(fp.one());
    if (is_irreducible(UniPoly(fp, coeffs))) break;
    for (auto& c : low) {
      if (++c < p) break;
      c = 0;
    }
  }
  memo[{p, k}] = low;
  return low;
}

ExtArith::Elem reduce_mod(const UniPoly& a, const ExtArith& ar) {
  const int k = ar.k();
  const std::uint32_t p = ar.p();
  const auto& low = ar.modulus_low();
  const auto& c0 = a.plane(0);
  ExtArith::Elem acc{};
  for (std::size_t i = c0.size(); i-- > 0;) {
    // acc = acc * u + a_i
    const std::uint64_t top = acc[static_cast<std::size_t>(k - 1)];
    for (int j = k - 1; j > 0; --j) {
      const std::uint64_t v = acc[static_cast<std::size_t>(j - 1)] + (p - low[static_cast<std::size_t>(j)]) * top % p;
      acc[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(v % p);
    }
    acc[0] = static_cast<std::uint32_t>(((p - low[0]) * top % p + c0[i]) % p);
  }
  return acc;
}

UniPoly residue_poly(const ExtArith::Elem& e, const ExtArith& ar, const FieldCtx& prime_field) {
  std::vector<FieldElem> c;
  for (int i = 0; i < ar.k(); ++i) c.push_back(prime_field.make(e[static_cast<std::size_t>(i)]));
  return UniPoly(prime_field, c);
}

UniPoly modulus_poly(const ExtArith& ar, const FieldCtx& prime_field) {
  std::vector<FieldElem> c;
  for (auto v : ar.modulus_low()) c.push_back(prime_field.make(v));
  c.push_back(prime_field.one());
  return UniPoly(prime_field, c);
}

std::size_t generic_rank(const std::vector<std::vector<UniPoly>>& m, const FieldCtx& prime_field) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t full = std::min(rows, cols);
  if (full == 0) return 0;
  std::size_t maxdeg = 0;
  bool any = false;
  for (const auto& row : m)
    for (const auto& e : row)
      if (!e.is_zero()) {
        any = true;
        maxdeg = std::max(maxdeg, *e.degree());
      }
  if (!any) return 0;
  const std::size_t bound = full * maxdeg;
  IrreducibleSequence moduli(prime_field.p());
  std::size_t used = 0;
  std::size_t best = 0;
  while (true) {
    const ExtArith ar(prime_field.p(), moduli.next());
    GFMatrix red(ar, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!m[i][j].is_zero()) red.set(i, j, reduce_mod(m[i][j], ar));
    best = std::max(best, rank(std::move(red)));
    used += static_cast<std::size_t>(ar.k());
    if (best == full || used > bound) return best;
  }
}

}  // namespace syzcert
