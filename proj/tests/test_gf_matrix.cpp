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
#include <random>

#include "doctest.h"
#include "syzcert/error.hpp"
#include "syzcert/gf_matrix.hpp"

using namespace syzcert;
using Elem = ExtArith::Elem;

namespace {

GFMatrix random_matrix(std::mt19937_64& rng, const ExtArith& ar, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<std::uint32_t> d(0, ar.p() - 1);
  GFMatrix m(ar, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Elem e{};
      for (int a = 0; a < ar.k(); ++a) e[static_cast<std::size_t>(a)] = d(rng);
      m.set(i, j, e);
    }
  return m;
}

// Cofactor expansion along the first row.
Elem det_by_cofactors(const ExtArith& ar, const GFMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Elem acc = ExtArith::zero();
  for (std::size_t j = 0; j < n; ++j) {
    GFMatrix minor(ar, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.set(i - 1, cc++, m.at(i, c));
    Elem term = ar.mul(m.at(0, j), det_by_cofactors(ar, minor));
    acc = (j % 2 == 0) ? ar.add(acc, term) : ar.sub(acc, term);
  }
  return acc;
}

GFMatrix multiply(const ExtArith& ar, const GFMatrix& a, const GFMatrix& b) {
  GFMatrix out(ar, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = ExtArith::zero();
      for (std::size_t k = 0; k < a.cols(); ++k) s = ar.add(s, ar.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, s);
    }
  return out;
}

}  // namespace

TEST_CASE("small fixed determinant and rank") {
  const FieldCtx& f = ff_create(7, 1);
  GFMatrix m(f, 2, 2);
  m.set(0, 0, f.from_int(1));
  m.set(0, 1, f.from_int(2));
  m.set(1, 0, f.from_int(3));
  m.set(1, 1, f.from_int(4));
  CHECK(FieldElem::from_ext(f, determinant(m)) == f.from_int(-2));
  CHECK(rank(m) == 2);
  m.set(1, 1, f.from_int(6));
  CHECK(determinant(m)[0] == 0);
  CHECK(rank(m) == 1);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(FieldElem::from_ext(f, ker[0][1]).is_one());
  CHECK(FieldElem::from_ext(f, ker[0][0]) == f.from_int(-2));
}

TEST_CASE("extension arithmetic in a cubic extension") {
  // cubes mod 7 are {0,1,6}, so u^3 - 2 is irreducible
  ExtArith ar(7, {5, 0, 0});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, 6);
  for (int rep = 0; rep < 100; ++rep) {
    Elem a{};
    for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] = d(rng);
    if (ar.is_zero(a)) continue;
    CHECK(ar.mul(a, ar.inv(a)) == ar.one());
  }
  Elem u{};
  u[1] = 1;
  CHECK(ar.mul(u, ar.mul(u, u)) == ar.constant(2));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(2);
  const ExtArith cubic(7, {5, 0, 0});
  for (const ExtArith* ar : {&ff_create(13, 1).arith(), &ff_create(5, 2).arith(), &ff_create(2, 1).arith(), &cubic}) {
    for (std::size_t n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 6; ++rep) {
        const GFMatrix m = random_matrix(rng, *ar, n, n);
        CHECK(determinant(m) == det_by_cofactors(*ar, m));
      }
  }
}

TEST_CASE("rank of products of thin factors and kernel property") {
  std::mt19937_64 rng(3);
  for (const FieldCtx* f : {&ff_create(11, 1), &ff_create(3, 2), &ff_create(251, 1)}) {
    const ExtArith& ar = f->arith();
    for (int rep = 0; rep < 12; ++rep) {
      const std::size_t r = 1 + rng() % 4;
      const std::size_t rows = r + rng() % 6, cols = r + rng() % 6;
      const GFMatrix m = multiply(ar, random_matrix(rng, ar, rows, r), random_matrix(rng, ar, r, cols));
      const std::size_t rk = rank(m);
      CHECK(rk <= r);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() == cols - rk);
      for (const auto& v : ker) {
        for (std::size_t i = 0; i < rows; ++i) {
          Elem s = ExtArith::zero();
          for (std::size_t j = 0; j < cols; ++j) s = ar.add(s, ar.mul(m.at(i, j), v[j]));
          CHECK(ar.is_zero(s));
        }
      }
    }
  }
}

TEST_CASE("reduced echelon form has unit pivots and clean pivot columns") {
  std::mt19937_64 rng(4);
  const ExtArith& ar = ff_create(7, 2).arith();
  GFMatrix m = random_matrix(rng, ar, 5, 8);
  const EchelonInfo info = echelonize(m, true);
  CHECK(info.rank == 5);
  for (std::size_t i = 0; i < info.rank; ++i) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Elem e = m.at(r, info.pivot_cols[i]);
      CHECK(e == (r == i ? ar.one() : ExtArith::zero()));
    }
  }
}
