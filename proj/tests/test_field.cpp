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
#include <set>

#include "doctest.h"
#include "syzcert/error.hpp"
#include "syzcert/field.hpp"

using namespace syzcert;

namespace {

// Least quadratic nonresidue by exhaustive squaring (independent of the
// Euler-criterion search inside FieldCtx).
std::uint32_t least_nonresidue_by_squaring(std::uint32_t p) {
  std::set<std::uint32_t> squares;
  for (std::uint32_t a = 0; a < p; ++a) squares.insert(a * a % p);
  for (std::uint32_t u = 1; u < p; ++u) {
    if (!squares.count(u)) return u;
  }
  return 0;
}

}  // namespace

TEST_CASE("ff_create picks t^2 - u with the least nonresidue") {
  CHECK(least_nonresidue_by_squaring(7) == 3);
  const FieldCtx& f49 = ff_create(7, 2);
  CHECK(f49.order() == 49);
  CHECK(f49.modulus_poly() == std::vector<std::uint32_t>{7 - 3, 0, 1});
  for (std::uint32_t p : {3U, 5U, 11U, 13U, 17U, 89U, 97U}) {
    const std::uint32_t u = least_nonresidue_by_squaring(p);
    CHECK(ff_create(p, 2).modulus_poly() == std::vector<std::uint32_t>{p - u, 0, 1});
  }
  CHECK(ff_create(2, 2).modulus_poly() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(ff_create(5, 1).modulus_poly().empty());
  CHECK(ff_create(5, 1).order() == 5);
}

TEST_CASE("F_49 contains a root of t^2 + 2") {
  const FieldCtx& f49 = ff_create(7, 2);
  int found = 0;
  for (std::uint64_t i = 0; i < f49.order(); ++i) {
    const FieldElem t0 = f49.element_at(i);
    if ((t0 * t0 + f49.from_int(2)).is_zero()) ++found;
  }
  CHECK(found == 2);
  const FieldCtx& f7 = ff_create(7, 1);
  for (std::uint64_t i = 0; i < 7; ++i) {
    const FieldElem t0 = f7.element_at(i);
    CHECK_FALSE((t0 * t0 + f7.from_int(2)).is_zero());
  }
}

TEST_CASE("contexts are interned and validated") {
  CHECK(&ff_create(7, 1) == &ff_create(7, 1));
  CHECK(&ff_create(7, 2).prime_subfield() == &ff_create(7, 1));
  CHECK_THROWS_AS(ff_create(9, 1), PreconditionError);
  CHECK_THROWS_AS(ff_create(1, 1), PreconditionError);
  CHECK_THROWS_AS(ff_create(0, 2), PreconditionError);
  CHECK_THROWS_AS(ff_create(7, 3), PreconditionError);
}

TEST_CASE("element arithmetic basics") {
  const FieldCtx& f = ff_create(7, 2);
  const FieldElem w = f.generator();
  CHECK(w * w == f.from_int(3));
  CHECK((w * w.inverse()).is_one());
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.parse("3+2w") == f.from_int(3) + f.from_int(2) * w);
  CHECK(f.parse("-w") == -w);
  CHECK(f.parse("2 * w") == f.from_int(2) * w);
  CHECK(f.parse("10") == f.from_int(3));
  CHECK(f.parse("3+2w").to_string() == "3+2w");
  CHECK_THROWS_AS(f.parse("x"), PreconditionError);
  CHECK_THROWS_AS(f.zero().inverse(), PreconditionError);
  CHECK_THROWS_AS(f.one() + ff_create(7, 1).one(), PreconditionError);
  CHECK(f.embed(ff_create(7, 1).from_int(4)) == f.from_int(4));
  CHECK_THROWS_AS(ff_create(7, 1).embed(w), PreconditionError);
  // enumeration round trip
  for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(f.index_of(f.element_at(i)) == i);
}

TEST_CASE("characteristic 2 quadratic extension is F_4") {
  const FieldCtx& f4 = ff_create(2, 2);
  const FieldElem w = f4.generator();
  CHECK(w * w == w + f4.one());
  CHECK(w.pow(3).is_one());
  CHECK((w + w).is_zero());
  for (std::uint64_t i = 1; i < 4; ++i) {
    const FieldElem a = f4.element_at(i);
    CHECK((a * a.inverse()).is_one());
  }
}
