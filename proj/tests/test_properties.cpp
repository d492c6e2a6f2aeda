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
#include <string>

#include "doctest.h"
#include "property_suites.hpp"

using namespace syzcert::props;

namespace {

void run(const SuiteResult& r) {
  std::string notes;
  for (const auto& n : r.notes) notes += n + "\n";
  INFO(r.name);
  INFO(notes);
  CHECK(r.instances >= kMinInstances);
  CHECK(r.failures == 0);
}

}  // namespace

// Seeds differ from the acceptance run so the two cover different instances.
TEST_CASE("Koszul syzygies span the syzygies of a regular sequence") { run(koszul_completeness(11, 150)); }
TEST_CASE("Frobenius pullback multiplies syzygy degrees by p") { run(frobenius_lifting(12, 120)); }
TEST_CASE("finite field axioms") { run(field_axioms(13, 2000)); }
TEST_CASE("determinant by CRT agrees with cofactor expansion") { run(determinant_oracles(14, 300)); }
TEST_CASE("primariness is monotone and radical-invariant") { run(primary_monotonicity(15, 200)); }
