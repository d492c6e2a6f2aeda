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
#include <string>
#include <vector>

namespace syzcert::props {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  std::vector<std::string> notes;  // first few failures
  bool ok(int min_instances) const { return failures == 0 && instances >= min_instances; }
};

inline constexpr int kMinInstances = 100;

SuiteResult koszul_completeness(std::uint64_t seed, int n);
SuiteResult frobenius_lifting(std::uint64_t seed, int n);
SuiteResult field_axioms(std::uint64_t seed, int n);
SuiteResult determinant_oracles(std::uint64_t seed, int n);
SuiteResult primary_monotonicity(std::uint64_t seed, int n);

std::vector<SuiteResult> all_suites(std::uint64_t seed, int n);

}  // namespace syzcert::props
