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
// One pass/fail line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <string>

#include "property_suites.hpp"
#include "syzcert/battery.hpp"

using namespace syzcert;

int main() {
  bool ok = true;
  BatteryOptions opt;
  opt.fixture_dir = SYZCERT_FIXTURE_DIR;
  for (const auto& l : run_battery(opt)) {
    ok = ok && l.pass;
    std::printf("%s %s: %s%s (%.3f s)\n    %s\n", l.pass ? "PASS" : "FAIL", l.id.c_str(), l.title.c_str(),
                l.excluded ? " [excluded]" : "", l.seconds, l.detail.c_str());
  }
  bool props_ok = true;
  std::string detail;
  for (const auto& r : props::all_suites(20261018, props::kMinInstances)) {
    const bool pass = r.ok(props::kMinInstances);
    props_ok = props_ok && pass;
    detail += (detail.empty() ? "" : "; ") + r.name + " " + std::to_string(r.instances) + " instances, " +
              std::to_string(r.failures) + " failures";
    for (const auto& n : r.notes) detail += " [" + n + "]";
  }
  ok = ok && props_ok;
  std::printf("%s AC10: property suites, at least %d randomized instances each\n    %s\n",
              props_ok ? "PASS" : "FAIL", props::kMinInstances, detail.c_str());
  std::printf("%s\n", ok ? "all criteria pass" : "some criteria FAILED");
  return ok ? 0 : 1;
}
