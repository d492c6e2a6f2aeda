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

#include <string>
#include <vector>

#include "json.hpp"
#include "syzcert/search.hpp"

namespace syzcert {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const SyzygyVector& s);
nlohmann::json to_json(const FibreReport& r);
nlohmann::json to_json(const SearchHit& h);
nlohmann::json to_json(const GcdStripResult& r, std::uint32_t p, int delta, int a, int e);
nlohmann::json to_json(const RegressionReport& r);
nlohmann::json table_json(const std::vector<TableRow>& rows, const std::vector<Method>& methods, int delta, int a);

// p,t0,field,method,degree_of_witness,verdict
std::string table_csv(const std::vector<TableRow>& rows, const std::vector<Method>& methods);

// Rows of `actual` that differ from `golden` (header excluded), as "expected | got" lines.
std::vector<std::string> csv_differences(const std::string& golden, const std::string& actual);

std::string coefficient_list(const UniPoly& f);  // "c0 c1 ... cn"

}  // namespace syzcert
