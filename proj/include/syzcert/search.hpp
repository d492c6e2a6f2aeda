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
#include <optional>
#include <string>
#include <vector>

#include "syzcert/criteria.hpp"

namespace syzcert {

enum class Method { kGcdStrip = 1, kPrimeScan = 2, kExtScan = 3 };
const char* to_string(Method m);

struct SearchHit {
  std::uint32_t p = 0;
  int delta = 0;
  int a = 0;
  int level = 1;  // Frobenius level of the witness
  FieldElem t0;
  SyzygyVector witness;
  HnfClauses checks;
  Method method = Method::kPrimeScan;
};

// Rebuild the fibre and re-evaluate the syzygy identity and the three clauses.
bool reverify(const SearchHit& hit);

struct SearchOptions {
  unsigned jobs = 1;
  int e = 1;                  // Frobenius level searched by methods 2 and 3
  bool experimental = false;  // allow (delta, a) other than (4, 1)
  DetCache* cache = nullptr;  // optional shared determinant cache
  bool fallback = false;      // method 3: try one Frobenius level higher when level e is empty
};

std::vector<SearchHit> method_prime_scan(std::uint32_t p, int delta = 4, int a = 1, const SearchOptions& opt = {});
std::vector<SearchHit> method_ext_scan(std::uint32_t p, int delta = 4, int a = 1, const SearchOptions& opt = {});

struct GcdCandidate {
  FieldElem t0;
  bool semistable = false;      // via the determinant clause or the HNF test one level up
  std::optional<SyzygyVector> witness;  // section of the (e+1)-st pullback at its critical degree
  bool confirmed_direct = false;        // the curve itself has a section there
  std::vector<std::string> facts;
};

struct GcdStripResult {
  UniPoly residual;
  int iterations = 0;
  std::vector<GcdCandidate> candidates;
};

GcdStripResult method_gcd_strip(std::uint32_t p, int delta, int a, int e, bool quadratic = false,
                                const SearchOptions& opt = {});

enum class Outcome { kFound, kNotFound, kSkipped, kNotApplicable };
const char* to_string(Outcome o);

struct TableRow {
  std::uint32_t p = 0;
  std::vector<std::pair<Method, Outcome>> outcomes;
  std::optional<SearchHit> hit;  // first hit in method order
  bool found() const { return hit.has_value(); }
};

struct TableOptions {
  SearchOptions search;
  int delta = 4;
  int a = 1;
  std::uint32_t budget = 100;         // p_max ceiling
  bool full_range = false;            // lift the ceiling to 3433
  std::uint64_t gcd_budget = 200;     // method 1 only when p^2 stays below this
};

std::vector<TableRow> prime_table(std::uint32_t p_max, const std::vector<Method>& methods, const TableOptions& opt = {});

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RegressionReport {
  std::vector<CheckLine> lines;
  bool ok() const;
};

struct FixedCurveReport : RegressionReport {
  std::optional<int> e;
  std::optional<SyzygyVector> witness;
};

FixedCurveReport fixed_curve_regression(std::uint32_t p, int delta);
RegressionReport char2_regression();

// Scale so that the last coefficient of the last nonzero component is 1.
SyzygyVector normalized(const SyzygyVector& s);

}  // namespace syzcert
