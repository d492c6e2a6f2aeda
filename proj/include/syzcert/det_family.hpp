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
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "syzcert/curve.hpp"
#include "syzcert/syzygy.hpp"

namespace syzcert {

// Invariants of the quartic-type family at Frobenius level e, with
// aq = delta * l + r and 0 < r < delta.
struct DetFamilySpec {
  std::uint32_t p = 0;
  int delta = 0;
  int a = 0;
  int e = 0;
  std::uint64_t q = 0;
  std::int64_t aq = 0;
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t m_cert_l = 0;
  std::int64_t m_cert_l1 = 0;
  std::int64_t m_destab_l = 0;
  std::int64_t m_destab_l1 = 0;
  std::int64_t m_crit = 0;
  std::int64_t size_l = 0;
  std::int64_t size_l1 = 0;

  std::int64_t power(Which w) const { return w == Which::kFl ? l : l + 1; }
  std::int64_t size(Which w) const { return w == Which::kFl ? size_l : size_l1; }
  std::int64_t cert_degree(Which w) const { return w == Which::kFl ? m_cert_l : m_cert_l1; }
  std::int64_t destab_degree(Which w) const { return w == Which::kFl ? m_destab_l : m_destab_l1; }
  // l (aq - delta l / 2), resp. (l+1)(aq - delta (l+1) / 2)
  std::int64_t predicted_degree(Which w) const { return power(w) * size(w); }
};

DetFamilySpec derive_spec(std::uint32_t p, int delta, int a, int e);

// Toeplitz matrix with entry[i][j] = band[offset + i - j] (zero off-range).
struct BandedMatrix {
  Which which = Which::kFl;
  int n = 0;
  int offset = 0;
  std::vector<UniPoly> band;

  UniPoly entry(int i, int j) const;
  std::vector<std::vector<UniPoly>> dense() const;
  // One row per line: "(t, 0, 1, 0, 0)"
  std::string to_string() const;
};

BandedMatrix build_matrix(const DetFamilySpec& spec, Which which, const HomPoly2<UniPoly>& f);
BandedMatrix build_matrix(const DetFamilySpec& spec, Which which);

// Determinant in F_p[t] of an n x n matrix over F_p[t] known to have degree
// <= degree_bound, by CRT over the fixed irreducible-modulus sequence.
UniPoly det_poly(const std::vector<std::vector<UniPoly>>& m, std::size_t degree_bound, unsigned jobs = 1);
UniPoly det_poly(const BandedMatrix& m, std::size_t degree_bound, unsigned jobs = 1);
// Reference cofactor expansion for small matrices.
UniPoly det_cofactor(const std::vector<std::vector<UniPoly>>& m);
// det(M(t0)) computed in the field of t0.
FieldElem det_at(const BandedMatrix& m, const FieldElem& t0);

// Text cache of determinants, one file per (p, delta, a, e, which). Entries
// are validated by degree and by a residue check before use; any failure
// falls back to recomputation. Unwritable directories degrade to memory only.
class DetCache {
 public:
  static constexpr int kVersion = 1;

  // No path: $SYZCERT_CACHE_DIR when use_env is set, else memory only.
  explicit DetCache(std::optional<std::filesystem::path> dir = std::nullopt, bool use_env = true);

  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  // D^(q) (Which::kFl) or E^(q) (Which::kFl1) for the standard form.
  UniPoly get(const DetFamilySpec& spec, Which which, unsigned jobs = 1);

  // Statistics for reporting and tests.
  int disk_hits() const { return disk_hits_; }
  int rejected() const { return rejected_; }

  std::filesystem::path file_for(const DetFamilySpec& spec, Which which) const;

 private:
  struct Key {
    std::uint32_t p;
    int delta, a, e;
    int which;
    auto operator<=>(const Key&) const = default;
  };
  std::optional<UniPoly> load(const DetFamilySpec& spec, Which which);
  void store(const DetFamilySpec& spec, Which which, const UniPoly& d);

  std::optional<std::filesystem::path> dir_;
  bool memory_only_ = false;
  std::mutex mu_;
  std::map<Key, UniPoly> memo_;
  int disk_hits_ = 0;
  int rejected_ = 0;
};

// Residue check used for cache validation: det(M mod g) == d mod g for one
// irreducible g of the largest supported degree.
bool residue_check(const BandedMatrix& m, const UniPoly& d);

struct CertificateRow {
  int e = 0;
  std::uint64_t q = 0;
  std::int64_t deg_D = -1;
  std::int64_t deg_E = -1;
  std::int64_t expect_D = 0;
  std::int64_t expect_E = 0;
  bool pass = false;
};

// For e = 1..e_max: D^(q), E^(q) nonzero of exactly the predicted degrees.
// A finite check; the family statement concerns all e. Throws
// ConsistencyError on a degree mismatch.
std::vector<CertificateRow> generic_certificate(std::uint32_t p, int delta, int a, int e_max, DetCache& cache,
                                                unsigned jobs = 1);

}  // namespace syzcert
