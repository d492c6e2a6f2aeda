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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "syzcert/det_family.hpp"

using namespace syzcert;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool equal_up_to_scalar(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.monic() == b.monic();
}

UniPoly random_poly(std::mt19937_64& rng, const FieldCtx& f, int maxdeg) {
  std::vector<FieldElem> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(maxdeg + 1)) + 1);
  for (auto& x : c) x = f.element_at(rng() % f.order());
  return UniPoly(f, c);
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("syzcert_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("derived invariants") {
  const DetFamilySpec s7 = derive_spec(7, 4, 1, 1);
  CHECK(s7.q == 7);
  CHECK(s7.l == 1);
  CHECK(s7.r == 3);
  CHECK(s7.size_l == 5);
  CHECK(s7.size_l1 == 3);
  CHECK(s7.m_cert_l == 8);
  CHECK(s7.m_cert_l1 == 10);
  CHECK(s7.m_crit == 10);
  CHECK(s7.m_destab_l == 7);
  CHECK(s7.m_destab_l1 == 10);

  const DetFamilySpec s3 = derive_spec(3, 4, 1, 1);
  CHECK(s3.l == 0);
  CHECK(s3.r == 3);
  CHECK(s3.size_l == 3);
  CHECK(s3.size_l1 == 1);

  const DetFamilySpec s9 = derive_spec(3, 4, 1, 2);
  CHECK(s9.q == 9);
  CHECK(s9.l == 2);
  CHECK(s9.r == 1);
  CHECK(s9.size_l == 5);
  CHECK(s9.size_l1 == 3);

  CHECK_THROWS_AS(derive_spec(7, 5, 1, 1), PreconditionError);
  CHECK_THROWS_AS(derive_spec(2, 4, 1, 1), PreconditionError);
  CHECK_THROWS_AS(derive_spec(7, 4, 4, 1), PreconditionError);
  CHECK_THROWS_AS(derive_spec(3, 6, 2, 1), PreconditionError);
  CHECK_THROWS_AS(derive_spec(9, 4, 1, 1), PreconditionError);
  CHECK_THROWS_AS(derive_spec(3, 8, 1, 1), PreconditionError);

  for (std::uint32_t p : {3U, 5U, 7U, 11U})
    for (int e = 1; e <= 3; ++e) {
      const DetFamilySpec s = derive_spec(p, 4, 1, e);
      CHECK(s.aq == 4 * s.l + s.r);
      CHECK(s.m_cert_l >= s.m_destab_l);
      CHECK(s.m_cert_l - 4 * s.l + 1 == s.size_l);
      CHECK(s.m_cert_l1 - 4 * (s.l + 1) + 1 == s.size_l1);
    }
}

TEST_CASE("matrix shapes match the transcribed fixtures") {
  const DetFamilySpec s7 = derive_spec(7, 4, 1, 1);
  CHECK(build_matrix(s7, Which::kFl).to_string() == read_file(SYZCERT_FIXTURE_DIR "/matrix_p7_e1_Fl.txt"));
  CHECK(build_matrix(s7, Which::kFl1).to_string() == read_file(SYZCERT_FIXTURE_DIR "/matrix_p7_e1_Fl1.txt"));
  CHECK(build_matrix(derive_spec(3, 4, 1, 1), Which::kFl).to_string() == "(1, 0, 0)\n(0, 1, 0)\n(0, 0, 1)\n");
  const BandedMatrix b = build_matrix(derive_spec(5, 4, 1, 2), Which::kFl);
  for (int i = 1; i < b.n; ++i)
    for (int j = 1; j < b.n; ++j) CHECK(b.entry(i, j) == b.entry(i - 1, j - 1));
}

TEST_CASE("determinants of the worked examples") {
  const FieldCtx& f7 = ff_create(7, 1);
  const DetFamilySpec s7 = derive_spec(7, 4, 1, 1);
  const UniPoly D = det_poly(build_matrix(s7, Which::kFl), 5);
  const UniPoly E = det_poly(build_matrix(s7, Which::kFl1), 6);
  CHECK(equal_up_to_scalar(D, UniPoly::from_ints(f7, {0, 2, 0, 4, 0, 1})));
  const UniPoly factored =
      UniPoly::from_ints(f7, {2, 0, 1}) * UniPoly::from_ints(f7, {2, 5, 1}) * UniPoly::from_ints(f7, {2, 2, 1});
  CHECK(equal_up_to_scalar(E, factored));
  CHECK(equal_up_to_scalar(E, UniPoly::from_ints(f7, {1, 0, 4, 0, 2, 0, 1})));

  const FieldCtx& f3 = ff_create(3, 1);
  const DetFamilySpec s3 = derive_spec(3, 4, 1, 1);
  const UniPoly D3 = det_poly(build_matrix(s3, Which::kFl), 0);
  const UniPoly E3 = det_poly(build_matrix(s3, Which::kFl1), 1);
  CHECK(D3.degree() == 0U);
  CHECK(equal_up_to_scalar(E3, UniPoly::variable(f3)));
}

TEST_CASE("CRT determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2U, 3U, 7U, 13U}) {
    const FieldCtx& f = ff_create(p, 1);
    for (int n = 1; n <= 6; ++n)
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<std::vector<UniPoly>> m(static_cast<std::size_t>(n));
        std::size_t maxdeg = 0;
        for (auto& row : m)
          for (int j = 0; j < n; ++j) {
            row.push_back(random_poly(rng, f, 3));
            if (!row.back().is_zero()) maxdeg = std::max(maxdeg, *row.back().degree());
          }
        CHECK(det_poly(m, maxdeg * static_cast<std::size_t>(n)) == det_cofactor(m));
      }
  }
  const BandedMatrix b = build_matrix(derive_spec(7, 4, 1, 1), Which::kFl);
  CHECK(det_poly(b, 5) == det_cofactor(b.dense()));
}

TEST_CASE("evaluation commutes with the determinant") {
  std::mt19937_64 rng(23);
  const DetFamilySpec s = derive_spec(5, 4, 1, 2);
  const FieldCtx& f25 = ff_create(5, 2);
  for (Which w : {Which::kFl, Which::kFl1}) {
    const BandedMatrix b = build_matrix(s, w);
    const UniPoly d = det_poly(b, static_cast<std::size_t>(s.predicted_degree(w)));
    for (int rep = 0; rep < 50; ++rep) {
      const FieldElem t0 = f25.element_at(rng() % 25);
      CHECK(d.eval(t0) == det_at(b, t0));
    }
  }
}

TEST_CASE("generic certificate degrees") {
  DetCache cache(std::nullopt, false);
  const auto rows3 = generic_certificate(3, 4, 1, 3, cache);
  REQUIRE(rows3.size() == 3);
  CHECK(rows3[1].q == 9);
  CHECK(rows3[1].deg_D == 10);
  for (const auto& r : rows3) CHECK(r.pass);
  const auto rows7 = generic_certificate(7, 4, 1, 1, cache);
  CHECK(rows7[0].deg_D == 5);
  CHECK(rows7[0].deg_E == 6);
  const auto rows5 = generic_certificate(5, 4, 1, 1, cache);
  CHECK(rows5[0].deg_D == 3);
  CHECK(rows5[0].deg_E == 2);
  for (std::uint32_t p : {3U, 5U, 7U}) {
    const DetFamilySpec s = derive_spec(p, 4, 1, 2);
    CHECK(cache.get(s, Which::kFl).leading().is_one());
    CHECK(cache.get(s, Which::kFl1).leading().is_one());
  }
}

TEST_CASE("determinant cache round trip, tampering and degraded mode") {
  TempDir tmp;
  const DetFamilySpec s = derive_spec(7, 4, 1, 1);
  UniPoly first(ff_create(7, 1));
  {
    DetCache c(tmp.path);
    first = c.get(s, Which::kFl);
    CHECK(c.disk_hits() == 0);
  }
  const auto file = DetCache(tmp.path).file_for(s, Which::kFl);
  REQUIRE(std::filesystem::exists(file));
  const std::string bytes = read_file(file);
  CHECK(bytes == "# version 1\n7 4 1 1 F_l : 0 2 0 4 0 1\n");
  {
    DetCache c(tmp.path);
    CHECK(c.get(s, Which::kFl) == first);
    CHECK(c.disk_hits() == 1);
  }
  CHECK(read_file(file) == bytes);
  {
    std::ofstream(file) << "# version 1\n7 4 1 1 F_l : 0 3 0 4 0 1\n";
    DetCache c(tmp.path);
    CHECK(c.get(s, Which::kFl) == first);
    CHECK(c.rejected() == 1);
    CHECK(read_file(file) == bytes);
  }
  {
    std::ofstream(file) << "# version 0\n7 4 1 1 F_l : 0 2 0 4 0 1\n";
    DetCache c(tmp.path);
    CHECK(c.get(s, Which::kFl) == first);
    CHECK(c.rejected() == 1);
  }
  {
    const auto blocker = tmp.path / "plain_file";
    std::ofstream(blocker) << "x";
    DetCache c(blocker / "sub");
    CHECK(c.get(s, Which::kFl1) == det_poly(build_matrix(s, Which::kFl1), 6));
  }
}
