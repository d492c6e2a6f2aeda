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
#include "syzcert/battery.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "syzcert/criteria.hpp"
#include "syzcert/error.hpp"
#include "syzcert/search.hpp"

namespace syzcert {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string set_string(const std::set<std::uint32_t>& s) {
  std::vector<std::string> v;
  for (auto x : s) v.push_back(std::to_string(x));
  return "{" + join(v) + "}";
}

BatteryLine make_line(std::string id, std::string title) {
  BatteryLine l;
  l.id = std::move(id);
  l.title = std::move(title);
  return l;
}

bool same_up_to_scalar(const UniPoly& a, const UniPoly& b) {
  return !a.is_zero() && !b.is_zero() && a.monic() == b.monic();
}

// Transcription of the two matrices for p = 7, used when no fixture directory is given.
const char* const kMatrixFl = "(t, 0, 1, 0, 0)\n(0, t, 0, 1, 0)\n(1, 0, t, 0, 1)\n(0, 1, 0, t, 0)\n(0, 0, 1, 0, t)\n";
const char* const kMatrixFl1 = "(t^2 + 2, 0, 2t)\n(0, t^2 + 2, 0)\n(2t, 0, t^2 + 2)\n";

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read fixture " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BatteryLine ac1(DetCache&, unsigned jobs) {
  BatteryLine line = make_line("AC1", "determinant goldens up to scalar, each under 1 s");
  const FieldCtx& f7 = ff_create(7, 1);
  const FieldCtx& f3 = ff_create(3, 1);
  const UniPoly want_d7 = UniPoly::from_ints(f7, {0, 2, 0, 4, 0, 1});
  const UniPoly want_e7 = UniPoly::from_ints(f7, {2, 0, 1}) * UniPoly::from_ints(f7, {2, 5, 1}) *
                          UniPoly::from_ints(f7, {2, 2, 1});
  struct Case {
    std::uint32_t p;
    Which which;
    std::function<bool(const UniPoly&)> ok;
    const char* name;
  };
  const std::vector<Case> cases = {
      {7, Which::kFl, [&](const UniPoly& d) { return same_up_to_scalar(d, want_d7); }, "D^(7)"},
      {7, Which::kFl1, [&](const UniPoly& d) { return same_up_to_scalar(d, want_e7); }, "E^(7)"},
      {3, Which::kFl, [](const UniPoly& d) { return !d.is_zero() && d.degree() == 0u; }, "D^(3)"},
      {3, Which::kFl1,
       [&](const UniPoly& d) { return same_up_to_scalar(d, UniPoly::variable(f3)); }, "E^(3)"},
  };
  line.pass = true;
  std::vector<std::string> notes;
  for (const auto& c : cases) {
    // Fresh memory cache so the timing covers the computation.
    DetCache fresh(std::nullopt, false);
    const auto start = Clock::now();
    const UniPoly d = fresh.get(derive_spec(c.p, 4, 1, 1), c.which, jobs);
    const double s = since(start);
    const bool ok = c.ok(d) && s < kDeterminantSeconds;
    line.pass = line.pass && ok;
    std::ostringstream n;
    n << std::fixed;
    n.precision(6);
    n << c.name << " = " << d.to_string() << " (" << s << " s)" << (ok ? "" : " MISMATCH");
    notes.push_back(n.str());
  }
  line.detail = join(notes, "; ");
  return line;
}

BatteryLine ac2(DetCache& cache, unsigned jobs) {
  BatteryLine line = make_line("AC2", "root sets of D^(7) and E^(7)");
  const FieldCtx& f7 = ff_create(7, 1);
  const FieldCtx& f49 = ff_create(7, 2);
  const auto spec = derive_spec(7, 4, 1, 1);
  const UniPoly d = cache.get(spec, Which::kFl, jobs);
  const UniPoly e = cache.get(spec, Which::kFl1, jobs);
  std::set<std::uint32_t> rd;
  for (const auto& r : poly_roots(d, f7)) rd.insert(static_cast<std::uint32_t>(f7.index_of(r)));
  const auto re7 = poly_roots(e, f7);
  const auto re49 = poly_roots(e.embed(f49), f49);
  const bool ok_d = rd == std::set<std::uint32_t>{0, 1, 3, 4, 6};
  line.pass = ok_d && re7.empty() && !re49.empty();
  line.detail = "roots of D over F_7 " + set_string(rd) + "; E: " + std::to_string(re7.size()) +
                " roots in F_7, " + std::to_string(re49.size()) + " in F_49";
  return line;
}

BatteryLine ac3(const BatteryOptions& opt) {
  BatteryLine line = make_line("AC3", "matrix shapes for p = 7 byte-identical to fixtures");
  std::string want_l = kMatrixFl, want_l1 = kMatrixFl1;
  if (opt.fixture_dir) {
    want_l = read_file(*opt.fixture_dir / "matrix_p7_e1_Fl.txt");
    want_l1 = read_file(*opt.fixture_dir / "matrix_p7_e1_Fl1.txt");
  }
  const auto spec = derive_spec(7, 4, 1, 1);
  const std::string got_l = build_matrix(spec, Which::kFl).to_string();
  const std::string got_l1 = build_matrix(spec, Which::kFl1).to_string();
  line.pass = got_l == want_l && got_l1 == want_l1;
  line.detail = std::string("F_l 5x5 ") + (got_l == want_l ? "identical" : "differs") + "; F_{l+1} 3x3 " +
                (got_l1 == want_l1 ? "identical" : "differs") + (opt.fixture_dir ? " (fixture files)" : "");
  return line;
}

BatteryLine ac4(DetCache& cache, unsigned jobs) {
  BatteryLine line = make_line("AC4", "prime scan p <= 100: method 2 exceptions, method 3 resolves them");
  const auto start = Clock::now();
  TableOptions topt;
  topt.search.jobs = jobs;
  topt.search.cache = &cache;
  const auto rows = prime_table(100, {Method::kPrimeScan, Method::kExtScan}, topt);
  std::set<std::uint32_t> exceptions, unresolved;
  for (const auto& r : rows) {
    for (const auto& [m, o] : r.outcomes)
      if (m == Method::kPrimeScan && o != Outcome::kFound) exceptions.insert(r.p);
    if (!r.found()) unresolved.insert(r.p);
  }
  bool all_reverify = true;
  for (const auto& r : rows)
    if (r.hit && !reverify(*r.hit)) all_reverify = false;

  // The F_49 witness of degree 10.
  SearchOptions sopt;
  sopt.cache = &cache;
  bool f49_point = false;
  for (const auto& h : method_ext_scan(7, 4, 1, sopt)) {
    if (!(h.t0 * h.t0 + h.t0.ctx().from_int(2)).is_zero()) continue;
    const std::string t = h.t0.to_string();
    const SyzygyVector want =
        normalized(parse_syzygy(h.t0.ctx(), "(-2*" + t + "*y^3 - x^2*y; -2*" + t + "*x^3 - x*y^2; x*y*z)",
                                frobenius_gens(monomial_gens(h.t0.ctx(), 1), 1)));
    if (h.witness == want && h.witness.degree == 10 && reverify(h)) f49_point = true;
  }
  line.seconds = since(start);
  const bool ok_exc = exceptions == std::set<std::uint32_t>{7, 23, 31, 47, 89};
  line.pass = ok_exc && unresolved.empty() && f49_point && all_reverify && line.seconds < kScanSeconds;
  std::ostringstream d;
  d << std::fixed;
  d.precision(1);
  d << rows.size() << " primes; method 2 exceptions " << set_string(exceptions) << "; unresolved after method 3 "
    << set_string(unresolved) << "; F_49 witness " << (f49_point ? "found" : "missing") << "; " << line.seconds
    << " s";
  line.detail = d.str();
  return line;
}

BatteryLine ac5(DetCache& cache, unsigned jobs) {
  BatteryLine line = make_line("AC5", "generic certificate degrees for q <= 50");
  line.pass = true;
  std::vector<std::string> notes;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    int e_max = 0;
    for (std::uint64_t q = p; q <= 50; q *= p) ++e_max;
    for (const auto& row : generic_certificate(p, 4, 1, e_max, cache, jobs)) {
      line.pass = line.pass && row.pass;
      notes.push_back("q=" + std::to_string(row.q) + " deg " + std::to_string(row.deg_D) + "/" +
                      std::to_string(row.deg_E) + (row.pass ? "" : " MISMATCH"));
    }
  }
  line.detail = join(notes, "; ");
  return line;
}

BatteryLine ac6(DetCache& cache, unsigned jobs) {
  BatteryLine line = make_line("AC6", "determinant vanishing iff two-variable sections at the certifying degree");
  line.pass = true;
  int fibres = 0, vanishing = 0;
  std::vector<std::string> bad;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FieldCtx& f = ff_create(p, 1);
    const auto spec = derive_spec(p, 4, 1, 1);
    const auto family = standard_family(p, 4);
    const GradedRing ring = GradedRing::binary(f.zero());
    for (Which w : {Which::kFl, Which::kFl1}) {
      const UniPoly d = cache.get(spec, w, jobs);
      for (std::uint64_t i = 0; i < p; ++i) {
        const FieldElem t0 = f.element_at(i);
        if (!is_smooth_fibre(specialize(family, t0))) continue;
        ++fibres;
        const auto gens = family_generators(spec, w, t0);
        const bool zero = d.eval(t0).is_zero();
        const bool sections = syzygy_dimension(ring, gens, static_cast<int>(spec.cert_degree(w))) > 0;
        vanishing += zero;
        if (zero != sections) {
          line.pass = false;
          bad.push_back("p=" + std::to_string(p) + " t0=" + t0.to_string() + " " + to_string(w));
        }
      }
    }
  }
  line.detail = std::to_string(fibres) + " (fibre, determinant) pairs, " + std::to_string(vanishing) +
                " vanishing" + (bad.empty() ? "" : "; disagree at " + join(bad));
  return line;
}

BatteryLine ac7() {
  BatteryLine line = make_line("AC7", "fixed-curve family: trivialization, residue table, destabilising section");
  const FixedCurveReport r = fixed_curve_regression(2, 5);
  const bool ok_fixed = r.ok() && r.e == 1 && r.witness && r.witness->degree == 5;
  std::vector<std::string> mism;
  int primes = 0;
  for (std::uint32_t p = 2; p < 100; ++p) {
    if (!is_prime(p) || p == 5) continue;
    ++primes;
    const bool holds = residue_destab_condition(p, 5).has_value();
    if (holds != (p % 5 == 2 || p % 5 == 3)) mism.push_back(std::to_string(p));
  }
  std::vector<std::string> checks;
  for (const auto& l : r.lines) checks.push_back(l.name + (l.ok ? " ok" : " FAILED"));
  line.pass = ok_fixed && mism.empty();
  line.detail = join(checks) + "; residue table over " + std::to_string(primes) + " primes " +
                (mism.empty() ? "matches" : "differs at " + join(mism));
  return line;
}

BatteryLine ac8() {
  BatteryLine line = make_line("AC8", "characteristic 2 regression");
  const RegressionReport r = char2_regression();
  std::vector<std::string> checks;
  for (const auto& l : r.lines) checks.push_back(l.name + (l.ok ? " ok" : " FAILED"));
  line.pass = r.ok() && r.lines.size() == 7;
  line.detail = join(checks);
  return line;
}

BatteryLine ac9() {
  BatteryLine line = make_line("AC9", "out of reach at desk scale; gates checked instead");
  line.excluded = true;
  bool gated = false;
  try {
    prime_table(3433, {Method::kPrimeScan});
  } catch (const PreconditionError&) {
    gated = true;
  }
  bool too_far = false;
  try {
    TableOptions t;
    t.full_range = true;
    prime_table(3434, {Method::kPrimeScan}, t);
  } catch (const PreconditionError&) {
    too_far = true;
  }
  line.pass = gated && too_far;
  line.detail = std::string("excluded: table up to 3433 (behind --full-range, ") + (gated ? "gated" : "NOT gated") +
                "), strong semistability for all q (certificates stop at e_max), the fully generic curve";
  return line;
}

}  // namespace

std::vector<BatteryLine> run_battery(const BatteryOptions& opt) {
  DetCache local(std::nullopt, false);
  DetCache& cache = opt.cache ? *opt.cache : local;
  const unsigned jobs = std::max(1u, opt.jobs);
  const std::vector<std::pair<std::string, std::function<BatteryLine()>>> all = {
      {"AC1", [&] { return ac1(cache, jobs); }}, {"AC2", [&] { return ac2(cache, jobs); }},
      {"AC3", [&] { return ac3(opt); }},         {"AC4", [&] { return ac4(cache, jobs); }},
      {"AC5", [&] { return ac5(cache, jobs); }}, {"AC6", [&] { return ac6(cache, jobs); }},
      {"AC7", [] { return ac7(); }},             {"AC8", [] { return ac8(); }},
      {"AC9", [] { return ac9(); }},
  };
  std::vector<BatteryLine> out;
  for (const auto& [id, fn] : all) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
    const auto start = Clock::now();
    BatteryLine line;
    try {
      line = fn();
    } catch (const std::exception& ex) {
      line.id = id;
      line.title = "raised an error";
      line.pass = false;
      line.detail = ex.what();
    }
    if (line.seconds == 0) line.seconds = since(start);
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace syzcert
