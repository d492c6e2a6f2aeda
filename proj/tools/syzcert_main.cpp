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
// Command-line front end. Every subcommand is a thin wrapper over library calls.
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "syzcert/battery.hpp"
#include "syzcert/criteria.hpp"
#include "syzcert/error.hpp"
#include "syzcert/log.hpp"
#include "syzcert/parallel.hpp"
#include "syzcert/report.hpp"
#include "syzcert/search.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace syzcert;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Global {
  unsigned jobs = default_jobs();
  std::string cache_dir;
  std::string format = "text";
  std::string out;
  std::string log_level = "warning";
};

struct Family {
  std::uint32_t p = 0;
  int delta = 4;
  int a = 1;
};

void add_family(CLI::App* sub, Family& f, int default_delta = 4) {
  f.delta = default_delta;
  sub->add_option("-p,--prime", f.p, "characteristic")->required();
  sub->add_option("-d,--delta", f.delta, "curve degree")->capture_default_str();
  sub->add_option("-a", f.a, "generator degree")->capture_default_str();
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "1") out.push_back(Method::kGcdStrip);
    else if (item == "2") out.push_back(Method::kPrimeScan);
    else if (item == "3") out.push_back(Method::kExtScan);
    else throw PreconditionError("unknown method '" + item + "' (use 1, 2, 3)");
  }
  if (out.empty()) throw PreconditionError("no methods given");
  return out;
}

// "1" or "1..3"
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int e = std::stoi(text);
      return {e, e};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw PreconditionError("bad level range '" + text + "'");
  }
}

// "F_p" or "F_{p^2}" spelled as F_49; empty picks F_p unless t0 mentions w.
const FieldCtx& pick_field(std::uint32_t p, const std::string& name, const std::string& t0) {
  if (name.empty()) return ff_create(p, t0.find('w') == std::string::npos ? 1 : 2);
  if (name == ff_create(p, 1).name()) return ff_create(p, 1);
  if (name == ff_create(p, 2).name()) return ff_create(p, 2);
  throw PreconditionError("field " + name + " is neither " + ff_create(p, 1).name() + " nor " +
                          ff_create(p, 2).name());
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + g.out);
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + path);
  f << text;
}

// Run metadata stays out of the payload so that payloads compare byte for byte.
void write_sidecar(const std::string& path, const Global& g, const std::string& command) {
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  write_file(path + ".meta.json",
             json{{"generated_at", stamp}, {"command", command}, {"jobs", g.jobs}}.dump(2) + "\n");
}

std::unique_ptr<DetCache> open_cache(const Global& g) {
  if (g.cache_dir.empty()) return std::make_unique<DetCache>();
  return std::make_unique<DetCache>(fs::path(g.cache_dir));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzcert: semistability certificates for syzygy bundles on plane quartic families"};
  app.set_config("--config", "", "TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("-j,--jobs", g.jobs, "worker threads (1 = single-threaded)")->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "determinant cache directory (default $SYZCERT_CACHE_DIR)");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--out", g.out, "write the main output here instead of stdout");
  app.add_option("--log-level", g.log_level, "debug, info, warning or quiet")
      ->check(CLI::IsMember({"debug", "info", "warning", "quiet"}))
      ->capture_default_str();

  // determinants
  Family det_f;
  std::string det_e = "1";
  auto* det = app.add_subcommand("determinants", "compute and cache D^(q), E^(q)");
  add_family(det, det_f);
  det->add_option("-e,--level", det_e, "Frobenius level or range a..b")->capture_default_str();

  // scan
  std::uint32_t scan_pmax = 100;
  std::string scan_methods = "2";
  bool scan_full = false, scan_experimental = false;
  int scan_delta = 4, scan_a = 1, scan_e = 1;
  std::uint64_t scan_gcd_budget = 200;
  std::string scan_golden, scan_csv, scan_json;
  auto* scan = app.add_subcommand("scan", "prime table for the quartic family");
  scan->add_option("--pmax", scan_pmax, "largest prime")->capture_default_str();
  scan->add_option("--methods", scan_methods, "comma list of 1, 2, 3")->capture_default_str();
  scan->add_option("-d,--delta", scan_delta)->capture_default_str();
  scan->add_option("-a", scan_a)->capture_default_str();
  scan->add_option("-e,--level", scan_e, "Frobenius level for methods 2 and 3")->capture_default_str();
  scan->add_option("--gcd-budget", scan_gcd_budget, "method 1 only while p^2 stays below this")
      ->capture_default_str();
  scan->add_flag("--full-range", scan_full, "allow p_max up to 3433 (hours)");
  scan->add_flag("--experimental", scan_experimental, "allow (delta, a) other than (4, 1)");
  scan->add_option("--golden", scan_golden, "compare the CSV with this file; exit 1 on mismatch");
  scan->add_option("--csv", scan_csv, "also write the CSV here");
  scan->add_option("--json", scan_json, "also write the JSON here");

  // classify
  Family cls_f;
  std::string cls_t0, cls_field;
  int cls_emax = 4;
  auto* cls = app.add_subcommand("classify", "verdict for a single fibre");
  add_family(cls, cls_f);
  cls->add_option("--t0", cls_t0, "parameter value, e.g. 3 or 7+w")->required();
  cls->add_option("--field", cls_field, "field of t0, e.g. F_49 (default from t0)");
  cls->add_option("--e-max", cls_emax, "highest Frobenius level certified")->capture_default_str();

  // gcd-method
  Family gcd_f;
  int gcd_e = 1;
  bool gcd_quadratic = false;
  auto* gcd = app.add_subcommand("gcd-method", "gcd stripping of D^(q) E^(q) against D^(qp)");
  add_family(gcd, gcd_f);
  gcd->add_option("-e,--level", gcd_e)->capture_default_str();
  gcd->add_flag("--quadratic", gcd_quadratic, "look for residual roots in F_{p^2}");

  // ext-scan
  Family ext_f;
  int ext_e = 1;
  bool ext_next = false, ext_experimental = false;
  auto* ext = app.add_subcommand("ext-scan", "determinant roots in F_{p^2} with direct syzygies");
  add_family(ext, ext_f);
  ext->add_option("-e,--level", ext_e)->capture_default_str();
  ext->add_flag("--next-level", ext_next, "try one Frobenius level higher when nothing is found");
  ext->add_flag("--experimental", ext_experimental, "allow (delta, a) other than (4, 1)");

  // fixed-curve
  std::uint32_t fix_p = 2;
  int fix_delta = 5;
  auto* fix = app.add_subcommand("fixed-curve", "regression for Syz(x^2, y^2, t z^2 + (1-t) x y)");
  fix->add_option("-p,--prime", fix_p)->required();
  fix->add_option("-d,--delta", fix_delta)->capture_default_str();

  auto* c2 = app.add_subcommand("char2", "characteristic 2 regression");

  std::string vp_only, vp_fixtures;
  auto* vp = app.add_subcommand("verify-paper", "run the regression battery and print a checklist");
  vp->add_option("--only", vp_only, "comma list of criteria ids, e.g. AC1,AC4");
  vp->add_option("--fixtures", vp_fixtures, "directory with the matrix fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  log_level() = g.log_level == "debug"  ? LogLevel::kDebug
                : g.log_level == "info" ? LogLevel::kInfo
                : g.log_level == "quiet" ? LogLevel::kQuiet
                                         : LogLevel::kWarning;
  g.jobs = std::max(1u, g.jobs);

  try {
    if (det->parsed()) {
      auto cache = open_cache(g);
      const auto [lo, hi] = parse_range(det_e);
      json rows = json::array();
      std::ostringstream text;
      for (int e = lo; e <= hi; ++e) {
        const auto spec = derive_spec(det_f.p, det_f.delta, det_f.a, e);
        text << "p=" << spec.p << " delta=" << spec.delta << " a=" << spec.a << " e=" << e << " q=" << spec.q
             << " l=" << spec.l << " r=" << spec.r << '\n';
        json row = {{"e", e}, {"q", spec.q}, {"l", spec.l}, {"r", spec.r}};
        for (Which w : {Which::kFl, Which::kFl1}) {
          const UniPoly d = cache->get(spec, w, g.jobs);
          const std::string name = std::string(w == Which::kFl ? "D" : "E") + "^(" + std::to_string(spec.q) + ")";
          const auto deg = d.is_zero() ? -1 : static_cast<std::int64_t>(*d.degree());
          text << "  " << name << " = " << d.to_string() << "\n    degree " << deg << " (expected "
               << spec.predicted_degree(w) << ")\n    coefficients " << coefficient_list(d) << '\n';
          row[w == Which::kFl ? "D" : "E"] = {{"poly", d.to_string()},
                                              {"degree", deg},
                                              {"expected_degree", spec.predicted_degree(w)},
                                              {"coefficients", coefficient_list(d)}};
        }
        rows.push_back(std::move(row));
      }
      if (cache->dir()) log_at(LogLevel::kInfo, "cache " + cache->dir()->string());
      emit(g, g.format == "json" ? dump({{"schema", kSchemaVersion},
                                         {"p", det_f.p},
                                         {"delta", det_f.delta},
                                         {"a", det_f.a},
                                         {"levels", rows}})
                                 : text.str());
      return 0;
    }

    if (scan->parsed()) {
      auto cache = open_cache(g);
      const auto methods = parse_methods(scan_methods);
      TableOptions opt;
      opt.search.jobs = g.jobs;
      opt.search.e = scan_e;
      opt.search.experimental = scan_experimental;
      opt.search.cache = cache.get();
      opt.delta = scan_delta;
      opt.a = scan_a;
      opt.full_range = scan_full;
      opt.gcd_budget = scan_gcd_budget;
      const auto rows = prime_table(scan_pmax, methods, opt);
      const std::string csv = table_csv(rows, methods);
      const std::string js = dump(table_json(rows, methods, scan_delta, scan_a));
      if (!scan_csv.empty()) write_file(scan_csv, csv);
      if (!scan_json.empty()) {
        write_file(scan_json, js);
        write_sidecar(scan_json, g, "scan --pmax " + std::to_string(scan_pmax) + " --methods " + scan_methods);
      }
      emit(g, g.format == "json" ? js : csv);
      if (!scan_golden.empty()) {
        std::ifstream in(scan_golden, std::ios::binary);
        if (!in) throw PreconditionError("cannot read golden file " + scan_golden);
        std::ostringstream ss;
        ss << in.rdbuf();
        const auto diff = csv_differences(ss.str(), csv);
        if (!diff.empty()) {
          std::cerr << "golden mismatch (expected | got):\n";
          for (const auto& d : diff) std::cerr << "  " << d << '\n';
          return kExitMismatch;
        }
        std::cerr << "golden ok: " << rows.size() << " rows\n";
      }
      return 0;
    }

    if (cls->parsed()) {
      const FieldCtx& f = pick_field(cls_f.p, cls_field, cls_t0);
      ClassifyOptions opt;
      opt.e_max = cls_emax;
      opt.jobs = g.jobs;
      const FibreReport r = classify_fibre(cls_f.p, cls_f.delta, cls_f.a, f.parse(cls_t0), opt);
      if (g.format == "json") {
        emit(g, dump(to_json(r)));
      } else {
        std::ostringstream text;
        text << "fibre t0 = " << r.t0.to_string() << " over " << f.name() << '\n';
        for (const auto& it : r.verdict.items) {
          text << "  " << it.label();
          if (it.witness) text << "  witness " << it.witness->to_string();
          text << '\n';
        }
        for (const auto& fact : r.verdict.facts) text << "  - " << fact << '\n';
        emit(g, text.str());
      }
      return 0;
    }

    if (gcd->parsed()) {
      auto cache = open_cache(g);
      SearchOptions opt;
      opt.jobs = g.jobs;
      opt.cache = cache.get();
      const auto r = method_gcd_strip(gcd_f.p, gcd_f.delta, gcd_f.a, gcd_e, gcd_quadratic, opt);
      if (g.format == "json") {
        emit(g, dump(to_json(r, gcd_f.p, gcd_f.delta, gcd_f.a, gcd_e)));
      } else {
        std::ostringstream text;
        text << "residual degree " << r.residual.degree().value_or(0) << " after " << r.iterations
             << " iterations, " << r.candidates.size() << " candidates\n";
        for (const auto& c : r.candidates) {
          text << "  t0 = " << c.t0.to_string() << (c.semistable ? " semistable" : " semistability open")
               << (c.confirmed_direct ? ", confirmed directly" : "") << '\n';
          for (const auto& fact : c.facts) text << "    - " << fact << '\n';
        }
        emit(g, text.str());
      }
      return 0;
    }

    if (ext->parsed()) {
      auto cache = open_cache(g);
      SearchOptions opt;
      opt.jobs = g.jobs;
      opt.e = ext_e;
      opt.cache = cache.get();
      opt.fallback = ext_next;
      opt.experimental = ext_experimental;
      const auto hits = method_ext_scan(ext_f.p, ext_f.delta, ext_f.a, opt);
      json arr = json::array();
      std::ostringstream text;
      for (const auto& h : hits) {
        arr.push_back(to_json(h));
        text << "t0 = " << h.t0.to_string() << " level " << h.level << " witness " << h.witness.to_string() << '\n';
      }
      if (hits.empty()) text << "no hits\n";
      emit(g, g.format == "json" ? dump({{"schema", kSchemaVersion}, {"hits", arr}}) : text.str());
      return 0;
    }

    auto print_report = [&](const RegressionReport& r, const std::string& extra) {
      if (g.format == "json") {
        emit(g, dump(to_json(r)));
      } else {
        std::ostringstream text;
        for (const auto& l : r.lines)
          text << (l.ok ? "[ok]   " : "[FAIL] ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << '\n';
        text << extra;
        emit(g, text.str());
      }
      return r.ok() ? 0 : kExitMismatch;
    };

    if (fix->parsed()) {
      const FixedCurveReport r = fixed_curve_regression(fix_p, fix_delta);
      std::string extra;
      if (r.witness) extra = "witness " + r.witness->to_string() + "\n";
      return print_report(r, extra);
    }

    if (c2->parsed()) return print_report(char2_regression(), "");

    if (vp->parsed()) {
      BatteryOptions opt;
      opt.jobs = g.jobs;
      auto cache = open_cache(g);
      opt.cache = cache.get();
      if (!vp_fixtures.empty()) opt.fixture_dir = fs::path(vp_fixtures);
      std::stringstream ss(vp_only);
      for (std::string id; std::getline(ss, id, ',');) opt.only.push_back(id);
      const auto lines = run_battery(opt);
      bool ok = true;
      json arr = json::array();
      std::ostringstream text;
      text << std::fixed;
      text.precision(3);
      for (const auto& l : lines) {
        ok = ok && l.pass;
        text << (l.pass ? "[pass] " : "[FAIL] ") << l.id << ' ' << l.title << (l.excluded ? " (excluded)" : "")
             << " [" << l.seconds << " s]\n       " << l.detail << '\n';
        arr.push_back({{"id", l.id}, {"title", l.title}, {"pass", l.pass}, {"excluded", l.excluded},
                       {"detail", l.detail}});
      }
      if (opt.only.empty()) text << "[info] AC10 property suites run under ctest\n";
      emit(g, g.format == "json" ? dump({{"schema", kSchemaVersion}, {"ok", ok}, {"checks", arr}}) : text.str());
      return ok ? 0 : kExitMismatch;
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
