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
#include "syzcert/report.hpp"

#include <sstream>

namespace syzcert {

using nlohmann::json;

json to_json(const SyzygyVector& s) {
  json comps = json::array();
  for (const auto& c : s.comps) comps.push_back(c.to_string());
  return {{"degree", s.degree}, {"components", comps}};
}

json to_json(const FibreReport& r) {
  json verdict = json::array();
  json witnesses = json::array();
  for (const auto& it : r.verdict.items) {
    verdict.push_back(it.label());
    if (it.witness) {
      json w = to_json(*it.witness);
      w["for"] = it.label();
      w["level"] = it.e;
      witnesses.push_back(std::move(w));
    }
  }
  return {{"schema", kSchemaVersion},
          {"p", r.p},
          {"delta", r.delta},
          {"a", r.a},
          {"t0", r.t0.to_string()},
          {"field", r.t0.ctx().name()},
          {"verdict", verdict},
          {"witnesses", witnesses},
          {"facts", r.verdict.facts},
          {"e_max", r.e_max}};
}

json to_json(const SearchHit& h) {
  return {{"p", h.p},
          {"delta", h.delta},
          {"a", h.a},
          {"t0", h.t0.to_string()},
          {"field", h.t0.ctx().name()},
          {"method", to_string(h.method)},
          {"level", h.level},
          {"witness", to_json(h.witness)},
          {"checks",
           {{"degree_bound", h.checks.degree_bound},
            {"indivisible", h.checks.indivisible},
            {"primary", h.checks.primary}}}};
}

json to_json(const GcdStripResult& r, std::uint32_t p, int delta, int a, int e) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    json j = {{"t0", c.t0.to_string()},
              {"field", c.t0.ctx().name()},
              {"semistable", c.semistable},
              {"confirmed_direct", c.confirmed_direct},
              {"facts", c.facts}};
    if (c.witness) j["witness"] = to_json(*c.witness);
    cands.push_back(std::move(j));
  }
  return {{"schema", kSchemaVersion}, {"p", p},
          {"delta", delta},           {"a", a},
          {"e", e},                   {"residual_degree", r.residual.degree().value_or(0)},
          {"iterations", r.iterations}, {"candidates", cands}};
}

json to_json(const RegressionReport& r) {
  json lines = json::array();
  for (const auto& l : r.lines) lines.push_back({{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
  return {{"schema", kSchemaVersion}, {"ok", r.ok()}, {"checks", lines}};
}

json table_json(const std::vector<TableRow>& rows, const std::vector<Method>& methods, int delta, int a) {
  json ms = json::array();
  for (Method m : methods) ms.push_back(to_string(m));
  json out_rows = json::array();
  for (const auto& r : rows) {
    json outcomes = json::object();
    for (const auto& [m, o] : r.outcomes) outcomes[to_string(m)] = to_string(o);
    json row = {{"p", r.p}, {"found", r.found()}, {"outcomes", outcomes}};
    if (r.hit) row["hit"] = to_json(*r.hit);
    out_rows.push_back(std::move(row));
  }
  return {{"schema", kSchemaVersion}, {"delta", delta}, {"a", a}, {"methods", ms}, {"rows", out_rows}};
}

std::string table_csv(const std::vector<TableRow>& rows, const std::vector<Method>& methods) {
  std::string tried;
  for (Method m : methods) tried += (tried.empty() ? "" : "+") + std::string(to_string(m));
  std::ostringstream out;
  out << "p,t0,field,method,degree_of_witness,verdict\n";
  for (const auto& r : rows) {
    out << r.p << ',';
    if (r.hit) {
      out << r.hit->t0.to_string() << ',' << r.hit->t0.ctx().name() << ',' << to_string(r.hit->method) << ','
          << r.hit->witness.degree << ",semistable-not-strongly-semistable\n";
    } else {
      out << ",," << tried << ",,not-found\n";
    }
  }
  return out.str();
}

std::vector<std::string> csv_differences(const std::string& golden, const std::string& actual) {
  auto lines = [](const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) {
      if (!l.empty() && l.back() == '\r') l.pop_back();
      if (!l.empty()) v.push_back(l);
    }
    return v;
  };
  const auto g = lines(golden);
  const auto a = lines(actual);
  std::vector<std::string> diff;
  for (std::size_t i = 1; i < std::max(g.size(), a.size()); ++i) {
    const std::string ge = i < g.size() ? g[i] : "<missing>";
    const std::string ae = i < a.size() ? a[i] : "<missing>";
    if (ge != ae) diff.push_back(ge + " | " + ae);
  }
  if (g.empty() || a.empty() || g[0] != a[0]) diff.insert(diff.begin(), "header differs");
  return diff;
}

std::string coefficient_list(const UniPoly& f) {
  std::string out;
  const std::size_t n = f.degree().value_or(0);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i) out += ' ';
    out += f.coeff(i).to_string();
  }
  return out;
}

}  // namespace syzcert
