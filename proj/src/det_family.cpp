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
#include "syzcert/det_family.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "syzcert/error.hpp"
#include "syzcert/gf_matrix.hpp"
#include "syzcert/log.hpp"
#include "syzcert/parallel.hpp"
#include "syzcert/residue.hpp"

namespace syzcert {

namespace {

std::int64_t ceil_half(std::int64_t v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

}  // namespace

DetFamilySpec derive_spec(std::uint32_t p, int delta, int a, int e) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (delta <= 0 || delta % 2 != 0) throw PreconditionError("delta = " + std::to_string(delta) + " is not even");
  if (delta % static_cast<int>(p) == 0) throw PreconditionError("p divides delta");
  if (a <= 0) throw PreconditionError("a must be positive");
  if (a % delta == 0) throw PreconditionError("delta divides a");
  if (e < 1) throw PreconditionError("Frobenius level e must be at least 1");
  DetFamilySpec s;
  s.p = p;
  s.delta = delta;
  s.a = a;
  s.e = e;
  s.q = 1;
  for (int i = 0; i < e; ++i) {
    s.q *= p;
    if (s.q > (1ULL << 30)) throw PreconditionError("q = p^e too large");
  }
  s.aq = static_cast<std::int64_t>(s.q) * a;
  if (s.aq > (1LL << 30)) throw PreconditionError("aq too large");
  s.l = s.aq / delta;
  s.r = s.aq % delta;
  if (s.r == 0) throw PreconditionError("delta divides aq (remainder r = 0)");
  s.size_l = s.aq - delta * s.l / 2;
  s.size_l1 = s.aq - delta * (s.l + 1) / 2;
  if (s.size_l <= 0 || s.size_l1 <= 0) {
    throw PreconditionError("matrix size aq - delta(l+1)/2 = " + std::to_string(s.size_l1) + " is not positive");
  }
  s.m_cert_l = ceil_half(3 * s.aq - s.r) - 1;
  s.m_cert_l1 = ceil_half(3 * s.aq + delta - s.r) - 1;
  s.m_crit = ceil_half(3 * s.aq) - 1;
  s.m_destab_l = s.m_crit - s.r;
  s.m_destab_l1 = s.m_crit;
  return s;
}

UniPoly BandedMatrix::entry(int i, int j) const {
  const int k = offset + i - j;
  if (k < 0 || k >= static_cast<int>(band.size())) return UniPoly(band.at(0).ctx());
  return band[static_cast<std::size_t>(k)];
}

std::vector<std::vector<UniPoly>> BandedMatrix::dense() const {
  std::vector<std::vector<UniPoly>> out;
  for (int i = 0; i < n; ++i) {
    out.emplace_back();
    for (int j = 0; j < n; ++j) out.back().push_back(entry(i, j));
  }
  return out;
}

std::string BandedMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    out += "(";
    for (int j = 0; j < n; ++j) {
      if (j) out += ", ";
      out += entry(i, j).to_string();
    }
    out += ")\n";
  }
  return out;
}

BandedMatrix build_matrix(const DetFamilySpec& spec, Which which, const HomPoly2<UniPoly>& f) {
  if (f.degree() != spec.delta) throw PreconditionError("binary form degree differs from delta");
  BandedMatrix m;
  m.which = which;
  m.n = static_cast<int>(spec.size(which));
  m.offset = static_cast<int>(spec.delta * spec.power(which) / 2);
  m.band = power_coeffs(f, static_cast<int>(spec.power(which)));
  return m;
}

BandedMatrix build_matrix(const DetFamilySpec& spec, Which which) {
  return build_matrix(spec, which, standard_binary_form(spec.p, spec.delta));
}

namespace {

using EntryFn = std::function<ExtArith::Elem(const ExtArith&, std::size_t, std::size_t)>;

UniPoly det_crt(std::size_t n, const FieldCtx& fp, std::size_t degree_bound, unsigned jobs,
                const std::function<GFMatrix(const ExtArith&)>& reduce) {
  if (n == 0) return UniPoly::constant(fp.one());
  IrreducibleSequence seq(fp.p());
  UniPoly R(fp);
  UniPoly M = UniPoly::constant(fp.one());
  std::size_t covered = 0;
  const std::size_t batch_max = std::max<std::size_t>(1, static_cast<std::size_t>(jobs) * 2);
  while (covered <= degree_bound) {
    std::vector<ExtArith> batch;
    std::size_t planned = covered;
    while (planned <= degree_bound && batch.size() < batch_max) {
      batch.emplace_back(fp.p(), seq.next());
      planned += static_cast<std::size_t>(batch.back().k());
    }
    std::vector<ExtArith::Elem> dets(batch.size());
    parallel_for(batch.size(), jobs, [&](std::size_t i) { dets[i] = determinant(reduce(batch[i])); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const ExtArith& ar = batch[i];
      const ExtArith::Elem rg = reduce_mod(R, ar);
      const ExtArith::Elem mg = reduce_mod(M, ar);
      const ExtArith::Elem h = ar.mul(ar.sub(dets[i], rg), ar.inv(mg));
      R = R + M * residue_poly(h, ar, fp);
      M = M * modulus_poly(ar, fp);
      covered += static_cast<std::size_t>(ar.k());
    }
  }
  return R;
}

}  // namespace

UniPoly det_poly(const std::vector<std::vector<UniPoly>>& m, std::size_t degree_bound, unsigned jobs) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  if (n == 0) throw PreconditionError("empty matrix");
  const FieldCtx& fp = m[0][0].ctx();
  if (fp.ext_degree() != 1) throw PreconditionError("det_poly expects coefficients in F_p");
  return det_crt(n, fp, degree_bound, jobs, [&](const ExtArith& ar) {
    GFMatrix g(ar, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m[i][j].is_zero()) g.set(i, j, reduce_mod(m[i][j], ar));
    return g;
  });
}

UniPoly det_poly(const BandedMatrix& m, std::size_t degree_bound, unsigned jobs) {
  const FieldCtx& fp = m.band.at(0).ctx();
  const std::size_t n = static_cast<std::size_t>(m.n);
  return det_crt(n, fp, degree_bound, jobs, [&](const ExtArith& ar) {
    std::vector<ExtArith::Elem> band;
    for (const auto& b : m.band) band.push_back(reduce_mod(b, ar));
    GFMatrix g(ar, n, n);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) {
        const int k = m.offset + i - j;
        if (k >= 0 && k < static_cast<int>(band.size())) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), band[static_cast<std::size_t>(k)]);
      }
    return g;
  });
}

UniPoly det_cofactor(const std::vector<std::vector<UniPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("empty matrix");
  const FieldCtx& fp = m[0][0].ctx();
  if (n == 1) return m[0][0];
  UniPoly acc(fp);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<UniPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor.back().push_back(m[i][c]);
    }
    const UniPoly term = m[0][j] * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

FieldElem det_at(const BandedMatrix& m, const FieldElem& t0) {
  const FieldCtx& f = t0.ctx();
  std::vector<FieldElem> band;
  for (const auto& b : m.band) band.push_back(b.is_zero() ? f.zero() : b.eval(t0));
  const std::size_t n = static_cast<std::size_t>(m.n);
  GFMatrix g(f, n, n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const int k = m.offset + i - j;
      if (k >= 0 && k < static_cast<int>(band.size())) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), band[static_cast<std::size_t>(k)]);
    }
  return FieldElem::from_ext(f, determinant(std::move(g)));
}

bool residue_check(const BandedMatrix& m, const UniPoly& d) {
  const FieldCtx& fp = m.band.at(0).ctx();
  const ExtArith ar(fp.p(), first_irreducible(fp.p(), 8));
  std::vector<ExtArith::Elem> band;
  for (const auto& b : m.band) band.push_back(reduce_mod(b, ar));
  const std::size_t n = static_cast<std::size_t>(m.n);
  GFMatrix g(ar, n, n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const int k = m.offset + i - j;
      if (k >= 0 && k < static_cast<int>(band.size())) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), band[static_cast<std::size_t>(k)]);
    }
  return determinant(std::move(g)) == reduce_mod(d, ar);
}

// ---------------------------------------------------------------------------

DetCache::DetCache(std::optional<std::filesystem::path> dir, bool use_env) : dir_(std::move(dir)) {
  if (!dir_ && use_env) {
    if (const char* env = std::getenv("SYZCERT_CACHE_DIR"); env && *env) dir_ = std::filesystem::path(env);
  }
  if (!dir_) memory_only_ = true;
}

std::filesystem::path DetCache::file_for(const DetFamilySpec& s, Which which) const {
  std::ostringstream name;
  name << "det_p" << s.p << "_d" << s.delta << "_a" << s.a << "_e" << s.e << (which == Which::kFl ? "_Fl" : "_Fl1")
       << ".txt";
  return dir_.value_or(".") / name.str();
}

std::optional<UniPoly> DetCache::load(const DetFamilySpec& s, Which which) {
  if (memory_only_) return std::nullopt;
  const auto path = file_for(s, which);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  auto reject = [&](const std::string& why) -> std::optional<UniPoly> {
    ++rejected_;
    log_warning("ignoring cache entry " + path.string() + ": " + why);
    return std::nullopt;
  };
  std::string header, line;
  std::getline(in, header);
  if (header != "# version " + std::to_string(kVersion)) return reject("version stamp mismatch");
  std::getline(in, line);
  std::istringstream ls(line);
  std::uint32_t p = 0;
  int delta = 0, a = 0, e = 0;
  std::string w, colon;
  ls >> p >> delta >> a >> e >> w >> colon;
  if (!ls || colon != ":" || p != s.p || delta != s.delta || a != s.a || e != s.e || w != to_string(which)) {
    return reject("key mismatch");
  }
  const FieldCtx& fp = ff_create(s.p, 1);
  std::vector<FieldElem> coeffs;
  for (std::int64_t c; ls >> c;) {
    if (c < 0 || c >= static_cast<std::int64_t>(s.p)) return reject("coefficient out of range");
    coeffs.push_back(fp.from_int(c));
  }
  if (!ls.eof()) return reject("malformed coefficient list");
  const UniPoly d(fp, coeffs);
  if (d.is_zero() || static_cast<std::int64_t>(*d.degree()) != s.predicted_degree(which)) {
    return reject("degree check failed");
  }
  if (!residue_check(build_matrix(s, which), d)) return reject("residue check failed");
  ++disk_hits_;
  return d;
}

void DetCache::store(const DetFamilySpec& s, Which which, const UniPoly& d) {
  if (memory_only_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  const auto path = file_for(s, which);
  std::ostringstream tmpname;
  tmpname << path.string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const std::filesystem::path tmp(tmpname.str());
  {
    std::ofstream out(tmp);
    if (out) {
      out << "# version " << kVersion << "\n";
      out << s.p << ' ' << s.delta << ' ' << s.a << ' ' << s.e << ' ' << to_string(which) << " :";
      for (std::size_t i = 0; i < d.size(); ++i) out << ' ' << d.coeff(i).coord(0);
      out << "\n";
    }
    if (!out) {
      log_warning("cannot write determinant cache in " + dir_->string() + "; continuing in memory");
      memory_only_ = true;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    log_warning("cannot finalize cache entry " + path.string() + ": " + ec.message());
    std::filesystem::remove(tmp, ec);
  }
}

UniPoly DetCache::get(const DetFamilySpec& s, Which which, unsigned jobs) {
  const Key key{s.p, s.delta, s.a, s.e, which == Which::kFl ? 0 : 1};
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (auto d = load(s, which)) {
      memo_.emplace(key, *d);
      return *d;
    }
  }
  const UniPoly d = det_poly(build_matrix(s, which), static_cast<std::size_t>(s.predicted_degree(which)), jobs);
  std::lock_guard<std::mutex> lock(mu_);
  store(s, which, d);
  memo_.emplace(key, d);
  return d;
}

std::vector<CertificateRow> generic_certificate(std::uint32_t p, int delta, int a, int e_max, DetCache& cache,
                                                unsigned jobs) {
  std::vector<CertificateRow> rows;
  for (int e = 1; e <= e_max; ++e) {
    const DetFamilySpec s = derive_spec(p, delta, a, e);
    const UniPoly D = cache.get(s, Which::kFl, jobs);
    const UniPoly E = cache.get(s, Which::kFl1, jobs);
    CertificateRow row;
    row.e = e;
    row.q = s.q;
    row.deg_D = D.is_zero() ? -1 : static_cast<std::int64_t>(*D.degree());
    row.deg_E = E.is_zero() ? -1 : static_cast<std::int64_t>(*E.degree());
    row.expect_D = s.predicted_degree(Which::kFl);
    row.expect_E = s.predicted_degree(Which::kFl1);
    row.pass = row.deg_D == row.expect_D && row.deg_E == row.expect_E;
    if (!row.pass) {
      throw ConsistencyError("determinant degree mismatch at q = " + std::to_string(s.q) + ": deg D = " +
                             std::to_string(row.deg_D) + " (expected " + std::to_string(row.expect_D) +
                             "), deg E = " + std::to_string(row.deg_E) + " (expected " +
                             std::to_string(row.expect_E) + ")");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace syzcert
