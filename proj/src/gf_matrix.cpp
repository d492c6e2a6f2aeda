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

#include "syzcert/gf_matrix.hpp"

#include <algorithm>

#include "syzcert/error.hpp"
#include "syzcert/simd/kernels.hpp"

namespace syzcert {

GFMatrix::GFMatrix(const ExtArith& arith, std::size_t rows, std::size_t cols)
    : arith_(&arith),
      rows_(rows),
      cols_(cols),
      stride_(static_cast<std::size_t>(arith.k()) * cols),
      data_(rows * stride_, 0) {}

GFMatrix::Elem GFMatrix::at(std::size_t r, std::size_t c) const {
  Elem e{};
  for (int a = 0; a < arith_->k(); ++a) e[static_cast<std::size_t>(a)] = plane(r, a)[c];
  return e;
}

void GFMatrix::set(std::size_t r, std::size_t c, const Elem& v) {
  for (int a = 0; a < arith_->k(); ++a) plane(r, a)[c] = v[static_cast<std::size_t>(a)] % arith_->p();
}

bool GFMatrix::is_zero_at(std::size_t r, std::size_t c) const {
  for (int a = 0; a < arith_->k(); ++a) {
    if (plane(r, a)[c] != 0) return false;
  }
  return true;
}

void GFMatrix::swap_rows(std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(r1 * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r1 + 1) * stride_),
                   data_.begin() + static_cast<std::ptrdiff_t>(r2 * stride_));
}

void GFMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Elem& f, std::size_t from) {
  const int k = arith_->k();
  const std::uint32_t p = arith_->p();
  const std::size_t n = cols_ - from;
  if (k == 1) {
    simd::axpy(plane(dst, 0) + from, plane(src, 0) + from, f[0], n, p);
    return;
  }
  std::uint32_t mm[kMaxExtDegree * kMaxExtDegree];
  arith_->mul_matrix(f, mm);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      simd::axpy(plane(dst, a) + from, plane(src, b) + from, mm[a * k + b], n, p);
    }
  }
}

void GFMatrix::scale_row(std::size_t r, const Elem& f, std::size_t from) {
  const int k = arith_->k();
  const std::uint32_t p = arith_->p();
  const std::size_t n = cols_ - from;
  if (k == 1) {
    simd::scale(plane(r, 0) + from, f[0], n, p);
    return;
  }
  std::vector<std::uint32_t> tmp(static_cast<std::size_t>(k) * n);
  for (int b = 0; b < k; ++b) {
    std::copy_n(plane(r, b) + from, n, tmp.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(b) * n));
    std::fill_n(plane(r, b) + from, n, 0U);
  }
  std::uint32_t mm[kMaxExtDegree * kMaxExtDegree];
  arith_->mul_matrix(f, mm);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      simd::axpy(plane(r, a) + from, tmp.data() + static_cast<std::size_t>(b) * n, mm[a * k + b], n, p);
    }
  }
}

EchelonInfo echelonize(GFMatrix& m, bool reduced) {
  const ExtArith& ar = m.arith();
  EchelonInfo info;
  info.det = ar.one();
  bool negate = false;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.is_zero_at(piv, col)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      m.swap_rows(piv, row);
      negate = !negate;
    }
    const GFMatrix::Elem pv = m.at(row, col);
    info.det = ar.mul(info.det, pv);
    const GFMatrix::Elem pinv = ar.inv(pv);
    if (reduced) {
      m.scale_row(row, pinv, col);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == row || m.is_zero_at(r, col)) continue;
        m.add_row_multiple(r, row, ar.neg(m.at(r, col)), col);
      }
    } else {
      for (std::size_t r = row + 1; r < m.rows(); ++r) {
        if (m.is_zero_at(r, col)) continue;
        m.add_row_multiple(r, row, ar.neg(ar.mul(m.at(r, col), pinv)), col);
      }
    }
    info.pivot_cols.push_back(col);
    ++row;
  }
  info.rank = row;
  if (m.rows() == m.cols() && info.rank < m.rows()) info.det = GFMatrix::Elem{};
  if (negate) info.det = ar.neg(info.det);
  return info;
}

std::size_t rank(GFMatrix m) { return echelonize(m, false).rank; }

GFMatrix::Elem determinant(GFMatrix m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  if (m.rows() == 0) return m.arith().one();
  return echelonize(m, false).det;
}

std::vector<std::vector<GFMatrix::Elem>> kernel_basis(GFMatrix m) {
  const ExtArith& ar = m.arith();
  const EchelonInfo info = echelonize(m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : info.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<GFMatrix::Elem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<GFMatrix::Elem> v(m.cols(), GFMatrix::Elem{});
    v[f] = ar.one();
    for (std::size_t i = 0; i < info.pivot_cols.size(); ++i) {
      v[info.pivot_cols[i]] = ar.neg(m.at(i, f));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace syzcert
