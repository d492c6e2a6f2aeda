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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "syzcert/field.hpp"

namespace syzcert {

// Dense matrix over F_{p^k} = F_p[u]/(g), stored as k coordinate planes per
// row so that all row operations reduce to F_p axpy kernels.
class GFMatrix {
 public:
  using Elem = ExtArith::Elem;

  GFMatrix(const ExtArith& arith, std::size_t rows, std::size_t cols);
  GFMatrix(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
      : GFMatrix(ctx.arith(), rows, cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ExtArith& arith() const { return *arith_; }

  Elem at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Elem& v);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  FieldElem get(const FieldCtx& ctx, std::size_t r, std::size_t c) const {
    return FieldElem::from_ext(ctx, at(r, c));
  }
  void set(std::size_t r, std::size_t c, const FieldElem& v) { set(r, c, v.to_ext()); }

  std::uint32_t* plane(std::size_t r, int a) { return data_.data() + r * stride_ + static_cast<std::size_t>(a) * cols_; }
  const std::uint32_t* plane(std::size_t r, int a) const {
    return data_.data() + r * stride_ + static_cast<std::size_t>(a) * cols_;
  }

  void swap_rows(std::size_t r1, std::size_t r2);
  // row[dst] += f * row[src] on columns [from, cols)
  void add_row_multiple(std::size_t dst, std::size_t src, const Elem& f, std::size_t from = 0);
  // row[r] *= f on columns [from, cols)
  void scale_row(std::size_t r, const Elem& f, std::size_t from = 0);

  friend bool operator==(const GFMatrix& a, const GFMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const ExtArith* arith_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint32_t> data_;
};

struct EchelonInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  GFMatrix::Elem det{};  // meaningful only for square input
};

// In-place Gaussian elimination with the first nonzero entry of each column as
// pivot. reduced = true produces the reduced row echelon form with unit pivots.
EchelonInfo echelonize(GFMatrix& m, bool reduced);

std::size_t rank(GFMatrix m);

GFMatrix::Elem determinant(GFMatrix m);

// Basis of {v : m v = 0}; one vector per free column, normalised so that the
// free coordinate is 1 and the other free coordinates are 0.
std::vector<std::vector<GFMatrix::Elem>> kernel_basis(GFMatrix m);

}  // namespace syzcert
