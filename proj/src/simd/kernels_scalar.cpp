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

#include "syzcert/simd/kernels.hpp"

namespace syzcert::simd {
namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                 std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % p);
  }
}

void scale_scalar(std::uint32_t* x, std::uint32_t c, std::size_t n, std::uint32_t p) {
  const std::uint64_t cc = c;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = static_cast<std::uint32_t>((cc * x[i]) % p);
  }
}

std::uint32_t dot_scalar(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                         std::uint32_t p) {
  // Partial sums stay below 2^63 for p < 2^31 over 2 terms; reduce every step.
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc = (acc + static_cast<std::uint64_t>(x[i]) * y[i]) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &axpy_scalar, &scale_scalar, &dot_scalar};
  return table;
}

}  // namespace syzcert::simd
