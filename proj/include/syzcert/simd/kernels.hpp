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
#include <string_view>

// Data-parallel F_p kernels. Every entry handled by these kernels is a
// canonical residue in [0, p). Two implementations exist: a portable scalar
// reference and an AVX2 variant; the active one is chosen once at runtime from
// CPU features and can be pinned with SYZCERT_SIMD=scalar|avx2.

namespace syzcert::simd {

// y[i] <- (y[i] + c * x[i]) mod p
using AxpyFn = void (*)(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c,
                        std::size_t n, std::uint32_t p);
// x[i] <- (c * x[i]) mod p
using ScaleFn = void (*)(std::uint32_t* x, std::uint32_t c, std::size_t n, std::uint32_t p);
// returns sum_i x[i] * y[i] mod p
using DotFn = std::uint32_t (*)(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                                std::uint32_t p);

struct KernelTable {
  std::string_view name;
  AxpyFn axpy;
  ScaleFn scale;
  DotFn dot;
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 translation unit was not built or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

bool cpu_supports_avx2();

// Kernel table used by the library.
const KernelTable& active_kernels();

// Pin the active table ("scalar" or "avx2"). Returns false if unavailable.
bool select_kernels(std::string_view name);

inline void axpy(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
                 std::uint32_t p) {
  if (c != 0) active_kernels().axpy(y, x, c, n, p);
}

inline void scale(std::uint32_t* x, std::uint32_t c, std::size_t n, std::uint32_t p) {
  active_kernels().scale(x, c, n, p);
}

inline std::uint32_t dot(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                         std::uint32_t p) {
  return active_kernels().dot(x, y, n, p);
}

namespace detail {
const KernelTable& avx2_table();  // defined only when built with AVX2 support
}

}  // namespace syzcert::simd
