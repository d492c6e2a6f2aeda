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

#include <atomic>
#include <cstdlib>
#include <string>

#include "syzcert/simd/kernels.hpp"

namespace syzcert::simd {

bool cpu_supports_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* avx2_kernels() {
#if defined(SYZCERT_HAVE_AVX2)
  if (cpu_supports_avx2()) return &detail::avx2_table();
#endif
  return nullptr;
}

namespace {

const KernelTable* initial_table() {
  if (const char* env = std::getenv("SYZCERT_SIMD")) {
    if (std::string(env) == "scalar") return &scalar_kernels();
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& table_slot() {
  static std::atomic<const KernelTable*> slot{initial_table()};
  return slot;
}

}  // namespace

const KernelTable& active_kernels() { return *table_slot().load(std::memory_order_relaxed); }

bool select_kernels(std::string_view name) {
  if (name == "scalar") {
    table_slot().store(&scalar_kernels());
    return true;
  }
  if (name == "avx2") {
    if (const KernelTable* t = avx2_kernels()) {
      table_slot().store(t);
      return true;
    }
  }
  return false;
}

}  // namespace syzcert::simd
