// Copyright 2026 The hyperideal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>

#include "hyperideal/closure_kernel.hpp"

namespace hyperideal {

namespace {

KernelIsa detect() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  if (__builtin_cpu_supports("avx2")) {
    return KernelIsa::Avx2;
  }
#elif defined(__aarch64__)
  return KernelIsa::Neon;
#endif
  return KernelIsa::Scalar;
}

// -1 means "use detected".
std::atomic<int> forced{-1};

}  // namespace

std::string_view to_string(KernelIsa isa) noexcept {
  switch (isa) {
    case KernelIsa::Scalar:
      return "scalar";
    case KernelIsa::Avx2:
      return "avx2";
    case KernelIsa::Neon:
      return "neon";
  }
  return "?";
}

bool kernel_available(KernelIsa isa) noexcept {
  switch (isa) {
    case KernelIsa::Scalar:
      return true;
    case KernelIsa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case KernelIsa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

KernelIsa active_kernel() noexcept {
  const int f = forced.load(std::memory_order_relaxed);
  if (f >= 0) {
    const auto isa = static_cast<KernelIsa>(f);
    return kernel_available(isa) ? isa : KernelIsa::Scalar;
  }
  static const KernelIsa detected = detect();
  return detected;
}

void force_kernel(std::optional<KernelIsa> isa) noexcept {
  forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void satisfies_batch(std::span<const HornClause> clauses,
                     std::span<const std::uint64_t> candidates,
                     std::span<std::uint8_t> out) {
  switch (active_kernel()) {
#if defined(__x86_64__) || defined(__i386__)
    case KernelIsa::Avx2:
      kernels::satisfies_avx2(clauses, candidates, out);
      return;
#endif
#if defined(__aarch64__)
    case KernelIsa::Neon:
      kernels::satisfies_neon(clauses, candidates, out);
      return;
#endif
    default:
      kernels::satisfies_scalar(clauses, candidates, out);
      return;
  }
}

}  // namespace hyperideal
