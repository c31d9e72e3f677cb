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

#ifndef HYPERIDEAL_CLOSURE_KERNEL_HPP_
#define HYPERIDEAL_CLOSURE_KERNEL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace hyperideal {

// premise ⊆ X implies conclusion ⊆ X.
struct HornClause {
  std::uint64_t premise = 0;
  std::uint64_t conclusion = 0;
};

enum class KernelIsa { Scalar, Avx2, Neon };

std::string_view to_string(KernelIsa isa) noexcept;

// out[i] = 1 iff candidates[i] satisfies every clause. out.size() must equal
// candidates.size().
void satisfies_batch(std::span<const HornClause> clauses,
                     std::span<const std::uint64_t> candidates,
                     std::span<std::uint8_t> out);

namespace kernels {
void satisfies_scalar(std::span<const HornClause> clauses,
                      std::span<const std::uint64_t> candidates,
                      std::span<std::uint8_t> out);
#if defined(__x86_64__) || defined(__i386__)
void satisfies_avx2(std::span<const HornClause> clauses,
                    std::span<const std::uint64_t> candidates,
                    std::span<std::uint8_t> out);
#endif
#if defined(__aarch64__)
void satisfies_neon(std::span<const HornClause> clauses,
                    std::span<const std::uint64_t> candidates,
                    std::span<std::uint8_t> out);
#endif
}  // namespace kernels

bool kernel_available(KernelIsa isa) noexcept;
// The variant satisfies_batch dispatches to.
KernelIsa active_kernel() noexcept;
// Pins dispatch to one variant (tests, benchmarks); nullopt restores the
// runtime choice. Requesting an unavailable variant falls back to scalar.
void force_kernel(std::optional<KernelIsa> isa) noexcept;

}  // namespace hyperideal

#endif  // HYPERIDEAL_CLOSURE_KERNEL_HPP_
