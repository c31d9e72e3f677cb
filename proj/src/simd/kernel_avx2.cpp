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

#include "hyperideal/closure_kernel.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace hyperideal::kernels {

__attribute__((target("avx2"))) void satisfies_avx2(
    std::span<const HornClause> clauses,
    std::span<const std::uint64_t> candidates, std::span<std::uint8_t> out) {
  const std::size_t count = candidates.size();
  const __m256i all_ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i x = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(candidates.data() + i));
    __m256i bad = _mm256_setzero_si256();
    for (const auto& c : clauses) {
      const __m256i p = _mm256_set1_epi64x(static_cast<long long>(c.premise));
      const __m256i q = _mm256_set1_epi64x(static_cast<long long>(c.conclusion));
      const __m256i prem_ok = _mm256_cmpeq_epi64(_mm256_and_si256(x, p), p);
      const __m256i conc_ok = _mm256_cmpeq_epi64(_mm256_and_si256(x, q), q);
      bad = _mm256_or_si256(bad, _mm256_andnot_si256(conc_ok, prem_ok));
      if (_mm256_testc_si256(bad, all_ones)) {
        break;
      }
    }
    const int lanes = _mm256_movemask_pd(_mm256_castsi256_pd(bad));
    for (int k = 0; k < 4; ++k) {
      out[i + k] = ((lanes >> k) & 1) ? 0 : 1;
    }
  }
  if (i < count) {
    satisfies_scalar(clauses, candidates.subspan(i), out.subspan(i));
  }
}

}  // namespace hyperideal::kernels

#endif
