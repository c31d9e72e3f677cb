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

#if defined(__aarch64__)

#include <arm_neon.h>

namespace hyperideal::kernels {

void satisfies_neon(std::span<const HornClause> clauses,
                    std::span<const std::uint64_t> candidates,
                    std::span<std::uint8_t> out) {
  const std::size_t count = candidates.size();
  std::size_t i = 0;
  for (; i + 2 <= count; i += 2) {
    const uint64x2_t x = vld1q_u64(candidates.data() + i);
    uint64x2_t bad = vdupq_n_u64(0);
    for (const auto& c : clauses) {
      const uint64x2_t p = vdupq_n_u64(c.premise);
      const uint64x2_t q = vdupq_n_u64(c.conclusion);
      const uint64x2_t prem_ok = vceqq_u64(vandq_u64(x, p), p);
      const uint64x2_t conc_ok = vceqq_u64(vandq_u64(x, q), q);
      bad = vorrq_u64(bad, vbicq_u64(prem_ok, conc_ok));
      if ((vgetq_lane_u64(bad, 0) & vgetq_lane_u64(bad, 1)) != 0) {
        break;
      }
    }
    out[i] = vgetq_lane_u64(bad, 0) ? 0 : 1;
    out[i + 1] = vgetq_lane_u64(bad, 1) ? 0 : 1;
  }
  if (i < count) {
    satisfies_scalar(clauses, candidates.subspan(i), out.subspan(i));
  }
}

}  // namespace hyperideal::kernels

#endif
