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

namespace hyperideal::kernels {

void satisfies_scalar(std::span<const HornClause> clauses,
                      std::span<const std::uint64_t> candidates,
                      std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::uint64_t x = candidates[i];
    bool ok = true;
    for (const auto& c : clauses) {
      if ((x & c.premise) == c.premise && (x & c.conclusion) != c.conclusion) {
        ok = false;
        break;
      }
    }
    out[i] = ok ? 1 : 0;
  }
}

}  // namespace hyperideal::kernels
