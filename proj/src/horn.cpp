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

#include "hyperideal/horn.hpp"

#include <algorithm>

#include "hyperideal/error.hpp"

namespace hyperideal {

HornTheory::HornTheory(std::size_t atoms) : atoms_(atoms) {
  if (atoms > 64) {
    throw Error(ErrorCode::OrderLimitExceeded, "more than 64 atoms");
  }
}

std::uint64_t HornTheory::universe() const noexcept {
  return atoms_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << atoms_) - 1;
}

void HornTheory::add(std::uint64_t premise, std::uint64_t conclusion) {
  conclusion &= ~premise;
  if (conclusion == 0) {
    return;
  }
  for (auto& c : clauses_) {
    if (c.premise == premise) {
      c.conclusion |= conclusion;
      return;
    }
  }
  clauses_.push_back({premise, conclusion});
}

bool HornTheory::satisfies(std::uint64_t x) const noexcept {
  for (const auto& c : clauses_) {
    if ((x & c.premise) == c.premise && (x & c.conclusion) != c.conclusion) {
      return false;
    }
  }
  return true;
}

std::uint64_t HornTheory::closure(std::uint64_t x) const noexcept {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : clauses_) {
      if ((x & c.premise) == c.premise && (x & c.conclusion) != c.conclusion) {
        x |= c.conclusion;
        changed = true;
      }
    }
  }
  return x;
}

std::vector<std::uint64_t> HornTheory::closed_sets() const {
  return atoms_ <= kFilterAtoms ? closed_sets_filtered()
                                : closed_sets_next_closure();
}

std::vector<std::uint64_t> HornTheory::closed_sets_next_closure() const {
  // Ganter's NextClosure: closed sets in lectic order, each produced once.
  std::vector<std::uint64_t> out;
  std::uint64_t a = closure(0);
  while (true) {
    out.push_back(a);
    bool advanced = false;
    for (std::size_t k = atoms_; k-- > 0;) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (a & bit) {
        continue;
      }
      const std::uint64_t below = bit - 1;
      const std::uint64_t b = closure((a & below) | bit);
      if (((b & ~a) & below) == 0) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> HornTheory::closed_sets_filtered() const {
  if (atoms_ > 24) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "power-set filtering is limited to 24 atoms");
  }
  const std::uint64_t total = std::uint64_t{1} << atoms_;
  constexpr std::uint64_t kBatch = 4096;
  std::vector<std::uint64_t> batch;
  std::vector<std::uint8_t> verdict;
  std::vector<std::uint64_t> out;
  for (std::uint64_t start = 0; start < total; start += kBatch) {
    const std::uint64_t end = std::min(total, start + kBatch);
    batch.resize(end - start);
    verdict.resize(end - start);
    for (std::uint64_t x = start; x < end; ++x) {
      batch[x - start] = x;
    }
    satisfies_batch(clauses_, batch, verdict);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (verdict[i]) {
        out.push_back(batch[i]);
      }
    }
  }
  return out;
}

}  // namespace hyperideal
