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

#include "hyperideal/tuples.hpp"

namespace hyperideal {

std::size_t multiset_count(std::size_t n, std::size_t k) {
  // C(n + k - 1, k) computed incrementally; exact because each partial
  // product is itself a binomial coefficient.
  if (k == 0) {
    return 1;
  }
  if (n == 0) {
    return 0;
  }
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n - 1 + i) / i;
  }
  return result;
}

std::size_t multiset_rank(std::span<const Element> sorted, std::size_t n) {
  const std::size_t k = sorted.size();
  std::size_t rank = 0;
  std::size_t lo = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t v = sorted[j].index;
    for (std::size_t s = lo; s < v; ++s) {
      rank += multiset_count(n - s, k - j - 1);
    }
    lo = v;
  }
  return rank;
}

std::vector<std::vector<Element>> sorted_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<Element>> out;
  out.reserve(multiset_count(n, k));
  for_each_multiset(n, k, [&](std::span<const Element> t) {
    out.emplace_back(t.begin(), t.end());
  });
  return out;
}

}  // namespace hyperideal
