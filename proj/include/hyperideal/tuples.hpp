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

#ifndef HYPERIDEAL_TUPLES_HPP_
#define HYPERIDEAL_TUPLES_HPP_

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "hyperideal/subset_mask.hpp"

namespace hyperideal {

// C(n + k - 1, k): the number of size-k multisets over n symbols.
std::size_t multiset_count(std::size_t n, std::size_t k);

// Position of a non-decreasing k-tuple in the lexicographic list of all
// non-decreasing k-tuples over n symbols.
std::size_t multiset_rank(std::span<const Element> sorted, std::size_t n);

// All non-decreasing k-tuples over n symbols, lexicographically ordered.
std::vector<std::vector<Element>> sorted_tuples(std::size_t n, std::size_t k);

namespace detail {
template <typename Fn>
bool invoke_visit(Fn& fn, std::span<const Element> t) {
  if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const Element>>,
                               bool>) {
    return fn(t);
  } else {
    fn(t);
    return true;
  }
}
}  // namespace detail

// Visits every k-tuple over n symbols in lexicographic order. A visitor that
// returns bool stops the walk by returning false; returns false iff stopped.
template <typename Fn>
bool for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  if (n == 0) {
    return true;
  }
  std::vector<Element> t(k);
  while (true) {
    if (!detail::invoke_visit(fn, std::span<const Element>(t))) {
      return false;
    }
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (t[j].index + 1U < n) {
        ++t[j].index;
        break;
      }
      t[j].index = 0;
      if (j == 0) {
        return true;
      }
    }
    if (k == 0) {
      return true;
    }
  }
}

// Same as for_each_tuple over non-decreasing tuples only.
template <typename Fn>
bool for_each_multiset(std::size_t n, std::size_t k, Fn&& fn) {
  if (n == 0) {
    return true;
  }
  std::vector<Element> t(k);
  while (true) {
    if (!detail::invoke_visit(fn, std::span<const Element>(t))) {
      return false;
    }
    std::size_t j = k;
    while (j > 0 && t[j - 1].index + 1U == n) {
      --j;
    }
    if (j == 0) {
      return true;
    }
    ++t[j - 1].index;
    for (std::size_t r = j; r < k; ++r) {
      t[r] = t[j - 1];
    }
  }
}

// Visits every k-tuple drawn from the given member lists (one list per slot).
template <typename Fn>
bool for_each_choice(std::span<const std::vector<Element>> slots, Fn&& fn) {
  for (const auto& s : slots) {
    if (s.empty()) {
      return true;
    }
  }
  const std::size_t k = slots.size();
  std::vector<std::size_t> pos(k, 0);
  std::vector<Element> t(k);
  for (std::size_t j = 0; j < k; ++j) {
    t[j] = slots[j][0];
  }
  while (true) {
    if (!detail::invoke_visit(fn, std::span<const Element>(t))) {
      return false;
    }
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (pos[j] + 1 < slots[j].size()) {
        ++pos[j];
        t[j] = slots[j][pos[j]];
        break;
      }
      pos[j] = 0;
      t[j] = slots[j][0];
      if (j == 0) {
        return true;
      }
    }
    if (k == 0) {
      return true;
    }
  }
}

}  // namespace hyperideal

#endif  // HYPERIDEAL_TUPLES_HPP_
