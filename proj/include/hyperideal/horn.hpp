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

#ifndef HYPERIDEAL_HORN_HPP_
#define HYPERIDEAL_HORN_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperideal/closure_kernel.hpp"

namespace hyperideal {

// A set of Horn clauses over at most 64 atoms. Hyperideals and multiplicative
// sets are exactly the subsets closed under such a theory, which lets both
// be enumerated by the same machinery.
class HornTheory {
 public:
  explicit HornTheory(std::size_t atoms);

  std::size_t atoms() const noexcept { return atoms_; }
  std::uint64_t universe() const noexcept;

  // Clauses sharing a premise are merged.
  void add(std::uint64_t premise, std::uint64_t conclusion);
  std::span<const HornClause> clauses() const noexcept { return clauses_; }

  bool satisfies(std::uint64_t x) const noexcept;
  // Least closed superset of x.
  std::uint64_t closure(std::uint64_t x) const noexcept;

  // All closed sets, ascending by mask value. Power-set filtering through the
  // SIMD kernel up to kFilterAtoms atoms, NextClosure above.
  std::vector<std::uint64_t> closed_sets() const;
  std::vector<std::uint64_t> closed_sets_next_closure() const;
  // Requires atoms() <= 24.
  std::vector<std::uint64_t> closed_sets_filtered() const;

  static constexpr std::size_t kFilterAtoms = 8;

 private:
  std::size_t atoms_;
  std::vector<HornClause> clauses_;
};

}  // namespace hyperideal

#endif  // HYPERIDEAL_HORN_HPP_
