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

#ifndef HYPERIDEAL_TESTS_SUPPORT_HPP_
#define HYPERIDEAL_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "hyperideal/document.hpp"
#include "hyperideal/harness.hpp"
#include "hyperideal/hyper_ring.hpp"

namespace hyperideal::testing {

inline SubsetMask sub(const HyperRing& r, const std::string& names) {
  return parse_subset(r, names);
}

inline std::vector<std::string> fmt(const HyperRing& r,
                                    const std::vector<SubsetMask>& sets) {
  std::vector<std::string> out;
  for (auto s : sets) {
    out.push_back(format_subset(r, s));
  }
  return out;
}

inline std::vector<Element> elems(std::initializer_list<unsigned> xs) {
  std::vector<Element> out;
  for (auto x : xs) {
    out.emplace_back(x);
  }
  return out;
}

inline HyperRing paper() { return fixture("paper-example"); }

}  // namespace hyperideal::testing

#endif  // HYPERIDEAL_TESTS_SUPPORT_HPP_
