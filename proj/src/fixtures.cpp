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

#include <map>
#include <mutex>

#include "hyperideal/constructions.hpp"
#include "hyperideal/harness.hpp"
#include "hyperideal/tuples.hpp"

namespace hyperideal {

HyperRingSpec paper_example_spec() {
  HyperRingSpec spec;
  spec.name = "paper-example";
  spec.m = 3;
  spec.n = 3;
  spec.elements = {"0", "1", "2"};
  spec.zero = 0;
  spec.one = 1;
  constexpr std::uint64_t kAll = 0b111;
  auto bit = [](int e) { return std::uint64_t{1} << e; };
  // Keys in multiset order: 000 001 002 011 012 022 111 112 122 222.
  spec.f_table = {bit(0), bit(1), bit(2), bit(1), kAll,
                  bit(2), bit(1), kAll,   kAll,   bit(2)};
  for_each_multiset(3, 3, [&](std::span<const Element> t) {
    if (t[0].index == 0) {
      spec.g_table.push_back(0);
    } else if (t[2].index == 1) {
      spec.g_table.push_back(1);
    } else {
      spec.g_table.push_back(2);
    }
  });
  return spec;
}

namespace {

HyperRingSpec z2_as_33() {
  HyperRingSpec spec;
  spec.name = "z2-as-33";
  spec.m = 3;
  spec.n = 3;
  spec.elements = {"0", "1"};
  spec.zero = 0;
  spec.one = 1;
  for_each_multiset(2, 3, [&](std::span<const Element> t) {
    const unsigned sum = t[0].index + t[1].index + t[2].index;
    const unsigned product = t[0].index * t[1].index * t[2].index;
    spec.f_table.push_back(std::uint64_t{1} << (sum % 2));
    spec.g_table.push_back(static_cast<std::uint8_t>(product % 2));
  });
  return spec;
}

HyperRing build(std::string_view name) {
  if (name == "paper-example") {
    return make_ring(paper_example_spec());
  }
  if (name == "z2-as-33") {
    return make_ring(z2_as_33());
  }
  if (name == "z2xz3") {
    const HyperRing factors[] = {fixture("z2"), make_ring(integers_mod(3))};
    return product_ring(factors);
  }
  if (name == "z6-mod-3") {
    const HyperRing z6 = fixture("z6");
    const Element members[] = {Element(0), Element(3)};
    return quotient_ring(z6, z6.mask(members), Mode::Lenient, "z6-mod-3").quotient;
  }
  for (std::size_t k : {2, 4, 6, 8, 12}) {
    if (name == "z" + std::to_string(k)) {
      return make_ring(integers_mod(k));
    }
  }
  throw Error(ErrorCode::UnknownFixture, "'" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "paper-example", "z2", "z4", "z6", "z8", "z12", "z2xz3", "z6-mod-3", "z2-as-33"};
  return names;
}

HyperRing fixture(std::string_view name) {
  static std::recursive_mutex mu;
  static std::map<std::string, HyperRing, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) {
    return it->second;
  }
  HyperRing ring = build(name);
  cache.emplace(std::string(name), ring);
  return ring;
}

std::vector<std::string> default_suite_fixtures() {
  return {"paper-example", "z2", "z4", "z6", "z8", "z12", "z2xz3", "z6-mod-3"};
}

}  // namespace hyperideal
