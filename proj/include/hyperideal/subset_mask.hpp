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

#ifndef HYPERIDEAL_SUBSET_MASK_HPP_
#define HYPERIDEAL_SUBSET_MASK_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperideal/error.hpp"

namespace hyperideal {

inline constexpr std::size_t kMaxOrder = 64;

// Index of an element of a finite hyperring. Names are metadata kept by the
// ring; everything computational works on indices.
struct Element {
  std::uint8_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::size_t i)
      : index(static_cast<std::uint8_t>(i)) {}

  constexpr auto operator<=>(const Element&) const = default;
};

// A subset of the carrier of one particular ring. The ring is identified by
// the id assigned at construction; combining masks of two different rings is
// an error.
class SubsetMask {
 public:
  SubsetMask() = default;
  SubsetMask(std::uint64_t bits, std::uint32_t ring_id)
      : bits_(bits), ring_id_(ring_id) {}

  std::uint64_t bits() const noexcept { return bits_; }
  std::uint32_t ring_id() const noexcept { return ring_id_; }

  bool contains(Element e) const noexcept { return (bits_ >> e.index) & 1U; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }

  SubsetMask& insert(Element e) noexcept {
    bits_ |= std::uint64_t{1} << e.index;
    return *this;
  }

  // Members in ascending index order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.emplace_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  bool subset_of(const SubsetMask& other) const {
    check(other);
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const SubsetMask& other) const {
    check(other);
    return (bits_ & other.bits_) != 0;
  }

  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    a.check(b);
    return {a.bits_ & b.bits_, a.ring_id_};
  }
  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    a.check(b);
    return {a.bits_ | b.bits_, a.ring_id_};
  }
  // Set difference a \ b.
  friend SubsetMask operator-(const SubsetMask& a, const SubsetMask& b) {
    a.check(b);
    return {a.bits_ & ~b.bits_, a.ring_id_};
  }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    a.check(b);
    return a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const SubsetMask& a,
                                          const SubsetMask& b) {
    a.check(b);
    return a.bits_ <=> b.bits_;
  }

 private:
  void check(const SubsetMask& other) const {
    if (ring_id_ != other.ring_id_) {
      throw Error(ErrorCode::RingMismatch,
                  "subsets belong to different hyperrings");
    }
  }

  std::uint64_t bits_ = 0;
  std::uint32_t ring_id_ = 0;
};

}  // namespace hyperideal

#endif  // HYPERIDEAL_SUBSET_MASK_HPP_
