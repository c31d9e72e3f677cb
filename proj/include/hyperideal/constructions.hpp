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

#ifndef HYPERIDEAL_CONSTRUCTIONS_HPP_
#define HYPERIDEAL_CONSTRUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hyperideal/ideals.hpp"

namespace hyperideal {

struct HomCheck;

// A verified homomorphism: preserves f as sets, g pointwise, and maps 1 to 1.
class HyperRingHom {
 public:
  const HyperRing& source() const noexcept { return source_; }
  const HyperRing& target() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }

  Element operator()(Element x) const { return map_.at(x.index); }
  SubsetMask image(SubsetMask p) const;
  SubsetMask preimage(SubsetMask q) const;
  SubsetMask kernel() const;
  bool surjective() const;

 private:
  friend HomCheck check_homomorphism(const HyperRing&, const HyperRing&,
                                     std::vector<Element>);
  HyperRingHom(HyperRing s, HyperRing t, std::vector<Element> map)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)) {}

  HyperRing source_;
  HyperRing target_;
  std::vector<Element> map_;
};

struct HomViolation {
  std::string clause;  // "f", "g" or "one"
  std::vector<Element> tuple;
  std::string detail;
};

struct HomCheck {
  std::optional<HyperRingHom> hom;
  std::optional<HomViolation> violation;
};

HomCheck check_homomorphism(const HyperRing& source, const HyperRing& target,
                            std::vector<Element> map);
HyperRingHom identity_hom(const HyperRing& ring);

// Componentwise product. Elements are ordered lexicographically by their
// component tuples and named "a|b"; the ring name joins factor names by "x".
HyperRing product_ring(std::span<const HyperRing> factors,
                       const VerifyOptions& options = {});
// The product element with the given components.
Element product_element(std::span<const HyperRing> factors,
                        std::span<const Element> components);
SubsetMask product_subset(const HyperRing& product,
                          std::span<const HyperRing> factors,
                          std::span<const SubsetMask> parts);

struct QuotientRing {
  HyperRing base;
  SubsetMask modulus;
  // Distinct cosets ordered by their least member; quotient element i is
  // cosets[i].
  std::vector<SubsetMask> cosets;
  HyperRing quotient;
  HyperRingHom projection;
};

// Cosets f(x, P, 0^(m-2)). Fails with CosetsNotPartition when two cosets
// overlap without being equal, InducedOpIllDefined when the induced tables
// depend on the representatives.
QuotientRing quotient_ring(const HyperRing& ring, SubsetMask p,
                           Mode mode = Mode::Lenient,
                           std::optional<std::string> name = std::nullopt);

enum class Direction { Image, Preimage };

// Pointwise image or preimage. The image direction requires a surjective
// hom and ker ⊆ P (HypothesisViolation otherwise).
SubsetMask transport_ideal(const HyperRingHom& hom, Direction direction,
                           SubsetMask p);

// (2,2)-hyperring with singleton f(x,y) = {x+y} from classical ring tables.
// Throws NotARing with the first failing axiom.
HyperRingSpec ring_from_ring_table(
    std::string name, const std::vector<std::vector<std::size_t>>& add,
    const std::vector<std::vector<std::size_t>>& mul, std::size_t zero,
    std::size_t one, std::vector<std::string> element_names = {});

// Z_n as a (2,2)-hyperring with elements "0".."n-1".
HyperRingSpec integers_mod(std::size_t modulus);

}  // namespace hyperideal

#endif  // HYPERIDEAL_CONSTRUCTIONS_HPP_
