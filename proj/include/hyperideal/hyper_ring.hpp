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

#ifndef HYPERIDEAL_HYPER_RING_HPP_
#define HYPERIDEAL_HYPER_RING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperideal/subset_mask.hpp"

namespace hyperideal {

// Raw description of a finite commutative Krasner (m,n)-hyperring. Tables are
// keyed by sorted multisets: f_table[multiset_rank(t)] is the bit mask of
// f(t) for every non-decreasing m-tuple t, g_table likewise for n-tuples.
struct HyperRingSpec {
  std::string name;
  std::size_t m = 2;
  std::size_t n = 2;
  std::vector<std::string> elements;
  std::size_t zero = 0;
  std::size_t one = 1;
  std::vector<std::uint64_t> f_table;
  std::vector<std::uint8_t> g_table;

  std::size_t order() const noexcept { return elements.size(); }

  // Structural checks only (sizes, ranges, non-empty values, zero != one).
  void validate_shape() const;

  bool operator==(const HyperRingSpec&) const = default;
};

enum class Axiom {
  FAssociativity,
  NeutralElement,
  UniqueInverses,
  Reversibility,
  GAssociativity,
  Distributivity,
  ZeroAbsorption,
  GCommutativity,
  ScalarIdentity,
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::FAssociativity, Axiom::NeutralElement, Axiom::UniqueInverses,
    Axiom::Reversibility,  Axiom::GAssociativity, Axiom::Distributivity,
    Axiom::ZeroAbsorption, Axiom::GCommutativity, Axiom::ScalarIdentity,
};

std::string_view to_string(Axiom a) noexcept;

enum class AxiomStatus { Pass, Fail, Skipped };

struct AxiomCheck {
  Axiom axiom;
  AxiomStatus status = AxiomStatus::Pass;
  // First failing tuple in lexicographic order; empty on pass.
  std::vector<Element> witness;
  // 1-based argument position involved in the failure, when meaningful.
  std::optional<std::size_t> position;
  std::string detail;

  bool operator==(const AxiomCheck&) const = default;
};

// How clause (iii) is compared. Inclusion accepts
//   f(g(.., q_1, ..), ..., g(.., q_m, ..)) ⊆ g(.., f(q_1..q_m), ..)
// which the three-element (3,3) example satisfies; Exact demands equality.
enum class Distributivity { Inclusion, Exact };

struct VerifyOptions {
  Distributivity distributivity = Distributivity::Inclusion;
};

struct AxiomReport {
  Distributivity distributivity = Distributivity::Inclusion;
  std::vector<AxiomCheck> checks;
  // Set when distributivity was accepted as an inclusion but fails as an
  // equality; carries the first such tuple for information.
  std::optional<AxiomCheck> exact_distributivity_gap;

  bool all_pass() const noexcept;
  const AxiomCheck& at(Axiom a) const;
  bool operator==(const AxiomReport&) const = default;
};

class HyperRing;
struct Verification;

// An axiom-verified hyperring. Immutable; copies share the tables.
class HyperRing {
 public:
  const HyperRingSpec& spec() const noexcept;
  const AxiomReport& axiom_report() const noexcept;
  std::uint32_t id() const noexcept;

  std::size_t order() const noexcept;
  std::size_t m() const noexcept;
  std::size_t n() const noexcept;
  const std::string& name() const noexcept;
  const std::string& element_name(Element e) const;
  std::optional<Element> find(std::string_view name) const;

  Element zero() const noexcept;
  Element one() const noexcept;

  SubsetMask empty_set() const noexcept { return {0, id()}; }
  SubsetMask all() const noexcept;
  SubsetMask singleton(Element e) const noexcept {
    return {std::uint64_t{1} << e.index, id()};
  }
  SubsetMask mask(std::uint64_t bits) const noexcept { return {bits, id()}; }
  SubsetMask mask(std::span<const Element> members) const;

  // f on m elements; throws ArityMismatch on a wrong argument count.
  SubsetMask f(std::span<const Element> args) const;
  // f extended to m subsets: union over every choice tuple.
  SubsetMask f(std::span<const SubsetMask> args) const;
  // g on n elements.
  Element g(std::span<const Element> args) const;
  // Set of all outcomes of g over choice tuples from n subsets.
  SubsetMask g(std::span<const SubsetMask> args) const;

  // g(a, b, 1^(n-2)).
  Element mul(Element a, Element b) const noexcept {
    return Element(mul_[a.index * order() + b.index]);
  }
  // The unique y with 0 ∈ f(x, y, 0^(m-2)).
  Element negate(Element x) const noexcept { return Element(neg_[x.index]); }
  // g(p^(w), 1^(n-w)) for w <= n; beyond that the iterated g over the
  // padded length l(n-1)+1 >= w.
  Element power(Element p, std::size_t w) const;

  // Unchecked table access for inner loops. Arguments in any order.
  std::uint64_t f_bits(const Element* args) const noexcept;
  Element g_raw(const Element* args) const noexcept;

 private:
  friend Verification verify_axioms(const HyperRingSpec&, const VerifyOptions&);

  struct Impl;
  explicit HyperRing(std::shared_ptr<const Impl> impl);

  std::shared_ptr<const Impl> impl_;
  // Cached hot tables (owned by impl_).
  const std::uint8_t* mul_ = nullptr;
  const std::uint8_t* neg_ = nullptr;
};

struct Verification {
  AxiomReport report;
  std::optional<HyperRing> ring;
};

// Exhaustively checks every axiom; the ring is present iff all pass.
Verification verify_axioms(const HyperRingSpec& spec,
                           const VerifyOptions& options = {});

// verify_axioms that throws AxiomFailure naming the first failing axiom.
HyperRing make_ring(const HyperRingSpec& spec, const VerifyOptions& options = {});

// Free-function forms of the evaluation operations.
inline SubsetMask eval_f(const HyperRing& r, std::span<const Element> a) {
  return r.f(a);
}
inline SubsetMask eval_f(const HyperRing& r, std::span<const SubsetMask> a) {
  return r.f(a);
}
inline Element eval_g(const HyperRing& r, std::span<const Element> a) {
  return r.g(a);
}
inline SubsetMask eval_g(const HyperRing& r, std::span<const SubsetMask> a) {
  return r.g(a);
}
inline Element negate(const HyperRing& r, Element x) { return r.negate(x); }
inline Element power(const HyperRing& r, Element p, std::size_t w) {
  return r.power(p, w);
}

// Orders above which exhaustive axiom checking gets slow (warned, not refused).
bool verification_is_slow(const HyperRingSpec& spec) noexcept;

}  // namespace hyperideal

#endif  // HYPERIDEAL_HYPER_RING_HPP_
