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

#ifndef HYPERIDEAL_IDEALS_HPP_
#define HYPERIDEAL_IDEALS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperideal/horn.hpp"
#include "hyperideal/hyper_ring.hpp"

namespace hyperideal {

// Lenient: 0 ∈ P, f-closure, g-absorption. Strict additionally requires
// closure under negation (P an m-ary subhypergroup in the canonical sense).
enum class Mode { Lenient, Strict };

std::string_view to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(std::string_view text) noexcept;

// Enumeration refuses rings above this order. Default 16; the environment
// variable HYPERIDEAL_ORDER_LIMIT overrides it (capped at 64).
std::size_t order_limit();
void require_order_within_limit(const HyperRing& ring, std::string_view what);

struct Witness {
  std::string reason;
  std::vector<Element> tuple;
  std::optional<std::size_t> position;  // 1-based
  std::optional<SubsetMask> subset;

  bool operator==(const Witness&) const = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
  bool operator==(const Verdict&) const = default;
};

Verdict is_hyperideal(const HyperRing& ring, SubsetMask p, Mode mode);

// Horn theory whose closed sets are exactly the hyperideals in `mode`.
HornTheory hyperideal_theory(const HyperRing& ring, Mode mode);

// Least hyperideal containing {g(r, x, 1^(n-2)) : r ∈ A, x ∈ X}.
SubsetMask generated_hyperideal(const HyperRing& ring, SubsetMask x,
                                Mode mode = Mode::Lenient);

// Every hyperideal, ascending by mask; the whole ring is the last entry.
std::vector<SubsetMask> enumerate_hyperideals(const HyperRing& ring, Mode mode);

// Elementwise criterion; the caller guarantees p is a proper hyperideal.
Verdict prime_condition(const HyperRing& ring, SubsetMask p);

// The ideal lattice of one ring in one mode, with the derived lists every
// classification needs. Immutable once built.
class IdealLattice {
 public:
  IdealLattice(const HyperRing& ring, Mode mode);

  const HyperRing& ring() const noexcept { return ring_; }
  Mode mode() const noexcept { return mode_; }
  const std::vector<SubsetMask>& ideals() const noexcept { return ideals_; }
  const std::vector<SubsetMask>& proper() const noexcept { return proper_; }
  const std::vector<SubsetMask>& primes() const noexcept { return primes_; }
  const std::vector<SubsetMask>& maximal() const noexcept { return maximal_; }
  const std::vector<SubsetMask>& min_primes() const noexcept {
    return min_primes_;
  }

  bool is_ideal(SubsetMask p) const;
  bool is_prime(SubsetMask p) const;
  // Intersection of the primes containing p; the whole ring when none does.
  SubsetMask radical(SubsetMask p) const;

 private:
  HyperRing ring_;
  Mode mode_;
  std::vector<SubsetMask> ideals_, proper_, primes_, maximal_, min_primes_;
};

struct IdealProfile {
  SubsetMask subset;
  Mode mode = Mode::Lenient;
  Verdict is_hyperideal;
  bool proper = false;
  Verdict is_prime;
  Verdict is_primary;
  Verdict is_semiprime;
  Verdict is_maximal;
  SubsetMask radical;
};

// Throws NotAHyperideal / ImproperIdeal when p is not a proper hyperideal.
IdealProfile classify_ideal(const IdealLattice& lattice, SubsetMask p);
IdealProfile classify_ideal(const HyperRing& ring, SubsetMask p,
                            Mode mode = Mode::Lenient);

// For every i: p_i ∈ P or g(p with 1 at i) ∈ r(P).
Verdict primary_condition(const HyperRing& ring, SubsetMask p,
                          SubsetMask radical);
Verdict semiprime_condition(const HyperRing& ring, SubsetMask p);

SubsetMask radical(const HyperRing& ring, SubsetMask p,
                   Mode mode = Mode::Lenient);

struct PowerDiagnostic {
  bool in_radical = false;
  // Smallest w with power(p, w) ∈ P, if any within the search.
  std::optional<std::size_t> exponent;
  std::size_t searched_up_to = 0;
  // p ∈ r(P) but no power reached P.
  bool anomaly = false;
};

PowerDiagnostic radical_power_diagnostic(const IdealLattice& lattice,
                                         SubsetMask p, Element x);

struct SpecialSets {
  SubsetMask units;
  SubsetMask regulars;
  SubsetMask jacobson;
  std::vector<SubsetMask> min_primes;
};

SpecialSets special_sets(const IdealLattice& lattice);
SpecialSets special_sets(const HyperRing& ring, Mode mode = Mode::Lenient);

std::vector<SubsetMask> minimal_primes_over(const IdealLattice& lattice,
                                            SubsetMask p);

}  // namespace hyperideal

#endif  // HYPERIDEAL_IDEALS_HPP_
