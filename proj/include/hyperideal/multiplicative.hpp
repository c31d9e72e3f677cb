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

#ifndef HYPERIDEAL_MULTIPLICATIVE_HPP_
#define HYPERIDEAL_MULTIPLICATIVE_HPP_

#include <optional>
#include <vector>

#include "hyperideal/ideals.hpp"

namespace hyperideal {

// Nonempty subset closed under g.
Verdict is_multiplicative_set(const HyperRing& ring, SubsetMask s);

struct MulSet {
  SubsetMask subset;
  bool contains_one = false;

  // Throws NotMultiplicative with the failing tuple.
  static MulSet make(const HyperRing& ring, SubsetMask s);
};

// Horn theory whose nonempty closed sets are the multiplicative sets.
HornTheory multiplicative_theory(const HyperRing& ring);
std::vector<SubsetMask> enumerate_multiplicative_sets(const HyperRing& ring);

enum class SVerdict { SHyperideal, SrOnly, Neither };
std::string_view to_string(SVerdict v) noexcept;

// g(tuple) ∈ P with tuple[position-1] ∈ S, and the unit-substituted product.
struct SWitness {
  std::vector<Element> tuple;
  std::size_t position = 0;  // 1-based
  Element product;
  Element substituted;

  bool operator==(const SWitness&) const = default;
};

struct SClassification {
  SVerdict verdict = SVerdict::SHyperideal;
  // First failure of the S-condition (present unless SHyperideal).
  std::optional<SWitness> witness;
  // First failure of the S_r-condition (present iff Neither).
  std::optional<SWitness> sr_witness;
  Mode mode = Mode::Lenient;
  // Every S-condition failure, when requested.
  std::vector<SWitness> all_witnesses;
};

struct ClassifyOptions {
  bool all_witnesses = false;
};

// Literal scan over all n-tuples and positions: whenever g(p) ∈ P and
// p_i ∈ S, require g(p with 1 at i) ∈ target. Returns the first failure in
// lexicographic tuple-then-position order. No precondition checks.
std::optional<SWitness> s_condition_witness(const HyperRing& ring, SubsetMask p,
                                            SubsetMask s, SubsetMask target);
bool s_condition(const HyperRing& ring, SubsetMask p, SubsetMask s,
                 SubsetMask target);

// Three-way verdict. Preconditions: P a proper hyperideal in `mode`, S an MS.
SClassification is_s_hyperideal(const IdealLattice& lattice, SubsetMask p,
                                SubsetMask s, const ClassifyOptions& opts = {});
SClassification is_s_hyperideal(const HyperRing& ring, SubsetMask p, SubsetMask s,
                                Mode mode = Mode::Lenient);
// Same scan against r(P); the verdict is SHyperideal or SrOnly when the
// S_r-condition holds and Neither otherwise.
SClassification is_sr_hyperideal(const IdealLattice& lattice, SubsetMask p,
                                 SubsetMask s);

// {a : g(a, x, 1^(n-2)) ∈ P for every x ∈ X}.
SubsetMask residual(const HyperRing& ring, SubsetMask p, SubsetMask x);

struct Saturation {
  SubsetMask set;
  bool proper = false;
  // The minimality guarantee needs 1 ∈ S; false means it was not asserted.
  bool hypothesis_one_in_s = false;
};

// {x : g(t, x, 1^(n-2)) ∈ Q for some t ∈ S}, no precondition checks.
SubsetMask saturate(const HyperRing& ring, SubsetMask q, SubsetMask s);
// Checked form: Q must be a hyperideal in `mode` and S an MS.
Saturation saturation(const HyperRing& ring, SubsetMask q, SubsetMask s,
                      Mode mode = Mode::Lenient);

// {x : for every context, g(.., x, ..) ∈ P implies g(.., 1, ..) ∈ P}.
// Unchecked; the checked form verifies the result is an MS.
SubsetMask maximal_ms_scan(const HyperRing& ring, SubsetMask p);
MulSet maximal_ms_for(const IdealLattice& lattice, SubsetMask p);

std::vector<SubsetMask> s_hyperideals(const IdealLattice& lattice, SubsetMask s);
std::vector<SubsetMask> s_maximal_hyperideals(const IdealLattice& lattice,
                                              SubsetMask s);

// Components saturation(P, A \ Q_j) for the given minimal primes Q_j.
// Throws HypothesisViolation naming the precondition that fails.
std::vector<SubsetMask> primary_decomposition(const IdealLattice& lattice,
                                              SubsetMask p,
                                              const std::vector<SubsetMask>& primes);

}  // namespace hyperideal

#endif  // HYPERIDEAL_MULTIPLICATIVE_HPP_
