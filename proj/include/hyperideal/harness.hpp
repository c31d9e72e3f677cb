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

#ifndef HYPERIDEAL_HARNESS_HPP_
#define HYPERIDEAL_HARNESS_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hyperideal/ideals.hpp"
#include "json.hpp"

namespace hyperideal {

enum class TheoremId {
  T1_1,
  T1_2,
  T1_3,
  P2,
  T7,
  T6,
  T3,
  T4,
  T5,
  TPrimaryEq,
  TDecomp,
  PInt,
  P8,
  T9Fwd,
  T10,
  T12,
  TAvoid,
  THomPre,
  THomImg,
  TQuot,
  TProd,
  FwSr,
};

inline constexpr std::array<TheoremId, 22> kAllTheorems = {
    TheoremId::T1_1,   TheoremId::T1_2,    TheoremId::T1_3,       TheoremId::P2,
    TheoremId::T7,     TheoremId::T6,      TheoremId::T3,         TheoremId::T4,
    TheoremId::T5,     TheoremId::TPrimaryEq, TheoremId::TDecomp, TheoremId::PInt,
    TheoremId::P8,     TheoremId::T9Fwd,   TheoremId::T10,        TheoremId::T12,
    TheoremId::TAvoid, TheoremId::THomPre, TheoremId::THomImg,    TheoremId::TQuot,
    TheoremId::TProd,  TheoremId::FwSr,
};

// Catalog identifier, e.g. "T1.1", "TPRIMARY-EQ".
std::string_view to_string(TheoremId id) noexcept;
// Throws UnknownTheorem.
TheoremId parse_theorem(std::string_view text);
// One-line statement of the checked property.
std::string_view statement(TheoremId id) noexcept;

enum class TheoremStatus { Holds, Counterexample, HypothesisNeverMet };
std::string_view to_string(TheoremStatus s) noexcept;

struct TheoremReport {
  TheoremId id = TheoremId::T1_1;
  std::string ring;
  Mode mode = Mode::Lenient;
  TheoremStatus status = TheoremStatus::HypothesisNeverMet;
  std::size_t instances_checked = 0;
  std::size_t hypothesis_met = 0;
  std::size_t counterexample_count = 0;
  // The first few counterexamples, as structured witnesses.
  std::vector<nlohmann::ordered_json> counterexamples;
  // Hypothesis bookkeeping worth surfacing (vacuous cases, anomalies).
  std::vector<std::string> notes;
  bool truncated = false;
  double runtime_ms = 0;
};

// runtime_ms is included only when `timings` is set, keeping the default
// serialization byte-identical across runs.
nlohmann::ordered_json to_json(const TheoremReport& report, bool timings = false);

struct CheckOptions {
  Mode mode = Mode::Lenient;
  // Candidate configurations examined by the avoidance check per ring.
  std::size_t avoid_budget = 1'000'000;
  std::size_t max_counterexamples = 8;
  // Second factors for the product check. Empty means: every registered
  // fixture of order <= 4 with the same arities.
  std::vector<HyperRing> product_partners;
};

// Throws OrderLimitExceeded above the enumeration limit.
TheoremReport check_theorem(const HyperRing& ring, TheoremId id,
                            const CheckOptions& options = {});

enum class SuiteStatus { Pass, HypothesisGap, Counterexample };
std::string_view to_string(SuiteStatus s) noexcept;

struct SuiteResult {
  // Catalog order, then ring order.
  std::vector<TheoremReport> reports;
  SuiteStatus status = SuiteStatus::Pass;
  // Ids whose hypothesis was met on no ring.
  std::vector<TheoremId> never_exercised;
};

// An empty filter runs the whole catalog. jobs > 1 spreads rings across
// threads; the result does not depend on it.
SuiteResult run_suite(const std::vector<HyperRing>& rings,
                      const CheckOptions& options = {},
                      const std::vector<TheoremId>& filter = {},
                      unsigned jobs = 1);

std::string suite_json(const SuiteResult& result, bool timings = false);
std::string suite_text(const SuiteResult& result, bool timings = false);

// Registered rings: paper-example, z2, z4, z6, z8, z12, z2xz3, z6-mod-3,
// z2-as-33. Built once and cached; throws UnknownFixture.
const std::vector<std::string>& fixture_names();
HyperRing fixture(std::string_view name);
// The rings of the default theorem suite.
std::vector<std::string> default_suite_fixtures();
// The three-element (3,3)-hyperring of the paper-example fixture.
HyperRingSpec paper_example_spec();

}  // namespace hyperideal

#endif  // HYPERIDEAL_HARNESS_HPP_
