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

#include <gtest/gtest.h>

#include <set>

#include "hyperideal/constructions.hpp"
#include "hyperideal/multiplicative.hpp"
#include "support.hpp"

namespace hyperideal {
namespace {

std::vector<HyperRing> default_rings() {
  std::vector<HyperRing> rings;
  for (const auto& name : default_suite_fixtures()) {
    rings.push_back(fixture(name));
  }
  return rings;
}

const TheoremReport& find(const SuiteResult& r, TheoremId id, const std::string& ring) {
  for (const auto& rep : r.reports) {
    if (rep.id == id && rep.ring == ring) {
      return rep;
    }
  }
  throw std::runtime_error("no report");
}

TEST(Catalog, IdsRoundTrip) {
  std::set<std::string> seen;
  for (auto id : kAllTheorems) {
    const std::string name(to_string(id));
    EXPECT_TRUE(seen.insert(name).second) << name;
    EXPECT_EQ(parse_theorem(name), id);
    EXPECT_FALSE(statement(id).empty());
  }
  EXPECT_EQ(seen.size(), 22U);
  EXPECT_EQ(to_string(TheoremId::TPrimaryEq), "TPRIMARY-EQ");
  EXPECT_EQ(to_string(TheoremId::T1_1), "T1.1");
  try {
    parse_theorem("T99");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownTheorem);
  }
}

TEST(Fixtures, RegistryAndErrors) {
  EXPECT_EQ(fixture_names().size(), 9U);
  EXPECT_EQ(default_suite_fixtures().size(), 8U);
  EXPECT_EQ(fixture("z2xz3").order(), 6U);
  EXPECT_EQ(fixture("paper-example").id(), fixture("paper-example").id());
  try {
    fixture("z7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
}

TEST(Suite, LenientOutcome) {
  const SuiteResult r = run_suite(default_rings());
  EXPECT_EQ(r.reports.size(), 22U * 8U);
  EXPECT_EQ(r.status, SuiteStatus::Counterexample);
  EXPECT_EQ(r.never_exercised, std::vector<TheoremId>{TheoremId::TAvoid});
  for (const auto& rep : r.reports) {
    const bool expected_failure = rep.id == TheoremId::T10 && rep.ring == "paper-example";
    EXPECT_EQ(rep.status == TheoremStatus::Counterexample, expected_failure)
        << to_string(rep.id) << " on " << rep.ring;
  }
  const TheoremReport& t10 = find(r, TheoremId::T10, "paper-example");
  ASSERT_EQ(t10.counterexamples.size(), 1U);
  const auto& cx = t10.counterexamples[0];
  EXPECT_EQ(cx["clause"], "ideals-over-Q");
  EXPECT_EQ(cx["Q"], "{0,2}");
  EXPECT_EQ(cx["S"], "{0,1,2}");
  EXPECT_EQ(cx["P"], "{0,2}");
  EXPECT_EQ(cx["tuple"], "(0,1,1)");
  EXPECT_EQ(cx["position"], 1);
}

TEST(Suite, StrictOutcome) {
  CheckOptions opts;
  opts.mode = Mode::Strict;
  const SuiteResult r = run_suite(default_rings(), opts);
  for (const auto& rep : r.reports) {
    const bool expected_failure = rep.id == TheoremId::P8 && rep.ring == "paper-example";
    EXPECT_EQ(rep.status == TheoremStatus::Counterexample, expected_failure)
        << to_string(rep.id) << " on " << rep.ring;
  }
  const auto& cx = find(r, TheoremId::P8, "paper-example").counterexamples.at(0);
  EXPECT_EQ(cx["S"], "{1,2}");
  EXPECT_EQ(cx["units"], "{1}");
  EXPECT_EQ(cx["every_proper_ideal_is_s_hyperideal"], true);
}

TEST(Suite, ReportsAreDeterministicAndJobIndependent) {
  const auto rings = default_rings();
  const std::string a = suite_json(run_suite(rings));
  const std::string b = suite_json(run_suite(rings));
  const std::string c = suite_json(run_suite(rings, {}, {}, 4));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a.find("runtime_ms"), std::string::npos);
  EXPECT_NE(suite_json(run_suite(rings, {}, {TheoremId::T5}), true).find("runtime_ms"),
            std::string::npos);
}

TEST(Suite, FilterKeepsCatalogOrder) {
  const std::vector<TheoremId> filter = {TheoremId::FwSr, TheoremId::T1_1};
  const SuiteResult r = run_suite({fixture("z6"), fixture("z4")}, {}, filter);
  ASSERT_EQ(r.reports.size(), 4U);
  EXPECT_EQ(r.reports[0].id, TheoremId::T1_1);
  EXPECT_EQ(r.reports[0].ring, "z6");
  EXPECT_EQ(r.reports[1].ring, "z4");
  EXPECT_EQ(r.reports[3].id, TheoremId::FwSr);
  EXPECT_EQ(r.status, SuiteStatus::Pass);
}

// Every (proper hyperideal, MS) pair is one instance of the equivalence check.
TEST(Checks, TriEquivalenceCoversAllPairs) {
  for (const auto& name : fixture_names()) {
    const HyperRing ring = fixture(name);
    const IdealLattice l(ring, Mode::Lenient);
    const TheoremReport rep = check_theorem(ring, TheoremId::T5);
    EXPECT_EQ(rep.instances_checked,
              l.proper().size() * enumerate_multiplicative_sets(ring).size())
        << name;
    EXPECT_EQ(rep.status, TheoremStatus::Holds) << name;
  }
}

TEST(Checks, AvoidanceBudgetTruncates) {
  CheckOptions opts;
  opts.avoid_budget = 3;
  const TheoremReport rep = check_theorem(fixture("z12"), TheoremId::TAvoid, opts);
  EXPECT_TRUE(rep.truncated);
  EXPECT_FALSE(rep.notes.empty());
}

TEST(Checks, RadicalNoteWhenWholeRing) {
  // z2-as-33 has only {0} proper, so r({0}) is proper; T1.2 is met there.
  const TheoremReport rep = check_theorem(fixture("z2-as-33"), TheoremId::T1_2);
  EXPECT_EQ(rep.status, TheoremStatus::Holds);
}

TEST(Checks, ProductCheckUsesGivenPartners) {
  CheckOptions opts;
  opts.product_partners = {fixture("z2"), fixture("z4")};
  const TheoremReport rep = check_theorem(fixture("z2"), TheoremId::TProd, opts);
  EXPECT_EQ(rep.status, TheoremStatus::Holds);
  EXPECT_GT(rep.hypothesis_met, 0U);
}

TEST(Checks, OrderLimitIsEnforced) {
  const HyperRing z17 = make_ring(integers_mod(17));
  try {
    run_suite({z17});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderLimitExceeded);
  }
}

TEST(Checks, TextReportSummarisesGaps) {
  const SuiteResult r = run_suite({fixture("z2")}, {}, {TheoremId::TAvoid});
  const std::string text = suite_text(r);
  EXPECT_NE(text.find("hypothesis-never-met"), std::string::npos);
  EXPECT_NE(text.find("suite: hypothesis-gap; hypothesis never met on any ring: TAVOID"),
            std::string::npos);
}

}  // namespace
}  // namespace hyperideal
