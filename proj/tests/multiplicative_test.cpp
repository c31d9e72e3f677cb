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

#include "hyperideal/multiplicative.hpp"
#include "support.hpp"

namespace hyperideal {
namespace {

using testing::elems;
using testing::fmt;
using testing::paper;
using testing::sub;
using Names = std::vector<std::string>;

TEST(MultiplicativeSets, ExampleEnumeration) {
  const HyperRing r = paper();
  EXPECT_EQ(fmt(r, enumerate_multiplicative_sets(r)),
            (Names{"{0}", "{1}", "{0,1}", "{2}", "{0,2}", "{1,2}", "{0,1,2}"}));
}

TEST(MultiplicativeSets, RejectsNonClosedSets) {
  const HyperRing z6 = fixture("z6");
  const Verdict v = is_multiplicative_set(z6, sub(z6, "2,3"));
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->reason, "product-outside");
  try {
    MulSet::make(z6, sub(z6, "5"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMultiplicative);
  }
  EXPECT_TRUE(MulSet::make(z6, sub(z6, "1,5")).contains_one);
}

TEST(SHyperideals, ExampleFailureReasonIsReproduced) {
  const HyperRing r = paper();
  const SClassification c = is_s_hyperideal(r, sub(r, "0,2"), sub(r, "2"));
  EXPECT_EQ(c.verdict, SVerdict::Neither);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->tuple, elems({1, 1, 2}));
  EXPECT_EQ(c.witness->position, 3U);
  EXPECT_EQ(c.witness->product, Element(2));
  EXPECT_EQ(c.witness->substituted, Element(1));
  ASSERT_TRUE(c.sr_witness.has_value());
  EXPECT_EQ(to_string(c.verdict), "neither");
}

TEST(SHyperideals, AllWitnessesAreListedInScanOrder) {
  const IdealLattice l(paper(), Mode::Lenient);
  const HyperRing& r = l.ring();
  ClassifyOptions opts;
  opts.all_witnesses = true;
  const SClassification c = is_s_hyperideal(l, sub(r, "0,2"), sub(r, "2"), opts);
  ASSERT_EQ(c.all_witnesses.size(), 3U);
  EXPECT_EQ(c.all_witnesses[0].tuple, elems({1, 1, 2}));
  EXPECT_EQ(c.all_witnesses[1].tuple, elems({1, 2, 1}));
  EXPECT_EQ(c.all_witnesses[1].position, 2U);
  EXPECT_EQ(c.all_witnesses[2].tuple, elems({2, 1, 1}));
  EXPECT_EQ(c.all_witnesses[2].position, 1U);
}

TEST(SHyperideals, ThreeWayVerdictInZ12) {
  const IdealLattice l(fixture("z12"), Mode::Lenient);
  const HyperRing& r = l.ring();
  // (4) with S = {1,3,9}: an odd factor never carries a power of 2.
  EXPECT_EQ(is_s_hyperideal(l, sub(r, "0,4,8"), sub(r, "1,3,9")).verdict,
            SVerdict::SHyperideal);
  // (0) with S = {1,4}: 4 * 3 = 0 but 3 is not 0; 3 is not in r(0) = {0,6}.
  EXPECT_EQ(is_s_hyperideal(l, sub(r, "0"), sub(r, "1,4")).verdict, SVerdict::Neither);
  // (0) with S = {0}: the S_r scan substitutes 1 for 0 and needs the
  // cofactor in {0,6}: 0 * 6 = 0 gives 6, inside r(0); 0 * 1 gives 1, outside.
  EXPECT_EQ(is_s_hyperideal(l, sub(r, "0"), sub(r, "0")).verdict, SVerdict::Neither);
}

TEST(SHyperideals, VerdictMatchesBothScans) {
  for (const auto& name : fixture_names()) {
    const IdealLattice l(fixture(name), Mode::Lenient);
    for (auto p : l.proper()) {
      for (auto s : enumerate_multiplicative_sets(l.ring())) {
        const SClassification c = is_s_hyperideal(l, p, s);
        const bool s_ok = s_condition(l.ring(), p, s, p);
        const bool sr_ok = s_condition(l.ring(), p, s, l.radical(p));
        const SVerdict expected = s_ok    ? SVerdict::SHyperideal
                                  : sr_ok ? SVerdict::SrOnly
                                          : SVerdict::Neither;
        EXPECT_EQ(c.verdict, expected) << name;
        const SClassification sr = is_sr_hyperideal(l, p, s);
        EXPECT_EQ(sr.verdict == SVerdict::Neither, !sr_ok) << name;
      }
    }
  }
}

TEST(Residuals, FrozenValues) {
  const HyperRing r = paper();
  EXPECT_EQ(residual(r, sub(r, "0"), sub(r, "2")), sub(r, "0"));
  EXPECT_EQ(residual(r, sub(r, "0,2"), sub(r, "2")), r.all());
  const HyperRing z6 = fixture("z6");
  EXPECT_EQ(residual(z6, sub(z6, "0"), sub(z6, "3")), sub(z6, "0,2,4"));
  EXPECT_EQ(residual(z6, sub(z6, "0"), sub(z6, "2,3")), sub(z6, "0"));
}

TEST(Saturation, FrozenValues) {
  const HyperRing r = paper();
  const Saturation s = saturation(r, sub(r, "0"), sub(r, "1,2"));
  EXPECT_EQ(s.set, sub(r, "0"));
  EXPECT_TRUE(s.proper);
  EXPECT_TRUE(s.hypothesis_one_in_s);
  const HyperRing z6 = fixture("z6");
  const Saturation z = saturation(z6, sub(z6, "0"), sub(z6, "1,3"));
  EXPECT_EQ(z.set, sub(z6, "0,2,4"));
  const Saturation whole = saturation(z6, sub(z6, "0"), sub(z6, "0"));
  EXPECT_FALSE(whole.proper);
  EXPECT_FALSE(whole.hypothesis_one_in_s);
}

TEST(Saturation, CheckedFormValidatesInputs) {
  const HyperRing z6 = fixture("z6");
  try {
    saturation(z6, sub(z6, "0,1"), sub(z6, "1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHyperideal);
  }
  try {
    saturation(z6, sub(z6, "0"), sub(z6, "2,3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMultiplicative);
  }
}

TEST(MaximalMs, FrozenValues) {
  const IdealLattice l(paper(), Mode::Lenient);
  const HyperRing& r = l.ring();
  EXPECT_EQ(maximal_ms_for(l, sub(r, "0")).subset, sub(r, "1,2"));
  const IdealLattice z(fixture("z6"), Mode::Lenient);
  EXPECT_EQ(maximal_ms_for(z, sub(z.ring(), "0,3")).subset, sub(z.ring(), "1,2,4,5"));
}

TEST(SHyperideals, ListsAndMaximalMembers) {
  const IdealLattice l(fixture("z6"), Mode::Lenient);
  const HyperRing& r = l.ring();
  EXPECT_EQ(fmt(r, s_hyperideals(l, sub(r, "1,5"))),
            (Names{"{0}", "{0,3}", "{0,2,4}"}));
  EXPECT_EQ(fmt(r, s_hyperideals(l, sub(r, "1,3"))), (Names{"{0,2,4}"}));
  EXPECT_EQ(fmt(r, s_maximal_hyperideals(l, sub(r, "1,5"))),
            (Names{"{0,3}", "{0,2,4}"}));
}

TEST(Decomposition, Z6ZeroIdeal) {
  const IdealLattice l(fixture("z6"), Mode::Lenient);
  const HyperRing& r = l.ring();
  const auto comps = primary_decomposition(l, sub(r, "0"), l.min_primes());
  EXPECT_EQ(fmt(r, comps), (Names{"{0,3}", "{0,2,4}"}));
  try {
    primary_decomposition(l, sub(r, "0,1"), l.min_primes());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAHyperideal);
  }
  try {
    primary_decomposition(l, sub(r, "0"), {sub(r, "0")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolation);
    EXPECT_NE(std::string(e.what()).find("{0}"), std::string::npos);
  }
}

}  // namespace
}  // namespace hyperideal
