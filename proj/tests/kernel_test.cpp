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

#include "hyperideal/constructions.hpp"
#include "hyperideal/tuples.hpp"
#include "support.hpp"

namespace hyperideal {
namespace {

using testing::elems;
using testing::paper;
using testing::sub;

TEST(Tuples, MultisetCountAndRank) {
  EXPECT_EQ(multiset_count(3, 3), 10U);
  EXPECT_EQ(multiset_count(2, 3), 4U);
  EXPECT_EQ(multiset_count(6, 2), 21U);
  const auto all = sorted_tuples(3, 3);
  ASSERT_EQ(all.size(), 10U);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(multiset_rank(all[i], 3), i);
  }
  EXPECT_EQ(all[4], elems({0, 1, 2}));
  EXPECT_EQ(all[9], elems({2, 2, 2}));
}

TEST(Tuples, WalkOrderAndEarlyStop) {
  std::vector<std::vector<Element>> seen;
  for_each_tuple(2, 2, [&](std::span<const Element> t) {
    seen.emplace_back(t.begin(), t.end());
  });
  ASSERT_EQ(seen.size(), 4U);
  EXPECT_EQ(seen[1], elems({0, 1}));
  EXPECT_EQ(seen[2], elems({1, 0}));

  std::size_t visits = 0;
  const bool finished = for_each_multiset(4, 3, [&](std::span<const Element>) {
    return ++visits < 5;
  });
  EXPECT_FALSE(finished);
  EXPECT_EQ(visits, 5U);
  const std::vector<std::vector<Element>> slots = {elems({0, 2}), elems({1})};
  std::vector<std::vector<Element>> choices;
  for_each_choice(std::span<const std::vector<Element>>(slots),
                  [&](std::span<const Element> t) {
                    choices.emplace_back(t.begin(), t.end());
                  });
  const std::vector<std::vector<Element>> expected = {elems({0, 1}), elems({2, 1})};
  EXPECT_EQ(choices, expected);
}

TEST(SubsetMask, SetAlgebra) {
  const HyperRing r = fixture("z6");
  const SubsetMask a = sub(r, "0,2,4");
  const SubsetMask b = sub(r, "0,3");
  EXPECT_EQ(a & b, sub(r, "0"));
  EXPECT_EQ(a | b, sub(r, "0,2,3,4"));
  EXPECT_EQ(a - b, sub(r, "2,4"));
  EXPECT_TRUE(sub(r, "0").subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.size(), 3U);
  EXPECT_EQ(a.elements(), elems({0, 2, 4}));
}

TEST(SubsetMask, RejectsMixingRings) {
  const SubsetMask a = fixture("z6").all();
  const SubsetMask b = fixture("z4").all();
  EXPECT_THROW((void)(a & b), Error);
  try {
    (void)(a | b);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RingMismatch);
  }
}

TEST(Verify, ExampleFixturePassesAllAxioms) {
  const Verification v = verify_axioms(paper_example_spec());
  ASSERT_TRUE(v.ring.has_value());
  EXPECT_TRUE(v.report.all_pass());
  EXPECT_EQ(v.report.checks.size(), std::size(kAllAxioms));
  for (const auto& c : v.report.checks) {
    EXPECT_EQ(c.status, AxiomStatus::Pass) << to_string(c.axiom);
  }
}

TEST(Verify, ExampleFixtureIsOnlyInclusionDistributive) {
  const Verification inclusion = verify_axioms(paper_example_spec());
  ASSERT_TRUE(inclusion.report.exact_distributivity_gap.has_value());
  const AxiomCheck& gap = *inclusion.report.exact_distributivity_gap;
  EXPECT_EQ(gap.witness, elems({1, 2, 0, 1, 2}));
  EXPECT_EQ(gap.position, 1U);

  VerifyOptions exact;
  exact.distributivity = Distributivity::Exact;
  const Verification v = verify_axioms(paper_example_spec(), exact);
  EXPECT_FALSE(v.ring.has_value());
  const AxiomCheck& d = v.report.at(Axiom::Distributivity);
  EXPECT_EQ(d.status, AxiomStatus::Fail);
  EXPECT_EQ(d.witness, elems({1, 2, 0, 1, 2}));
  EXPECT_EQ(d.position, 1U);
  EXPECT_EQ(v.report.at(Axiom::ZeroAbsorption).status, AxiomStatus::Pass);
}

TEST(Verify, ClassicalRingsPassExactly) {
  VerifyOptions exact;
  exact.distributivity = Distributivity::Exact;
  for (std::size_t k : {2, 3, 4, 6}) {
    const Verification v = verify_axioms(integers_mod(k), exact);
    EXPECT_TRUE(v.ring.has_value()) << k;
    EXPECT_FALSE(v.report.exact_distributivity_gap.has_value());
  }
}

TEST(Verify, ReportIsDeterministic) {
  HyperRingSpec spec = paper_example_spec();
  spec.g_table[multiset_rank(elems({0, 1, 1}), 3)] = 1;
  EXPECT_EQ(verify_axioms(spec).report, verify_axioms(spec).report);
}

TEST(Verify, MakeRingThrowsOnFailure) {
  HyperRingSpec spec = paper_example_spec();
  spec.g_table[multiset_rank(elems({1, 1, 1}), 3)] = 2;
  try {
    make_ring(spec);
    FAIL() << "expected AxiomFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AxiomFailure);
    EXPECT_NE(std::string(e.what()).find("scalar-identity"), std::string::npos);
  }
}

TEST(Evaluation, ExampleTables) {
  const HyperRing r = paper();
  EXPECT_EQ(r.f(elems({0, 1, 2})), r.all());
  EXPECT_EQ(r.f(elems({2, 0, 0})), sub(r, "2"));
  EXPECT_EQ(r.g(elems({1, 1, 2})), Element(2));
  EXPECT_EQ(r.g(elems({2, 1, 1})), Element(2));
  EXPECT_EQ(r.g(elems({1, 1, 1})), Element(1));
  const SubsetMask args[] = {sub(r, "1"), sub(r, "1,2"), sub(r, "0")};
  EXPECT_EQ(r.f(args), sub(r, "0,1,2"));
}

TEST(Evaluation, Negation) {
  const HyperRing r = paper();
  EXPECT_EQ(r.negate(Element(2)), Element(1));
  EXPECT_EQ(r.negate(Element(1)), Element(2));
  EXPECT_EQ(r.negate(Element(0)), Element(0));
  EXPECT_EQ(negate(fixture("z6"), Element(2)), Element(4));
  for (const auto& name : fixture_names()) {
    const HyperRing f = fixture(name);
    for (std::size_t x = 0; x < f.order(); ++x) {
      EXPECT_EQ(f.negate(f.negate(Element(x))), Element(x)) << name;
    }
  }
}

TEST(Evaluation, PowersPadWithOne) {
  const HyperRing r = paper();
  EXPECT_EQ(r.power(Element(2), 1), Element(2));
  EXPECT_EQ(r.power(Element(2), 2), Element(2));
  EXPECT_EQ(r.power(Element(1), 7), Element(1));
  const HyperRing z6 = fixture("z6");
  EXPECT_EQ(z6.power(Element(2), 2), Element(4));
  EXPECT_EQ(z6.power(Element(2), 3), Element(2));
  EXPECT_THROW(r.power(Element(1), 0), Error);
}

// Scalar laws and power composition on every registered ring.
TEST(Invariants, HoldOnEveryFixture) {
  for (const auto& name : fixture_names()) {
    const HyperRing r = fixture(name);
    for (std::size_t xi = 0; xi < r.order(); ++xi) {
      const Element x(xi);
      std::vector<Element> fa(r.m(), r.zero());
      fa[0] = x;
      EXPECT_EQ(r.f(fa), r.singleton(x)) << name;
      std::vector<Element> ga(r.n(), r.one());
      ga[0] = x;
      EXPECT_EQ(r.g(ga), x) << name;
    }
    for_each_tuple(r.order(), r.n() - 1, [&](std::span<const Element> ctx) {
      std::vector<Element> args{r.zero()};
      args.insert(args.end(), ctx.begin(), ctx.end());
      EXPECT_EQ(r.g(args), r.zero()) << name;
    });
    const std::size_t bound = 2 * r.n();
    for (std::size_t xi = 0; xi < r.order(); ++xi) {
      for (std::size_t a = 1; a <= bound; ++a) {
        for (std::size_t b = 1; a * b <= bound * bound && b <= bound; ++b) {
          EXPECT_EQ(r.power(Element(xi), a * b), r.power(r.power(Element(xi), a), b))
              << name << " x=" << xi << " a=" << a << " b=" << b;
        }
      }
    }
  }
}

TEST(Invariants, HyperadditionIsMonotone) {
  const HyperRing r = paper();
  const std::size_t subsets = std::size_t{1} << r.order();
  for (std::size_t a = 1; a < subsets; ++a) {
    for (std::size_t b = 1; b < subsets; ++b) {
      if ((a & b) != a) {
        continue;
      }
      for (std::size_t c = 1; c < subsets; ++c) {
        const SubsetMask other = r.mask(std::uint64_t{c});
        const SubsetMask small[] = {r.mask(std::uint64_t{a}), other, other};
        const SubsetMask large[] = {r.mask(std::uint64_t{b}), other, other};
        EXPECT_TRUE(r.f(small).subset_of(r.f(large)));
      }
    }
  }
}

struct Mutation {
  const char* label;
  bool f_entry;
  std::vector<Element> key;
  std::uint64_t f_value;
  std::uint8_t g_value;
  // Every failing axiom with the first witness and position (0 = none).
  std::vector<std::tuple<Axiom, std::vector<Element>, std::size_t>> failures;
};

std::vector<Mutation> mutations() {
  return {
      {"hypergroup: f(1,1,1) = {2}",
       true,
       elems({1, 1, 1}),
       0b100,
       0,
       {{Axiom::FAssociativity, elems({0, 0, 1, 1, 1}), 2},
        {Axiom::Reversibility, elems({1, 1, 1, 2}), 1}}},
      {"g-associativity: g(2,2,2) = 1",
       false,
       elems({2, 2, 2}),
       0,
       1,
       {{Axiom::GAssociativity, elems({1, 1, 2, 2, 2}), 2}}},
      {"distributivity: g(0,1,2) = 1",
       false,
       elems({0, 1, 2}),
       0,
       1,
       {{Axiom::GAssociativity, elems({0, 0, 0, 1, 2}), 2},
        {Axiom::Distributivity, elems({1, 2, 0, 0, 1}), 1},
        {Axiom::ZeroAbsorption, elems({0, 1, 2}), 0}}},
      {"zero absorption: g(0,1,1) = 1",
       false,
       elems({0, 1, 1}),
       0,
       1,
       {{Axiom::GAssociativity, elems({0, 0, 0, 1, 1}), 2},
        {Axiom::Distributivity, elems({1, 1, 0, 0, 2}), 1},
        {Axiom::ZeroAbsorption, elems({0, 1, 1}), 0},
        {Axiom::ScalarIdentity, elems({0}), 0}}},
      {"scalar identity: g(1,1,1) = 2",
       false,
       elems({1, 1, 1}),
       0,
       2,
       {{Axiom::ScalarIdentity, elems({1}), 0}}},
  };
}

TEST(Mutations, EachFamilyIsCaughtWithItsWitness) {
  for (const auto& mu : mutations()) {
    HyperRingSpec spec = paper_example_spec();
    const std::size_t rank = multiset_rank(mu.key, 3);
    if (mu.f_entry) {
      spec.f_table[rank] = mu.f_value;
    } else {
      spec.g_table[rank] = mu.g_value;
    }
    const Verification v = verify_axioms(spec);
    EXPECT_FALSE(v.ring.has_value()) << mu.label;
    std::size_t failing = 0;
    for (const auto& c : v.report.checks) {
      failing += c.status == AxiomStatus::Fail ? 1 : 0;
    }
    EXPECT_EQ(failing, mu.failures.size()) << mu.label;
    for (const auto& [axiom, witness, position] : mu.failures) {
      const AxiomCheck& c = v.report.at(axiom);
      EXPECT_EQ(c.status, AxiomStatus::Fail) << mu.label << " " << to_string(axiom);
      EXPECT_EQ(c.witness, witness) << mu.label << " " << to_string(axiom);
      if (position != 0) {
        EXPECT_EQ(c.position, position) << mu.label << " " << to_string(axiom);
      }
    }
  }
}

TEST(Mutations, InverseFailureSkipsReversibility) {
  HyperRingSpec spec = paper_example_spec();
  spec.f_table[multiset_rank(elems({0, 1, 1}), 3)] = 0b011;
  const Verification v = verify_axioms(spec);
  EXPECT_EQ(v.report.at(Axiom::UniqueInverses).status, AxiomStatus::Fail);
  EXPECT_EQ(v.report.at(Axiom::UniqueInverses).witness, elems({1}));
  EXPECT_EQ(v.report.at(Axiom::Reversibility).status, AxiomStatus::Skipped);
}

TEST(Mutations, NeutralElement) {
  HyperRingSpec spec = paper_example_spec();
  spec.f_table[multiset_rank(elems({0, 0, 1}), 3)] = 0b100;
  const Verification v = verify_axioms(spec);
  EXPECT_EQ(v.report.at(Axiom::NeutralElement).witness, elems({1}));
  EXPECT_EQ(v.report.at(Axiom::Reversibility).witness, elems({0, 0, 1, 2}));
}

}  // namespace
}  // namespace hyperideal
