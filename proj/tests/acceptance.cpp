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

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hyperideal/cli.hpp"
#include "hyperideal/constructions.hpp"
#include "hyperideal/document.hpp"
#include "hyperideal/harness.hpp"
#include "hyperideal/multiplicative.hpp"
#include "hyperideal/tuples.hpp"

namespace hyperideal {
namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<HyperRing> all_fixtures() {
  std::vector<HyperRing> rings;
  for (const auto& name : fixture_names()) {
    rings.push_back(fixture(name));
  }
  return rings;
}

std::pair<int, std::string> run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperideal");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

Outcome paper_example() {
  const std::string doc = std::string(HYPERIDEAL_SOURCE_DIR) + "/data/paper-example.json";
  const auto verify = run_cli({"verify", doc});
  if (verify.first != 0 || verify.second.rfind("all axioms hold\n", 0) != 0) {
    return {false, "verify: " + verify.second};
  }
  const auto classify =
      run_cli({"classify", doc, "--ideal", "0,2", "--s", "2", "--mode", "lenient"});
  const std::string expected =
      "not an S-hyperideal; witness (1,1,2) at position 3\n"
      "  g(1,1,2) = 2 is in P; g(1,1,1) = 1 is not in P\n";
  if (classify.first != 0 || classify.second.rfind(expected, 0) != 0) {
    return {false, "classify: " + classify.second};
  }
  return {true, "witness (1,1,2) at position 3"};
}

Outcome full_suite() {
  std::vector<HyperRing> rings;
  for (const auto& name : default_suite_fixtures()) {
    rings.push_back(fixture(name));
  }
  const SuiteResult r = run_suite(rings);
  std::size_t counterexamples = 0;
  std::string failing;
  for (const auto& rep : r.reports) {
    if (rep.status == TheoremStatus::Counterexample) {
      ++counterexamples;
      failing += " " + std::string(to_string(rep.id)) + "@" + rep.ring;
    }
  }
  std::string never;
  for (auto id : r.never_exercised) {
    never += " " + std::string(to_string(id));
  }
  const bool pass = counterexamples == 0 && r.never_exercised.empty();
  std::string detail = std::to_string(r.reports.size()) + " reports; counterexamples: " +
                       std::to_string(counterexamples);
  if (!failing.empty()) {
    detail += " (" + failing.substr(1) + ")";
  }
  if (!never.empty()) {
    detail += "; hypothesis never met:" + never;
  }
  return {pass, detail};
}

Outcome tri_equivalence() {
  std::size_t pairs = 0;
  std::size_t disagreements = 0;
  for (const auto& ring : all_fixtures()) {
    const IdealLattice lattice(ring, Mode::Lenient);
    const auto mss = enumerate_multiplicative_sets(ring);
    for (auto p : lattice.proper()) {
      for (auto s : mss) {
        ++pairs;
        const bool direct = s_condition(ring, p, s, p);
        bool residuals = true;
        for (auto t : s.elements()) {
          residuals = residuals && residual(ring, p, ring.singleton(t)) == p;
        }
        const bool saturated = saturate(ring, p, s) == p;
        disagreements += (direct != residuals || direct != saturated) ? 1 : 0;
      }
    }
  }
  return {disagreements == 0 && pairs > 0, std::to_string(pairs) + " pairs, " +
                                               std::to_string(disagreements) +
                                               " disagreements"};
}

Outcome minimality() {
  std::size_t cases = 0;
  std::size_t violations = 0;
  for (const auto& ring : all_fixtures()) {
    const IdealLattice lattice(ring, Mode::Lenient);
    for (auto s : enumerate_multiplicative_sets(ring)) {
      if (!s.contains(ring.one())) {
        continue;
      }
      std::vector<SubsetMask> sids;
      for (auto x : lattice.proper()) {
        if (s_condition(ring, x, s, x)) {
          sids.push_back(x);
        }
      }
      for (auto q : lattice.ideals()) {
        const SubsetMask qs = saturate(ring, q, s);
        if (qs == ring.all()) {
          continue;
        }
        ++cases;
        bool minimum = false;
        for (auto x : sids) {
          minimum = minimum || x == qs;
        }
        minimum = minimum && q.subset_of(qs);
        for (auto x : sids) {
          if (q.subset_of(x) && !qs.subset_of(x)) {
            minimum = false;
          }
        }
        violations += minimum ? 0 : 1;
      }
    }
  }
  return {violations == 0 && cases > 0,
          std::to_string(cases) + " cases, " + std::to_string(violations) + " violations"};
}

Outcome products() {
  std::vector<HyperRing> small;
  for (auto& ring : all_fixtures()) {
    if (ring.order() <= 4) {
      small.push_back(std::move(ring));
    }
  }
  std::size_t configurations = 0;
  std::size_t disagreements = 0;
  std::size_t rings_formed = 0;
  for (const auto& a : small) {
    for (const auto& b : small) {
      if (a.m() != b.m() || a.n() != b.n()) {
        continue;
      }
      const HyperRing factors[] = {a, b};
      const HyperRing prod = product_ring(factors);
      ++rings_formed;
      const IdealLattice la(a, Mode::Lenient);
      const IdealLattice lb(b, Mode::Lenient);
      const auto msa = enumerate_multiplicative_sets(a);
      const auto msb = enumerate_multiplicative_sets(b);
      for (auto p1 : la.proper()) {
        for (auto p2 : lb.proper()) {
          const SubsetMask parts_p[] = {p1, p2};
          const SubsetMask pp = product_subset(prod, factors, parts_p);
          for (auto s1 : msa) {
            for (auto s2 : msb) {
              const SubsetMask parts_s[] = {s1, s2};
              const SubsetMask ss = product_subset(prod, factors, parts_s);
              const bool direct = s_condition(prod, pp, ss, pp);
              const bool componentwise =
                  s_condition(a, p1, s1, p1) && s_condition(b, p2, s2, p2);
              ++configurations;
              disagreements += direct == componentwise ? 0 : 1;
            }
          }
        }
      }
    }
  }
  return {disagreements == 0 && configurations > 0,
          std::to_string(rings_formed) + " products, " + std::to_string(configurations) +
              " configurations, " + std::to_string(disagreements) + " disagreements"};
}

Outcome determinism() {
  std::size_t mismatches = 0;
  for (const auto& ring : all_fixtures()) {
    const std::string once = serialize_spec(ring.spec());
    if (serialize_spec(parse_spec(once)) != once) {
      ++mismatches;
    }
  }
  std::vector<HyperRing> rings;
  for (const auto& name : default_suite_fixtures()) {
    rings.push_back(fixture(name));
  }
  const std::string a = suite_json(run_suite(rings));
  const std::string b = suite_json(run_suite(rings));
  const std::string c = suite_json(run_suite(rings, {}, {}, 4));
  const bool reports_equal = a == b && a == c;
  return {mismatches == 0 && reports_equal,
          std::to_string(fixture_names().size()) + " round trips, " +
              std::to_string(mismatches) + " mismatches; suite JSON " +
              (reports_equal ? "identical" : "differs") + " across runs"};
}

Outcome mutations() {
  struct Case {
    bool f_entry;
    std::vector<Element> key;
    std::uint64_t value;
    Axiom axiom;
    std::vector<Element> witness;
  };
  auto e = [](std::initializer_list<std::size_t> xs) {
    std::vector<Element> v;
    for (auto x : xs) {
      v.emplace_back(x);
    }
    return v;
  };
  const std::vector<Case> cases = {
      {true, e({1, 1, 1}), 0b100, Axiom::FAssociativity, e({0, 0, 1, 1, 1})},
      {false, e({2, 2, 2}), 1, Axiom::GAssociativity, e({1, 1, 2, 2, 2})},
      {false, e({0, 1, 2}), 1, Axiom::Distributivity, e({1, 2, 0, 0, 1})},
      {false, e({0, 1, 1}), 1, Axiom::ZeroAbsorption, e({0, 1, 1})},
      {false, e({1, 1, 1}), 2, Axiom::ScalarIdentity, e({1})},
  };
  std::size_t caught = 0;
  std::string missed;
  for (const auto& c : cases) {
    HyperRingSpec spec = paper_example_spec();
    const std::size_t rank = multiset_rank(c.key, 3);
    if (c.f_entry) {
      spec.f_table[rank] = c.value;
    } else {
      spec.g_table[rank] = static_cast<std::uint8_t>(c.value);
    }
    const Verification v = verify_axioms(spec);
    const AxiomCheck& check = v.report.at(c.axiom);
    if (!v.ring && check.status == AxiomStatus::Fail && check.witness == c.witness) {
      ++caught;
    } else {
      missed += " " + std::string(to_string(c.axiom));
    }
  }
  std::string detail = std::to_string(caught) + "/" + std::to_string(cases.size()) +
                       " mutations caught with the expected witness";
  if (!missed.empty()) {
    detail += "; missed:" + missed;
  }
  return {caught == cases.size(), detail};
}

}  // namespace
}  // namespace hyperideal

int main() {
  using hyperideal::Outcome;
  const std::vector<std::tuple<int, const char*, double, std::function<Outcome()>>> criteria = {
      {1, "paper example reproduction", 1.0, hyperideal::paper_example},
      {2, "full theorem suite", 60.0, hyperideal::full_suite},
      {3, "tri-equivalence", 0.0, hyperideal::tri_equivalence},
      {4, "saturation minimality", 0.0, hyperideal::minimality},
      {5, "product cross-check", 0.0, hyperideal::products},
      {6, "determinism and round trip", 0.0, hyperideal::determinism},
      {7, "mutation sensitivity", 0.0, hyperideal::mutations},
  };
  int failures = 0;
  for (const auto& [number, name, limit, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && seconds >= limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", number, name,
                o.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
