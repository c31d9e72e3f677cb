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

#include "hyperideal/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hyperideal/constructions.hpp"
#include "hyperideal/document.hpp"
#include "hyperideal/multiplicative.hpp"
#include "hyperideal/tuples.hpp"

namespace hyperideal {

namespace {

using nlohmann::ordered_json;

struct CatalogEntry {
  TheoremId id;
  std::string_view name;
  std::string_view statement;
};

constexpr CatalogEntry kCatalog[] = {
    {TheoremId::T1_1, "T1.1", "an S-hyperideal is disjoint from S"},
    {TheoremId::T1_2, "T1.2", "the radical of an S-hyperideal is an S-hyperideal"},
    {TheoremId::T1_3, "T1.3",
     "P_Q is an S-hyperideal for every nonempty Q outside an S-hyperideal P"},
    {TheoremId::P2, "P2",
     "primes avoiding S are S-hyperideals; ideals avoiding S lie in such a prime"},
    {TheoremId::T7, "T7", "a maximal S-hyperideal is prime (1 in S)"},
    {TheoremId::T6, "T6",
     "minimal primes over an S-hyperideal are S-hyperideals (1 in S)"},
    {TheoremId::T3, "T3",
     "the forbidden-element complement is the largest MS making P an "
     "S-hyperideal"},
    {TheoremId::T4, "T4",
     "the saturation Q^S is the least S-hyperideal containing Q (1 in S)"},
    {TheoremId::T5, "T5",
     "S-hyperideal, P = P_t for all t in S, and P = P^S are equivalent"},
    {TheoremId::TPrimaryEq, "TPRIMARY-EQ",
     "for a minimal prime Q, S-hyperideals with S = A \\ Q are the Q-primary "
     "hyperideals"},
    {TheoremId::TDecomp, "TDECOMP",
     "an S-hyperideal is the intersection of its saturations by the "
     "complements of the minimal primes covering A \\ S"},
    {TheoremId::PInt, "PINT", "intersections of S-hyperideals are S-hyperideals"},
    {TheoremId::P8, "P8",
     "every proper hyperideal is an S-hyperideal iff S consists of units"},
    {TheoremId::T9Fwd, "T9-FWD",
     "in a domain with S = A \\ {0}, the only S-hyperideal is <0>"},
    {TheoremId::T10, "T10",
     "with S = f(Q,1,0,...), ideals over Q are S-hyperideals; maximal "
     "S-hyperideals contain Q when Q lies in the Jacobson radical"},
    {TheoremId::T12, "T12",
     "an ideal containing the minimal-prime hull of each element is an "
     "S-hyperideal for S = A minus the minimal primes"},
    {TheoremId::TAvoid, "TAVOID",
     "avoidance: P inside an irredundant union of n ideals lies in the "
     "S-hyperideal member"},
    {TheoremId::THomPre, "THOM-PRE",
     "preimages of psi(S)-hyperideals are S-hyperideals"},
    {TheoremId::THomImg, "THOM-IMG",
     "under an epimorphism, images of S-hyperideals containing the kernel are "
     "psi(S)-hyperideals"},
    {TheoremId::TQuot, "TQUOT",
     "Q is an S-hyperideal iff Q/P is a T-hyperideal of A/P"},
    {TheoremId::TProd, "TPROD",
     "a product of ideals is a product-S-hyperideal iff each factor is"},
    {TheoremId::FwSr, "FW-SR", "every S-hyperideal is an S_r-hyperideal"},
};

const CatalogEntry& entry(TheoremId id) {
  for (const auto& e : kCatalog) {
    if (e.id == id) {
      return e;
    }
  }
  throw Error(ErrorCode::UnknownTheorem, "catalog entry missing");
}

// Everything the checkers share about one ring in one mode, computed once.
class Analysis {
 public:
  Analysis(const HyperRing& ring, Mode mode)
      : ring_(ring),
        lattice_(ring, mode),
        mss_(enumerate_multiplicative_sets(ring)),
        specials_(special_sets(lattice_)) {}

  const HyperRing& ring() const { return ring_; }
  const IdealLattice& lattice() const { return lattice_; }
  Mode mode() const { return lattice_.mode(); }
  const std::vector<SubsetMask>& mss() const { return mss_; }
  const SpecialSets& specials() const { return specials_; }
  SubsetMask all() const { return ring_.all(); }

  bool is_proper_ideal(SubsetMask p) const {
    return p != ring_.all() && lattice_.is_ideal(p);
  }
  bool is_ms(SubsetMask s) const {
    return !s.empty() && std::binary_search(mss_.begin(), mss_.end(), s);
  }

  // P is an S-hyperideal: proper hyperideal satisfying the S-condition.
  bool sh(SubsetMask p, SubsetMask s) const {
    if (!is_proper_ideal(p)) {
      return false;
    }
    const auto key = std::make_pair(p.bits(), s.bits());
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    const bool v = s_condition(ring_, p, s, p);
    memo_.emplace(key, v);
    return v;
  }

  std::vector<SubsetMask> sids(SubsetMask s) const {
    std::vector<SubsetMask> out;
    for (auto p : lattice_.proper()) {
      if (sh(p, s)) {
        out.push_back(p);
      }
    }
    return out;
  }

  bool primary(SubsetMask p) const {
    if (auto it = primary_.find(p.bits()); it != primary_.end()) {
      return it->second;
    }
    const bool v =
        static_cast<bool>(primary_condition(ring_, p, lattice_.radical(p)));
    primary_.emplace(p.bits(), v);
    return v;
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
  };

  HyperRing ring_;
  IdealLattice lattice_;
  std::vector<SubsetMask> mss_;
  SpecialSets specials_;
  mutable std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, bool, PairHash>
      memo_;
  mutable std::unordered_map<std::uint64_t, bool> primary_;
};

std::vector<SubsetMask> maximal_members(const std::vector<SubsetMask>& sets) {
  std::vector<SubsetMask> out;
  for (auto p : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](auto q) {
      return q != p && p.subset_of(q);
    });
    if (!dominated) {
      out.push_back(p);
    }
  }
  return out;
}

class Recorder {
 public:
  Recorder(TheoremReport& report, std::size_t max_counterexamples)
      : report_(report), max_(max_counterexamples) {}

  void instance(bool hypothesis_met) {
    ++report_.instances_checked;
    if (hypothesis_met) {
      ++report_.hypothesis_met;
    }
  }
  void instances(std::size_t count, bool hypothesis_met) {
    report_.instances_checked += count;
    if (hypothesis_met) {
      report_.hypothesis_met += count;
    }
  }
  void counterexample(ordered_json witness, std::size_t count = 1) {
    report_.counterexample_count += count;
    if (report_.counterexamples.size() < max_) {
      report_.counterexamples.push_back(std::move(witness));
    }
  }
  // Notes are deduplicated and capped; the count of suppressed ones is kept.
  void note(const std::string& text) {
    if (std::find(report_.notes.begin(), report_.notes.end(), text) !=
        report_.notes.end()) {
      return;
    }
    if (report_.notes.size() < max_) {
      report_.notes.push_back(text);
    } else {
      ++suppressed_;
    }
  }
  void finish() {
    if (suppressed_ > 0) {
      report_.notes.push_back(std::to_string(suppressed_) + " further notes omitted");
    }
  }

 private:
  TheoremReport& report_;
  std::size_t max_;
  std::size_t suppressed_ = 0;
};

class Checker {
 public:
  Checker(const Analysis& a, const CheckOptions& opts, Recorder& rec,
          TheoremReport& report)
      : a_(a), r_(a.ring()), opts_(opts), rec_(rec), report_(report) {}

  std::string set(SubsetMask s) const { return format_subset(r_, s); }

  void run(TheoremId id) {
    switch (id) {
      case TheoremId::T1_1:
        return t1_1();
      case TheoremId::T1_2:
        return t1_2();
      case TheoremId::T1_3:
        return t1_3();
      case TheoremId::P2:
        return p2();
      case TheoremId::T7:
        return t7();
      case TheoremId::T6:
        return t6();
      case TheoremId::T3:
        return t3();
      case TheoremId::T4:
        return t4();
      case TheoremId::T5:
        return t5();
      case TheoremId::TPrimaryEq:
        return primary_eq();
      case TheoremId::TDecomp:
        return decomposition();
      case TheoremId::PInt:
        return intersections();
      case TheoremId::P8:
        return p8();
      case TheoremId::T9Fwd:
        return t9();
      case TheoremId::T10:
        return t10();
      case TheoremId::T12:
        return t12();
      case TheoremId::TAvoid:
        return avoidance();
      case TheoremId::THomPre:
        return homomorphisms(true);
      case TheoremId::THomImg:
        return homomorphisms(false);
      case TheoremId::TQuot:
        return quotients();
      case TheoremId::TProd:
        return products();
      case TheoremId::FwSr:
        return sr();
    }
  }

 private:
  void t1_1() {
    for (auto p : a_.lattice().proper()) {
      for (auto s : a_.mss()) {
        const bool hyp = a_.sh(p, s);
        rec_.instance(hyp);
        if (hyp && p.intersects(s)) {
          rec_.counterexample({{"P", set(p)}, {"S", set(s)}, {"meet", set(p & s)}});
        }
      }
    }
  }

  void t1_2() {
    for (auto p : a_.lattice().proper()) {
      for (auto s : a_.mss()) {
        if (!a_.sh(p, s)) {
          rec_.instance(false);
          continue;
        }
        const SubsetMask rp = a_.lattice().radical(p);
        if (rp == a_.all()) {
          rec_.instance(false);
          rec_.note("r(" + set(p) + ") is the whole ring; pair skipped");
          continue;
        }
        rec_.instance(true);
        if (!a_.sh(rp, s)) {
          rec_.counterexample({{"P", set(p)}, {"S", set(s)}, {"radical", set(rp)}});
        }
      }
    }
  }

  void t1_3() {
    const std::size_t N = r_.order();
    for (auto p : a_.lattice().proper()) {
      // Residuals by every nonempty Q outside P, with multiplicities.
      const auto outside = (a_.all() - p).elements();
      const std::size_t k = outside.size();
      std::vector<std::uint64_t> single(k);
      for (std::size_t j = 0; j < k; ++j) {
        single[j] = residual(r_, p, r_.singleton(outside[j])).bits();
      }
      std::vector<std::uint64_t> dp(std::size_t{1} << k);
      dp[0] = a_.all().bits();
      std::map<std::uint64_t, std::pair<std::size_t, std::uint64_t>> distinct;
      for (std::size_t q = 1; q < dp.size(); ++q) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(q));
        dp[q] = dp[q & (q - 1)] & single[low];
        auto& slot = distinct[dp[q]];
        if (slot.first++ == 0) {
          std::uint64_t members = 0;
          for (std::size_t j = 0; j < k; ++j) {
            if ((q >> j) & 1U) {
              members |= std::uint64_t{1} << outside[j].index;
            }
          }
          slot.second = members;
        }
      }
      (void)N;
      for (auto s : a_.mss()) {
        if (!a_.sh(p, s)) {
          rec_.instance(false);
          continue;
        }
        for (const auto& [res, info] : distinct) {
          const SubsetMask pq = r_.mask(res);
          rec_.instances(info.first, true);
          if (!a_.sh(pq, s)) {
            rec_.counterexample({{"P", set(p)},
                                 {"S", set(s)},
                                 {"Q", set(r_.mask(info.second))},
                                 {"residual", set(pq)}},
                                info.first);
          }
        }
      }
    }
  }

  void p2() {
    for (auto p : a_.lattice().primes()) {
      for (auto s : a_.mss()) {
        const bool hyp = !p.intersects(s);
        rec_.instance(hyp);
        if (hyp && !a_.sh(p, s)) {
          rec_.counterexample({{"clause", "prime-avoiding-S"}, {"P", set(p)}, {"S", set(s)}});
        }
      }
    }
    for (auto q : a_.lattice().ideals()) {
      for (auto s : a_.mss()) {
        const bool hyp = !q.intersects(s);
        rec_.instance(hyp);
        if (!hyp) {
          continue;
        }
        const auto& primes = a_.lattice().primes();
        const bool found = std::any_of(primes.begin(), primes.end(), [&](auto p) {
          return q.subset_of(p) && !p.intersects(s) && a_.sh(p, s);
        });
        if (!found) {
          rec_.counterexample({{"clause", "prime-over-ideal"}, {"Q", set(q)}, {"S", set(s)}});
        }
      }
    }
  }

  void t7() {
    for (auto s : a_.mss()) {
      if (!s.contains(r_.one())) {
        rec_.instance(false);
        continue;
      }
      for (auto p : maximal_members(a_.sids(s))) {
        rec_.instance(true);
        if (!a_.lattice().is_prime(p)) {
          rec_.counterexample({{"P", set(p)}, {"S", set(s)}});
        }
      }
    }
  }

  void t6() {
    for (auto s : a_.mss()) {
      if (!s.contains(r_.one())) {
        rec_.instance(false);
        continue;
      }
      for (auto p : a_.sids(s)) {
        for (auto q : minimal_primes_over(a_.lattice(), p)) {
          rec_.instance(true);
          if (!a_.sh(q, s)) {
            rec_.counterexample({{"P", set(p)}, {"S", set(s)}, {"Q", set(q)}});
          }
        }
      }
    }
  }

  void t3() {
    for (auto p : a_.lattice().proper()) {
      rec_.instance(true);
      const SubsetMask s = maximal_ms_scan(r_, p);
      if (!a_.is_ms(s)) {
        rec_.counterexample({{"P", set(p)}, {"S", set(s)}, {"reason", "not multiplicative"}});
        continue;
      }
      if (!a_.sh(p, s)) {
        rec_.counterexample({{"P", set(p)}, {"S", set(s)}, {"reason", "P is not an S-hyperideal"}});
        continue;
      }
      for (auto s2 : a_.mss()) {
        if (a_.sh(p, s2) && !s2.subset_of(s)) {
          rec_.counterexample({{"P", set(p)},
                               {"S", set(s)},
                               {"larger", set(s2)},
                               {"reason", "another MS is not contained in S"}});
          break;
        }
      }
    }
  }

  void t4() {
    for (auto s : a_.mss()) {
      if (!s.contains(r_.one())) {
        rec_.instance(false);
        continue;
      }
      const auto sids = a_.sids(s);
      for (auto q : a_.lattice().ideals()) {
        const SubsetMask qs = saturate(r_, q, s);
        if (qs == a_.all()) {
          rec_.instance(false);
          rec_.note("saturation of " + set(q) + " by " + set(s) +
                    " is the whole ring; minimality is vacuous");
          continue;
        }
        rec_.instance(true);
        std::string reason;
        if (!a_.lattice().is_ideal(qs)) {
          reason = "saturation is not a hyperideal";
        } else if (!a_.sh(qs, s)) {
          reason = "saturation is not an S-hyperideal";
        } else if (!q.subset_of(qs)) {
          reason = "saturation does not contain Q";
        } else {
          for (auto x : sids) {
            if (q.subset_of(x) && !qs.subset_of(x)) {
              reason = "a smaller S-hyperideal contains Q: " + set(x);
              break;
            }
          }
        }
        if (!reason.empty()) {
          rec_.counterexample({{"Q", set(q)}, {"S", set(s)}, {"saturation", set(qs)}, {"reason", reason}});
        }
      }
    }
  }

  void t5() {
    for (auto p : a_.lattice().proper()) {
      for (auto s : a_.mss()) {
        rec_.instance(true);
        const bool direct = !s_condition_witness(r_, p, s, p).has_value();
        const auto ts = s.elements();
        const bool residuals = std::all_of(ts.begin(), ts.end(), [&](Element t) {
          return residual(r_, p, r_.singleton(t)) == p;
        });
        const bool saturated = saturate(r_, p, s) == p;
        if (direct != residuals || direct != saturated) {
          rec_.counterexample({{"P", set(p)},
                               {"S", set(s)},
                               {"direct_scan", direct},
                               {"residual_fixed_point", residuals},
                               {"saturation_fixed_point", saturated}});
        }
      }
    }
  }

  void primary_eq() {
    for (auto q : a_.lattice().min_primes()) {
      const SubsetMask s = a_.all() - q;
      if (!a_.is_ms(s)) {
        rec_.instance(false);
        rec_.note("complement of " + set(q) + " is not multiplicative");
        continue;
      }
      for (auto p : a_.lattice().proper()) {
        rec_.instance(true);
        const bool s_hyp = a_.sh(p, s);
        const bool q_primary = a_.primary(p) && a_.lattice().radical(p) == q;
        if (s_hyp != q_primary) {
          rec_.counterexample({{"P", set(p)},
                               {"Q", set(q)},
                               {"s_hyperideal", s_hyp},
                               {"q_primary", q_primary}});
        }
      }
    }
  }

  void decomposition() {
    const auto& mins = a_.lattice().min_primes();
    const std::size_t k = mins.size();
    if (k > 16) {
      rec_.note("more than 16 minimal primes; families truncated");
      report_.truncated = true;
    }
    const std::size_t families = std::size_t{1} << std::min<std::size_t>(k, 16);
    for (std::size_t mask = 1; mask < families; ++mask) {
      std::vector<SubsetMask> qs;
      SubsetMask covered = r_.empty_set();
      for (std::size_t j = 0; j < k; ++j) {
        if ((mask >> j) & 1U) {
          qs.push_back(mins[j]);
          covered = covered | mins[j];
        }
      }
      const SubsetMask s = a_.all() - covered;
      if (!a_.is_ms(s)) {
        rec_.instance(false);
        continue;
      }
      for (auto p : a_.lattice().proper()) {
        if (!a_.sh(p, s)) {
          rec_.instance(false);
          continue;
        }
        rec_.instance(true);
        SubsetMask meet = a_.all();
        ordered_json comps = ordered_json::array();
        std::string reason;
        for (auto q : qs) {
          const SubsetMask c = saturate(r_, p, a_.all() - q);
          comps.push_back(set(c));
          meet = meet & c;
          if (c == a_.all()) {
            rec_.note("component of " + set(p) + " for " + set(q) +
                      " is the whole ring");
          } else if (reason.empty() &&
                     !(a_.lattice().is_ideal(c) && a_.primary(c) &&
                       a_.lattice().radical(c) == q)) {
            reason = "component " + set(c) + " is not " + set(q) + "-primary";
          }
        }
        if (meet != p) {
          reason = "intersection " + set(meet) + " differs from P";
        }
        if (!reason.empty()) {
          ordered_json primes = ordered_json::array();
          for (auto q : qs) {
            primes.push_back(set(q));
          }
          rec_.counterexample({{"P", set(p)},
                               {"primes", primes},
                               {"components", comps},
                               {"reason", reason}});
        }
      }
    }
  }

  void intersections() {
    for (auto s : a_.mss()) {
      const auto sids = a_.sids(s);
      const std::size_t k = sids.size();
      auto check = [&](SubsetMask meet, ordered_json family) {
        rec_.instance(true);
        if (!a_.sh(meet, s)) {
          rec_.counterexample({{"S", set(s)}, {"family", family}, {"intersection", set(meet)}});
        }
      };
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          check(sids[i] & sids[j], {set(sids[i]), set(sids[j])});
          for (std::size_t l = j + 1; l < k; ++l) {
            check(sids[i] & sids[j] & sids[l], {set(sids[i]), set(sids[j]), set(sids[l])});
          }
        }
      }
    }
  }

  void p8() {
    const SubsetMask units = a_.specials().units;
    for (auto s : a_.mss()) {
      if (!s.contains(r_.one())) {
        rec_.instance(false);
        continue;
      }
      rec_.instance(true);
      const auto& proper = a_.lattice().proper();
      auto failing = std::find_if(proper.begin(), proper.end(),
                                  [&](auto p) { return !a_.sh(p, s); });
      const bool all_s = failing == proper.end();
      const bool in_units = s.subset_of(units);
      if (all_s != in_units) {
        ordered_json w = {{"S", set(s)},
                          {"units", set(units)},
                          {"every_proper_ideal_is_s_hyperideal", all_s},
                          {"s_within_units", in_units}};
        if (!all_s) {
          w["failing_ideal"] = set(*failing);
        }
        rec_.counterexample(std::move(w));
      }
    }
  }

  void t9() {
    const SubsetMask zero = r_.singleton(r_.zero());
    const bool domain = for_each_multiset(
        r_.order(), r_.n(), [&](std::span<const Element> t) {
          if (r_.g_raw(t.data()) != r_.zero()) {
            return true;
          }
          return std::any_of(t.begin(), t.end(), [&](Element e) { return e == r_.zero(); });
        });
    const SubsetMask s = a_.all() - zero;
    if (!domain || !a_.is_ms(s)) {
      rec_.instance(false);
      if (!domain) {
        rec_.note("not a hyperintegral domain");
      }
      return;
    }
    rec_.instance(true);
    const auto sids = a_.sids(s);
    if (sids.size() != 1 || sids[0] != zero) {
      ordered_json found = ordered_json::array();
      for (auto p : sids) {
        found.push_back(set(p));
      }
      rec_.counterexample({{"S", set(s)}, {"s_hyperideals", found}});
    }
  }

  void t10() {
    const SubsetMask jacobson = a_.specials().jacobson;
    for (auto q : a_.lattice().proper()) {
      std::vector<SubsetMask> args(r_.m(), r_.singleton(r_.zero()));
      args[0] = q;
      args[1] = r_.singleton(r_.one());
      const SubsetMask s = r_.f(args);
      if (!a_.is_ms(s)) {
        rec_.instance(false);
        rec_.note("f(" + set(q) + ",1,0,...) = " + set(s) + " is not multiplicative");
        continue;
      }
      for (auto p : a_.lattice().proper()) {
        if (!q.subset_of(p)) {
          continue;
        }
        rec_.instance(true);
        if (!a_.sh(p, s)) {
          const auto w = s_condition_witness(r_, p, s, p);
          ordered_json cx = {{"clause", "ideals-over-Q"}, {"Q", set(q)}, {"S", set(s)}, {"P", set(p)}};
          if (w) {
            cx["tuple"] = format_tuple(r_, w->tuple);
            cx["position"] = w->position;
          }
          rec_.counterexample(std::move(cx));
        }
      }
      if (!q.subset_of(jacobson)) {
        continue;
      }
      for (auto p : maximal_members(a_.sids(s))) {
        rec_.instance(true);
        if (!q.subset_of(p)) {
          rec_.counterexample({{"clause", "maximal-contains-Q"}, {"Q", set(q)}, {"S", set(s)}, {"P", set(p)}});
        }
      }
    }
  }

  void t12() {
    const auto& mins = a_.lattice().min_primes();
    SubsetMask covered = r_.empty_set();
    for (auto q : mins) {
      covered = covered | q;
    }
    const SubsetMask s = a_.all() - covered;
    const bool s_ok = a_.is_ms(s);
    for (auto p : a_.lattice().proper()) {
      bool hull = true;
      for (auto x : p.elements()) {
        SubsetMask meet = a_.all();
        for (auto q : mins) {
          if (q.contains(x)) {
            meet = meet & q;
          }
        }
        if (!meet.subset_of(p)) {
          hull = false;
          break;
        }
      }
      const bool hyp = hull && s_ok;
      rec_.instance(hyp);
      if (hyp && !a_.sh(p, s)) {
        rec_.counterexample({{"P", set(p)}, {"S", set(s)}});
      }
    }
    if (!s_ok) {
      rec_.note("the complement of the minimal primes is not multiplicative");
    }
  }

  void avoidance() {
    const auto& ideals = a_.lattice().ideals();
    const std::size_t n = r_.n();
    const std::size_t k = ideals.size();
    std::vector<SubsetMask> with_one;
    for (auto s : a_.mss()) {
      if (s.contains(r_.one())) {
        with_one.push_back(s);
      }
    }
    if (k < n) {
      return;
    }
    std::size_t examined = 0;
    std::vector<std::size_t> pick(n);
    for (std::size_t j = 0; j < n; ++j) {
      pick[j] = j;
    }
    while (true) {
      SubsetMask uni = r_.empty_set();
      for (auto j : pick) {
        uni = uni | ideals[j];
      }
      for (auto p : ideals) {
        if (++examined > opts_.avoid_budget) {
          report_.truncated = true;
          rec_.note("search budget of " + std::to_string(opts_.avoid_budget) +
                    " configurations exhausted");
          return;
        }
        if (!p.subset_of(uni)) {
          continue;
        }
        bool irredundant = true;
        for (std::size_t i = 0; i < n && irredundant; ++i) {
          SubsetMask others = r_.empty_set();
          for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
              others = others | ideals[pick[j]];
            }
          }
          irredundant = !p.subset_of(others);
        }
        if (!irredundant) {
          rec_.instance(false);
          continue;
        }
        for (auto s : with_one) {
          for (std::size_t t = 0; t < n; ++t) {
            bool hyp = a_.sh(ideals[pick[t]], s);
            for (std::size_t j = 0; j < n && hyp; ++j) {
              hyp = j == t || ideals[pick[j]].intersects(s);
            }
            rec_.instance(hyp);
            if (hyp && !p.subset_of(ideals[pick[t]])) {
              ordered_json family = ordered_json::array();
              for (auto j : pick) {
                family.push_back(set(ideals[j]));
              }
              rec_.counterexample({{"P", set(p)}, {"family", family}, {"S", set(s)}, {"t", t + 1}});
            }
          }
        }
      }
      // Next n-combination of ideal indices.
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == k - n + i - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) {
        pick[j] = pick[j - 1] + 1;
      }
    }
  }

  struct Target {
    HyperRingHom hom;
    std::shared_ptr<const Analysis> analysis;
    std::string label;
  };

  std::vector<Target> targets(bool with_identity) {
    std::vector<Target> out;
    if (with_identity) {
      out.push_back({identity_hom(r_), nullptr, "identity"});
    }
    for (auto p : a_.lattice().proper()) {
      try {
        auto q = quotient_ring(r_, p, a_.mode());
        out.push_back({std::move(q.projection),
                       std::make_shared<const Analysis>(q.quotient, a_.mode()),
                       "projection onto A/" + set(p)});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CosetsNotPartition &&
            e.code() != ErrorCode::InducedOpIllDefined) {
          throw;
        }
        rec_.note("no quotient by " + set(p) + ": " + e.what());
      }
    }
    return out;
  }

  void homomorphisms(bool preimage) {
    for (const auto& target : targets(true)) {
      const Analysis& b = target.analysis ? *target.analysis : a_;
      const HyperRingHom& psi = target.hom;
      const HyperRing& br = b.ring();
      const bool surjective = psi.surjective();
      const SubsetMask kernel = psi.kernel();
      for (auto s : a_.mss()) {
        const SubsetMask t = psi.image(s);
        if (!b.is_ms(t)) {
          rec_.note("psi(" + set(s) + ") is not multiplicative under " + target.label);
          continue;
        }
        if (preimage) {
          for (auto q : b.lattice().proper()) {
            const bool hyp = b.sh(q, t);
            rec_.instance(hyp);
            if (hyp) {
              const SubsetMask pre = psi.preimage(q);
              if (!a_.sh(pre, s)) {
                rec_.counterexample({{"hom", target.label},
                                     {"S", set(s)},
                                     {"Q", format_subset(br, q)},
                                     {"preimage", set(pre)}});
              }
            }
          }
        } else {
          for (auto p : a_.lattice().proper()) {
            const bool hyp = surjective && kernel.subset_of(p) && a_.sh(p, s);
            rec_.instance(hyp);
            if (hyp) {
              const SubsetMask img = psi.image(p);
              if (!b.sh(img, t)) {
                rec_.counterexample({{"hom", target.label},
                                     {"S", set(s)},
                                     {"P", set(p)},
                                     {"image", format_subset(br, img)}});
              }
            }
          }
        }
      }
    }
  }

  void quotients() {
    for (const auto& target : targets(false)) {
      const Analysis& b = *target.analysis;
      const HyperRingHom& pi = target.hom;
      const SubsetMask p = pi.kernel();
      for (auto s : a_.mss()) {
        const SubsetMask t = pi.image(s);
        if (!b.is_ms(t)) {
          rec_.note("T for S = " + set(s) + " is not multiplicative in the quotient by " +
                    set(p));
          continue;
        }
        for (auto q : a_.lattice().proper()) {
          if (!p.subset_of(q)) {
            continue;
          }
          rec_.instance(true);
          const bool lhs = a_.sh(q, s);
          const bool rhs = b.sh(pi.image(q), t);
          if (lhs != rhs) {
            rec_.counterexample({{"P", set(p)},
                                 {"Q", set(q)},
                                 {"S", set(s)},
                                 {"q_is_s_hyperideal", lhs},
                                 {"quotient_is_t_hyperideal", rhs}});
          }
        }
      }
    }
  }

  void products() {
    if (r_.order() > 4) {
      rec_.note("factor order above 4; products not formed");
      return;
    }
    std::vector<HyperRing> partners = opts_.product_partners;
    if (partners.empty()) {
      for (const auto& name : fixture_names()) {
        const HyperRing f = fixture(name);
        if (f.order() <= 4 && f.m() == r_.m() && f.n() == r_.n()) {
          partners.push_back(f);
        }
      }
    }
    std::size_t improper_disagreements = 0;
    for (const auto& partner : partners) {
      if (partner.m() != r_.m() || partner.n() != r_.n() ||
          partner.order() * r_.order() > order_limit()) {
        continue;
      }
      const HyperRing factors[] = {r_, partner};
      const HyperRing prod = product_ring(factors);
      const Analysis b(partner, a_.mode());
      const auto& ideals1 = a_.lattice().ideals();
      const auto& ideals2 = b.lattice().ideals();
      for (auto p1 : ideals1) {
        for (auto p2 : ideals2) {
          const SubsetMask parts_p[] = {p1, p2};
          const SubsetMask pp = product_subset(prod, factors, parts_p);
          if (pp == prod.all()) {
            continue;
          }
          const bool both_proper = p1 != a_.all() && p2 != partner.all();
          for (auto s1 : a_.mss()) {
            for (auto s2 : b.mss()) {
              const SubsetMask parts_s[] = {s1, s2};
              const SubsetMask ss = product_subset(prod, factors, parts_s);
              const bool direct = s_condition(prod, pp, ss, pp);
              const bool componentwise = a_.sh(p1, s1) && b.sh(p2, s2);
              rec_.instance(both_proper);
              if (direct == componentwise) {
                continue;
              }
              if (!both_proper) {
                ++improper_disagreements;
                continue;
              }
              rec_.counterexample({{"product", prod.name()},
                                   {"P1", set(p1)},
                                   {"P2", format_subset(partner, p2)},
                                   {"S1", set(s1)},
                                   {"S2", format_subset(partner, s2)},
                                   {"direct", direct},
                                   {"componentwise", componentwise}});
            }
          }
        }
      }
    }
    if (improper_disagreements > 0) {
      rec_.note(std::to_string(improper_disagreements) +
                " configurations with an improper factor disagree (the "
                "componentwise side requires every factor proper)");
    }
  }

  void sr() {
    for (auto p : a_.lattice().proper()) {
      for (auto s : a_.mss()) {
        const bool hyp = a_.sh(p, s);
        rec_.instance(hyp);
        if (hyp && !s_condition(r_, p, s, a_.lattice().radical(p))) {
          rec_.counterexample({{"P", set(p)}, {"S", set(s)}});
        }
      }
    }
  }

  const Analysis& a_;
  const HyperRing& r_;
  const CheckOptions& opts_;
  Recorder& rec_;
  TheoremReport& report_;
};

TheoremReport check_with(const Analysis& analysis, TheoremId id,
                         const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  report.id = id;
  report.ring = analysis.ring().name();
  report.mode = analysis.mode();
  Recorder rec(report, options.max_counterexamples);
  Checker(analysis, options, rec, report).run(id);
  rec.finish();
  if (report.counterexample_count > 0) {
    report.status = TheoremStatus::Counterexample;
  } else if (report.hypothesis_met > 0) {
    report.status = TheoremStatus::Holds;
  } else {
    report.status = TheoremStatus::HypothesisNeverMet;
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  for (const auto& e : kCatalog) {
    if (e.id == id) {
      return e.name;
    }
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  for (const auto& e : kCatalog) {
    if (e.name == text) {
      return e.id;
    }
  }
  throw Error(ErrorCode::UnknownTheorem, "'" + std::string(text) + "'");
}

std::string_view statement(TheoremId id) noexcept {
  for (const auto& e : kCatalog) {
    if (e.id == id) {
      return e.statement;
    }
  }
  return "";
}

std::string_view to_string(TheoremStatus s) noexcept {
  switch (s) {
    case TheoremStatus::Holds:
      return "holds";
    case TheoremStatus::Counterexample:
      return "counterexample";
    case TheoremStatus::HypothesisNeverMet:
      return "hypothesis-never-met";
  }
  return "?";
}

std::string_view to_string(SuiteStatus s) noexcept {
  switch (s) {
    case SuiteStatus::Pass:
      return "pass";
    case SuiteStatus::HypothesisGap:
      return "hypothesis-gap";
    case SuiteStatus::Counterexample:
      return "counterexample";
  }
  return "?";
}

ordered_json to_json(const TheoremReport& report, bool timings) {
  ordered_json j;
  j["id"] = std::string(to_string(report.id));
  j["ring"] = report.ring;
  j["mode"] = std::string(to_string(report.mode));
  j["status"] = std::string(to_string(report.status));
  j["instances_checked"] = report.instances_checked;
  j["hypothesis_met"] = report.hypothesis_met;
  j["counterexample_count"] = report.counterexample_count;
  j["counterexamples"] = report.counterexamples;
  j["notes"] = report.notes;
  j["truncated"] = report.truncated;
  if (timings) {
    j["runtime_ms"] = report.runtime_ms;
  }
  return j;
}

TheoremReport check_theorem(const HyperRing& ring, TheoremId id,
                            const CheckOptions& options) {
  entry(id);
  const Analysis analysis(ring, options.mode);
  return check_with(analysis, id, options);
}

SuiteResult run_suite(const std::vector<HyperRing>& rings,
                      const CheckOptions& options,
                      const std::vector<TheoremId>& filter, unsigned jobs) {
  std::vector<TheoremId> ids;
  for (auto id : kAllTheorems) {
    if (filter.empty() || std::find(filter.begin(), filter.end(), id) != filter.end()) {
      ids.push_back(id);
    }
  }
  for (const auto& ring : rings) {
    require_order_within_limit(ring, "theorem checking");
  }

  // cells[ring][theorem]
  std::vector<std::vector<TheoremReport>> cells(rings.size());
  std::vector<std::exception_ptr> errors(rings.size());
  auto work = [&](std::size_t i) {
    try {
      const Analysis analysis(rings[i], options.mode);
      for (auto id : ids) {
        cells[i].push_back(check_with(analysis, id, options));
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, rings.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < rings.size(); ++i) {
      work(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < rings.size(); i = next++) {
          work(i);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }

  SuiteResult result;
  bool any_counterexample = false;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    bool exercised = false;
    for (std::size_t i = 0; i < rings.size(); ++i) {
      const auto& r = cells[i][k];
      exercised = exercised || r.hypothesis_met > 0;
      any_counterexample = any_counterexample || r.status == TheoremStatus::Counterexample;
      result.reports.push_back(r);
    }
    if (!exercised) {
      result.never_exercised.push_back(ids[k]);
    }
  }
  result.status = any_counterexample ? SuiteStatus::Counterexample
                  : result.never_exercised.empty() ? SuiteStatus::Pass
                                                    : SuiteStatus::HypothesisGap;
  return result;
}

std::string suite_json(const SuiteResult& result, bool timings) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : result.reports) {
    arr.push_back(to_json(r, timings));
  }
  return arr.dump(2) + "\n";
}

std::string suite_text(const SuiteResult& result, bool timings) {
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) {
      s.append(w - s.size(), ' ');
    }
    return s;
  };
  os << pad("theorem", 13) << pad("ring", 16) << pad("mode", 9) << pad("status", 22)
     << pad("instances", 11) << pad("met", 9) << "counterexamples";
  if (timings) {
    os << "  ms";
  }
  os << "\n";
  for (const auto& r : result.reports) {
    os << pad(std::string(to_string(r.id)), 13) << pad(r.ring, 16)
       << pad(std::string(to_string(r.mode)), 9)
       << pad(std::string(to_string(r.status)), 22)
       << pad(std::to_string(r.instances_checked), 11)
       << pad(std::to_string(r.hypothesis_met), 9) << r.counterexample_count;
    if (r.truncated) {
      os << " (truncated)";
    }
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %.1f", r.runtime_ms);
      os << buf;
    }
    os << "\n";
    for (const auto& c : r.counterexamples) {
      os << "    counterexample: " << c.dump() << "\n";
    }
  }
  os << "suite: " << to_string(result.status);
  if (!result.never_exercised.empty()) {
    os << "; hypothesis never met on any ring:";
    for (auto id : result.never_exercised) {
      os << " " << to_string(id);
    }
  }
  os << "\n";
  return os.str();
}

}  // namespace hyperideal
