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

#include "hyperideal/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "hyperideal/tuples.hpp"

namespace hyperideal {

namespace {

void require_nonempty(SubsetMask s, const char* what) {
  if (s.empty()) {
    throw Error(ErrorCode::EmptySubset, what);
  }
}

void require_same_ring(const HyperRing& ring, SubsetMask s) {
  if (s.ring_id() != ring.id()) {
    throw Error(ErrorCode::RingMismatch, "subset of another hyperring");
  }
}

Verdict fails(std::string reason, std::vector<Element> tuple,
              std::optional<std::size_t> position = std::nullopt,
              std::optional<SubsetMask> subset = std::nullopt) {
  return {false, Witness{std::move(reason), std::move(tuple), position, subset}};
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::Strict ? "strict" : "lenient";
}

std::optional<Mode> parse_mode(std::string_view text) noexcept {
  if (text == "lenient") {
    return Mode::Lenient;
  }
  if (text == "strict") {
    return Mode::Strict;
  }
  return std::nullopt;
}

std::size_t order_limit() {
  if (const char* env = std::getenv("HYPERIDEAL_ORDER_LIMIT")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) {
      return std::min<std::size_t>(v, kMaxOrder);
    }
  }
  return 16;
}

void require_order_within_limit(const HyperRing& ring, std::string_view what) {
  if (ring.order() > order_limit()) {
    throw Error(ErrorCode::OrderLimitExceeded,
                std::string(what) + " on '" + ring.name() + "' of order " +
                    std::to_string(ring.order()) + " exceeds the limit " +
                    std::to_string(order_limit()));
  }
}

Verdict is_hyperideal(const HyperRing& ring, SubsetMask p, Mode mode) {
  require_same_ring(ring, p);
  require_nonempty(p, "hyperideal candidate is empty");
  if (!p.contains(ring.zero())) {
    return fails("zero-missing", {ring.zero()});
  }
  const auto members = p.elements();
  std::optional<Verdict> result;
  std::vector<Element> t(ring.m());
  for_each_multiset(members.size(), ring.m(), [&](std::span<const Element> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      t[j] = members[idx[j].index];
    }
    const std::uint64_t v = ring.f_bits(t.data());
    if ((v & ~p.bits()) != 0) {
      result = fails("f-closure", t, std::nullopt, ring.mask(v));
      return false;
    }
    return true;
  });
  if (result) {
    return *result;
  }
  std::vector<Element> args(ring.n());
  for (auto x : members) {
    args[0] = x;
    for_each_tuple(ring.order(), ring.n() - 1, [&](std::span<const Element> ctx) {
      std::copy(ctx.begin(), ctx.end(), args.begin() + 1);
      if (!p.contains(ring.g_raw(args.data()))) {
        result = fails("g-absorption", args, 1);
        return false;
      }
      return true;
    });
    if (result) {
      return *result;
    }
  }
  if (mode == Mode::Strict) {
    for (auto x : members) {
      if (!p.contains(ring.negate(x))) {
        return fails("negation", {x});
      }
    }
  }
  return {};
}

HornTheory hyperideal_theory(const HyperRing& ring, Mode mode) {
  HornTheory theory(ring.order());
  theory.add(0, ring.singleton(ring.zero()).bits());
  for_each_multiset(ring.order(), ring.m(), [&](std::span<const Element> t) {
    std::uint64_t premise = 0;
    for (auto e : t) {
      premise |= std::uint64_t{1} << e.index;
    }
    theory.add(premise, ring.f_bits(t.data()));
  });
  std::vector<Element> args(ring.n());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    std::uint64_t absorbed = 0;
    args[0] = Element(x);
    for_each_multiset(ring.order(), ring.n() - 1, [&](std::span<const Element> ctx) {
      std::copy(ctx.begin(), ctx.end(), args.begin() + 1);
      absorbed |= std::uint64_t{1} << ring.g_raw(args.data()).index;
    });
    if (mode == Mode::Strict) {
      absorbed |= std::uint64_t{1} << ring.negate(Element(x)).index;
    }
    theory.add(std::uint64_t{1} << x, absorbed);
  }
  return theory;
}

SubsetMask generated_hyperideal(const HyperRing& ring, SubsetMask x, Mode mode) {
  require_same_ring(ring, x);
  require_nonempty(x, "generator set is empty");
  std::uint64_t seed = 0;
  for (auto e : x.elements()) {
    for (std::size_t r = 0; r < ring.order(); ++r) {
      seed |= std::uint64_t{1} << ring.mul(Element(r), e).index;
    }
  }
  return ring.mask(hyperideal_theory(ring, mode).closure(seed));
}

std::vector<SubsetMask> enumerate_hyperideals(const HyperRing& ring, Mode mode) {
  require_order_within_limit(ring, "hyperideal enumeration");
  std::vector<SubsetMask> out;
  for (auto bits : hyperideal_theory(ring, mode).closed_sets()) {
    out.push_back(ring.mask(bits));
  }
  return out;
}

Verdict prime_condition(const HyperRing& ring, SubsetMask p) {
  // The failing tuples are closed under permutation, so the lexicographically
  // first one is non-decreasing.
  std::optional<Verdict> result;
  for_each_multiset(ring.order(), ring.n(), [&](std::span<const Element> t) {
    if (!p.contains(ring.g_raw(t.data()))) {
      return true;
    }
    for (auto e : t) {
      if (p.contains(e)) {
        return true;
      }
    }
    result = fails("product-in-ideal", {t.begin(), t.end()});
    return false;
  });
  return result ? *result : Verdict{};
}

Verdict primary_condition(const HyperRing& ring, SubsetMask p,
                          SubsetMask radical) {
  std::optional<Verdict> result;
  std::vector<Element> sub(ring.n());
  for_each_tuple(ring.order(), ring.n(), [&](std::span<const Element> t) {
    if (!p.contains(ring.g_raw(t.data()))) {
      return true;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (p.contains(t[i])) {
        continue;
      }
      std::copy(t.begin(), t.end(), sub.begin());
      sub[i] = ring.one();
      if (!radical.contains(ring.g_raw(sub.data()))) {
        result = fails("cofactor-outside-radical", {t.begin(), t.end()}, i + 1);
        return false;
      }
    }
    return true;
  });
  return result ? *result : Verdict{};
}

Verdict semiprime_condition(const HyperRing& ring, SubsetMask p) {
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const Element e(x);
    if (!p.contains(e) && p.contains(ring.power(e, ring.n()))) {
      return fails("power-in-ideal", {e});
    }
  }
  return {};
}

IdealLattice::IdealLattice(const HyperRing& ring, Mode mode)
    : ring_(ring), mode_(mode), ideals_(enumerate_hyperideals(ring, mode)) {
  const SubsetMask all = ring.all();
  for (auto p : ideals_) {
    if (p != all) {
      proper_.push_back(p);
    }
  }
  for (auto p : proper_) {
    if (prime_condition(ring, p)) {
      primes_.push_back(p);
    }
  }
  for (auto p : proper_) {
    const bool dominated = std::any_of(proper_.begin(), proper_.end(), [&](auto q) {
      return p != q && p.subset_of(q);
    });
    if (!dominated) {
      maximal_.push_back(p);
    }
  }
  for (auto p : primes_) {
    const bool dominates = std::any_of(primes_.begin(), primes_.end(), [&](auto q) {
      return p != q && q.subset_of(p);
    });
    if (!dominates) {
      min_primes_.push_back(p);
    }
  }
}

bool IdealLattice::is_ideal(SubsetMask p) const {
  return std::binary_search(ideals_.begin(), ideals_.end(), p);
}

bool IdealLattice::is_prime(SubsetMask p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

SubsetMask IdealLattice::radical(SubsetMask p) const {
  SubsetMask out = ring_.all();
  for (auto q : primes_) {
    if (p.subset_of(q)) {
      out = out & q;
    }
  }
  return out;
}

namespace {

void require_proper_ideal(const IdealLattice& lattice, SubsetMask p) {
  const HyperRing& ring = lattice.ring();
  require_same_ring(ring, p);
  require_nonempty(p, "ideal is empty");
  if (!lattice.is_ideal(p)) {
    const auto v = is_hyperideal(ring, p, lattice.mode());
    std::string detail = "subset is not a " + std::string(to_string(lattice.mode())) +
                         " hyperideal";
    if (v.witness) {
      detail += " (" + v.witness->reason + ")";
    }
    throw Error(ErrorCode::NotAHyperideal, detail);
  }
  if (p == ring.all()) {
    throw Error(ErrorCode::ImproperIdeal, "the whole ring is not a proper hyperideal");
  }
}

}  // namespace

IdealProfile classify_ideal(const IdealLattice& lattice, SubsetMask p) {
  require_proper_ideal(lattice, p);
  const HyperRing& ring = lattice.ring();
  IdealProfile profile;
  profile.subset = p;
  profile.mode = lattice.mode();
  profile.proper = true;
  profile.radical = lattice.radical(p);
  profile.is_prime = prime_condition(ring, p);
  profile.is_primary = primary_condition(ring, p, profile.radical);
  profile.is_semiprime = semiprime_condition(ring, p);
  for (auto q : lattice.proper()) {
    if (q != p && p.subset_of(q)) {
      profile.is_maximal = fails("contained-in", {}, std::nullopt, q);
      break;
    }
  }
  return profile;
}

IdealProfile classify_ideal(const HyperRing& ring, SubsetMask p, Mode mode) {
  return classify_ideal(IdealLattice(ring, mode), p);
}

SubsetMask radical(const HyperRing& ring, SubsetMask p, Mode mode) {
  require_same_ring(ring, p);
  require_nonempty(p, "ideal is empty");
  const IdealLattice lattice(ring, mode);
  if (!lattice.is_ideal(p)) {
    throw Error(ErrorCode::NotAHyperideal, "radical of a non-hyperideal");
  }
  return lattice.radical(p);
}

PowerDiagnostic radical_power_diagnostic(const IdealLattice& lattice,
                                         SubsetMask p, Element x) {
  const HyperRing& ring = lattice.ring();
  PowerDiagnostic d;
  d.in_radical = lattice.radical(p).contains(x);
  // Powers of x follow x^(w+1) = g(x^w, x, 1^(n-2)), so the sequence is
  // periodic once a value repeats.
  std::set<std::uint8_t> seen;
  for (std::size_t w = 1;; ++w) {
    const Element v = ring.power(x, w);
    d.searched_up_to = w;
    if (p.contains(v)) {
      d.exponent = w;
      break;
    }
    if (!seen.insert(v.index).second) {
      break;
    }
  }
  d.anomaly = d.in_radical && !d.exponent;
  return d;
}

SpecialSets special_sets(const IdealLattice& lattice) {
  const HyperRing& ring = lattice.ring();
  SpecialSets s;
  s.units = ring.empty_set();
  for (std::size_t a = 0; a < ring.order(); ++a) {
    for (std::size_t b = 0; b < ring.order(); ++b) {
      if (ring.mul(Element(a), Element(b)) == ring.one()) {
        s.units.insert(Element(a));
        break;
      }
    }
  }
  s.regulars = ring.empty_set();
  std::vector<Element> args(ring.n());
  for (std::size_t a = 0; a < ring.order(); ++a) {
    const Element x(a);
    args[0] = ring.power(x, ring.n());
    const bool regular = !for_each_multiset(
        ring.order(), ring.n() - 1, [&](std::span<const Element> ctx) {
          std::copy(ctx.begin(), ctx.end(), args.begin() + 1);
          return ring.g_raw(args.data()) != x;
        });
    if (regular) {
      s.regulars.insert(x);
    }
  }
  s.jacobson = ring.all();
  for (auto m : lattice.maximal()) {
    s.jacobson = s.jacobson & m;
  }
  s.min_primes = lattice.min_primes();
  return s;
}

SpecialSets special_sets(const HyperRing& ring, Mode mode) {
  return special_sets(IdealLattice(ring, mode));
}

std::vector<SubsetMask> minimal_primes_over(const IdealLattice& lattice,
                                            SubsetMask p) {
  require_proper_ideal(lattice, p);
  std::vector<SubsetMask> over;
  for (auto q : lattice.primes()) {
    if (p.subset_of(q)) {
      over.push_back(q);
    }
  }
  std::vector<SubsetMask> out;
  for (auto q : over) {
    const bool dominates = std::any_of(over.begin(), over.end(), [&](auto r) {
      return r != q && r.subset_of(q);
    });
    if (!dominates) {
      out.push_back(q);
    }
  }
  return out;
}

}  // namespace hyperideal
