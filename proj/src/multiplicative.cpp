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

#include "hyperideal/multiplicative.hpp"

#include <algorithm>

#include "hyperideal/document.hpp"
#include "hyperideal/tuples.hpp"

namespace hyperideal {

namespace {

void require_same_ring(const HyperRing& ring, SubsetMask s) {
  if (s.ring_id() != ring.id()) {
    throw Error(ErrorCode::RingMismatch, "subset of another hyperring");
  }
}

void require_ms(const HyperRing& ring, SubsetMask s) {
  const auto v = is_multiplicative_set(ring, s);
  if (!v) {
    throw Error(ErrorCode::NotMultiplicative,
                format_subset(ring, s) + " is not closed under g: g" +
                    format_tuple(ring, v.witness->tuple) + " leaves it");
  }
}

void require_proper_ideal(const IdealLattice& lattice, SubsetMask p) {
  const HyperRing& ring = lattice.ring();
  require_same_ring(ring, p);
  if (p.empty()) {
    throw Error(ErrorCode::EmptySubset, "ideal is empty");
  }
  if (!lattice.is_ideal(p)) {
    throw Error(ErrorCode::NotAHyperideal,
                format_subset(ring, p) + " is not a " +
                    std::string(to_string(lattice.mode())) + " hyperideal");
  }
  if (p == ring.all()) {
    throw Error(ErrorCode::ImproperIdeal,
                format_subset(ring, p) + " is the whole ring");
  }
}

}  // namespace

Verdict is_multiplicative_set(const HyperRing& ring, SubsetMask s) {
  require_same_ring(ring, s);
  if (s.empty()) {
    throw Error(ErrorCode::EmptySubset, "multiplicative set is empty");
  }
  const auto members = s.elements();
  std::optional<Verdict> result;
  std::vector<Element> t(ring.n());
  for_each_multiset(members.size(), ring.n(), [&](std::span<const Element> idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      t[j] = members[idx[j].index];
    }
    if (!s.contains(ring.g_raw(t.data()))) {
      result = Verdict{false, Witness{"product-outside", t, std::nullopt, std::nullopt}};
      return false;
    }
    return true;
  });
  return result ? *result : Verdict{};
}

MulSet MulSet::make(const HyperRing& ring, SubsetMask s) {
  require_ms(ring, s);
  return {s, s.contains(ring.one())};
}

HornTheory multiplicative_theory(const HyperRing& ring) {
  HornTheory theory(ring.order());
  for_each_multiset(ring.order(), ring.n(), [&](std::span<const Element> t) {
    std::uint64_t premise = 0;
    for (auto e : t) {
      premise |= std::uint64_t{1} << e.index;
    }
    theory.add(premise, std::uint64_t{1} << ring.g_raw(t.data()).index);
  });
  return theory;
}

std::vector<SubsetMask> enumerate_multiplicative_sets(const HyperRing& ring) {
  require_order_within_limit(ring, "multiplicative set enumeration");
  std::vector<SubsetMask> out;
  for (auto bits : multiplicative_theory(ring).closed_sets()) {
    if (bits != 0) {
      out.push_back(ring.mask(bits));
    }
  }
  return out;
}

std::string_view to_string(SVerdict v) noexcept {
  switch (v) {
    case SVerdict::SHyperideal:
      return "s-hyperideal";
    case SVerdict::SrOnly:
      return "sr-only";
    case SVerdict::Neither:
      return "neither";
  }
  return "?";
}

namespace {

// Visits failures in lexicographic tuple-then-position order; the visitor
// returns false to stop.
template <typename Fn>
void scan_s_condition(const HyperRing& ring, SubsetMask p, SubsetMask s,
                      SubsetMask target, Fn&& fn) {
  std::vector<Element> sub(ring.n());
  for_each_tuple(ring.order(), ring.n(), [&](std::span<const Element> t) {
    const Element product = ring.g_raw(t.data());
    if (!p.contains(product)) {
      return true;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!s.contains(t[i])) {
        continue;
      }
      std::copy(t.begin(), t.end(), sub.begin());
      sub[i] = ring.one();
      const Element substituted = ring.g_raw(sub.data());
      if (!target.contains(substituted)) {
        if (!fn(SWitness{{t.begin(), t.end()}, i + 1, product, substituted})) {
          return false;
        }
      }
    }
    return true;
  });
}

}  // namespace

std::optional<SWitness> s_condition_witness(const HyperRing& ring, SubsetMask p,
                                            SubsetMask s, SubsetMask target) {
  std::optional<SWitness> out;
  scan_s_condition(ring, p, s, target, [&](SWitness w) {
    out = std::move(w);
    return false;
  });
  return out;
}

bool s_condition(const HyperRing& ring, SubsetMask p, SubsetMask s,
                 SubsetMask target) {
  // Failures are closed under permuting the tuple, so sorted tuples suffice.
  std::vector<Element> sub(ring.n());
  return for_each_multiset(ring.order(), ring.n(), [&](std::span<const Element> t) {
    if (!p.contains(ring.g_raw(t.data()))) {
      return true;
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!s.contains(t[i]) || (i > 0 && t[i] == t[i - 1])) {
        continue;
      }
      std::copy(t.begin(), t.end(), sub.begin());
      sub[i] = ring.one();
      if (!target.contains(ring.g_raw(sub.data()))) {
        return false;
      }
    }
    return true;
  });
}

SClassification is_s_hyperideal(const IdealLattice& lattice, SubsetMask p,
                                SubsetMask s, const ClassifyOptions& opts) {
  const HyperRing& ring = lattice.ring();
  require_proper_ideal(lattice, p);
  require_same_ring(ring, s);
  if (s.empty()) {
    throw Error(ErrorCode::EmptySubset, "multiplicative set is empty");
  }
  require_ms(ring, s);
  SClassification out;
  out.mode = lattice.mode();
  if (opts.all_witnesses) {
    scan_s_condition(ring, p, s, p, [&](SWitness w) {
      out.all_witnesses.push_back(std::move(w));
      return true;
    });
    if (!out.all_witnesses.empty()) {
      out.witness = out.all_witnesses.front();
    }
  } else {
    out.witness = s_condition_witness(ring, p, s, p);
  }
  if (!out.witness) {
    out.verdict = SVerdict::SHyperideal;
    return out;
  }
  out.sr_witness = s_condition_witness(ring, p, s, lattice.radical(p));
  out.verdict = out.sr_witness ? SVerdict::Neither : SVerdict::SrOnly;
  return out;
}

SClassification is_s_hyperideal(const HyperRing& ring, SubsetMask p, SubsetMask s,
                                Mode mode) {
  return is_s_hyperideal(IdealLattice(ring, mode), p, s);
}

SClassification is_sr_hyperideal(const IdealLattice& lattice, SubsetMask p,
                                 SubsetMask s) {
  return is_s_hyperideal(lattice, p, s);
}

SubsetMask residual(const HyperRing& ring, SubsetMask p, SubsetMask x) {
  require_same_ring(ring, p);
  require_same_ring(ring, x);
  if (x.empty()) {
    throw Error(ErrorCode::EmptySubset, "residual by the empty set");
  }
  SubsetMask out = ring.empty_set();
  const auto xs = x.elements();
  for (std::size_t a = 0; a < ring.order(); ++a) {
    const bool inside = std::all_of(xs.begin(), xs.end(), [&](Element e) {
      return p.contains(ring.mul(Element(a), e));
    });
    if (inside) {
      out.insert(Element(a));
    }
  }
  return out;
}

SubsetMask saturate(const HyperRing& ring, SubsetMask q, SubsetMask s) {
  SubsetMask out = ring.empty_set();
  const auto ts = s.elements();
  for (std::size_t x = 0; x < ring.order(); ++x) {
    const bool hit = std::any_of(ts.begin(), ts.end(), [&](Element t) {
      return q.contains(ring.mul(t, Element(x)));
    });
    if (hit) {
      out.insert(Element(x));
    }
  }
  return out;
}

Saturation saturation(const HyperRing& ring, SubsetMask q, SubsetMask s,
                      Mode mode) {
  require_same_ring(ring, q);
  require_same_ring(ring, s);
  if (q.empty() || s.empty()) {
    throw Error(ErrorCode::EmptySubset, "saturation of or by the empty set");
  }
  const auto v = is_hyperideal(ring, q, mode);
  if (!v) {
    throw Error(ErrorCode::NotAHyperideal,
                format_subset(ring, q) + " is not a " + std::string(to_string(mode)) +
                    " hyperideal (" + v.witness->reason + ")");
  }
  require_ms(ring, s);
  Saturation out;
  out.set = saturate(ring, q, s);
  out.proper = out.set != ring.all();
  out.hypothesis_one_in_s = s.contains(ring.one());
  return out;
}

SubsetMask maximal_ms_scan(const HyperRing& ring, SubsetMask p) {
  SubsetMask out = ring.empty_set();
  std::vector<Element> with_x(ring.n()), with_one(ring.n());
  for (std::size_t x = 0; x < ring.order(); ++x) {
    with_x[0] = Element(x);
    with_one[0] = ring.one();
    const bool ok = for_each_multiset(
        ring.order(), ring.n() - 1, [&](std::span<const Element> ctx) {
          std::copy(ctx.begin(), ctx.end(), with_x.begin() + 1);
          std::copy(ctx.begin(), ctx.end(), with_one.begin() + 1);
          return !p.contains(ring.g_raw(with_x.data())) ||
                 p.contains(ring.g_raw(with_one.data()));
        });
    if (ok) {
      out.insert(Element(x));
    }
  }
  return out;
}

MulSet maximal_ms_for(const IdealLattice& lattice, SubsetMask p) {
  require_proper_ideal(lattice, p);
  const HyperRing& ring = lattice.ring();
  const SubsetMask s = maximal_ms_scan(ring, p);
  const auto v = is_multiplicative_set(ring, s);
  if (!v) {
    throw Error(ErrorCode::InternalContradiction,
                "the maximal set " + format_subset(ring, s) +
                    " is not closed under g: g" + format_tuple(ring, v.witness->tuple));
  }
  return {s, s.contains(ring.one())};
}

std::vector<SubsetMask> s_hyperideals(const IdealLattice& lattice, SubsetMask s) {
  require_same_ring(lattice.ring(), s);
  if (s.empty()) {
    throw Error(ErrorCode::EmptySubset, "multiplicative set is empty");
  }
  require_ms(lattice.ring(), s);
  std::vector<SubsetMask> out;
  for (auto p : lattice.proper()) {
    if (s_condition(lattice.ring(), p, s, p)) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<SubsetMask> s_maximal_hyperideals(const IdealLattice& lattice,
                                              SubsetMask s) {
  const auto all = s_hyperideals(lattice, s);
  std::vector<SubsetMask> out;
  for (auto p : all) {
    const bool dominated = std::any_of(all.begin(), all.end(), [&](auto q) {
      return q != p && p.subset_of(q);
    });
    if (!dominated) {
      out.push_back(p);
    }
  }
  return out;
}

std::vector<SubsetMask> primary_decomposition(const IdealLattice& lattice,
                                              SubsetMask p,
                                              const std::vector<SubsetMask>& primes) {
  const HyperRing& ring = lattice.ring();
  if (primes.empty()) {
    throw Error(ErrorCode::HypothesisViolation, "no minimal primes given");
  }
  SubsetMask covered = ring.empty_set();
  for (auto q : primes) {
    require_same_ring(ring, q);
    const auto& mins = lattice.min_primes();
    if (std::find(mins.begin(), mins.end(), q) == mins.end()) {
      throw Error(ErrorCode::HypothesisViolation,
                  format_subset(ring, q) + " is not a minimal prime hyperideal");
    }
    covered = covered | q;
  }
  const SubsetMask s = ring.all() - covered;
  if (s.empty()) {
    throw Error(ErrorCode::HypothesisViolation,
                "the complement of the union of the primes is empty");
  }
  if (!is_multiplicative_set(ring, s)) {
    throw Error(ErrorCode::HypothesisViolation,
                "the complement " + format_subset(ring, s) +
                    " is not a multiplicative set");
  }
  require_proper_ideal(lattice, p);
  if (!s_condition(ring, p, s, p)) {
    throw Error(ErrorCode::HypothesisViolation,
                format_subset(ring, p) + " is not an S-hyperideal for S = " +
                    format_subset(ring, s));
  }
  std::vector<SubsetMask> out;
  for (auto q : primes) {
    out.push_back(saturate(ring, p, ring.all() - q));
  }
  return out;
}

}  // namespace hyperideal
