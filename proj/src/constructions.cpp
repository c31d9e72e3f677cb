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

#include "hyperideal/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "hyperideal/document.hpp"
#include "hyperideal/tuples.hpp"

namespace hyperideal {

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += parts[i];
  }
  return out;
}

}  // namespace

SubsetMask HyperRingHom::image(SubsetMask p) const {
  if (p.ring_id() != source_.id()) {
    throw Error(ErrorCode::RingMismatch, "subset is not from the source ring");
  }
  SubsetMask out = target_.empty_set();
  for (auto e : p.elements()) {
    out.insert(map_[e.index]);
  }
  return out;
}

SubsetMask HyperRingHom::preimage(SubsetMask q) const {
  if (q.ring_id() != target_.id()) {
    throw Error(ErrorCode::RingMismatch, "subset is not from the target ring");
  }
  SubsetMask out = source_.empty_set();
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (q.contains(map_[x])) {
      out.insert(Element(x));
    }
  }
  return out;
}

SubsetMask HyperRingHom::kernel() const {
  return preimage(target_.singleton(target_.zero()));
}

bool HyperRingHom::surjective() const {
  return image(source_.all()) == target_.all();
}

HomCheck check_homomorphism(const HyperRing& source, const HyperRing& target,
                            std::vector<Element> map) {
  if (map.size() != source.order()) {
    throw Error(ErrorCode::ArityMismatch,
                "map has " + std::to_string(map.size()) + " entries for a ring of order " +
                    std::to_string(source.order()));
  }
  for (auto e : map) {
    if (e.index >= target.order()) {
      throw Error(ErrorCode::UnknownElement,
                  "map value " + std::to_string(e.index) + " is not a target element");
    }
  }
  if (source.m() != target.m() || source.n() != target.n()) {
    throw Error(ErrorCode::ArityMismatch, "source and target arities differ");
  }
  HomCheck out;
  if (map[source.one().index] != target.one()) {
    out.violation = HomViolation{"one", {source.one()},
                                 "psi(" + source.element_name(source.one()) + ") = " +
                                     target.element_name(map[source.one().index])};
    return out;
  }
  std::vector<Element> image(std::max(source.m(), source.n()));
  for_each_multiset(source.order(), source.m(), [&](std::span<const Element> t) {
    std::uint64_t lhs = 0;
    for (auto y : source.f(t).elements()) {
      lhs |= std::uint64_t{1} << map[y.index].index;
    }
    for (std::size_t j = 0; j < t.size(); ++j) {
      image[j] = map[t[j].index];
    }
    const std::uint64_t rhs = target.f_bits(image.data());
    if (lhs != rhs) {
      out.violation = HomViolation{
          "f", {t.begin(), t.end()},
          "psi(f" + format_tuple(source, t) + ") = " +
              format_subset(target, target.mask(lhs)) + " but f of the images is " +
              format_subset(target, target.mask(rhs))};
      return false;
    }
    return true;
  });
  if (out.violation) {
    return out;
  }
  for_each_multiset(source.order(), source.n(), [&](std::span<const Element> t) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      image[j] = map[t[j].index];
    }
    const Element lhs = map[source.g_raw(t.data()).index];
    const Element rhs = target.g_raw(image.data());
    if (lhs != rhs) {
      out.violation = HomViolation{
          "g", {t.begin(), t.end()},
          "psi(g" + format_tuple(source, t) + ") = " + target.element_name(lhs) +
              " but g of the images is " + target.element_name(rhs)};
      return false;
    }
    return true;
  });
  if (!out.violation) {
    out.hom = HyperRingHom(source, target, std::move(map));
  }
  return out;
}

HyperRingHom identity_hom(const HyperRing& ring) {
  std::vector<Element> map;
  for (std::size_t x = 0; x < ring.order(); ++x) {
    map.emplace_back(x);
  }
  return *check_homomorphism(ring, ring, std::move(map)).hom;
}

Element product_element(std::span<const HyperRing> factors,
                        std::span<const Element> components) {
  std::size_t index = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    index = index * factors[j].order() + components[j].index;
  }
  return Element(index);
}

SubsetMask product_subset(const HyperRing& product,
                          std::span<const HyperRing> factors,
                          std::span<const SubsetMask> parts) {
  std::vector<std::vector<Element>> slots;
  for (const auto& p : parts) {
    slots.push_back(p.elements());
  }
  SubsetMask out = product.empty_set();
  for_each_choice(std::span<const std::vector<Element>>(slots),
                  [&](std::span<const Element> c) {
                    out.insert(product_element(factors, c));
                  });
  return out;
}

HyperRing product_ring(std::span<const HyperRing> factors,
                       const VerifyOptions& options) {
  if (factors.empty()) {
    throw Error(ErrorCode::ArityMismatch, "product of no rings");
  }
  const std::size_t m = factors[0].m();
  const std::size_t n = factors[0].n();
  std::size_t order = 1;
  std::vector<std::string> names;
  for (const auto& r : factors) {
    if (r.m() != m || r.n() != n) {
      throw Error(ErrorCode::ArityMismatch,
                  "'" + r.name() + "' is a (" + std::to_string(r.m()) + "," +
                      std::to_string(r.n()) + ")-hyperring, expected (" +
                      std::to_string(m) + "," + std::to_string(n) + ")");
    }
    order *= r.order();
    if (order > order_limit()) {
      throw Error(ErrorCode::OrderLimitExceeded,
                  "product order exceeds the limit " + std::to_string(order_limit()));
    }
    names.push_back(r.name());
  }

  HyperRingSpec spec;
  spec.name = join(names, "x");
  spec.m = m;
  spec.n = n;
  const std::size_t k = factors.size();
  std::vector<std::vector<Element>> components(order, std::vector<Element>(k));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t j = k; j-- > 0;) {
      components[x][j] = Element(rest % factors[j].order());
      rest /= factors[j].order();
    }
    std::vector<std::string> parts;
    for (std::size_t j = 0; j < k; ++j) {
      parts.push_back(factors[j].element_name(components[x][j]));
    }
    spec.elements.push_back(join(parts, "|"));
  }
  std::vector<Element> zero, one;
  for (const auto& r : factors) {
    zero.push_back(r.zero());
    one.push_back(r.one());
  }
  spec.zero = product_element(factors, zero).index;
  spec.one = product_element(factors, one).index;

  std::vector<Element> column;
  for_each_multiset(order, m, [&](std::span<const Element> t) {
    std::vector<std::vector<Element>> slots(k);
    for (std::size_t j = 0; j < k; ++j) {
      column.clear();
      for (auto e : t) {
        column.push_back(components[e.index][j]);
      }
      slots[j] = factors[j].f(column).elements();
    }
    std::uint64_t bits = 0;
    for_each_choice(std::span<const std::vector<Element>>(slots),
                    [&](std::span<const Element> c) {
                      bits |= std::uint64_t{1} << product_element(factors, c).index;
                    });
    spec.f_table.push_back(bits);
  });
  for_each_multiset(order, n, [&](std::span<const Element> t) {
    std::vector<Element> value(k);
    for (std::size_t j = 0; j < k; ++j) {
      column.clear();
      for (auto e : t) {
        column.push_back(components[e.index][j]);
      }
      value[j] = factors[j].g(column);
    }
    spec.g_table.push_back(product_element(factors, value).index);
  });
  return make_ring(spec, options);
}

QuotientRing quotient_ring(const HyperRing& ring, SubsetMask p, Mode mode,
                           std::optional<std::string> name) {
  if (p.ring_id() != ring.id()) {
    throw Error(ErrorCode::RingMismatch, "modulus is not a subset of the ring");
  }
  if (p.empty()) {
    throw Error(ErrorCode::EmptySubset, "modulus is empty");
  }
  const auto v = is_hyperideal(ring, p, mode);
  if (!v) {
    throw Error(ErrorCode::NotAHyperideal,
                format_subset(ring, p) + " is not a " + std::string(to_string(mode)) +
                    " hyperideal (" + v.witness->reason + ")");
  }
  if (p == ring.all()) {
    throw Error(ErrorCode::ImproperIdeal, "quotient by the whole ring");
  }

  const std::size_t N = ring.order();
  std::vector<SubsetMask> coset_of(N);
  std::vector<SubsetMask> args(ring.m(), ring.singleton(ring.zero()));
  args[1] = p;
  for (std::size_t x = 0; x < N; ++x) {
    args[0] = ring.singleton(Element(x));
    coset_of[x] = ring.f(args);
  }
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = x + 1; y < N; ++y) {
      if (coset_of[x] != coset_of[y] && coset_of[x].intersects(coset_of[y])) {
        throw Error(ErrorCode::CosetsNotPartition,
                    "cosets of " + ring.element_name(Element(x)) + " and " +
                        ring.element_name(Element(y)) + " overlap: " +
                        format_subset(ring, coset_of[x]) + " and " +
                        format_subset(ring, coset_of[y]));
      }
    }
  }

  std::vector<SubsetMask> cosets;
  std::vector<Element> cls(N);
  for (std::size_t x = 0; x < N; ++x) {
    auto it = std::find(cosets.begin(), cosets.end(), coset_of[x]);
    if (it == cosets.end()) {
      cosets.push_back(coset_of[x]);
      it = cosets.end() - 1;
    }
    cls[x] = Element(static_cast<std::size_t>(it - cosets.begin()));
  }

  HyperRingSpec spec;
  spec.name = name.value_or(ring.name() + "/" + format_subset(ring, p));
  spec.m = ring.m();
  spec.n = ring.n();
  for (auto c : cosets) {
    std::vector<std::string> members;
    for (auto e : c.elements()) {
      members.push_back(ring.element_name(e));
    }
    spec.elements.push_back("{" + join(members, "/") + "}");
  }
  spec.zero = cls[ring.zero().index].index;
  spec.one = cls[ring.one().index].index;
  if (spec.zero == spec.one) {
    throw Error(ErrorCode::ImproperIdeal, "zero and one fall in the same coset");
  }

  const std::size_t Q = cosets.size();
  std::vector<std::vector<Element>> members;
  for (auto c : cosets) {
    members.push_back(c.elements());
  }
  auto describe = [&](std::span<const Element> t) {
    std::vector<std::string> parts;
    for (auto e : t) {
      parts.push_back(spec.elements[e.index]);
    }
    return "(" + join(parts, ",") + ")";
  };
  std::vector<std::vector<Element>> slots;
  for_each_multiset(Q, ring.m(), [&](std::span<const Element> t) {
    slots.clear();
    for (auto c : t) {
      slots.push_back(members[c.index]);
    }
    std::optional<std::uint64_t> value;
    for_each_choice(std::span<const std::vector<Element>>(slots),
                    [&](std::span<const Element> reps) {
                      std::uint64_t bits = 0;
                      for (auto y : ring.f(reps).elements()) {
                        bits |= std::uint64_t{1} << cls[y.index].index;
                      }
                      if (value && *value != bits) {
                        throw Error(ErrorCode::InducedOpIllDefined,
                                    "f" + describe(t) + " depends on representatives");
                      }
                      value = bits;
                    });
    spec.f_table.push_back(*value);
  });
  for_each_multiset(Q, ring.n(), [&](std::span<const Element> t) {
    slots.clear();
    for (auto c : t) {
      slots.push_back(members[c.index]);
    }
    std::optional<Element> value;
    for_each_choice(std::span<const std::vector<Element>>(slots),
                    [&](std::span<const Element> reps) {
                      const Element v = cls[ring.g(reps).index];
                      if (value && *value != v) {
                        throw Error(ErrorCode::InducedOpIllDefined,
                                    "g" + describe(t) + " depends on representatives");
                      }
                      value = v;
                    });
    spec.g_table.push_back(value->index);
  });

  auto verified = verify_axioms(spec, {ring.axiom_report().distributivity});
  if (!verified.ring) {
    for (const auto& c : verified.report.checks) {
      if (c.status != AxiomStatus::Pass) {
        throw Error(ErrorCode::InducedOpIllDefined,
                    "the quotient fails " + std::string(to_string(c.axiom)) + ": " +
                        c.detail);
      }
    }
  }
  auto projection = check_homomorphism(ring, *verified.ring, cls);
  if (!projection.hom) {
    throw Error(ErrorCode::InducedOpIllDefined,
                "the projection is not a homomorphism: " + projection.violation->detail);
  }
  return QuotientRing{ring, p, std::move(cosets), *verified.ring,
                      std::move(*projection.hom)};
}

SubsetMask transport_ideal(const HyperRingHom& hom, Direction direction,
                           SubsetMask p) {
  if (direction == Direction::Preimage) {
    return hom.preimage(p);
  }
  if (!hom.surjective()) {
    throw Error(ErrorCode::HypothesisViolation, "the homomorphism is not surjective");
  }
  if (!hom.kernel().subset_of(p)) {
    throw Error(ErrorCode::HypothesisViolation,
                "the kernel " + format_subset(hom.source(), hom.kernel()) +
                    " is not contained in " + format_subset(hom.source(), p));
  }
  return hom.image(p);
}

HyperRingSpec ring_from_ring_table(std::string name,
                                   const std::vector<std::vector<std::size_t>>& add,
                                   const std::vector<std::vector<std::size_t>>& mul,
                                   std::size_t zero, std::size_t one,
                                   std::vector<std::string> element_names) {
  const std::size_t N = add.size();
  if (N < 2 || mul.size() != N || N > kMaxOrder) {
    throw Error(ErrorCode::NotARing, "tables must be square of equal size 2..64");
  }
  for (std::size_t a = 0; a < N; ++a) {
    if (add[a].size() != N || mul[a].size() != N) {
      throw Error(ErrorCode::NotARing, "tables must be square");
    }
    for (std::size_t b = 0; b < N; ++b) {
      if (add[a][b] >= N || mul[a][b] >= N) {
        throw Error(ErrorCode::NotARing, "table entry out of range");
      }
      if (add[a][b] != add[b][a] || mul[a][b] != mul[b][a]) {
        throw Error(ErrorCode::NotARing,
                    "tables are not commutative at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      }
    }
  }
  if (element_names.empty()) {
    for (std::size_t i = 0; i < N; ++i) {
      element_names.push_back(std::to_string(i));
    }
  }
  HyperRingSpec spec;
  spec.name = std::move(name);
  spec.m = 2;
  spec.n = 2;
  spec.elements = std::move(element_names);
  spec.zero = zero;
  spec.one = one;
  for_each_multiset(N, 2, [&](std::span<const Element> t) {
    spec.f_table.push_back(std::uint64_t{1} << add[t[0].index][t[1].index]);
    spec.g_table.push_back(static_cast<std::uint8_t>(mul[t[0].index][t[1].index]));
  });
  const auto v = verify_axioms(spec, {Distributivity::Exact});
  if (!v.ring) {
    for (const auto& c : v.report.checks) {
      if (c.status != AxiomStatus::Pass) {
        std::ostringstream os;
        os << "fails " << to_string(c.axiom);
        if (!c.witness.empty()) {
          os << " at (";
          for (std::size_t i = 0; i < c.witness.size(); ++i) {
            os << (i > 0 ? "," : "") << spec.elements[c.witness[i].index];
          }
          os << ")";
        }
        os << ": " << c.detail;
        throw Error(ErrorCode::NotARing, os.str());
      }
    }
  }
  return spec;
}

HyperRingSpec integers_mod(std::size_t modulus) {
  std::vector<std::vector<std::size_t>> add(modulus, std::vector<std::size_t>(modulus));
  auto mul = add;
  for (std::size_t a = 0; a < modulus; ++a) {
    for (std::size_t b = 0; b < modulus; ++b) {
      add[a][b] = (a + b) % modulus;
      mul[a][b] = (a * b) % modulus;
    }
  }
  return ring_from_ring_table("z" + std::to_string(modulus), add, mul, 0, 1);
}

}  // namespace hyperideal
