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

#include "hyperideal/hyper_ring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <unordered_map>

#include "hyperideal/tuples.hpp"

namespace hyperideal {

namespace {

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

std::uint32_t next_ring_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > kMaxDenseEntries / base) {
      throw Error(ErrorCode::OrderLimitExceeded,
                  "operation table too large to materialize (" +
                      std::to_string(base) + "^" + std::to_string(exp) + ")");
    }
    r *= base;
  }
  return r;
}

// Dense lookup tables expanded from the multiset-keyed spec tables.
struct Dense {
  std::size_t order = 0, m = 0, n = 0;
  std::vector<std::uint64_t> f;
  std::vector<std::uint8_t> g;

  explicit Dense(const HyperRingSpec& spec)
      : order(spec.order()), m(spec.m), n(spec.n) {
    f.resize(checked_power(order, m));
    g.resize(checked_power(order, n));
    std::vector<Element> sorted;
    std::size_t idx = 0;
    for_each_tuple(order, m, [&](std::span<const Element> t) {
      sorted.assign(t.begin(), t.end());
      std::sort(sorted.begin(), sorted.end());
      f[idx++] = spec.f_table[multiset_rank(sorted, order)];
    });
    idx = 0;
    for_each_tuple(order, n, [&](std::span<const Element> t) {
      sorted.assign(t.begin(), t.end());
      std::sort(sorted.begin(), sorted.end());
      g[idx++] = spec.g_table[multiset_rank(sorted, order)];
    });
  }

  std::size_t offset(const Element* a, std::size_t k) const noexcept {
    std::size_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
      off = off * order + a[i].index;
    }
    return off;
  }
  std::uint64_t f_of(const Element* a) const noexcept { return f[offset(a, m)]; }
  Element g_of(const Element* a) const noexcept {
    return Element(g[offset(a, n)]);
  }

  // f over subsets given as masks, one per argument slot.
  std::uint64_t f_sets(std::span<const std::uint64_t> masks) const {
    std::vector<std::vector<Element>> slots;
    slots.reserve(masks.size());
    for (auto b : masks) {
      slots.push_back(SubsetMask(b, 0).elements());
    }
    std::uint64_t out = 0;
    for_each_choice(std::span<const std::vector<Element>>(slots),
                    [&](std::span<const Element> t) { out |= f_of(t.data()); });
    return out;
  }
};

std::string names_of(const HyperRingSpec& spec, std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) {
      s += ",";
    }
    s += spec.elements[t[i].index];
  }
  return s + ")";
}

std::string set_names(const HyperRingSpec& spec, std::uint64_t bits) {
  std::string s = "{";
  bool first = true;
  for (auto e : SubsetMask(bits, 0).elements()) {
    if (!first) {
      s += ",";
    }
    first = false;
    s += spec.elements[e.index];
  }
  return s + "}";
}

AxiomCheck fail(Axiom a, std::span<const Element> w, std::string detail,
                std::optional<std::size_t> pos = std::nullopt) {
  return {a, AxiomStatus::Fail, {w.begin(), w.end()}, pos, std::move(detail)};
}

AxiomCheck pass(Axiom a, std::string detail = {}) {
  return {a, AxiomStatus::Pass, {}, std::nullopt, std::move(detail)};
}

AxiomCheck check_f_associativity(const HyperRingSpec& spec, const Dense& d) {
  const std::size_t m = d.m;
  std::optional<AxiomCheck> result;
  std::vector<Element> args(m);
  for_each_tuple(d.order, 2 * m - 1, [&](std::span<const Element> t) {
    std::uint64_t reference = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t inner = d.f_of(t.data() + i);
      std::uint64_t outer = 0;
      for (auto y : SubsetMask(inner, 0).elements()) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < i; ++j) {
          args[k++] = t[j];
        }
        args[k++] = y;
        for (std::size_t j = i + m; j < 2 * m - 1; ++j) {
          args[k++] = t[j];
        }
        outer |= d.f_of(args.data());
      }
      if (i == 0) {
        reference = outer;
      } else if (outer != reference) {
        std::ostringstream os;
        os << "bracketing at position " << (i + 1) << " gives "
           << set_names(spec, outer) << ", at position 1 gives "
           << set_names(spec, reference);
        result = fail(Axiom::FAssociativity, t, os.str(), i + 1);
        return false;
      }
    }
    return true;
  });
  return result ? *result : pass(Axiom::FAssociativity);
}

AxiomCheck check_neutral(const HyperRingSpec& spec, const Dense& d) {
  std::vector<Element> args(d.m, Element(spec.zero));
  for (std::size_t x = 0; x < d.order; ++x) {
    args[0] = Element(x);
    const std::uint64_t v = d.f_of(args.data());
    if (v != (std::uint64_t{1} << x)) {
      const Element w[] = {Element(x)};
      return fail(Axiom::NeutralElement, w,
                  "f" + names_of(spec, args) + " = " + set_names(spec, v));
    }
  }
  return pass(Axiom::NeutralElement);
}

AxiomCheck check_inverses(const HyperRingSpec& spec, const Dense& d,
                          std::vector<std::uint8_t>& neg) {
  neg.assign(d.order, 0);
  std::vector<Element> args(d.m, Element(spec.zero));
  for (std::size_t x = 0; x < d.order; ++x) {
    std::vector<std::size_t> candidates;
    args[0] = Element(x);
    for (std::size_t y = 0; y < d.order; ++y) {
      args[1] = Element(y);
      if ((d.f_of(args.data()) >> spec.zero) & 1U) {
        candidates.push_back(y);
      }
    }
    if (candidates.size() != 1) {
      std::ostringstream os;
      os << candidates.size() << " elements y with " << spec.elements[spec.zero]
         << " in f(" << spec.elements[x] << ",y,...)";
      const Element w[] = {Element(x)};
      return fail(Axiom::UniqueInverses, w, os.str());
    }
    neg[x] = static_cast<std::uint8_t>(candidates[0]);
  }
  return pass(Axiom::UniqueInverses);
}

AxiomCheck check_reversibility(const HyperRingSpec& spec, const Dense& d,
                               const std::vector<std::uint8_t>& neg) {
  const std::size_t m = d.m;
  std::optional<AxiomCheck> result;
  std::vector<Element> args(m);
  for_each_multiset(d.order, m, [&](std::span<const Element> t) {
    const std::uint64_t value = d.f_of(t.data());
    for (auto x : SubsetMask(value, 0).elements()) {
      for (std::size_t i = 0; i < m; ++i) {
        std::size_t k = 0;
        args[k++] = x;
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i) {
            args[k++] = Element(neg[t[j].index]);
          }
        }
        if (((d.f_of(args.data()) >> t[i].index) & 1U) == 0) {
          std::vector<Element> w(t.begin(), t.end());
          w.push_back(x);
          std::ostringstream os;
          os << spec.elements[x.index] << " in f" << names_of(spec, t)
             << " but " << spec.elements[t[i].index] << " not in f"
             << names_of(spec, args);
          result = fail(Axiom::Reversibility, w, os.str(), i + 1);
          return false;
        }
      }
    }
    return true;
  });
  return result ? *result : pass(Axiom::Reversibility);
}

AxiomCheck check_g_associativity(const HyperRingSpec& spec, const Dense& d) {
  const std::size_t n = d.n;
  std::optional<AxiomCheck> result;
  std::vector<Element> args(n);
  for_each_tuple(d.order, 2 * n - 1, [&](std::span<const Element> t) {
    Element reference;
    for (std::size_t i = 0; i < n; ++i) {
      const Element inner = d.g_of(t.data() + i);
      std::size_t k = 0;
      for (std::size_t j = 0; j < i; ++j) {
        args[k++] = t[j];
      }
      args[k++] = inner;
      for (std::size_t j = i + n; j < 2 * n - 1; ++j) {
        args[k++] = t[j];
      }
      const Element outer = d.g_of(args.data());
      if (i == 0) {
        reference = outer;
      } else if (outer != reference) {
        std::ostringstream os;
        os << "bracketing at position " << (i + 1) << " gives "
           << spec.elements[outer.index] << ", at position 1 gives "
           << spec.elements[reference.index];
        result = fail(Axiom::GAssociativity, t, os.str(), i + 1);
        return false;
      }
    }
    return true;
  });
  return result ? *result : pass(Axiom::GAssociativity);
}

// Returns the verdict under `mode`, and reports the first tuple where the
// two sides differ at all through `gap`.
AxiomCheck check_distributivity(const HyperRingSpec& spec, const Dense& d,
                                Distributivity mode,
                                std::optional<AxiomCheck>& gap) {
  const std::size_t m = d.m;
  const std::size_t n = d.n;
  std::optional<AxiomCheck> result;
  std::vector<Element> args(n);
  std::vector<Element> products(m);
  for_each_tuple(d.order, n - 1, [&](std::span<const Element> ctx) {
    return for_each_multiset(d.order, m, [&](std::span<const Element> q) {
      const std::uint64_t fq = d.f_of(q.data());
      for (std::size_t i = 0; i < n; ++i) {
        auto product_with = [&](Element y) {
          std::size_t k = 0;
          for (std::size_t j = 0; j < i; ++j) {
            args[k++] = ctx[j];
          }
          args[k++] = y;
          for (std::size_t j = i; j < n - 1; ++j) {
            args[k++] = ctx[j];
          }
          return d.g_of(args.data());
        };
        std::uint64_t lhs = 0;
        for (auto y : SubsetMask(fq, 0).elements()) {
          lhs |= std::uint64_t{1} << product_with(y).index;
        }
        for (std::size_t j = 0; j < m; ++j) {
          products[j] = product_with(q[j]);
        }
        const std::uint64_t rhs = d.f_of(products.data());
        if (lhs == rhs) {
          continue;
        }
        std::vector<Element> w(ctx.begin(), ctx.end());
        w.insert(w.end(), q.begin(), q.end());
        std::ostringstream os;
        os << "context " << names_of(spec, ctx) << ", q = " << names_of(spec, q)
           << " at position " << (i + 1) << ": g(.., f(q), ..) = "
           << set_names(spec, lhs) << ", f(g(.., q_j, ..)) = "
           << set_names(spec, rhs);
        auto check = fail(Axiom::Distributivity, w, os.str(), i + 1);
        if (!gap) {
          gap = check;
        }
        const bool included = (rhs & ~lhs) == 0;
        if (mode == Distributivity::Exact || !included) {
          result = std::move(check);
          return false;
        }
      }
      return true;
    });
  });
  if (result) {
    return *result;
  }
  return pass(Axiom::Distributivity, mode == Distributivity::Exact
                                         ? "holds as an equality"
                                         : "holds as an inclusion");
}

AxiomCheck check_zero_absorption(const HyperRingSpec& spec, const Dense& d) {
  std::optional<AxiomCheck> result;
  std::vector<Element> args(d.n);
  args[0] = Element(spec.zero);
  for_each_tuple(d.order, d.n - 1, [&](std::span<const Element> ctx) {
    std::copy(ctx.begin(), ctx.end(), args.begin() + 1);
    const Element v = d.g_of(args.data());
    if (v.index != spec.zero) {
      result = fail(Axiom::ZeroAbsorption, args,
                    "g" + names_of(spec, args) + " = " + spec.elements[v.index]);
      return false;
    }
    return true;
  });
  return result ? *result : pass(Axiom::ZeroAbsorption);
}

AxiomCheck check_scalar_identity(const HyperRingSpec& spec, const Dense& d) {
  std::vector<Element> args(d.n, Element(spec.one));
  for (std::size_t x = 0; x < d.order; ++x) {
    args[0] = Element(x);
    const Element v = d.g_of(args.data());
    if (v.index != x) {
      const Element w[] = {Element(x)};
      return fail(Axiom::ScalarIdentity, w,
                  "g" + names_of(spec, args) + " = " + spec.elements[v.index]);
    }
  }
  return pass(Axiom::ScalarIdentity);
}

}  // namespace

std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::FAssociativity:
      return "f-associativity";
    case Axiom::NeutralElement:
      return "neutral-element";
    case Axiom::UniqueInverses:
      return "unique-inverses";
    case Axiom::Reversibility:
      return "reversibility";
    case Axiom::GAssociativity:
      return "g-associativity";
    case Axiom::Distributivity:
      return "distributivity";
    case Axiom::ZeroAbsorption:
      return "zero-absorption";
    case Axiom::GCommutativity:
      return "g-commutativity";
    case Axiom::ScalarIdentity:
      return "scalar-identity";
  }
  return "?";
}

void HyperRingSpec::validate_shape() const {
  if (m < 2 || n < 2) {
    throw Error(ErrorCode::ArityOutOfRange,
                "arities must be at least 2 (m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + ")");
  }
  if (elements.size() < 2) {
    throw Error(ErrorCode::MalformedDocument,
                "a hyperring needs at least the two elements zero and one");
  }
  if (elements.size() > kMaxOrder) {
    throw Error(ErrorCode::OrderLimitExceeded,
                "order " + std::to_string(elements.size()) + " exceeds " +
                    std::to_string(kMaxOrder));
  }
  if (zero >= order() || one >= order()) {
    throw Error(ErrorCode::UnknownElement, "zero or one is not an element");
  }
  if (zero == one) {
    throw Error(ErrorCode::MalformedDocument,
                "zero and one must differ ('" + elements[zero] + "')");
  }
  if (f_table.size() != multiset_count(order(), m) ||
      g_table.size() != multiset_count(order(), n)) {
    throw Error(ErrorCode::MissingEntry, "table sizes do not match arities");
  }
  const std::uint64_t universe =
      order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order()) - 1;
  for (std::size_t i = 0; i < f_table.size(); ++i) {
    if (f_table[i] == 0) {
      throw Error(ErrorCode::EmptyHyperValue,
                  "f entry " + std::to_string(i) + " is empty");
    }
    if ((f_table[i] & ~universe) != 0) {
      throw Error(ErrorCode::UnknownElement,
                  "f entry " + std::to_string(i) + " names a non-element");
    }
  }
  for (std::size_t i = 0; i < g_table.size(); ++i) {
    if (g_table[i] >= order()) {
      throw Error(ErrorCode::UnknownElement,
                  "g entry " + std::to_string(i) + " names a non-element");
    }
  }
}

bool AxiomReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) {
    return c.status == AxiomStatus::Pass;
  });
}

const AxiomCheck& AxiomReport::at(Axiom a) const {
  for (const auto& c : checks) {
    if (c.axiom == a) {
      return c;
    }
  }
  throw Error(ErrorCode::InternalContradiction, "axiom missing from report");
}

struct HyperRing::Impl {
  HyperRingSpec spec;
  AxiomReport report;
  std::uint32_t id;
  Dense dense;
  std::vector<std::uint8_t> mul;
  std::vector<std::uint8_t> neg;
  std::unordered_map<std::string, std::size_t> by_name;

  Impl(HyperRingSpec s, AxiomReport r, std::vector<std::uint8_t> negation)
      : spec(std::move(s)),
        report(std::move(r)),
        id(next_ring_id()),
        dense(spec),
        neg(std::move(negation)) {
    const std::size_t N = spec.order();
    mul.resize(N * N);
    std::vector<Element> args(spec.n, Element(spec.one));
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        args[0] = Element(a);
        args[1] = Element(b);
        mul[a * N + b] = dense.g_of(args.data()).index;
      }
    }
    for (std::size_t i = 0; i < N; ++i) {
      by_name.emplace(spec.elements[i], i);
    }
  }
};

HyperRing::HyperRing(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)),
      mul_(impl_->mul.data()),
      neg_(impl_->neg.data()) {}

const HyperRingSpec& HyperRing::spec() const noexcept { return impl_->spec; }
const AxiomReport& HyperRing::axiom_report() const noexcept {
  return impl_->report;
}
std::uint32_t HyperRing::id() const noexcept { return impl_->id; }
std::size_t HyperRing::order() const noexcept { return impl_->spec.order(); }
std::size_t HyperRing::m() const noexcept { return impl_->spec.m; }
std::size_t HyperRing::n() const noexcept { return impl_->spec.n; }
const std::string& HyperRing::name() const noexcept { return impl_->spec.name; }

const std::string& HyperRing::element_name(Element e) const {
  return impl_->spec.elements.at(e.index);
}

std::optional<Element> HyperRing::find(std::string_view name) const {
  auto it = impl_->by_name.find(std::string(name));
  if (it == impl_->by_name.end()) {
    return std::nullopt;
  }
  return Element(it->second);
}

Element HyperRing::zero() const noexcept { return Element(impl_->spec.zero); }
Element HyperRing::one() const noexcept { return Element(impl_->spec.one); }

SubsetMask HyperRing::all() const noexcept {
  const std::size_t N = order();
  return {N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1, id()};
}

SubsetMask HyperRing::mask(std::span<const Element> members) const {
  SubsetMask s = empty_set();
  for (auto e : members) {
    if (e.index >= order()) {
      throw Error(ErrorCode::UnknownElement,
                  "element index " + std::to_string(e.index) + " out of range");
    }
    s.insert(e);
  }
  return s;
}

SubsetMask HyperRing::f(std::span<const Element> args) const {
  if (args.size() != m()) {
    throw Error(ErrorCode::ArityMismatch,
                "f takes " + std::to_string(m()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  return {impl_->dense.f_of(args.data()), id()};
}

SubsetMask HyperRing::f(std::span<const SubsetMask> args) const {
  if (args.size() != m()) {
    throw Error(ErrorCode::ArityMismatch,
                "f takes " + std::to_string(m()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  std::vector<std::uint64_t> bits;
  for (const auto& a : args) {
    if (a.ring_id() != id()) {
      throw Error(ErrorCode::RingMismatch, "subset of another hyperring");
    }
    bits.push_back(a.bits());
  }
  return {impl_->dense.f_sets(bits), id()};
}

Element HyperRing::g(std::span<const Element> args) const {
  if (args.size() != n()) {
    throw Error(ErrorCode::ArityMismatch,
                "g takes " + std::to_string(n()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  return impl_->dense.g_of(args.data());
}

SubsetMask HyperRing::g(std::span<const SubsetMask> args) const {
  if (args.size() != n()) {
    throw Error(ErrorCode::ArityMismatch,
                "g takes " + std::to_string(n()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  std::vector<std::vector<Element>> slots;
  for (const auto& a : args) {
    if (a.ring_id() != id()) {
      throw Error(ErrorCode::RingMismatch, "subset of another hyperring");
    }
    slots.push_back(a.elements());
  }
  SubsetMask out = empty_set();
  for_each_choice(std::span<const std::vector<Element>>(slots),
                  [&](std::span<const Element> t) {
                    out.insert(impl_->dense.g_of(t.data()));
                  });
  return out;
}

Element HyperRing::power(Element p, std::size_t w) const {
  if (w == 0) {
    throw Error(ErrorCode::ArityOutOfRange, "power exponent must be >= 1");
  }
  const std::size_t arity = n();
  std::vector<Element> args(arity, one());
  if (w <= arity) {
    std::fill_n(args.begin(), w, p);
    return impl_->dense.g_of(args.data());
  }
  // Pad p^(w) with copies of 1 up to the aligned length l(n-1)+1 and fold.
  const std::size_t l = (w - 1 + arity - 2) / (arity - 1);
  const std::size_t length = l * (arity - 1) + 1;
  std::size_t consumed = 0;
  auto next = [&]() { return consumed++ < w ? p : one(); };
  for (std::size_t i = 0; i < arity; ++i) {
    args[i] = next();
  }
  Element acc = impl_->dense.g_of(args.data());
  while (consumed < length) {
    args[0] = acc;
    for (std::size_t i = 1; i < arity; ++i) {
      args[i] = next();
    }
    acc = impl_->dense.g_of(args.data());
  }
  return acc;
}

std::uint64_t HyperRing::f_bits(const Element* args) const noexcept {
  return impl_->dense.f_of(args);
}

Element HyperRing::g_raw(const Element* args) const noexcept {
  return impl_->dense.g_of(args);
}

Verification verify_axioms(const HyperRingSpec& spec,
                           const VerifyOptions& options) {
  spec.validate_shape();
  const Dense dense(spec);

  AxiomReport report;
  report.distributivity = options.distributivity;
  std::vector<std::uint8_t> neg;

  report.checks.push_back(check_f_associativity(spec, dense));
  report.checks.push_back(check_neutral(spec, dense));
  report.checks.push_back(check_inverses(spec, dense, neg));
  if (report.checks.back().status == AxiomStatus::Pass) {
    report.checks.push_back(check_reversibility(spec, dense, neg));
  } else {
    report.checks.push_back({Axiom::Reversibility, AxiomStatus::Skipped, {},
                             std::nullopt, "needs unique inverses"});
  }
  report.checks.push_back(check_g_associativity(spec, dense));
  std::optional<AxiomCheck> gap;
  report.checks.push_back(
      check_distributivity(spec, dense, options.distributivity, gap));
  if (options.distributivity == Distributivity::Inclusion &&
      report.checks.back().status == AxiomStatus::Pass && gap) {
    report.exact_distributivity_gap = gap;
  }
  report.checks.push_back(check_zero_absorption(spec, dense));
  report.checks.push_back(
      pass(Axiom::GCommutativity, "holds by construction (multiset keys)"));
  report.checks.push_back(check_scalar_identity(spec, dense));

  Verification out;
  if (report.all_pass()) {
    out.ring = HyperRing(
        std::make_shared<const HyperRing::Impl>(spec, report, std::move(neg)));
  }
  out.report = std::move(report);
  return out;
}

HyperRing make_ring(const HyperRingSpec& spec, const VerifyOptions& options) {
  auto v = verify_axioms(spec, options);
  if (!v.ring) {
    for (const auto& c : v.report.checks) {
      if (c.status != AxiomStatus::Pass) {
        throw Error(ErrorCode::AxiomFailure,
                    "'" + spec.name + "' fails " + std::string(to_string(c.axiom)) +
                        ": " + c.detail);
      }
    }
  }
  return *v.ring;
}

bool verification_is_slow(const HyperRingSpec& spec) noexcept {
  return (spec.m >= 3 && spec.order() > 8) || spec.order() > 16;
}

}  // namespace hyperideal
