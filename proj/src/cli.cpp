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

#include "hyperideal/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperideal/constructions.hpp"
#include "hyperideal/document.hpp"
#include "hyperideal/harness.hpp"
#include "hyperideal/multiplicative.hpp"
#include "json.hpp"

namespace hyperideal::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInvalid = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string mode = "lenient";
  std::string format = "text";
  std::string only;
  std::string s;
  std::string ideal;
  std::string by;
  std::string out;
  std::string expect;
  std::string name;
  bool all_witnesses = false;
  bool exact = false;
  bool timings = false;
  bool require_coverage = false;
  unsigned jobs = 1;
  std::size_t avoid_budget = 1'000'000;
};

// Thrown for invalid input that is not a library Error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  const Options& opt;
  std::ostringstream report;
  std::ostream& err;

  bool json() const { return opt.format == "json"; }
  Mode mode() const { return *parse_mode(opt.mode); }
  VerifyOptions verify_options() const {
    VerifyOptions v;
    if (opt.exact) {
      v.distributivity = Distributivity::Exact;
    }
    return v;
  }
};

HyperRingSpec resolve_spec(const std::string& input) {
  if (std::filesystem::exists(input)) {
    return load_spec(input);
  }
  const auto& names = fixture_names();
  if (std::find(names.begin(), names.end(), input) != names.end()) {
    return fixture(input).spec();
  }
  throw Error(ErrorCode::MalformedDocument,
              "cannot read '" + input + "' (no such file or fixture)");
}

ordered_json check_json(const HyperRingSpec& spec, const AxiomCheck& c) {
  ordered_json j;
  j["axiom"] = std::string(to_string(c.axiom));
  j["status"] = c.status == AxiomStatus::Pass   ? "pass"
                : c.status == AxiomStatus::Fail ? "fail"
                                                : "skipped";
  if (!c.witness.empty()) {
    std::string t = "(";
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      t += (i ? "," : "") + spec.elements[c.witness[i].index];
    }
    j["witness"] = t + ")";
  }
  if (c.position) {
    j["position"] = *c.position;
  }
  if (!c.detail.empty()) {
    j["detail"] = c.detail;
  }
  return j;
}

std::string check_text(const HyperRingSpec& spec, const AxiomCheck& c,
                       bool with_status = true) {
  const ordered_json j = check_json(spec, c);
  std::string line;
  if (with_status) {
    line = j["axiom"].get<std::string>() + ": " + j["status"].get<std::string>() + "; ";
  }
  if (j.contains("witness")) {
    line += "witness " + j["witness"].get<std::string>();
  }
  if (j.contains("position")) {
    line += " at position " + std::to_string(j["position"].get<std::size_t>());
  }
  if (j.contains("detail")) {
    line += " (" + j["detail"].get<std::string>() + ")";
  }
  return line;
}

std::optional<HyperRing> verify_into(Context& ctx, const HyperRingSpec& spec,
                                     bool print_success) {
  if (verification_is_slow(spec)) {
    ctx.err << "warning: exhaustive verification of order " << spec.order()
            << " with m=" << spec.m << " may be slow\n";
  }
  Verification v = verify_axioms(spec, ctx.verify_options());
  const AxiomReport& rep = v.report;
  if (v.ring && !print_success) {
    return std::move(v.ring);
  }
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = spec.name;
    j["distributivity"] =
        rep.distributivity == Distributivity::Exact ? "exact" : "inclusion";
    j["all_pass"] = rep.all_pass();
    j["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
      j["checks"].push_back(check_json(spec, c));
    }
    if (rep.exact_distributivity_gap) {
      j["exact_distributivity_gap"] = check_json(spec, *rep.exact_distributivity_gap);
    }
    ctx.report << j.dump(2) << "\n";
  } else if (rep.all_pass()) {
    ctx.report << "all axioms hold\n";
    if (rep.exact_distributivity_gap) {
      ctx.report << "note: distributivity holds as an inclusion only; "
                 << check_text(spec, *rep.exact_distributivity_gap, false) << "\n";
    }
  } else {
    for (const auto& c : rep.checks) {
      if (c.status != AxiomStatus::Pass) {
        ctx.report << check_text(spec, c) << "\n";
      }
    }
  }
  return std::move(v.ring);
}

HyperRing load_ring(Context& ctx, const std::string& input) {
  const HyperRingSpec spec = resolve_spec(input);
  auto ring = verify_into(ctx, spec, false);
  if (!ring) {
    ctx.report.str("");
    verify_into(ctx, spec, true);
    throw Error(ErrorCode::AxiomFailure, "'" + spec.name + "' is not a Krasner hyperring");
  }
  return *ring;
}

std::string single_input(const Options& opt) {
  if (opt.inputs.size() != 1) {
    throw UsageError("expected exactly one input, got " + std::to_string(opt.inputs.size()));
  }
  return opt.inputs.front();
}

SubsetMask require_subset(const HyperRing& ring, const std::string& text,
                          const char* flag) {
  if (text.empty()) {
    throw UsageError(std::string("missing ") + flag);
  }
  return parse_subset(ring, text);
}

ordered_json verdict_json(const HyperRing& r, const Verdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  if (v.witness) {
    const Witness& w = *v.witness;
    ordered_json wj;
    wj["reason"] = w.reason;
    if (!w.tuple.empty()) {
      wj["tuple"] = format_tuple(r, w.tuple);
    }
    if (w.position) {
      wj["position"] = *w.position;
    }
    if (w.subset) {
      wj["subset"] = format_subset(r, *w.subset);
    }
    j["witness"] = wj;
  }
  return j;
}

std::string verdict_text(const HyperRing& r, const Verdict& v) {
  if (v.holds) {
    return "yes";
  }
  std::string s = "no";
  if (v.witness) {
    const Witness& w = *v.witness;
    s += " (" + w.reason;
    if (!w.tuple.empty()) {
      s += " " + format_tuple(r, w.tuple);
    }
    if (w.position) {
      s += " at position " + std::to_string(*w.position);
    }
    if (w.subset) {
      s += " " + format_subset(r, *w.subset);
    }
    s += ")";
  }
  return s;
}

ordered_json s_witness_json(const HyperRing& r, const SWitness& w) {
  return {{"tuple", format_tuple(r, w.tuple)},
          {"position", w.position},
          {"product", r.element_name(w.product)},
          {"substituted", r.element_name(w.substituted)}};
}

std::string s_witness_text(const HyperRing& r, const SWitness& w, SubsetMask target,
                           std::string_view target_name) {
  std::vector<Element> unit = w.tuple;
  unit[w.position - 1] = r.one();
  return "g" + format_tuple(r, w.tuple) + " = " + r.element_name(w.product) +
         " is in P; g" + format_tuple(r, unit) + " = " + r.element_name(w.substituted) +
         (target.contains(w.substituted) ? " is in " : " is not in ") +
         std::string(target_name);
}

int cmd_verify(Context& ctx) {
  const HyperRingSpec spec = resolve_spec(single_input(ctx.opt));
  return verify_into(ctx, spec, true) ? kOk : kInvalid;
}

int cmd_ideals(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const IdealLattice lattice(r, ctx.mode());
  const SpecialSets sp = special_sets(lattice);
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = r.name();
    j["mode"] = std::string(to_string(ctx.mode()));
    j["ideals"] = ordered_json::array();
    for (auto p : lattice.ideals()) {
      ordered_json e;
      e["subset"] = format_subset(r, p);
      e["proper"] = p != r.all();
      if (p != r.all()) {
        const IdealProfile prof = classify_ideal(lattice, p);
        e["prime"] = verdict_json(r, prof.is_prime);
        e["primary"] = verdict_json(r, prof.is_primary);
        e["semiprime"] = verdict_json(r, prof.is_semiprime);
        e["maximal"] = verdict_json(r, prof.is_maximal);
        e["radical"] = format_subset(r, prof.radical);
      }
      j["ideals"].push_back(e);
    }
    j["units"] = format_subset(r, sp.units);
    j["regular_elements"] = format_subset(r, sp.regulars);
    j["jacobson"] = format_subset(r, sp.jacobson);
    j["minimal_primes"] = ordered_json::array();
    for (auto q : sp.min_primes) {
      j["minimal_primes"].push_back(format_subset(r, q));
    }
    ctx.report << j.dump(2) << "\n";
    return kOk;
  }
  auto& os = ctx.report;
  os << lattice.ideals().size() << " " << to_string(ctx.mode()) << " hyperideals of "
     << r.name() << "\n";
  for (auto p : lattice.ideals()) {
    os << "  " << format_subset(r, p);
    if (p == r.all()) {
      os << "  whole ring\n";
      continue;
    }
    const IdealProfile prof = classify_ideal(lattice, p);
    os << "  prime: " << verdict_text(r, prof.is_prime)
       << "; primary: " << verdict_text(r, prof.is_primary)
       << "; semiprime: " << verdict_text(r, prof.is_semiprime)
       << "; maximal: " << verdict_text(r, prof.is_maximal)
       << "; radical " << format_subset(r, prof.radical) << "\n";
  }
  os << "units " << (sp.units.empty() ? "{}" : format_subset(r, sp.units)) << "\n";
  os << "regular elements "
     << (sp.regulars.empty() ? "{}" : format_subset(r, sp.regulars)) << "\n";
  os << "jacobson radical " << format_subset(r, sp.jacobson) << "\n";
  os << "minimal primes";
  for (auto q : sp.min_primes) {
    os << " " << format_subset(r, q);
  }
  os << "\n";
  return kOk;
}

int cmd_classify(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const SubsetMask p = require_subset(r, ctx.opt.ideal, "--ideal");
  const SubsetMask s = require_subset(r, ctx.opt.s, "--s");
  const IdealLattice lattice(r, ctx.mode());
  if (const Verdict v = is_hyperideal(r, p, ctx.mode()); !v) {
    throw Error(ErrorCode::NotAHyperideal, format_subset(r, p) + " in " +
                                               std::string(to_string(ctx.mode())) +
                                               " mode: " + verdict_text(r, v));
  }
  if (p == r.all()) {
    throw Error(ErrorCode::ImproperIdeal, format_subset(r, p));
  }
  MulSet::make(r, s);
  ClassifyOptions copts;
  copts.all_witnesses = ctx.opt.all_witnesses;
  const SClassification c = is_s_hyperideal(lattice, p, s, copts);
  const SubsetMask rad = lattice.radical(p);
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = r.name();
    j["mode"] = std::string(to_string(ctx.mode()));
    j["P"] = format_subset(r, p);
    j["S"] = format_subset(r, s);
    j["verdict"] = std::string(to_string(c.verdict));
    j["radical"] = format_subset(r, rad);
    if (c.witness) {
      j["witness"] = s_witness_json(r, *c.witness);
    }
    if (c.sr_witness) {
      j["sr_witness"] = s_witness_json(r, *c.sr_witness);
    }
    if (ctx.opt.all_witnesses) {
      j["all_witnesses"] = ordered_json::array();
      for (const auto& w : c.all_witnesses) {
        j["all_witnesses"].push_back(s_witness_json(r, w));
      }
    }
    ctx.report << j.dump(2) << "\n";
  } else {
    auto& os = ctx.report;
    if (c.verdict == SVerdict::SHyperideal) {
      os << "S-hyperideal\n";
    } else {
      const SWitness& w = *c.witness;
      os << "not an S-hyperideal; witness " << format_tuple(r, w.tuple)
         << " at position " << w.position << "\n";
      os << "  " << s_witness_text(r, w, p, "P") << "\n";
      if (c.verdict == SVerdict::SrOnly) {
        os << "S_r-hyperideal: yes (radical " << format_subset(r, rad) << ")\n";
      } else {
        os << "S_r-hyperideal: no; witness " << format_tuple(r, c.sr_witness->tuple)
           << " at position " << c.sr_witness->position << "\n";
        os << "  " << s_witness_text(r, *c.sr_witness, rad, "r(P)") << "\n";
      }
    }
    if (ctx.opt.all_witnesses) {
      os << c.all_witnesses.size() << " witnesses\n";
      for (const auto& w : c.all_witnesses) {
        os << "  " << format_tuple(r, w.tuple) << " at position " << w.position << "\n";
      }
    }
  }
  if (!ctx.opt.expect.empty() && ctx.opt.expect != to_string(c.verdict)) {
    ctx.err << "expected " << ctx.opt.expect << ", got " << to_string(c.verdict) << "\n";
    return kNegative;
  }
  return kOk;
}

int cmd_radical(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const SubsetMask p = require_subset(r, ctx.opt.ideal, "--ideal");
  const IdealLattice lattice(r, ctx.mode());
  if (const Verdict v = is_hyperideal(r, p, ctx.mode()); !v) {
    throw Error(ErrorCode::NotAHyperideal, format_subset(r, p) + ": " + verdict_text(r, v));
  }
  const SubsetMask rad = lattice.radical(p);
  std::vector<std::pair<Element, PowerDiagnostic>> diags;
  for (auto x : rad.elements()) {
    diags.emplace_back(x, radical_power_diagnostic(lattice, p, x));
  }
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = r.name();
    j["mode"] = std::string(to_string(ctx.mode()));
    j["P"] = format_subset(r, p);
    j["radical"] = format_subset(r, rad);
    j["powers"] = ordered_json::array();
    for (const auto& [x, d] : diags) {
      ordered_json e;
      e["element"] = r.element_name(x);
      e["exponent"] = d.exponent ? ordered_json(*d.exponent) : ordered_json(nullptr);
      e["anomaly"] = d.anomaly;
      j["powers"].push_back(e);
    }
    ctx.report << j.dump(2) << "\n";
    return kOk;
  }
  ctx.report << "r(" << format_subset(r, p) << ") = " << format_subset(r, rad) << "\n";
  for (const auto& [x, d] : diags) {
    if (d.exponent) {
      ctx.report << "  " << r.element_name(x) << ": power " << *d.exponent << " lies in P\n";
    } else {
      ctx.report << "  " << r.element_name(x) << ": no power lies in P (searched up to "
                 << d.searched_up_to << ")\n";
    }
  }
  return kOk;
}

int cmd_saturate(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const SubsetMask q = require_subset(r, ctx.opt.ideal, "--ideal");
  const SubsetMask s = require_subset(r, ctx.opt.s, "--s");
  const Saturation sat = saturation(r, q, s, ctx.mode());
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = r.name();
    j["Q"] = format_subset(r, q);
    j["S"] = format_subset(r, s);
    j["saturation"] = sat.set.empty() ? "{}" : format_subset(r, sat.set);
    j["proper"] = sat.proper;
    j["one_in_s"] = sat.hypothesis_one_in_s;
    ctx.report << j.dump(2) << "\n";
    return kOk;
  }
  ctx.report << format_subset(r, q) << "^" << format_subset(r, s) << " = "
             << (sat.set.empty() ? "{}" : format_subset(r, sat.set))
             << (sat.proper ? "" : " (whole ring)") << "\n";
  if (!sat.hypothesis_one_in_s) {
    ctx.report << "note: 1 is not in S; minimality is not asserted\n";
  }
  return kOk;
}

int cmd_residual(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const SubsetMask p = require_subset(r, ctx.opt.ideal, "--ideal");
  const SubsetMask x = require_subset(r, ctx.opt.by, "--by");
  const SubsetMask res = residual(r, p, x);
  const std::string text = res.empty() ? "{}" : format_subset(r, res);
  if (ctx.json()) {
    ordered_json j;
    j["ring"] = r.name();
    j["P"] = format_subset(r, p);
    j["X"] = format_subset(r, x);
    j["residual"] = text;
    ctx.report << j.dump(2) << "\n";
  } else {
    ctx.report << format_subset(r, p) << "_" << format_subset(r, x) << " = " << text << "\n";
  }
  return kOk;
}

int cmd_quotient(Context& ctx) {
  const HyperRing r = load_ring(ctx, single_input(ctx.opt));
  const SubsetMask p = require_subset(r, ctx.opt.ideal, "--ideal");
  std::optional<std::string> name;
  if (!ctx.opt.name.empty()) {
    name = ctx.opt.name;
  }
  const QuotientRing q = quotient_ring(r, p, ctx.mode(), name);
  ctx.report << serialize_spec(q.quotient.spec());
  return kOk;
}

int cmd_product(Context& ctx) {
  if (ctx.opt.inputs.size() < 2) {
    throw UsageError("product needs at least two inputs");
  }
  std::vector<HyperRing> factors;
  for (const auto& in : ctx.opt.inputs) {
    factors.push_back(load_ring(ctx, in));
  }
  HyperRing prod = product_ring(factors, ctx.verify_options());
  ctx.report << serialize_spec(prod.spec());
  return kOk;
}

std::vector<TheoremId> parse_only(const std::string& text) {
  std::vector<TheoremId> ids;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    ids.push_back(parse_theorem(item));
  }
  return ids;
}

int cmd_theorems(Context& ctx) {
  std::vector<HyperRing> rings;
  if (ctx.opt.inputs.empty()) {
    for (const auto& name : default_suite_fixtures()) {
      rings.push_back(fixture(name));
    }
  } else {
    for (const auto& in : ctx.opt.inputs) {
      rings.push_back(load_ring(ctx, in));
    }
  }
  CheckOptions copts;
  copts.mode = ctx.mode();
  copts.avoid_budget = ctx.opt.avoid_budget;
  const SuiteResult result =
      run_suite(rings, copts, parse_only(ctx.opt.only), ctx.opt.jobs);
  ctx.report << (ctx.json() ? suite_json(result, ctx.opt.timings)
                            : suite_text(result, ctx.opt.timings));
  if (result.status == SuiteStatus::Counterexample) {
    return kNegative;
  }
  if (ctx.opt.require_coverage && result.status == SuiteStatus::HypothesisGap) {
    return kNegative;
  }
  return kOk;
}

int cmd_fixtures(Context& ctx) {
  if (ctx.opt.inputs.size() > 1) {
    throw UsageError("fixtures takes at most one name");
  }
  if (ctx.opt.inputs.size() == 1) {
    ctx.report << serialize_spec(fixture(ctx.opt.inputs.front()).spec());
    return kOk;
  }
  if (ctx.json()) {
    ordered_json j = ordered_json::array();
    for (const auto& name : fixture_names()) {
      const HyperRing f = fixture(name);
      j.push_back({{"name", name}, {"m", f.m()}, {"n", f.n()}, {"order", f.order()}});
    }
    ctx.report << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& name : fixture_names()) {
    const HyperRing f = fixture(name);
    ctx.report << name << "  (" << f.m() << "," << f.n() << ")  order " << f.order() << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite Krasner (m,n)-hyperrings: axioms, hyperideals, S-hyperideals"};
  app.name("hyperideal");
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "Hyperideal mode")
        ->check(CLI::IsMember({"lenient", "strict"}));
    sub->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", opt.out, "Write the report to this file");
    sub->add_flag("--exact-distributivity", opt.exact,
                  "Require distributivity as an equality");
  };

  struct Command {
    const char* name;
    const char* help;
    int (*fn)(Context&);
  };
  const Command commands[] = {
      {"verify", "Check every hyperring axiom", cmd_verify},
      {"ideals", "List hyperideals with their classification", cmd_ideals},
      {"classify", "Decide whether --ideal is an S-hyperideal for --s", cmd_classify},
      {"radical", "Radical of --ideal with power diagnostics", cmd_radical},
      {"saturate", "Saturation of --ideal by --s", cmd_saturate},
      {"residual", "Residual of --ideal by --by", cmd_residual},
      {"quotient", "Quotient document by --ideal", cmd_quotient},
      {"product", "Product document of the inputs", cmd_product},
      {"theorems", "Run the theorem suite", cmd_theorems},
      {"fixtures", "List built-in rings or print one as a document", cmd_fixtures},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("inputs", opt.inputs, "Ring documents or fixture names");
    add_common(sub);
    subs.emplace_back(sub, &c);
  }
  auto* classify = subs[2].first;
  classify->add_option("--ideal", opt.ideal, "Comma-joined element names");
  classify->add_option("--s", opt.s, "Multiplicative set");
  classify->add_flag("--all-witnesses", opt.all_witnesses, "Report every failure");
  classify->add_option("--expect", opt.expect, "Expected verdict")
      ->check(CLI::IsMember({"s-hyperideal", "sr-only", "neither"}));
  subs[3].first->add_option("--ideal", opt.ideal, "Comma-joined element names");
  subs[4].first->add_option("--ideal", opt.ideal, "Comma-joined element names");
  subs[4].first->add_option("--s", opt.s, "Multiplicative set");
  subs[5].first->add_option("--ideal", opt.ideal, "Comma-joined element names");
  subs[5].first->add_option("--by", opt.by, "Comma-joined element names");
  subs[6].first->add_option("--ideal", opt.ideal, "Comma-joined element names");
  subs[6].first->add_option("--name", opt.name, "Name of the quotient ring");
  auto* theorems = subs[8].first;
  theorems->add_option("--only", opt.only, "Comma-joined catalog ids");
  theorems->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  theorems->add_flag("--timings", opt.timings, "Include runtimes");
  theorems->add_flag("--require-coverage", opt.require_coverage,
                     "Exit 1 when some hypothesis is never met");
  theorems->add_option("--avoid-budget", opt.avoid_budget,
                       "Configurations examined by the avoidance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  Context ctx{opt, {}, err};
  int code = kInvalid;
  try {
    for (const auto& [sub, cmd] : subs) {
      if (sub->parsed()) {
        code = cmd->fn(ctx);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    code = kInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    code = kInvalid;
  }

  const std::string text = ctx.report.str();
  if (!opt.out.empty() && code != kInvalid) {
    std::ofstream file(opt.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write '" << opt.out << "'\n";
      return kInvalid;
    }
  } else {
    out << text;
  }
  out.flush();
  return code;
}

}  // namespace hyperideal::cli
