#include "isex/cli.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "isex/decomposition.hpp"
#include "isex/ergodicity.hpp"
#include "isex/error.hpp"
#include "isex/gallery.hpp"
#include "isex/periods.hpp"
#include "isex/random.hpp"

namespace isex {

namespace {

constexpr const char* kVerified = "verified";
constexpr const char* kFailed = "failed";
constexpr const char* kNotApplicable = "not-applicable";

SystemDocument load_document(const CommandOptions& options) {
  if (options.input_text) return parse_system(*options.input_text);
  if (!options.input_path) throw Error(ErrorKind::kInvalidArgument, "--input <path> is required");
  std::ifstream in(*options.input_path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read input file '" + *options.input_path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::optional<Observable> requested_observable(const CommandOptions& options, std::size_t n) {
  if (!options.f) return std::nullopt;
  Observable f{parse_rational_list(*options.f)};
  if (f.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                "--f has " + std::to_string(f.size()) + " entries but the system has " + std::to_string(n) + " states");
  }
  return f;
}

/// The requested f (if any), every state indicator, and two seeded random observables.
std::vector<Observable> probe_observables(const CommandOptions& options, std::size_t n) {
  std::vector<Observable> out;
  if (auto f = requested_observable(options, n)) out.push_back(std::move(*f));
  for (State x = 0; x < n; ++x) {
    const State one[] = {x};
    out.push_back(indicator(n, one));
  }
  Rng rng(options.seed);
  for (int i = 0; i < 2; ++i) out.push_back(random_observable(n, rng));
  return out;
}

Json states_json(const std::vector<State>& states) { return Json(states); }

Json header(std::string_view command, const SystemDocument& doc) {
  Json out;
  out["command"] = std::string(command);
  if (doc.label) out["label"] = *doc.label;
  out["n"] = doc.map.size();
  return out;
}

ComponentTable build_table(const SystemDocument& doc) { return ComponentTable(InvariantSystem(doc.map, doc.credal)); }

Json permutation_json(const Permutation& p) { return Json(p.mapping()); }

Json strong_ergodicity_json(const StrongErgodicityVerdict& verdict) {
  Json out;
  out["strongly_ergodic"] = verdict.strongly_ergodic;
  Json components = Json::array();
  for (const auto& c : verdict.components) {
    Json j;
    j["d"] = c.d;
    j["p_d"] = c.p_d;
    j["atoms"] = c.atom_count;
    j["holds"] = c.holds;
    if (c.counterexample) {
      j["counterexample"] = states_json(*c.counterexample);
      j["upper_probability"] = to_json(*c.counterexample_value);
    }
    components.push_back(std::move(j));
  }
  out["components"] = std::move(components);
  return out;
}

Json ergodic_theorem_json(const Observable& f, const ErgodicTheoremCheck& check) {
  Json out;
  out["f"] = to_json(f);
  out["upper"] = to_json(check.upper);
  out["lower"] = to_json(check.lower);
  out["step"] = check.period;
  out["strongly_ergodic"] = check.hypothesis;
  Json sandwich = Json::array();
  for (const auto& r : check.sandwich) {
    Json j;
    j["generator"] = r.generator;
    j["state"] = r.state;
    j["mean"] = to_json(r.mean);
    j["within"] = r.within;
    sandwich.push_back(std::move(j));
  }
  out["sandwich"] = std::move(sandwich);
  out["sandwich_holds"] = check.sandwich_holds;
  if (check.achiever) {
    out["achiever"] = to_json(*check.achiever);
    Json means = Json::array();
    for (const auto& [x, mean] : check.achiever_means) means.push_back(Json{{"state", x}, {"mean", to_json(mean)}});
    out["achiever_means"] = std::move(means);
  } else {
    out["achiever"] = nullptr;
  }
  out["verdict"] = std::string(to_string(check.verdict));
  return out;
}

/// Demonstration only: start at a state drawn from p and average f along
/// `steps` applications of T^(p_E). Carries no weight in any verdict.
Json simulate_path(const ComponentTable& table, const Observable& f, const ProbVec& p, std::uint64_t steps, Rng& rng) {
  const std::uint64_t period = period_of(table.system());
  const SystemMap step = compose_power(table.map(), period);
  // Inverse-CDF draw on a grid of 2^32 points; exact enough for a demonstration.
  const Rational u(static_cast<unsigned long>(rng.below(std::uint64_t{1} << 32)), std::uint64_t{1} << 32);
  State x = 0;
  Rational cumulative = 0;
  for (State y = 0; y < p.size(); ++y) {
    cumulative += p[y];
    if (p[y] > 0) x = y;
    if (u < cumulative) break;
  }
  const State start = x;
  Rational total = 0;
  for (std::uint64_t k = 0; k < steps; ++k) {
    total += f[x];
    x = step(x);
  }
  return Json{{"start", start}, {"steps", steps}, {"mean", to_json(total / Rational(static_cast<unsigned long>(steps)))}};
}

CommandResult validate(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  Json report = header("validate", doc);
  const CredalSet canonical = extreme_points(doc.credal.generators());
  report["generators_given"] = doc.credal.size();
  report["extreme_points"] = to_json(canonical);
  const InvarianceVerdict verdict = check_invariance(canonical, doc.map);
  report["invariant"] = verdict.invariant;
  if (verdict.invariant) {
    const Permutation pi = pushforward_permutation(canonical, doc.map);
    report["permutation"] = permutation_json(pi);
    report["period"] = pi.order();
  } else {
    report["witness"] = Json{{"f", to_json(*verdict.witness)},
                             {"upper", to_json(verdict.upper_of_witness)},
                             {"upper_shifted", to_json(verdict.upper_of_shifted_witness)}};
  }
  return {std::move(report), verdict.invariant ? 0 : 1, {}};
}

CommandResult analyze(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  const ComponentTable table = build_table(doc);
  Json report = header("analyze", doc);
  const std::uint64_t period = period_of(table.system());
  report["invariant"] = true;
  report["period"] = period;
  report["permutation"] = permutation_json(table.system().permutation());
  Json components = Json::array();
  for (std::uint64_t d : divisors(period)) {
    Json c;
    c["d"] = d;
    c["p_d"] = period_of_component(table, d);
    c["extreme_points"] = to_json(table.theta(d));
    components.push_back(std::move(c));
  }
  report["components"] = std::move(components);
  const StrongErgodicityVerdict strong = strong_ergodicity_check(table);
  report["strong_ergodicity"] = strong_ergodicity_json(strong);

  int exit_code = 0;
  if (auto f = requested_observable(options, doc.map.size())) {
    Json values;
    values["f"] = to_json(*f);
    values["upper"] = to_json(upper_expectation(table.credal(), *f));
    Json per_d = Json::array();
    for (std::uint64_t d = 1; d <= period; ++d) {
      per_d.push_back(Json{{"d", d}, {"value", to_json(e_d_lp(table, d, *f))}});
    }
    values["components"] = std::move(per_d);
    const PeriodicDecompositionCheck decomposition = periodic_decomposition_check(table, *f);
    values["periodic_decomposition"] = decomposition.holds;
    if (!decomposition.holds) exit_code = 1;
    const ErgodicTheoremCheck theorem = ergodic_theorem_check(table, *f);
    values["time_means"] = ergodic_theorem_json(*f, theorem);
    if (theorem.verdict == Verdict::kFails) exit_code = 1;
    report["observable"] = std::move(values);
  }
  return {std::move(report), exit_code, {}};
}

CommandResult decompose(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  const ComponentTable table = build_table(doc);
  const std::uint64_t d = options.d.value_or(1);
  Json report = header("decompose", doc);
  report["d"] = d;
  report["extreme_points"] = to_json(table.theta(d));
  report["p_d"] = period_of_component(table, d);
  int exit_code = 0;
  if (auto f = requested_observable(options, doc.map.size())) {
    const Rational lp = e_d_lp(table, d, *f);
    const Rational closed = e_d_closed_form(table, d, *f);
    const OrbitStructure orbit = orbit_structure(compose_power(doc.map, d));
    Json cesaro = Json::array();
    bool bounded = true;
    const std::uint64_t last = std::min<std::uint64_t>(orbit.transient_length + 5 * orbit.period, 256);
    for (std::uint64_t k = 1; k <= last; ++k) {
      const Rational v = cesaro_upper(table, d, *f, k);
      bounded = bounded && v >= closed;
      cesaro.push_back(Json{{"n", k}, {"value", to_json(v)}});
    }
    report["f"] = to_json(*f);
    report["support_function"] = to_json(lp);
    report["closed_form"] = to_json(closed);
    report["cesaro"] = std::move(cesaro);
    report["routes_agree"] = lp == closed && bounded;
    if (!(lp == closed && bounded)) exit_code = 1;
  }
  return {std::move(report), exit_code, {}};
}

CommandResult periods(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  const ComponentTable table = build_table(doc);
  const std::uint64_t period = period_of(table.system());
  const std::uint64_t d_max = options.l_max.value_or(period);
  Json report = header("periods", doc);
  const PeriodReport pr = period_report(table, d_max);
  report["period"] = pr.period;
  Json comps = Json::array();
  for (const auto& c : pr.components) comps.push_back(Json{{"d", c.d}, {"p_d", c.p_d}, {"vertices", c.vertex_count}});
  report["components"] = std::move(comps);
  report["lattice"] = pr.lattice_facts;
  bool ok = pr.lattice_holds;

  Json characterization = Json::array();
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const auto c = check_period_characterization(table, d, 5, options.seed);
    characterization.push_back(Json{{"d", d},
                                    {"shift_invariant", c.shift_invariant},
                                    {"equals_component", c.equals_component},
                                    {"holds", c.holds}});
    ok = ok && c.holds;
  }
  report["characterization"] = std::move(characterization);
  Json minimality = Json::array();
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const auto c = check_period_lattice(table, d);
    minimality.push_back(Json{{"d", d}, {"p_d", c.p_d}, {"first_equal_component", c.first_equal_component}, {"holds", c.holds}});
    ok = ok && c.holds;
  }
  report["minimality"] = std::move(minimality);
  const DominatingComponent dom = dominating_component(table, d_max);
  report["dominating_d"] = dom.d;
  report["dominating_inclusions_hold"] = dom.inclusions_hold;
  report["cardinality_monotone"] = dom.cardinality_monotone;
  ok = ok && dom.inclusions_hold;
  return {std::move(report), ok ? 0 : 1, {}};
}

CommandResult ergodic(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  const ComponentTable table = build_table(doc);
  const std::uint64_t period = period_of(table.system());
  Json report = header("ergodic", doc);
  report["period"] = period;
  const StrongErgodicityVerdict strong = strong_ergodicity_check(table);
  report["strong_ergodicity"] = strong_ergodicity_json(strong);
  bool ok = true;

  Json decompositions = Json::array();
  for (std::uint64_t d : divisors(period)) {
    const ErgodicReport er = ergodic_decomposition(table, d);
    Json j;
    j["d"] = d;
    j["p_d"] = er.p_d;
    Json points = Json::array();
    for (const auto& r : er.extreme_points) {
      Json p{{"point", to_json(r.point)}, {"ergodic", r.ergodic}};
      if (r.carrier_atom) p["carrier_atom"] = *r.carrier_atom;
      points.push_back(std::move(p));
    }
    j["extreme_points"] = std::move(points);
    j["all_ergodic"] = er.all_ergodic;
    if (er.mutually_singular) j["mutually_singular"] = *er.mutually_singular;
    if (strong.strongly_ergodic) ok = ok && er.all_ergodic && er.mutually_singular.value_or(false);
    decompositions.push_back(std::move(j));
  }
  report["decompositions"] = std::move(decompositions);

  if (doc.map.size() <= kDefaultCoreStateCap) {
    const InvariantCoreCheck core = theta_hat_invariant_equality(table);
    Json j{{"verdict", std::string(to_string(core.verdict))}, {"invariant_part", to_json(core.invariant_part)}};
    if (core.hypothesis_counterexample) j["not_ergodic_on"] = states_json(*core.hypothesis_counterexample);
    if (core.core_invariant) j["core_invariant_part"] = to_json(*core.core_invariant);
    ok = ok && core.verdict != Verdict::kFails;
    report["invariant_core"] = std::move(j);
  } else {
    report["invariant_core"] = Json{{"verdict", kNotApplicable}, {"reason", "state count above the core cap"}};
  }

  std::vector<Observable> fs;
  if (auto f = requested_observable(options, doc.map.size())) {
    fs.push_back(std::move(*f));
  } else {
    for (State x = 0; x < doc.map.size(); ++x) {
      const State one[] = {x};
      fs.push_back(indicator(doc.map.size(), one));
    }
  }
  Json means = Json::array();
  Rng rng(options.seed);
  for (const auto& f : fs) {
    const ErgodicTheoremCheck check = ergodic_theorem_check(table, f);
    ok = ok && check.verdict != Verdict::kFails;
    Json j = ergodic_theorem_json(f, check);
    if (options.simulate > 0 && check.achiever) j["simulation"] = simulate_path(table, f, *check.achiever, options.simulate, rng);
    means.push_back(std::move(j));
  }
  report["time_means"] = std::move(means);
  return {std::move(report), ok ? 0 : 1, {}};
}

class Ledger {
 public:
  void add(const std::string& check, const std::string& statement, Json inputs, Json lhs, Json rhs,
           const char* verdict) {
    Json entry;
    entry["check"] = check;
    entry["statement"] = statement;
    entry["inputs"] = std::move(inputs);
    entry["lhs"] = std::move(lhs);
    entry["rhs"] = std::move(rhs);
    entry["verdict"] = verdict;
    entries_.push_back(std::move(entry));
    ++counts_[verdict];
  }

  void add(const std::string& check, const std::string& statement, Json inputs, Json lhs, Json rhs, bool ok) {
    add(check, statement, std::move(inputs), std::move(lhs), std::move(rhs), ok ? kVerified : kFailed);
  }

  bool any_failed() const { return counts_.contains(kFailed); }

  Json summary() const {
    Json out;
    for (const char* key : {kVerified, kFailed, kNotApplicable}) {
      auto it = counts_.find(key);
      out[key] = it == counts_.end() ? 0 : it->second;
    }
    return out;
  }

  Json entries() const { return entries_; }

 private:
  Json entries_ = Json::array();
  std::map<std::string, std::size_t> counts_;
};

CommandResult check_theorems(const CommandOptions& options) {
  const SystemDocument doc = load_document(options);
  const ComponentTable table = build_table(doc);
  const SystemMap& map = table.map();
  const CredalSet& credal = table.credal();
  const std::size_t n = map.size();
  const std::uint64_t period = period_of(table.system());
  const std::uint64_t d_max = options.l_max.value_or(6);
  const std::vector<Observable> fs = probe_observables(options, n);
  Rng rng(options.seed ^ 0x5eedULL);
  Ledger ledger;
  std::size_t skipped_gcd = 0;

  for (std::uint64_t d = 1; d <= d_max; ++d) {
    const SystemMap step = compose_power(map, d);
    const CredalSet& theta = table.theta(d);

    bool dominated = true;
    for (const auto& p : theta.generators()) dominated = dominated && pushforward(p, step) == p && membership(p, credal);
    bool contains_invariant = true;
    for (const auto& g : credal.generators()) {
      if (pushforward(g, step) == g) contains_invariant = contains_invariant && membership(g, theta);
    }
    ledger.add("component-characterization",
               "P in Theta^(d) iff P is dominated by E and T^d-invariant",
               Json{{"d", d}}, to_json(theta), Json{{"members_dominated_and_invariant", dominated},
                                                   {"invariant_generators_included", contains_invariant}},
               dominated && contains_invariant);

    const OrbitStructure orbit = orbit_structure(step);
    for (const auto& f : fs) {
      const Rational lp = e_d_lp(table, d, f);
      const Rational closed = e_d_closed_form(table, d, f);
      bool bounded = true;
      for (std::uint64_t m = 1; m <= 5; ++m) {
        bounded = bounded && cesaro_upper(table, d, f, orbit.transient_length + m * orbit.period) >= closed;
      }
      ledger.add("three-routes", "support function of Theta^(d) = exact Cesaro limit <= finite Cesaro averages",
                 Json{{"d", d}, {"f", to_json(f)}}, to_json(lp), to_json(closed), lp == closed && bounded);

      const Observable g = random_observable(n, rng);
      const ShiftIdentityCheck shift = check_shift_identity(table, d, f, g);
      ledger.add("shift-identity", "E^(d)[f + g o T^d - g] = E^(d)[f]",
                 Json{{"d", d}, {"f", to_json(f)}, {"g", to_json(g)}}, to_json(shift.shifted), to_json(shift.plain),
                 shift.holds);

      const Rational shifted = e_d_lp(table, d, compose(f, map));
      ledger.add("component-invariance", "E^(d)[f o T] = E^(d)[f]", Json{{"d", d}, {"f", to_json(f)}},
                 to_json(shifted), to_json(lp), shifted == lp);
    }

    for (std::uint64_t l = 2 * d; l <= d_max; l += d) {
      const InclusionCheck inc = check_monotone_inclusion(table, d, l);
      ledger.add("monotone-inclusion", "Theta^(d) within Theta^(l) for d | l", Json{{"d", d}, {"l", l}},
                 to_json(table.theta(d)), to_json(table.theta(l)), inc.holds);
    }

    for (std::uint64_t l = 1; l <= d_max; ++l) {
      const GcdReductionCheck gcd = check_gcd_reduction(table, l, d);
      if (!gcd.precondition_met) {
        ++skipped_gcd;
      } else {
        ledger.add("gcd-reduction", "Theta^(l) within Theta^(d) implies Theta^(l) = Theta^(gcd(l, d))",
                   Json{{"l", l}, {"d", d}, {"gcd", gcd.gcd}}, to_json(table.theta(l)), to_json(table.theta(gcd.gcd)),
                   gcd.holds);
      }
      const IteratedDecompositionCheck it = check_iterated_decomposition(table, d, l);
      ledger.add("iterated-decomposition", "(E^(d))^(l) = E^(gcd(l, d))", Json{{"d", d}, {"l", l}, {"gcd", it.gcd}},
                 to_json(it.nested), to_json(it.reduced), it.holds);
    }

    const PeriodCharacterizationCheck pc = check_period_characterization(table, d, 5, options.seed);
    ledger.add("period-characterization", "E[f o T^d - f] = 0 for all f iff E = E^(d), and then p_E | d",
               Json{{"d", d}}, pc.shift_invariant, pc.equals_component, pc.holds);

    const PeriodLatticeCheck lattice = check_period_lattice(table, d);
    ledger.add("period-minimality", "p_d | d and p_d = min{l : E^(l) = E^(d)}", Json{{"d", d}}, lattice.p_d,
               lattice.first_equal_component, lattice.holds);
    for (std::uint64_t l = 2 * d; l <= d_max; l += d) {
      const PeriodLatticeCheck div = check_period_lattice(table, d, l);
      ledger.add("period-divisibility", "p_d | p_l for d | l", Json{{"d", d}, {"l", l}}, div.p_d, *div.p_l,
                 *div.p_d_divides_p_l);
    }
  }

  for (const auto& f : fs) {
    const PeriodicDecompositionCheck pd = periodic_decomposition_check(table, f);
    ledger.add("periodic-decomposition", "E[f] = sup_d E^(d)[f], attained at d = p_E",
               Json{{"f", to_json(f)}, {"p_E", pd.period}}, to_json(pd.upper), to_json(pd.component_upper),
               pd.holds);
  }

  const InvariantPartition atoms = invariant_partition(map, 1);
  for (std::size_t i = 0; i < credal.size(); ++i) {
    const ProbVec surrogate = invariant_surrogate(credal, map, credal[i]);
    bool agrees = true;
    for (const auto& atom : atoms.atoms) agrees = agrees && surrogate.probability(atom) == credal[i].probability(atom);
    const bool ok = agrees && pushforward(surrogate, map) == surrogate && membership(surrogate, credal);
    ledger.add("invariant-surrogate", "some T-invariant P' in Theta equals P on the invariant events",
               Json{{"generator", i}}, to_json(credal[i]), to_json(surrogate), ok);
  }

  if (n <= kDefaultCoreStateCap) {
    const InvariantCoreCheck core = theta_hat_invariant_equality(table);
    if (core.verdict == Verdict::kNotApplicable) {
      ledger.add("invariant-core-equality", "V T-ergodic implies Theta(T) = invariant part of the capacity core",
                 Json::object(), to_json(core.invariant_part), nullptr, kNotApplicable);
    } else {
      ledger.add("invariant-core-equality", "V T-ergodic implies Theta(T) = invariant part of the capacity core",
                 Json::object(), to_json(core.invariant_part), to_json(*core.core_invariant),
                 core.verdict == Verdict::kHolds);
    }
  }

  const StrongErgodicityVerdict strong = strong_ergodicity_check(table);
  for (std::uint64_t d : divisors(period)) {
    const ErgodicReport er = ergodic_decomposition(table, d);
    const char* verdict = !strong.strongly_ergodic ? kNotApplicable
                          : (er.all_ergodic && er.mutually_singular.value_or(false)) ? kVerified
                                                                                     : kFailed;
    ledger.add("ergodic-decomposition",
               "strong ergodicity implies ext Theta^(d) are mutually singular T^(p_d)-ergodic probabilities",
               Json{{"d", d}, {"p_d", er.p_d}}, er.all_ergodic, er.mutually_singular.value_or(false), verdict);
  }

  const DominatingComponent dom = dominating_component(table, std::max(d_max, period));
  ledger.add("dominating-component", "Theta^(l) within Theta^(p_E) for every l",
             Json{{"d", dom.d}, {"l_max", dom.l_max}}, dom.inclusions_hold, Json(dom.failing_l), dom.inclusions_hold);
  ledger.add("cardinality-monotone", "card ext Theta^(a) <= card ext Theta^(b) for a | b (under strong ergodicity)",
             Json{{"l_max", dom.l_max}}, dom.cardinality_monotone, strong.strongly_ergodic,
             !strong.strongly_ergodic ? kNotApplicable : dom.cardinality_monotone ? kVerified : kFailed);

  for (const auto& f : fs) {
    const ErgodicTheoremCheck et = ergodic_theorem_check(table, f);
    const char* verdict = et.verdict == Verdict::kNotApplicable ? kNotApplicable
                          : et.verdict == Verdict::kHolds       ? kVerified
                                                                : kFailed;
    ledger.add("time-mean-sandwich",
               "-E[-f] <= p_E-step time mean <= E[f] on every support, = E[f] on supp(P_f)", Json{{"f", to_json(f)}},
               Json{{"lower", to_json(et.lower)}, {"upper", to_json(et.upper)}},
               et.achiever ? to_json(*et.achiever) : Json(nullptr), verdict);
  }

  Json report = header("check-theorems", doc);
  report["period"] = period;
  report["strongly_ergodic"] = strong.strongly_ergodic;
  report["summary"] = ledger.summary();
  report["summary"]["gcd_pairs_without_inclusion"] = skipped_gcd;
  report["ledger"] = ledger.entries();
  return {std::move(report), ledger.any_failed() ? 1 : 0, {}};
}

CommandResult gallery(const CommandOptions& options) {
  GallerySystem g = [&]() {
    if (options.kind == "cycle") return gen_cycle(options.q);
    if (options.kind == "product_shift") {
      std::vector<ProbVec> marginals;
      for (const auto& m : options.marginals) marginals.emplace_back(parse_rational_list(m));
      return gen_product_shift(options.s, options.m, marginals);
    }
    if (options.kind == "random_invariant") return gen_random_invariant(options.n, options.k, options.seed);
    throw Error(ErrorKind::kInvalidArgument,
                "unknown gallery kind '" + options.kind + "' (cycle, product_shift, random_invariant)");
  }();
  return {system_to_json(SystemDocument{std::move(g.map), std::move(g.credal), std::move(g.label)}), 0, {}};
}

std::string tag_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotInvariant: return "invariance precondition: ";
    case ErrorKind::kMalformedJson:
    case ErrorKind::kNotAProbability:
    case ErrorKind::kBadMap: return "input: ";
    case ErrorKind::kNotDivisible: return "divisibility precondition: ";
    case ErrorKind::kStateCapExceeded:
    case ErrorKind::kAtomCapExceeded:
    case ErrorKind::kCapExceeded: return "size cap: ";
    default: return "";
  }
}

}  // namespace

CommandResult run_subcommand(std::string_view name, const CommandOptions& options) {
  try {
    if (name == "validate") return validate(options);
    if (name == "analyze") return analyze(options);
    if (name == "decompose") return decompose(options);
    if (name == "periods") return periods(options);
    if (name == "ergodic") return ergodic(options);
    if (name == "check-theorems") return check_theorems(options);
    if (name == "gallery") return gallery(options);
    throw Error(ErrorKind::kInvalidArgument, "unknown subcommand '" + std::string(name) + "'");
  } catch (const Error& e) {
    Json report{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    return {std::move(report), 2, tag_for(e.kind()) + e.what()};
  }
}

}  // namespace isex
