#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "isex/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact periodic decomposition and ergodicity analysis of invariant credal sets on finite systems"};
  app.require_subcommand(1, 1);

  isex::CommandOptions options;
  bool text = false;
  bool json = false;
  std::uint64_t d = 0;
  std::uint64_t l_max = 0;
  std::string f;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", options.input_path, "SystemDocument JSON file");
    if (needs_input) input->required();
    sub->add_option("--f", f, "observable as comma-separated rationals, e.g. \"1,0,-1/2\"");
    sub->add_option("--d", d, "component index d >= 1");
    sub->add_option("--l-max", l_max, "largest component index to examine");
    sub->add_option("--seed", options.seed, "seed for sampled observables");
    sub->add_flag("--json", json, "JSON output (default)");
    sub->add_flag("--text", text, "indented text output");
  };

  add_common(app.add_subcommand("validate", "check E[f o T] = E[f] for all f, with a witness on failure"), true);
  add_common(app.add_subcommand("analyze", "period, components, strong ergodicity and (with --f) time means"), true);
  add_common(app.add_subcommand("decompose", "Theta^(d) and E^(d)[f] by three independent routes"), true);
  add_common(app.add_subcommand("periods", "p_E, p_d and their divisibility lattice"), true);
  auto* ergodic = app.add_subcommand("ergodic", "ergodic decompositions, strong ergodicity, time-mean checks");
  add_common(ergodic, true);
  ergodic->add_option("--simulate", options.simulate,
                      "also average f along a sampled path of this many p_E-steps (demonstration only)");
  add_common(app.add_subcommand("check-theorems", "full ledger of verified identities on one instance"), true);
  auto* gallery = app.add_subcommand("gallery", "emit a gallery system as a SystemDocument");
  add_common(gallery, false);
  gallery->add_option("--kind", options.kind, "cycle | product_shift | random_invariant");
  gallery->add_option("--q", options.q, "cycle length");
  gallery->add_option("--s", options.s, "alphabet size (product_shift)");
  gallery->add_option("--m", options.m, "word length (product_shift)");
  gallery->add_option("--marginal", options.marginals, "marginal over the alphabet, repeatable (product_shift)");
  gallery->add_option("--n", options.n, "state count (random_invariant)");
  gallery->add_option("--k", options.k, "number of random probabilities (random_invariant)");

  CLI11_PARSE(app, argc, argv);
  if (text && json) {
    std::cerr << "--json and --text are exclusive\n";
    return 2;
  }
  if (d != 0) options.d = d;
  if (l_max != 0) options.l_max = l_max;
  if (!f.empty()) options.f = f;

  const std::string name = app.get_subcommands().front()->get_name();
  const isex::CommandResult result = isex::run_subcommand(name, options);
  if (result.exit_code == 2) std::cerr << "error: " << result.diagnostic << "\n";
  std::cout << (text ? isex::render_text(result.report) : result.report.dump(2) + "\n");
  return result.exit_code;
}
