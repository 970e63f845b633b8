#include "blamelogic/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "blamelogic/game.hpp"
#include "blamelogic/harness.hpp"
#include "blamelogic/model_checker.hpp"
#include "blamelogic/parser.hpp"
#include "blamelogic/proof.hpp"

namespace blamelogic {

namespace {

struct Options {
  std::string game_file;
  std::size_t play = 0;
  std::string formula;
  std::optional<std::size_t> max_size;
  std::string proof_file;
  std::string bundled;
  std::uint64_t seed = 0;
  std::size_t games = 0;
  std::size_t instances = 20;
};

int run_check(const Options& o, std::ostream& out) {
  const Game g = load_game_file(o.game_file);
  const bool holds = satisfies(g, o.play, parse(o.formula));
  out << (holds ? "true" : "false") << "\n";
  return holds ? kExitHolds : kExitFails;
}

int run_valid(const Options& o, std::ostream& out) {
  const Game g = load_game_file(o.game_file);
  const Validity v = valid_in_game(g, parse(o.formula));
  if (v.ok()) {
    out << "ok\n";
    return kExitHolds;
  }
  out << "counterexample: play " << *v.counterexample << "\n";
  return kExitFails;
}

int run_blame(const Options& o, std::ostream& out) {
  const Game g = load_game_file(o.game_file);
  const std::size_t max_size = o.max_size.value_or(g.agents.size());
  const BlameReport report = blamable_coalitions(g, o.play, parse(o.formula), max_size);
  out << blame_report_json(g, report);
  return report.entries.empty() ? kExitFails : kExitHolds;
}

int run_proof(const Options& o, std::ostream& out, std::ostream& err) {
  const bool has_file = !o.proof_file.empty();
  const bool has_bundled = !o.bundled.empty();
  if (has_file == has_bundled) {
    err << "error: proof needs exactly one of FILE or --bundled NAME\n";
    return kExitUsage;
  }
  Proof p;
  if (has_bundled) {
    const Proof* found = find_bundled(o.bundled);
    if (found == nullptr) {
      err << "error: no bundled script named '" << o.bundled << "'; available:";
      for (const auto& s : bundled_scripts()) err << " " << s.name;
      err << "\n";
      return kExitUsage;
    }
    p = *found;
  } else {
    p = load_proof_file(o.proof_file);
  }
  const ProofCheck result = check_proof(p);
  out << result.describe() << "\n";
  return result.ok() ? kExitHolds : kExitFails;
}

int run_fuzz(const Options& o, std::ostream& out) {
  const SweepReport report = soundness_sweep(default_sweep_bounds(o.seed), o.games, o.instances);
  out << sweep_report_json(report);
  return report.total_failures == 0 ? kExitHolds : kExitFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checking and proof checking for coalition blameworthiness", "blamecheck"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Truth of a formula at one play");
  check->add_option("--game", o.game_file, "Game JSON file")->required();
  check->add_option("--play", o.play, "Play index")->required();
  check->add_option("--formula", o.formula, "Formula")->required();

  auto* valid = app.add_subcommand("valid", "Truth of a formula at every play");
  valid->add_option("--game", o.game_file, "Game JSON file")->required();
  valid->add_option("--formula", o.formula, "Formula")->required();

  auto* blame = app.add_subcommand("blame", "Blamable coalitions at a play, as JSON");
  blame->add_option("--game", o.game_file, "Game JSON file")->required();
  blame->add_option("--play", o.play, "Play index")->required();
  blame->add_option("--formula", o.formula, "Formula")->required();
  blame->add_option("--max-size", o.max_size, "Largest coalition size (default: all agents)");

  auto* proof = app.add_subcommand("proof", "Check a proof script");
  proof->add_option("file", o.proof_file, "Proof JSON file");
  proof->add_option("--bundled", o.bundled, "Name of a shipped script");

  auto* fuzz = app.add_subcommand("fuzz", "Soundness sweep over random games, as JSON");
  fuzz->add_option("--seed", o.seed, "Master seed")->required();
  fuzz->add_option("--games", o.games, "Number of random games")->required();
  fuzz->add_option("--instances", o.instances, "Sampled instances per schema")
      ->capture_default_str();

  auto* fmt = app.add_subcommand("fmt", "Print a formula canonically");
  fmt->add_option("--formula", o.formula, "Formula")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(o, out);
    if (valid->parsed()) return run_valid(o, out);
    if (blame->parsed()) return run_blame(o, out);
    if (proof->parsed()) return run_proof(o, out, err);
    if (fuzz->parsed()) return run_fuzz(o, out);
    if (fmt->parsed()) {
      out << print(parse(o.formula)) << "\n";
      return kExitHolds;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace blamelogic
