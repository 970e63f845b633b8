// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
// Optional arguments are the other test executables; criterion 9 runs them
// and times the whole suite.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "blamelogic/game.hpp"
#include "blamelogic/harness.hpp"
#include "blamelogic/model_checker.hpp"
#include "blamelogic/parser.hpp"
#include "blamelogic/proof.hpp"
#include "mutations.hpp"
#include "test_util.hpp"

namespace {

using namespace blamelogic;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kSweepGames = 500;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Game>& sweep_games() {
  static const std::vector<Game> games = [] {
    const GenParams bounds = default_sweep_bounds(kSeed);
    std::vector<Game> out;
    for (std::size_t i = 0; i < kSweepGames; ++i) {
      out.push_back(random_game(sweep_game_params(bounds, i)));
    }
    return out;
  }();
  return games;
}

Outcome soundness_sweep_clean() {
  const auto start = Clock::now();
  const SweepReport r = soundness_sweep(default_sweep_bounds(kSeed), kSweepGames, 20);
  const double elapsed = seconds_since(start);
  std::size_t instances = 0;
  for (const auto& [name, tally] : r.checks) instances += tally.instances;
  std::ostringstream d;
  d << r.total_failures << " failures over " << instances << " instance checks in " << elapsed
    << " s (limit 60 s)";
  return {r.total_failures == 0 && r.checks.size() == 11 && elapsed < 60.0, d.str()};
}

Outcome lopez_golden() {
  const Game g = load_game_file(testing::source_path("data/lopez.json"));
  const bool vector_ok = evaluate_all(g, parse("B{lopez} dead")).truth ==
                         std::vector<bool>{false, false, true};
  const BlameReport r = blamable_coalitions(g, 2, parse("dead"), 1);
  const bool report_ok =
      r.minimal_coalitions() == std::vector<Coalition>{Coalition{"lopez"}} &&
      r.entries.size() == 1 &&
      r.entries[0].witness.choice == std::map<AgentId, ActionId>{{"lopez", "hide"}};
  const bool empty_ok =
      evaluate_all(g, parse("B{} dead")).truth == std::vector<bool>{false, false, false};
  std::ostringstream d;
  d << "truth vector " << (vector_ok ? "ok" : "WRONG") << ", blame report "
    << (report_ok ? "ok" : "WRONG") << ", empty coalition " << (empty_ok ? "ok" : "WRONG");
  return {vector_ok && report_ok && empty_ok, d.str()};
}

Outcome proof_kernel() {
  std::size_t bad_scripts = 0;
  std::size_t mutants = 0;
  std::size_t accepted = 0;
  std::size_t fewest = SIZE_MAX;
  for (const auto& s : bundled_scripts()) {
    if (!check_proof(s.proof).ok()) ++bad_scripts;
    const auto ms = mutation::mutate(s.proof);
    fewest = std::min(fewest, ms.size());
    mutants += ms.size();
    for (const auto& m : ms) {
      if (check_proof(m.proof).ok()) ++accepted;
    }
  }
  std::ostringstream d;
  d << bundled_scripts().size() << " scripts, " << bad_scripts << " rejected; " << mutants
    << " mutants (min " << fewest << " per script), " << accepted << " accepted";
  return {bundled_scripts().size() == 9 && bad_scripts == 0 && fewest >= 20 && accepted == 0,
          d.str()};
}

Outcome kernel_semantics() {
  std::size_t theorems = 0;
  std::size_t violations = 0;
  for (const auto& s : bundled_scripts()) {
    if (!s.proof.hypotheses.empty()) continue;
    ++theorems;
    for (const Game& g : sweep_games()) {
      if (!valid_in_game(g, s.proof.claim).ok()) ++violations;
    }
  }
  std::ostringstream d;
  d << theorems << " hypothesis-free theorems x " << sweep_games().size() << " games, "
    << violations << " violations";
  return {theorems > 0 && violations == 0, d.str()};
}

Outcome s5_block() {
  Rng rng(derive_seed(kSeed, 5));
  std::size_t checks = 0;
  std::size_t violations = 0;
  for (const Game& g : sweep_games()) {
    FormulaGenerator gen(rng, proposition_names(4), g.agents);
    for (int k = 0; k < 4; ++k) {
      const Formula phi = gen.formula(3);
      const Formula n = Formula::necessity(phi);
      const Formula not_n = Formula::negation(n);
      for (const Formula& f : {Formula::implies(n, phi),
                               Formula::implies(n, Formula::necessity(n)),
                               Formula::implies(not_n, Formula::necessity(not_n))}) {
        ++checks;
        if (!valid_in_game(g, f).ok()) ++violations;
      }
    }
  }
  std::ostringstream d;
  d << checks << " instances, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome fairness_invariance() {
  Rng rng(derive_seed(kSeed, 6));
  std::size_t violations = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    const Game& g = sweep_games()[t];
    FormulaGenerator gen(rng, proposition_names(4), g.agents);
    const Formula phi = gen.formula(3);
    const Formula blamed = Formula::blame(gen.coalition(), phi);
    const auto phi_truth = evaluate_all(g, phi).truth;
    const auto blame_truth = evaluate_all(g, blamed).truth;
    int seen = -1;
    for (std::size_t i = 0; i < g.plays.size(); ++i) {
      if (!phi_truth[i]) continue;
      if (seen >= 0 && seen != static_cast<int>(blame_truth[i])) {
        ++violations;
        break;
      }
      seen = blame_truth[i];
    }
  }
  std::ostringstream d;
  d << "200 triples, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome oracle_equivalence() {
  Rng rng(derive_seed(kSeed, 7));
  std::size_t mismatches = 0;
  std::size_t formulas = 0;
  for (std::size_t k = 0; k < 200; ++k) {
    const Game& g = sweep_games()[k];
    FormulaGenerator gen(rng, proposition_names(4), g.agents);
    for (int j = 0; j < 50; ++j) {
      const Formula f = gen.formula(4);
      ++formulas;
      const auto cached = evaluate_all(g, f).truth;
      std::vector<bool> naive;
      for (std::size_t i = 0; i < g.plays.size(); ++i) naive.push_back(satisfies(g, i, f));
      if (cached != naive) ++mismatches;
    }
  }
  std::ostringstream d;
  d << formulas << " formulas on 200 games, " << mismatches << " mismatching vectors";
  return {mismatches == 0, d.str()};
}

Outcome parser_round_trip() {
  Rng rng(derive_seed(kSeed, 8));
  FormulaGenerator gen(rng, {"p", "q", "r", "dead"}, {"a", "b", "lopez"});
  std::size_t failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const Formula f = gen.formula(8);
    const std::string text = print(f);
    try {
      const Formula back = parse(text);
      if (!(back == f) || print(back) != text) ++failures;
    } catch (const ParseError&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << "10000 formulas, " << failures << " failures";
  return {failures == 0, d.str()};
}

Outcome suite_wall_clock(const std::vector<std::string>& executables, double own_seconds) {
  const auto start = Clock::now();
  std::size_t failed = 0;
  for (const auto& exe : executables) {
    const std::string command = "\"" + exe + "\" > /dev/null 2>&1";
    if (std::system(command.c_str()) != 0) ++failed;
  }
  const double total = own_seconds + seconds_since(start);
  std::ostringstream d;
  d << executables.size() << " test executables plus acceptance checks in " << total
    << " s (limit 300 s)";
  if (failed != 0) d << "; " << failed << " executables failed";
  return {failed == 0 && total < 300.0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> executables(argv + 1, argv + argc);
  const auto start = Clock::now();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"soundness sweep", soundness_sweep_clean},
      {"lopez golden run", lopez_golden},
      {"proof kernel scripts and mutants", proof_kernel},
      {"kernel-semantics cross-check", kernel_semantics},
      {"S5 block", s5_block},
      {"fairness invariance", fairness_invariance},
      {"oracle equivalence", oracle_equivalence},
      {"parser round trip", parser_round_trip},
  };

  bool all = true;
  int number = 0;
  const auto report = [&](const std::string& name, const Outcome& o) {
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << ++number << "] " << name << ": " << o.detail
              << std::endl;
  };
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(name, o);
  }
  report("full suite wall-clock", suite_wall_clock(executables, seconds_since(start)));
  return all ? 0 : 1;
}
