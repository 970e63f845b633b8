#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "blamelogic/formula.hpp"
#include "blamelogic/game.hpp"
#include "blamelogic/proof.hpp"

namespace blamelogic {

// Sizes for random generation. random_game uses them as exact sizes (plays
// clamped to the number of distinct profile/outcome pairs); soundness_sweep
// treats them as upper bounds and draws sizes per game.
struct GenParams {
  std::uint64_t seed = 0;
  std::size_t n_agents = 2;     // <= 4
  std::size_t n_actions = 2;    // [1, 4]
  std::size_t n_outcomes = 2;   // [1, 4]
  std::size_t n_plays = 8;      // [0, 16]
  std::size_t n_props = 2;      // [1, 4]
  std::size_t formula_depth = 3;  // <= 6

  // Throws std::invalid_argument when a bound is violated.
  void validate() const;
};

// Portable 64-bit source: std::mt19937_64 (its output sequence is fixed by
// the standard) with bounded draws done here rather than by the
// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Seed for the index-th sub-stream of `master`; independent of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Recursive formula generator over fixed propositions and agents.
class FormulaGenerator {
 public:
  FormulaGenerator(Rng& rng, std::vector<std::string> props, std::vector<AgentId> agents)
      : rng_(rng), props_(std::move(props)), agents_(std::move(agents)) {}

  // Depth at most `max_depth`; at depth 0 an atom, true or false.
  Formula formula(std::size_t max_depth);
  // Each agent independently with probability 1/2.
  Coalition coalition();
  Coalition coalition_within(const std::vector<AgentId>& pool);

  const std::vector<AgentId>& agents() const { return agents_; }

 private:
  Rng& rng_;
  std::vector<std::string> props_;
  std::vector<AgentId> agents_;
};

// Proposition names used by generated games: p, q, r, s.
std::vector<std::string> proposition_names(std::size_t n);

Game random_game(const GenParams& p);

// Coalitions from game.agents; propositions from the game's valuation keys,
// or the first n_props default names when the valuation is empty.
Formula random_formula(const GenParams& p, const Game& game);

// Substitution satisfying the schema's side condition by construction.
Substitution random_substitution(Schema s, FormulaGenerator& gen, Rng& rng, std::size_t max_depth);

using Evaluator = std::function<std::vector<bool>(const Game&, const Formula&)>;

// The tabulating model checker.
Evaluator default_evaluator();

struct SweepOptions {
  std::vector<Game> pinned_games;  // checked in addition to the random ones
  Evaluator evaluator = default_evaluator();
};

struct SweepFailure {
  std::string check;
  std::size_t game_index = 0;
  std::size_t play = 0;
  std::string instance;
  std::string game_document;
};

struct CheckTally {
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::size_t games = 0;
  std::size_t instances_per_schema = 0;
  // One entry per schema name plus "Necessitation" and "EmptyCoalition".
  std::map<std::string, CheckTally> checks;
  std::size_t total_failures = 0;
  std::vector<SweepFailure> failures;  // first kMaxRecordedFailures only

  static constexpr std::size_t kMaxRecordedFailures = 25;
};

// For each game and schema, checks sampled instances at every play; also
// checks that necessitation preserves validity and that B{} is never true.
SweepReport soundness_sweep(const GenParams& p, std::size_t games, std::size_t instances_per_schema,
                            const SweepOptions& options = {});

std::string sweep_report_json(const SweepReport& report);

// The per-game sizes soundness_sweep draws for game `index`.
// Upper bounds used by the fuzz command and the acceptance sweep.
GenParams default_sweep_bounds(std::uint64_t seed);

GenParams sweep_game_params(const GenParams& bounds, std::size_t index);

}  // namespace blamelogic
