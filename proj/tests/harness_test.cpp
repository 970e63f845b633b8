#include <set>

#include <gtest/gtest.h>

#include "blamelogic/harness.hpp"
#include "blamelogic/parser.hpp"
#include "brute_force.hpp"

namespace blamelogic {
namespace {

TEST(RandomGame, NoPlays) {
  GenParams p;
  p.n_plays = 0;
  const Game g = random_game(p);
  EXPECT_TRUE(g.plays.empty());
  EXPECT_TRUE(validate(g).empty());
}

TEST(RandomGame, DeterministicForSeed) {
  GenParams p;
  p.seed = 42;
  EXPECT_EQ(save_game(random_game(p)), save_game(random_game(p)));
  GenParams other = p;
  other.seed = 43;
  other.n_plays = 6;
  p.n_plays = 6;
  EXPECT_NE(save_game(random_game(p)), save_game(random_game(other)));
}

TEST(RandomGame, PlayCountClampedToAvailablePairs) {
  GenParams p;
  p.n_agents = 2;
  p.n_actions = 2;
  p.n_outcomes = 2;
  p.n_plays = 16;
  const Game g = random_game(p);
  EXPECT_EQ(g.plays.size(), 4u * p.n_outcomes);
  EXPECT_TRUE(validate(g).empty());
}

TEST(RandomGame, InvalidParams) {
  GenParams p;
  p.n_actions = 0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_THROW(random_game(p), std::invalid_argument);
}

TEST(RandomFormula, DepthZeroIsLeaf) {
  Rng rng(1);
  FormulaGenerator gen(rng, {"p", "q"}, {"a"});
  for (int i = 0; i < 200; ++i) {
    const Kind k = gen.formula(0).kind();
    EXPECT_TRUE(k == Kind::kProp || k == Kind::kTop || k == Kind::kBottom);
  }
}

TEST(RandomFormula, ReproducibleAndBounded) {
  GenParams p;
  p.seed = 7;
  p.formula_depth = 5;
  const Game g = random_game(p);
  EXPECT_EQ(print(random_formula(p, g)), print(random_formula(p, g)));
  Rng rng(3);
  FormulaGenerator gen(rng, {"p"}, {"a", "b"});
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(5);
    EXPECT_LE(depth(f), 5u);
    for (const auto& a : agents_mentioned(f)) EXPECT_TRUE(a == "a" || a == "b");
  }
}

TEST(RandomGame, CoversRelationalMechanisms) {
  // Over many games, some profile has several outcomes and some has none.
  GenParams bounds;
  bounds.seed = 11;
  bounds.n_agents = 3;
  bounds.n_actions = 3;
  bounds.n_outcomes = 4;
  bounds.n_plays = 16;
  bool several = false;
  bool missing = false;
  for (std::size_t i = 0; i < 1000; ++i) {
    const Game g = random_game(sweep_game_params(bounds, i));
    std::map<std::map<AgentId, ActionId>, std::size_t> per_profile;
    for (const auto& play : g.plays) ++per_profile[play.profile];
    std::size_t profiles = 1;
    for (std::size_t k = 0; k < g.agents.size(); ++k) profiles *= g.actions.size();
    for (const auto& [profile, n] : per_profile) several = several || n >= 2;
    missing = missing || per_profile.size() < profiles;
  }
  EXPECT_TRUE(several);
  EXPECT_TRUE(missing);
}

TEST(Sweep, SmallSweepIsClean) {
  GenParams bounds;
  bounds.seed = 2024;
  const SweepReport r = soundness_sweep(bounds, 40, 10);
  EXPECT_EQ(r.total_failures, 0u);
  EXPECT_EQ(r.checks.size(), 11u);
  for (const auto& [name, tally] : r.checks) EXPECT_GT(tally.instances, 0u) << name;
}

TEST(Sweep, PinnedLopezIsClean) {
  GenParams bounds;
  bounds.seed = 5;
  SweepOptions options;
  options.pinned_games = {lopez_game()};
  const SweepReport r = soundness_sweep(bounds, 0, 20, options);
  EXPECT_EQ(r.total_failures, 0u);
  EXPECT_GT(r.checks.at("Fairness").instances, 0u);
}

TEST(Sweep, CorruptedEvaluatorIsCaught) {
  GenParams bounds;
  bounds.seed = 5;
  SweepOptions options;
  options.pinned_games = {lopez_game()};
  options.evaluator = [](const Game& g, const Formula& f) {
    return oracle::table(g, f, oracle::Semantics{true});
  };
  const SweepReport r = soundness_sweep(bounds, 10, 5, options);
  EXPECT_GE(r.total_failures, 1u);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_FALSE(r.failures[0].instance.empty());
  EXPECT_NO_THROW(load_game(r.failures[0].game_document));
}

TEST(Sweep, BruteForceEvaluatorAgrees) {
  GenParams bounds;
  bounds.seed = 77;
  bounds.n_plays = 6;
  SweepOptions options;
  options.evaluator = [](const Game& g, const Formula& f) { return oracle::table(g, f); };
  EXPECT_EQ(soundness_sweep(bounds, 15, 4, options).total_failures, 0u);
}

TEST(Sweep, ReportIsDeterministic) {
  GenParams bounds;
  bounds.seed = 9;
  EXPECT_EQ(sweep_report_json(soundness_sweep(bounds, 20, 5)),
            sweep_report_json(soundness_sweep(bounds, 20, 5)));
}

TEST(Seeds, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(1, i));
  EXPECT_EQ(seen.size(), 1000u);
  Rng rng(0);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(7), 7u);
}

}  // namespace
}  // namespace blamelogic
