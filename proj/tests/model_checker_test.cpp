#include <gtest/gtest.h>

#include "blamelogic/harness.hpp"
#include "blamelogic/model_checker.hpp"
#include "blamelogic/parser.hpp"
#include "brute_force.hpp"
#include "test_util.hpp"

namespace blamelogic {
namespace {

const Game lopez = lopez_game();

bool at(const Game& g, std::size_t play, const char* text) { return satisfies(g, play, parse(text)); }

TEST(Satisfies, LopezExamples) {
  EXPECT_TRUE(at(lopez, 2, "B{lopez} dead"));
  EXPECT_FALSE(at(lopez, 1, "B{lopez} dead"));
  EXPECT_FALSE(at(lopez, 0, "N !dead"));
  EXPECT_TRUE(at(lopez, 2, "<N> B{lopez} dead"));
  EXPECT_FALSE(at(lopez, 0, "missing"));
}

TEST(Satisfies, EmptyCoalitionNeverBlamed) {
  for (std::size_t i = 0; i < lopez.plays.size(); ++i) {
    EXPECT_FALSE(at(lopez, i, "B{} dead"));
    EXPECT_FALSE(at(lopez, i, "B{} true"));
    EXPECT_FALSE(at(lopez, i, "B{} !dead"));
  }
}

TEST(Satisfies, RejectsBadInputs) {
  EXPECT_THROW(at(lopez, 3, "dead"), std::invalid_argument);
  EXPECT_THROW(at(lopez, 0, "B{ghost} dead"), std::invalid_argument);
}

TEST(EvaluateAll, LopezExamples) {
  EXPECT_EQ(evaluate_all(lopez, parse("dead")).truth, (std::vector<bool>{false, false, true}));
  EXPECT_EQ(evaluate_all(lopez, parse("B{lopez} dead")).truth,
            (std::vector<bool>{false, false, true}));
  EXPECT_EQ(evaluate_all(lopez, parse("true")).truth, (std::vector<bool>{true, true, true}));
}

TEST(BlameWitness, LopezExamples) {
  const auto w = blame_witness(lopez, 2, Coalition{"lopez"}, parse("dead"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->choice, (std::map<AgentId, ActionId>{{"lopez", "hide"}}));
  EXPECT_FALSE(blame_witness(lopez, 2, Coalition{}, parse("dead")).has_value());
  EXPECT_FALSE(blame_witness(lopez, 0, Coalition{"lopez"}, parse("dead")).has_value());
}

TEST(Blamable, LopezExamples) {
  const BlameReport r = blamable_coalitions(lopez, 2, parse("dead"), 1);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].coalition, Coalition{"lopez"});
  EXPECT_TRUE(r.entries[0].minimal);
  EXPECT_EQ(r.minimal_coalitions(), (std::vector<Coalition>{Coalition{"lopez"}}));
  EXPECT_TRUE(blamable_coalitions(lopez, 0, parse("dead"), 1).entries.empty());
  EXPECT_THROW(blamable_coalitions(lopez, 2, parse("dead"), 2), std::invalid_argument);
}

TEST(Blamable, EitherAgentAloneSuffices) {
  const Game g = testing::both_pick_one_game();
  const BlameReport r = blamable_coalitions(g, 3, parse("p"), 2);
  EXPECT_EQ(r.minimal_coalitions(), (std::vector<Coalition>{Coalition{"a"}, Coalition{"b"}}));
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_FALSE(r.entries[2].minimal);
  EXPECT_EQ(r.entries[2].coalition, (Coalition{"a", "b"}));
}

TEST(BlameReportJson, Lopez) {
  const BlameReport r = blamable_coalitions(lopez, 2, parse("dead"), 1);
  EXPECT_EQ(blame_report_json(lopez, r),
            testing::read_file(testing::source_path("tests/golden/lopez_blame.json")));
}

TEST(Valid, LopezExamples) {
  EXPECT_TRUE(valid_in_game(lopez, parse("B{lopez} dead -> dead")).ok());
  EXPECT_EQ(valid_in_game(lopez, parse("dead")).counterexample, std::optional<std::size_t>(0));
  EXPECT_TRUE(valid_in_game(lopez, parse("N dead | <N> !dead")).ok());
}

TEST(Limits, StrategyOverflow) {
  CheckOptions tight;
  tight.strategy_cap = 1;
  EXPECT_THROW(satisfies(lopez, 2, parse("B{lopez} dead"), tight), StrategyOverflow);
  EXPECT_THROW(evaluate_all(lopez, parse("B{lopez} dead"), tight), StrategyOverflow);
  tight.strategy_cap = 2;
  EXPECT_NO_THROW(satisfies(lopez, 2, parse("B{lopez} dead"), tight));
}

TEST(Limits, GameWithoutPlays) {
  Game g = lopez;
  g.plays.clear();
  g.valuation.clear();
  EXPECT_TRUE(evaluate_all(g, parse("N false")).truth.empty());
  EXPECT_TRUE(valid_in_game(g, parse("false")).ok());
}

std::vector<Game> corpus(std::uint64_t seed, std::size_t n) {
  GenParams bounds;
  bounds.seed = seed;
  bounds.n_agents = 3;
  bounds.n_actions = 3;
  bounds.n_outcomes = 3;
  bounds.n_plays = 14;
  bounds.n_props = 3;
  std::vector<Game> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_game(sweep_game_params(bounds, i)));
  return out;
}

TEST(OracleProperty, BothRoutesMatchBruteForce) {
  Rng rng(314);
  for (const Game& g : corpus(1, 120)) {
    FormulaGenerator gen(rng, proposition_names(3), g.agents);
    for (int k = 0; k < 15; ++k) {
      const Formula f = gen.formula(4);
      const auto expected = oracle::table(g, f);
      ASSERT_EQ(evaluate_all(g, f).truth, expected) << print(f);
      for (std::size_t i = 0; i < g.plays.size(); ++i) {
        ASSERT_EQ(satisfies(g, i, f), expected[i]) << print(f) << " @" << i;
      }
    }
  }
}

TEST(OracleProperty, WitnessIsFirstInOrder) {
  Rng rng(2718);
  for (const Game& g : corpus(2, 80)) {
    FormulaGenerator gen(rng, proposition_names(3), g.agents);
    for (int k = 0; k < 5; ++k) {
      const Formula f = gen.formula(2);
      const Coalition c = gen.coalition();
      for (std::size_t i = 0; i < g.plays.size(); ++i) {
        const auto got = blame_witness(g, i, c, f);
        const auto want = oracle::first_witness(g, i, c, f);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) {
          ASSERT_EQ(got->choice, *want);
        }
      }
    }
  }
}

// Sugar evaluates like its primitive expansion.
TEST(OracleProperty, SugarMatchesExpansion) {
  Rng rng(99);
  for (const Game& g : corpus(3, 60)) {
    FormulaGenerator gen(rng, proposition_names(3), g.agents);
    for (int k = 0; k < 10; ++k) {
      const Formula a = gen.formula(2);
      const Formula b = gen.formula(2);
      using F = Formula;
      const auto same = [&](const F& x, const F& y) {
        ASSERT_EQ(evaluate_all(g, x).truth, evaluate_all(g, y).truth) << print(x);
      };
      same(F::conjunction(a, b), F::negation(F::implies(a, F::negation(b))));
      same(F::disjunction(a, b), F::implies(F::negation(a), b));
      same(F::iff(a, b), F::negation(F::implies(F::implies(a, b), F::negation(F::implies(b, a)))));
      same(F::top(), F::implies(F::bottom(), F::bottom()));
      same(F::possibility(a), F::negation(F::necessity(F::negation(a))));
    }
  }
}

TEST(ReportProperty, Invariants) {
  Rng rng(4);
  for (const Game& g : corpus(4, 60)) {
    FormulaGenerator gen(rng, proposition_names(3), g.agents);
    const Formula f = gen.formula(2);
    for (std::size_t i = 0; i < g.plays.size(); ++i) {
      const BlameReport r = blamable_coalitions(g, i, f, g.agents.size());
      for (const auto& e : r.entries) {
        ASSERT_TRUE(satisfies(g, i, Formula::blame(e.coalition, f)));
        ASSERT_TRUE(agrees(e.witness, g.plays[i]) == false);
        // Every superset within the game is also blamable.
        for (const auto& a : g.agents) {
          const Coalition bigger = e.coalition.united_with(Coalition{a});
          ASSERT_TRUE(satisfies(g, i, Formula::blame(bigger, f)));
        }
      }
      for (const auto& m : r.minimal_coalitions()) {
        for (const auto& e : r.entries) {
          ASSERT_FALSE(e.coalition != m && e.coalition.is_subset_of(m));
        }
      }
    }
  }
}

TEST(FairnessProperty, OneValueAcrossSatisfyingPlays) {
  Rng rng(6);
  std::size_t triples = 0;
  for (const Game& g : corpus(6, 200)) {
    FormulaGenerator gen(rng, proposition_names(3), g.agents);
    const Formula f = gen.formula(3);
    const Formula blamed = Formula::blame(gen.coalition(), f);
    const auto phi = evaluate_all(g, f).truth;
    const auto b = evaluate_all(g, blamed).truth;
    std::optional<bool> seen;
    for (std::size_t i = 0; i < g.plays.size(); ++i) {
      if (!phi[i]) continue;
      if (seen) {
        ASSERT_EQ(*seen, b[i]) << print(blamed);
      }
      seen = b[i];
    }
    ++triples;
  }
  EXPECT_EQ(triples, 200u);
}

}  // namespace
}  // namespace blamelogic
