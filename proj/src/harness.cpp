#include "blamelogic/harness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "blamelogic/model_checker.hpp"
#include "blamelogic/parser.hpp"

namespace blamelogic {

void GenParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("generator parameter out of range: ") + what);
  };
  require(n_agents <= 4, "n_agents <= 4");
  require(n_actions >= 1 && n_actions <= 4, "n_actions in [1,4]");
  require(n_outcomes >= 1 && n_outcomes <= 4, "n_outcomes in [1,4]");
  require(n_plays <= 16, "n_plays <= 16");
  require(n_props >= 1 && n_props <= 4, "n_props in [1,4]");
  require(formula_depth <= 6, "formula_depth <= 6");
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<std::string> proposition_names(std::size_t n) {
  static const std::vector<std::string> kNames = {"p", "q", "r", "s"};
  if (n > kNames.size()) throw std::invalid_argument("at most 4 generated propositions");
  return {kNames.begin(), kNames.begin() + static_cast<std::ptrdiff_t>(n)};
}

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

const std::vector<AgentId> kAgentNames = {"a", "b", "c", "d"};

}  // namespace

Formula FormulaGenerator::formula(std::size_t max_depth) {
  auto leaf = [&]() {
    const std::uint64_t pick = rng_.below(props_.size() + 2);
    if (pick < props_.size()) return Formula::prop(props_[pick]);
    return pick == props_.size() ? Formula::top() : Formula::bottom();
  };
  if (max_depth == 0) return leaf();
  const std::size_t d = max_depth - 1;
  switch (rng_.below(10)) {
    case 0:
    case 1:
    case 2: return leaf();
    case 3: return Formula::negation(formula(d));
    case 4: return Formula::implies(formula(d), formula(d));
    case 5: return Formula::necessity(formula(d));
    case 6: return Formula::blame(coalition(), formula(d));
    case 7: return Formula::conjunction(formula(d), formula(d));
    case 8: return Formula::disjunction(formula(d), formula(d));
    default: return Formula::iff(formula(d), formula(d));
  }
}

Coalition FormulaGenerator::coalition() { return coalition_within(agents_); }

Coalition FormulaGenerator::coalition_within(const std::vector<AgentId>& pool) {
  std::vector<AgentId> members;
  for (const auto& a : pool) {
    if (rng_.coin()) members.push_back(a);
  }
  return Coalition(std::move(members));
}

Game random_game(const GenParams& p) {
  p.validate();
  Rng rng(p.seed);
  Game g;
  g.agents.assign(kAgentNames.begin(), kAgentNames.begin() + static_cast<std::ptrdiff_t>(p.n_agents));
  g.actions = numbered("act", p.n_actions);
  g.outcomes = numbered("out", p.n_outcomes);

  std::uint64_t profiles = 1;
  for (std::size_t i = 0; i < p.n_agents; ++i) profiles *= p.n_actions;
  const std::uint64_t pairs = profiles * p.n_outcomes;
  const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(p.n_plays, pairs));

  // Partial Fisher-Yates over pair codes: code = profile * n_outcomes + outcome.
  std::vector<std::uint64_t> codes(pairs);
  std::iota(codes.begin(), codes.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(codes[i], codes[i + rng.below(pairs - i)]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t profile = codes[i] / p.n_outcomes;
    Play play;
    play.outcome = g.outcomes[codes[i] % p.n_outcomes];
    for (std::size_t a = g.agents.size(); a-- > 0;) {
      play.profile[g.agents[a]] = g.actions[profile % p.n_actions];
      profile /= p.n_actions;
    }
    g.plays.push_back(std::move(play));
  }

  for (const auto& prop : proposition_names(p.n_props)) {
    auto& set = g.valuation[prop];
    for (std::size_t i = 0; i < g.plays.size(); ++i) {
      if (rng.coin()) set.push_back(i);
    }
  }
  return g;
}

Formula random_formula(const GenParams& p, const Game& game) {
  Rng rng(p.seed);
  std::vector<std::string> props;
  for (const auto& [name, _] : game.valuation) props.push_back(name);
  if (props.empty()) props = proposition_names(p.n_props);
  FormulaGenerator gen(rng, std::move(props), game.agents);
  return gen.formula(p.formula_depth);
}

Substitution random_substitution(Schema s, FormulaGenerator& gen, Rng& rng, std::size_t max_depth) {
  const SchemaUsage use = schema_usage(s);
  Substitution sub;
  auto draw = [&]() { return gen.formula(rng.between(0, max_depth)); };
  if (use.phi) sub.phi = draw();
  if (use.psi) sub.psi = draw();
  if (use.c) sub.c = gen.coalition();
  if (use.d) {
    std::vector<AgentId> outside;
    for (const auto& a : gen.agents()) {
      if (!sub.c->contains(a)) outside.push_back(a);
    }
    const Coalition extra = gen.coalition_within(outside);
    sub.d = s == Schema::kMonotonicity ? sub.c->united_with(extra) : extra;
  }
  return sub;
}

Evaluator default_evaluator() {
  return [](const Game& g, const Formula& f) { return evaluate_all(g, f).truth; };
}

GenParams default_sweep_bounds(std::uint64_t seed) {
  GenParams p;
  p.seed = seed;
  p.n_agents = 4;
  p.n_actions = 4;
  p.n_outcomes = 4;
  p.n_plays = 16;
  p.n_props = 4;
  p.formula_depth = 6;
  return p;
}

GenParams sweep_game_params(const GenParams& bounds, std::size_t index) {
  bounds.validate();
  Rng rng(derive_seed(bounds.seed, index));
  GenParams p = bounds;
  p.n_agents = rng.between(bounds.n_agents == 0 ? 0 : 1, bounds.n_agents);
  p.n_actions = rng.between(1, bounds.n_actions);
  p.n_outcomes = rng.between(1, bounds.n_outcomes);
  p.n_plays = rng.between(0, bounds.n_plays);
  p.n_props = rng.between(1, bounds.n_props);
  p.seed = rng.next();
  return p;
}

namespace {

class Sweeper {
 public:
  Sweeper(SweepReport& report, const Evaluator& eval) : report_(report), eval_(eval) {}

  void check_game(const Game& g, std::size_t game_index, std::uint64_t seed,
                  std::size_t instances, std::size_t depth) {
    Rng rng(seed);
    std::vector<std::string> props;
    for (const auto& [name, _] : g.valuation) props.push_back(name);
    if (props.empty()) props = proposition_names(1);
    FormulaGenerator gen(rng, std::move(props), g.agents);
    const std::string document = save_game(g);

    for (Schema s : kAllSchemas) {
      for (std::size_t i = 0; i < instances; ++i) {
        const Formula instance = instantiate_schema(s, random_substitution(s, gen, rng, depth));
        expect_valid(std::string(schema_name(s)), g, game_index, instance, document);
        // Necessitation: a valid formula stays valid under N.
        expect_valid("Necessitation", g, game_index, Formula::necessity(instance), document);
      }
    }
    for (std::size_t i = 0; i < instances; ++i) {
      const Formula f = gen.formula(rng.between(0, depth));
      const std::vector<bool> truth = eval_(g, f);
      if (std::all_of(truth.begin(), truth.end(), [](bool v) { return v; })) {
        expect_valid("Necessitation", g, game_index, Formula::necessity(f), document);
      }
      const Formula empty_blame = Formula::blame(Coalition{}, f);
      expect_valid("EmptyCoalition", g, game_index, Formula::negation(empty_blame), document);
    }
  }

 private:
  void expect_valid(const std::string& check, const Game& g, std::size_t game_index,
                    const Formula& f, const std::string& document) {
    CheckTally& tally = report_.checks[check];
    ++tally.instances;
    const std::vector<bool> truth = eval_(g, f);
    for (std::size_t play = 0; play < truth.size(); ++play) {
      if (truth[play]) continue;
      ++tally.failures;
      ++report_.total_failures;
      if (report_.failures.size() < SweepReport::kMaxRecordedFailures) {
        report_.failures.push_back({check, game_index, play, print(f), document});
      }
      return;
    }
  }

  SweepReport& report_;
  const Evaluator& eval_;
};

}  // namespace

SweepReport soundness_sweep(const GenParams& p, std::size_t games, std::size_t instances_per_schema,
                            const SweepOptions& options) {
  p.validate();
  SweepReport report;
  report.seed = p.seed;
  report.games = games + options.pinned_games.size();
  report.instances_per_schema = instances_per_schema;
  for (Schema s : kAllSchemas) report.checks[std::string(schema_name(s))];
  report.checks["Necessitation"];
  report.checks["EmptyCoalition"];

  Sweeper sweeper(report, options.evaluator);
  for (std::size_t i = 0; i < games; ++i) {
    const GenParams gp = sweep_game_params(p, i);
    const Game g = random_game(gp);
    sweeper.check_game(g, i, derive_seed(gp.seed, 1), instances_per_schema, p.formula_depth);
  }
  for (std::size_t k = 0; k < options.pinned_games.size(); ++k) {
    const std::size_t index = games + k;
    require_valid(options.pinned_games[k]);
    sweeper.check_game(options.pinned_games[k], index, derive_seed(p.seed, index),
                       instances_per_schema, p.formula_depth);
  }
  return report;
}

std::string sweep_report_json(const SweepReport& report) {
  using nlohmann::json;
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["games"] = report.games;
  doc["instances_per_schema"] = report.instances_per_schema;
  ordered_json checks = ordered_json::object();
  for (const auto& [name, tally] : report.checks) {
    ordered_json t;
    t["instances"] = tally.instances;
    t["failures"] = tally.failures;
    checks[name] = std::move(t);
  }
  doc["checks"] = std::move(checks);
  doc["total_failures"] = report.total_failures;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) {
    ordered_json entry;
    entry["check"] = f.check;
    entry["game_index"] = f.game_index;
    entry["play"] = f.play;
    entry["instance"] = f.instance;
    entry["game"] = ordered_json::parse(f.game_document);
    failures.push_back(std::move(entry));
  }
  doc["failures"] = std::move(failures);
  return doc.dump(2) + "\n";
}

}  // namespace blamelogic
