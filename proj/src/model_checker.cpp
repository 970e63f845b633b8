#include "blamelogic/model_checker.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "blamelogic/parser.hpp"

namespace blamelogic {

StrategyOverflow::StrategyOverflow(const Coalition& coalition, std::size_t actions,
                                   std::uint64_t cap)
    : std::runtime_error("strategy space of coalition of size " +
                         std::to_string(coalition.size()) + " over " + std::to_string(actions) +
                         " actions exceeds the cap of " + std::to_string(cap) + " strategies") {}

namespace {

// Game with names resolved to indices, built once per public call.
class IndexedGame {
 public:
  IndexedGame(const Game& g, const CheckOptions& options) : game_(g), options_(options) {
    require_valid(g);
    for (std::size_t i = 0; i < g.agents.size(); ++i) agent_index_[g.agents[i]] = i;
    std::map<ActionId, std::size_t> action_index;
    for (std::size_t i = 0; i < g.actions.size(); ++i) action_index[g.actions[i]] = i;
    profiles_.reserve(g.plays.size());
    for (const Play& p : g.plays) {
      std::vector<std::size_t> row(g.agents.size());
      for (std::size_t a = 0; a < g.agents.size(); ++a) {
        row[a] = action_index.at(p.profile.at(g.agents[a]));
      }
      profiles_.push_back(std::move(row));
    }
  }

  const Game& game() const { return game_; }
  std::size_t play_count() const { return profiles_.size(); }
  std::size_t action_count() const { return game_.actions.size(); }

  void require_play(std::size_t play_index) const {
    if (play_index >= play_count()) {
      throw std::invalid_argument("play index " + std::to_string(play_index) +
                                  " out of range for a game with " +
                                  std::to_string(play_count()) + " plays");
    }
  }

  void require_agents(const Formula& f) const {
    for (const auto& agent : agents_mentioned(f)) require_agent(agent);
  }

  void require_agent(const AgentId& agent) const {
    if (!agent_index_.contains(agent)) {
      throw std::invalid_argument("agent '" + agent + "' is not an agent of the game");
    }
  }

  bool holds_atom(const std::string& prop, std::size_t play) const {
    auto it = game_.valuation.find(prop);
    if (it == game_.valuation.end()) return false;
    return std::find(it->second.begin(), it->second.end(), play) != it->second.end();
  }

  // Coalition members as agent indices in game order.
  std::vector<std::size_t> positions(const Coalition& c) const {
    std::vector<std::size_t> out;
    for (const auto& m : c.members()) out.push_back(agent_index_.at(m));
    std::sort(out.begin(), out.end());
    return out;
  }

  // |actions|^|C|, or StrategyOverflow past the cap.
  std::uint64_t strategy_count(const Coalition& c) const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      total *= action_count();
      if (total > options_.strategy_cap) {
        throw StrategyOverflow(c, action_count(), options_.strategy_cap);
      }
    }
    return total;
  }

  // Strategy code of a play's projection onto the coalition; the first agent
  // in game order is the most significant digit.
  std::uint64_t projection(const std::vector<std::size_t>& members, std::size_t play) const {
    std::uint64_t code = 0;
    for (std::size_t a : members) code = code * action_count() + profiles_[play][a];
    return code;
  }

  Strategy decode(const Coalition& c, const std::vector<std::size_t>& members,
                  std::uint64_t code) const {
    Strategy s{c, {}};
    for (std::size_t k = members.size(); k-- > 0;) {
      s.choice[game_.agents[members[k]]] = game_.actions[code % action_count()];
      code /= action_count();
    }
    return s;
  }

  std::size_t action_of(std::size_t play, std::size_t agent) const { return profiles_[play][agent]; }

 private:
  const Game& game_;
  CheckOptions options_;
  std::map<AgentId, std::size_t> agent_index_;
  std::vector<std::vector<std::size_t>> profiles_;
};

bool classical(Kind kind, bool a, bool b) {
  switch (kind) {
    case Kind::kImplies: return !a || b;
    case Kind::kAnd: return a && b;
    case Kind::kOr: return a || b;
    case Kind::kIff: return a == b;
    default: throw std::logic_error("not a binary connective");
  }
}

// ---------------------------------------------------------------------------
// Per-play recursion

class PointEvaluator {
 public:
  explicit PointEvaluator(const IndexedGame& game) : game_(game) {}

  bool sat(std::size_t play, const Formula& f) const {
    switch (f.kind()) {
      case Kind::kProp: return game_.holds_atom(f.name(), play);
      case Kind::kTop: return true;
      case Kind::kBottom: return false;
      case Kind::kNot: return !sat(play, f.operand());
      case Kind::kImplies:
      case Kind::kAnd:
      case Kind::kOr:
      case Kind::kIff:
        return classical(f.kind(), sat(play, f.lhs()), sat(play, f.rhs()));
      case Kind::kNecessity:
        for (std::size_t other = 0; other < game_.play_count(); ++other) {
          if (!sat(other, f.operand())) return false;
        }
        return true;
      case Kind::kBlame: return sat(play, f.operand()) && has_preventing_strategy(f);
    }
    throw std::logic_error("unknown formula kind");
  }

 private:
  // Is there s in Δ^C such that every play agreeing with s falsifies the
  // operand? Enumerates the strategies one by one.
  bool has_preventing_strategy(const Formula& blame) const {
    const auto members = game_.positions(blame.coalition());
    const std::uint64_t total = game_.strategy_count(blame.coalition());
    std::vector<std::size_t> choice(members.size(), 0);
    for (std::uint64_t n = 0; n < total; ++n) {
      bool prevents = true;
      for (std::size_t other = 0; other < game_.play_count() && prevents; ++other) {
        bool agrees_here = true;
        for (std::size_t k = 0; k < members.size(); ++k) {
          if (game_.action_of(other, members[k]) != choice[k]) {
            agrees_here = false;
            break;
          }
        }
        if (agrees_here && sat(other, blame.operand())) prevents = false;
      }
      if (prevents) return true;
      for (std::size_t k = members.size(); k-- > 0;) {
        if (++choice[k] < game_.action_count()) break;
        choice[k] = 0;
      }
    }
    return false;
  }

  const IndexedGame& game_;
};

// ---------------------------------------------------------------------------
// Tabulating evaluator

using Truth = std::vector<char>;

class TableEvaluator {
 public:
  explicit TableEvaluator(const IndexedGame& game) : game_(game) {}

  const Truth& table(const Formula& f) {
    if (auto it = cache_.find(f.identity()); it != cache_.end()) return it->second;
    Truth result = compute(f);
    return cache_.emplace(f.identity(), std::move(result)).first->second;
  }

  // Codes of the strategies of `c` that some operand-satisfying play agrees
  // with, i.e. the strategies that do not prevent the operand.
  std::unordered_set<std::uint64_t> non_preventing(const Coalition& c, const Truth& operand) const {
    const auto members = game_.positions(c);
    std::unordered_set<std::uint64_t> blocked;
    for (std::size_t p = 0; p < game_.play_count(); ++p) {
      if (operand[p]) blocked.insert(game_.projection(members, p));
    }
    return blocked;
  }

 private:
  Truth compute(const Formula& f) {
    const std::size_t n = game_.play_count();
    Truth out(n, 0);
    switch (f.kind()) {
      case Kind::kProp:
        for (std::size_t p = 0; p < n; ++p) out[p] = game_.holds_atom(f.name(), p);
        break;
      case Kind::kTop: std::fill(out.begin(), out.end(), 1); break;
      case Kind::kBottom: break;
      case Kind::kNot: {
        const Truth& a = table(f.operand());
        for (std::size_t p = 0; p < n; ++p) out[p] = !a[p];
        break;
      }
      case Kind::kImplies:
      case Kind::kAnd:
      case Kind::kOr:
      case Kind::kIff: {
        const Truth& a = table(f.lhs());
        const Truth& b = table(f.rhs());
        for (std::size_t p = 0; p < n; ++p) out[p] = classical(f.kind(), a[p], b[p]);
        break;
      }
      case Kind::kNecessity: {
        const Truth& a = table(f.operand());
        const bool everywhere = std::all_of(a.begin(), a.end(), [](char v) { return v != 0; });
        std::fill(out.begin(), out.end(), everywhere);
        break;
      }
      case Kind::kBlame: {
        const std::uint64_t total = game_.strategy_count(f.coalition());
        const Truth& a = table(f.operand());
        const bool preventable = non_preventing(f.coalition(), a).size() < total;
        for (std::size_t p = 0; p < n; ++p) out[p] = a[p] && preventable;
        break;
      }
    }
    return out;
  }

  const IndexedGame& game_;
  std::unordered_map<const void*, Truth> cache_;
};

std::vector<bool> to_bits(const Truth& t) { return std::vector<bool>(t.begin(), t.end()); }

// Strategies are tried in code order, which is lexicographic by game agent
// order then action order.
std::optional<Strategy> first_preventing(const IndexedGame& game, TableEvaluator& eval,
                                         const Coalition& c, const Truth& operand) {
  const std::uint64_t total = game.strategy_count(c);
  const auto blocked = eval.non_preventing(c, operand);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!blocked.contains(code)) return game.decode(c, game.positions(c), code);
  }
  return std::nullopt;
}

}  // namespace

bool satisfies(const Game& g, std::size_t play_index, const Formula& f,
               const CheckOptions& options) {
  const IndexedGame game(g, options);
  game.require_play(play_index);
  game.require_agents(f);
  return PointEvaluator(game).sat(play_index, f);
}

EvalTable evaluate_all(const Game& g, const Formula& f, const CheckOptions& options) {
  const IndexedGame game(g, options);
  game.require_agents(f);
  TableEvaluator eval(game);
  return EvalTable{f, to_bits(eval.table(f))};
}

std::optional<Strategy> blame_witness(const Game& g, std::size_t play_index, const Coalition& c,
                                      const Formula& f, const CheckOptions& options) {
  const IndexedGame game(g, options);
  game.require_play(play_index);
  game.require_agents(f);
  for (const auto& m : c.members()) game.require_agent(m);
  game.strategy_count(c);
  TableEvaluator eval(game);
  const Truth& operand = eval.table(f);
  if (!operand[play_index]) return std::nullopt;
  return first_preventing(game, eval, c, operand);
}

std::vector<Coalition> BlameReport::minimal_coalitions() const {
  std::vector<Coalition> out;
  for (const auto& e : entries) {
    if (e.minimal) out.push_back(e.coalition);
  }
  return out;
}

BlameReport blamable_coalitions(const Game& g, std::size_t play_index, const Formula& f,
                                std::size_t max_size, const CheckOptions& options) {
  const IndexedGame game(g, options);
  game.require_play(play_index);
  game.require_agents(f);
  const std::size_t n_agents = g.agents.size();
  if (max_size > n_agents) {
    throw std::invalid_argument("max size " + std::to_string(max_size) + " exceeds the " +
                                std::to_string(n_agents) + " agents of the game");
  }

  BlameReport report{play_index, f, {}};
  TableEvaluator eval(game);
  const Truth& operand = eval.table(f);
  if (!operand[play_index]) return report;

  for (std::size_t size = 0; size <= max_size; ++size) {
    // Combinations of agent indices in lexicographic order.
    std::vector<std::size_t> pick(size);
    for (std::size_t k = 0; k < size; ++k) pick[k] = k;
    while (true) {
      std::vector<AgentId> names;
      for (std::size_t a : pick) names.push_back(g.agents[a]);
      Coalition c(std::move(names));
      if (auto witness = first_preventing(game, eval, c, operand)) {
        report.entries.push_back({c, std::move(*witness), false});
      }
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == n_agents - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  for (auto& e : report.entries) {
    e.minimal = std::none_of(report.entries.begin(), report.entries.end(), [&](const BlameEntry& o) {
      return o.coalition != e.coalition && o.coalition.is_subset_of(e.coalition);
    });
  }
  return report;
}

std::string blame_report_json(const Game& g, const BlameReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["play"] = report.play_index;
  doc["formula"] = print(report.formula);
  ordered_json blamable = ordered_json::array();
  ordered_json minimal = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json witness = ordered_json::object();
    for (const auto& agent : g.agents) {
      if (auto it = e.witness.choice.find(agent); it != e.witness.choice.end()) {
        witness[agent] = it->second;
      }
    }
    ordered_json entry;
    entry["coalition"] = e.coalition.members();
    entry["witness"] = std::move(witness);
    entry["minimal"] = e.minimal;
    blamable.push_back(std::move(entry));
    if (e.minimal) minimal.push_back(e.coalition.members());
  }
  doc["blamable"] = std::move(blamable);
  doc["minimal"] = std::move(minimal);
  return doc.dump(2) + "\n";
}

Validity valid_in_game(const Game& g, const Formula& f, const CheckOptions& options) {
  const EvalTable table = evaluate_all(g, f, options);
  for (std::size_t p = 0; p < table.truth.size(); ++p) {
    if (!table.truth[p]) return Validity{p};
  }
  return Validity{};
}

}  // namespace blamelogic
