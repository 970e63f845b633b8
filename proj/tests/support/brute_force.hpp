#pragma once

// Test-only reference semantics. Works on the raw Game strings and
// enumerates every strategy explicitly; shares no code with the model
// checker beyond the data types.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blamelogic/formula.hpp"
#include "blamelogic/game.hpp"

namespace blamelogic::oracle {

struct Semantics {
  // Flips the blame clause; used to show the sweep notices a broken checker.
  bool negate_blame = false;
};

using Choice = std::map<AgentId, ActionId>;

// Every map from `members` to actions, in lexicographic order with the first
// member most significant.
inline std::vector<Choice> all_choices(const Game& g, const std::vector<AgentId>& members) {
  std::vector<Choice> out{Choice{}};
  for (const auto& agent : members) {
    std::vector<Choice> next;
    for (const auto& partial : out) {
      for (const auto& action : g.actions) {
        Choice c = partial;
        c[agent] = action;
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Coalition members in the game's agent order.
inline std::vector<AgentId> in_game_order(const Game& g, const Coalition& c) {
  std::vector<AgentId> out;
  for (const auto& a : g.agents) {
    if (c.contains(a)) out.push_back(a);
  }
  return out;
}

inline bool same_on(const Choice& s, const Play& p) {
  for (const auto& [agent, action] : s) {
    if (p.profile.at(agent) != action) return false;
  }
  return true;
}

inline bool holds(const Game& g, std::size_t play, const Formula& f, Semantics sem = {}) {
  switch (f.kind()) {
    case Kind::kProp: {
      auto it = g.valuation.find(f.name());
      if (it == g.valuation.end()) return false;
      for (std::size_t i : it->second) {
        if (i == play) return true;
      }
      return false;
    }
    case Kind::kTop: return true;
    case Kind::kBottom: return false;
    case Kind::kNot: return !holds(g, play, f.operand(), sem);
    case Kind::kImplies: return !holds(g, play, f.lhs(), sem) || holds(g, play, f.rhs(), sem);
    case Kind::kAnd: return holds(g, play, f.lhs(), sem) && holds(g, play, f.rhs(), sem);
    case Kind::kOr: return holds(g, play, f.lhs(), sem) || holds(g, play, f.rhs(), sem);
    case Kind::kIff: return holds(g, play, f.lhs(), sem) == holds(g, play, f.rhs(), sem);
    case Kind::kNecessity:
      for (std::size_t i = 0; i < g.plays.size(); ++i) {
        if (!holds(g, i, f.operand(), sem)) return false;
      }
      return true;
    case Kind::kBlame: {
      bool result = false;
      if (holds(g, play, f.operand(), sem)) {
        for (const Choice& s : all_choices(g, in_game_order(g, f.coalition()))) {
          bool prevents = true;
          for (std::size_t i = 0; i < g.plays.size(); ++i) {
            if (same_on(s, g.plays[i]) && holds(g, i, f.operand(), sem)) prevents = false;
          }
          if (prevents) {
            result = true;
            break;
          }
        }
      }
      return sem.negate_blame ? !result : result;
    }
  }
  return false;
}

inline std::vector<bool> table(const Game& g, const Formula& f, Semantics sem = {}) {
  std::vector<bool> out;
  for (std::size_t i = 0; i < g.plays.size(); ++i) out.push_back(holds(g, i, f, sem));
  return out;
}

// First preventing choice in lexicographic order, if f holds at the play.
inline std::optional<Choice> first_witness(const Game& g, std::size_t play, const Coalition& c,
                                           const Formula& f) {
  if (!holds(g, play, f)) return std::nullopt;
  for (const Choice& s : all_choices(g, in_game_order(g, c))) {
    bool prevents = true;
    for (std::size_t i = 0; i < g.plays.size(); ++i) {
      if (same_on(s, g.plays[i]) && holds(g, i, f)) prevents = false;
    }
    if (prevents) return s;
  }
  return std::nullopt;
}

}  // namespace blamelogic::oracle
