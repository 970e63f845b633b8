#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blamelogic/formula.hpp"

namespace blamelogic {

using ActionId = std::string;
using OutcomeId = std::string;

// A complete action profile together with the outcome it led to.
struct Play {
  std::map<AgentId, ActionId> profile;
  OutcomeId outcome;

  friend bool operator==(const Play&, const Play&) = default;
};

// A one-shot game with a relational mechanism: only the listed plays exist,
// so a profile may have no outcome or several. Propositions are true at sets
// of plays, referenced by play index. Propositions absent from the valuation
// are false everywhere.
struct Game {
  std::vector<AgentId> agents;
  std::vector<ActionId> actions;
  std::vector<OutcomeId> outcomes;
  std::vector<Play> plays;
  std::map<std::string, std::vector<std::size_t>> valuation;

  friend bool operator==(const Game&, const Game&) = default;
};

// An action for each member of a coalition.
struct Strategy {
  Coalition coalition;
  std::map<AgentId, ActionId> choice;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// Every invariant violation, in a stable order; empty iff the game is valid.
std::vector<std::string> validate(const Game& g);

class InvalidGame : public std::runtime_error {
 public:
  explicit InvalidGame(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Throws InvalidGame unless validate(g) is empty.
void require_valid(const Game& g);

// True iff the play's profile matches the strategy on every coalition member.
bool agrees(const Strategy& s, const Play& p);

class GameFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses the JSON game document and validates it. Syntax problems throw
// GameFormatError; invariant violations throw InvalidGame.
Game load_game(std::string_view document);
Game load_game_file(const std::string& path);

// Canonical document: keys in the order agents, actions, outcomes, plays,
// valuation; two-space indent; valuation keys and indices sorted.
std::string save_game(const Game& g);

// The example from the introduction of blameworthiness: Lopez may hide or
// expose a gun; exposing it admits a play where the outcome is a death.
Game lopez_game();

}  // namespace blamelogic
