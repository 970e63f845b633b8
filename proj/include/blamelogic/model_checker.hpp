#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blamelogic/formula.hpp"
#include "blamelogic/game.hpp"

namespace blamelogic {

struct CheckOptions {
  // Largest strategy space |actions|^|C| a blame node may enumerate.
  std::uint64_t strategy_cap = std::uint64_t{1} << 20;
};

// A blame node whose strategy space exceeds CheckOptions::strategy_cap.
class StrategyOverflow : public std::runtime_error {
 public:
  StrategyOverflow(const Coalition& coalition, std::size_t actions, std::uint64_t cap);
};

// Truth of one formula at every play of a game.
struct EvalTable {
  Formula formula;
  std::vector<bool> truth;
};

// Direct recursive evaluation at a single play, following the satisfaction
// clauses literally with no sharing between plays or subformulas.
//
// Preconditions (checked; violations throw std::invalid_argument or
// InvalidGame): the game validates, play_index is in range, and every agent
// the formula mentions is an agent of the game.
bool satisfies(const Game& g, std::size_t play_index, const Formula& f,
               const CheckOptions& options = {});

// Truth vector over all plays. Each subformula is tabulated once; for blame
// nodes the coalition's non-preventing strategies are collected once from the
// plays satisfying the operand, and reused at every play.
EvalTable evaluate_all(const Game& g, const Formula& f, const CheckOptions& options = {});

// Lexicographically first strategy of `c` (agents in game order, actions in
// game order) under which no play satisfies `f`. Returns nothing when `f` is
// false at the play or no such strategy exists.
std::optional<Strategy> blame_witness(const Game& g, std::size_t play_index, const Coalition& c,
                                      const Formula& f, const CheckOptions& options = {});

struct BlameEntry {
  Coalition coalition;
  Strategy witness;
  bool minimal = false;
};

struct BlameReport {
  std::size_t play_index = 0;
  Formula formula = Formula::top();
  // Ordered by size, then lexicographically by game agent order.
  std::vector<BlameEntry> entries;

  std::vector<Coalition> minimal_coalitions() const;
};

// Every coalition of at most max_size agents that is blamable for `f` at the
// play, with witnesses; inclusion-minimal entries are flagged.
BlameReport blamable_coalitions(const Game& g, std::size_t play_index, const Formula& f,
                                std::size_t max_size, const CheckOptions& options = {});

std::string blame_report_json(const Game& g, const BlameReport& report);

struct Validity {
  // Least play index where the formula is false, if any.
  std::optional<std::size_t> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

Validity valid_in_game(const Game& g, const Formula& f, const CheckOptions& options = {});

}  // namespace blamelogic
