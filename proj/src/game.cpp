#include "blamelogic/game.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace blamelogic {

namespace {

template <typename T>
bool has_duplicates(const std::vector<T>& items) {
  std::set<T> seen(items.begin(), items.end());
  return seen.size() != items.size();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

std::vector<std::string> validate(const Game& g) {
  std::vector<std::string> violations;
  auto report = [&](std::string v) { violations.push_back(std::move(v)); };

  for (const auto& a : g.agents) {
    if (!is_identifier(a)) report("agent '" + a + "' is not a valid identifier");
  }
  if (has_duplicates(g.agents)) report("duplicate agent");
  if (g.actions.empty()) report("empty action set");
  for (const auto& a : g.actions) {
    if (a.empty()) report("empty action name");
  }
  if (has_duplicates(g.actions)) report("duplicate action");
  for (const auto& o : g.outcomes) {
    if (o.empty()) report("empty outcome name");
  }
  if (has_duplicates(g.outcomes)) report("duplicate outcome");

  const std::set<AgentId> agents(g.agents.begin(), g.agents.end());
  const std::set<ActionId> actions(g.actions.begin(), g.actions.end());
  const std::set<OutcomeId> outcomes(g.outcomes.begin(), g.outcomes.end());
  for (std::size_t i = 0; i < g.plays.size(); ++i) {
    const Play& p = g.plays[i];
    const std::string where = "play " + std::to_string(i) + ": ";
    for (const auto& a : g.agents) {
      if (!p.profile.contains(a)) report(where + "profile misses agent '" + a + "'");
    }
    for (const auto& [agent, action] : p.profile) {
      if (!agents.contains(agent)) report(where + "profile names unknown agent '" + agent + "'");
      if (!actions.contains(action)) report(where + "unknown action '" + action + "'");
    }
    if (!outcomes.contains(p.outcome)) report(where + "unknown outcome '" + p.outcome + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (g.plays[j] == p) report(where + "duplicate of play " + std::to_string(j));
    }
  }

  for (const auto& [prop, indices] : g.valuation) {
    if (!is_proposition_name(prop)) report("valuation key '" + prop + "' is not a valid proposition");
    for (std::size_t idx : indices) {
      if (idx >= g.plays.size()) {
        report("valuation '" + prop + "': play index out of range (" + std::to_string(idx) + ")");
      }
    }
  }
  return violations;
}

InvalidGame::InvalidGame(std::vector<std::string> violations)
    : std::runtime_error("invalid game: " + join(violations)), violations_(std::move(violations)) {}

void require_valid(const Game& g) {
  auto violations = validate(g);
  if (!violations.empty()) throw InvalidGame(std::move(violations));
}

bool agrees(const Strategy& s, const Play& p) {
  for (const auto& agent : s.coalition.members()) {
    auto chosen = s.choice.find(agent);
    auto played = p.profile.find(agent);
    if (chosen == s.choice.end() || played == p.profile.end()) return false;
    if (chosen->second != played->second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON document

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw GameFormatError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::vector<std::string> string_array(const json& v, const std::string& where) {
  if (!v.is_array()) throw GameFormatError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw GameFormatError(where + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Game load_game(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw GameFormatError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw GameFormatError("game document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    static const std::set<std::string> kKnown = {"agents", "actions", "outcomes", "plays",
                                                 "valuation"};
    if (!kKnown.contains(key)) throw GameFormatError("unknown key \"" + key + "\"");
  }

  Game g;
  g.agents = string_array(member(doc, "agents", "game"), "agents");
  g.actions = string_array(member(doc, "actions", "game"), "actions");
  g.outcomes = string_array(member(doc, "outcomes", "game"), "outcomes");

  const json& plays = member(doc, "plays", "game");
  if (!plays.is_array()) throw GameFormatError("plays: expected an array");
  for (std::size_t i = 0; i < plays.size(); ++i) {
    const std::string where = "plays[" + std::to_string(i) + "]";
    const json& p = plays[i];
    if (!p.is_object()) throw GameFormatError(where + ": expected an object");
    Play play;
    const json& profile = member(p, "profile", where);
    if (!profile.is_object()) throw GameFormatError(where + ".profile: expected an object");
    for (const auto& [agent, action] : profile.items()) {
      if (!action.is_string()) throw GameFormatError(where + ".profile: actions must be strings");
      play.profile[agent] = action.get<std::string>();
    }
    const json& outcome = member(p, "outcome", where);
    if (!outcome.is_string()) throw GameFormatError(where + ".outcome: expected a string");
    play.outcome = outcome.get<std::string>();
    g.plays.push_back(std::move(play));
  }

  if (auto it = doc.find("valuation"); it != doc.end()) {
    if (!it->is_object()) throw GameFormatError("valuation: expected an object");
    for (const auto& [prop, indices] : it->items()) {
      if (!indices.is_array()) throw GameFormatError("valuation." + prop + ": expected an array");
      auto& set = g.valuation[prop];
      for (const auto& idx : indices) {
        if (!idx.is_number_unsigned()) {
          throw GameFormatError("valuation." + prop + ": play indices must be non-negative integers");
        }
        set.push_back(idx.get<std::size_t>());
      }
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
    }
  }

  require_valid(g);
  return g;
}

Game load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameFormatError("cannot open game file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_game(buf.str());
}

std::string save_game(const Game& g) {
  ordered_json doc;
  doc["agents"] = g.agents;
  doc["actions"] = g.actions;
  doc["outcomes"] = g.outcomes;
  ordered_json plays = ordered_json::array();
  for (const Play& p : g.plays) {
    ordered_json profile = ordered_json::object();
    for (const auto& agent : g.agents) {
      if (auto it = p.profile.find(agent); it != p.profile.end()) profile[agent] = it->second;
    }
    ordered_json entry;
    entry["profile"] = std::move(profile);
    entry["outcome"] = p.outcome;
    plays.push_back(std::move(entry));
  }
  doc["plays"] = std::move(plays);
  ordered_json valuation = ordered_json::object();
  for (const auto& [prop, indices] : g.valuation) {  // std::map iterates keys sorted
    std::vector<std::size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    valuation[prop] = sorted;
  }
  doc["valuation"] = std::move(valuation);
  return doc.dump(2) + "\n";
}

Game lopez_game() {
  Game g;
  g.agents = {"lopez"};
  g.actions = {"hide", "expose"};
  g.outcomes = {"alive", "dead"};
  g.plays = {
      {{{"lopez", "hide"}}, "alive"},
      {{{"lopez", "expose"}}, "alive"},
      {{{"lopez", "expose"}}, "dead"},
  };
  g.valuation = {{"dead", {2}}};
  return g;
}

}  // namespace blamelogic
