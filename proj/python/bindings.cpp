#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "blamelogic/game.hpp"
#include "blamelogic/harness.hpp"
#include "blamelogic/model_checker.hpp"
#include "blamelogic/parser.hpp"
#include "blamelogic/proof.hpp"

namespace py = pybind11;
using namespace blamelogic;

namespace {

std::vector<bool> truth_vector(const Game& g, const Formula& f) {
  return evaluate_all(g, f).truth;
}

std::optional<std::map<AgentId, ActionId>> witness(const Game& g, std::size_t play,
                                                   const std::vector<AgentId>& coalition,
                                                   const Formula& f) {
  auto w = blame_witness(g, play, Coalition(coalition), f);
  if (!w) return std::nullopt;
  return w->choice;
}

std::string blame_json(const Game& g, std::size_t play, const Formula& f,
                       std::optional<std::size_t> max_size) {
  return blame_report_json(g, blamable_coalitions(g, play, f, max_size.value_or(g.agents.size())));
}

std::string check_proof_text(const std::string& document) {
  return check_proof(load_proof(document)).describe();
}

std::string check_bundled(const std::string& name) {
  const Proof* p = find_bundled(name);
  if (p == nullptr) throw py::key_error("no bundled script named '" + name + "'");
  return check_proof(*p).describe();
}

std::string bundled_script(const std::string& name) {
  const Proof* p = find_bundled(name);
  if (p == nullptr) throw py::key_error("no bundled script named '" + name + "'");
  return save_proof(*p);
}

std::vector<std::string> bundled_names() {
  std::vector<std::string> out;
  for (const auto& s : bundled_scripts()) out.push_back(s.name);
  return out;
}

std::string sweep(std::uint64_t seed, std::size_t games, std::size_t instances) {
  py::gil_scoped_release release;
  return sweep_report_json(soundness_sweep(default_sweep_bounds(seed), games, instances));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Model checking and proof checking for coalition blameworthiness";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GameFormatError>(m, "GameFormatError", PyExc_ValueError);
  py::register_exception<InvalidGame>(m, "InvalidGame", PyExc_ValueError);
  py::register_exception<ProofFormatError>(m, "ProofFormatError", PyExc_ValueError);
  py::register_exception<StrategyOverflow>(m, "StrategyOverflow", PyExc_OverflowError);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }), py::arg("text"))
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__", [](const Formula& f) { return std::hash<std::string>{}(print(f)); })
      .def_property_readonly("modal_depth", [](const Formula& f) { return modal_depth(f); })
      .def_property_readonly("agents", [](const Formula& f) { return agents_mentioned(f); });
  py::implicitly_convertible<std::string, Formula>();

  py::class_<Game>(m, "Game")
      .def_readonly("agents", &Game::agents)
      .def_readonly("actions", &Game::actions)
      .def_readonly("outcomes", &Game::outcomes)
      .def_property_readonly("num_plays", [](const Game& g) { return g.plays.size(); })
      .def("play", [](const Game& g, std::size_t i) {
        if (i >= g.plays.size()) throw py::index_error("play index out of range");
        return py::make_tuple(g.plays[i].profile, g.plays[i].outcome);
      })
      .def_readonly("valuation", &Game::valuation)
      .def("__eq__", [](const Game& a, const Game& b) { return a == b; });

  m.def("parse", &parse, py::arg("text"));
  m.def("format", [](const std::string& text) { return print(parse(text)); }, py::arg("text"),
        "Canonical printing of a formula.");

  m.def("load_game", &load_game, py::arg("document"));
  m.def("load_game_file", &load_game_file, py::arg("path"));
  m.def("save_game", &save_game, py::arg("game"));
  m.def("lopez_game", &lopez_game);
  m.def("random_game",
        [](std::uint64_t seed, std::size_t agents, std::size_t actions, std::size_t outcomes,
           std::size_t plays, std::size_t props) {
          GenParams p;
          p.seed = seed;
          p.n_agents = agents;
          p.n_actions = actions;
          p.n_outcomes = outcomes;
          p.n_plays = plays;
          p.n_props = props;
          return random_game(p);
        },
        py::arg("seed"), py::arg("agents") = 2, py::arg("actions") = 2, py::arg("outcomes") = 2,
        py::arg("plays") = 8, py::arg("props") = 2);

  m.def("satisfies",
        [](const Game& g, std::size_t play, const Formula& f) { return satisfies(g, play, f); },
        py::arg("game"), py::arg("play"), py::arg("formula"));
  m.def("evaluate_all", &truth_vector, py::arg("game"), py::arg("formula"));
  m.def("valid_in_game",
        [](const Game& g, const Formula& f) { return valid_in_game(g, f).counterexample; },
        py::arg("game"), py::arg("formula"),
        "None when the formula holds at every play, else the least failing play index.");
  m.def("blame_witness", &witness, py::arg("game"), py::arg("play"), py::arg("coalition"),
        py::arg("formula"));
  m.def("blame_report_json", &blame_json, py::arg("game"), py::arg("play"), py::arg("formula"),
        py::arg("max_size") = py::none());

  m.def("check_proof", &check_proof_text, py::arg("document"));
  m.def("check_bundled", &check_bundled, py::arg("name"));
  m.def("bundled_script", &bundled_script, py::arg("name"));
  m.def("bundled_names", &bundled_names);
  m.def("is_tautology", [](const Formula& f) { return is_tautology(f); }, py::arg("formula"));

  m.def("soundness_sweep_json", &sweep, py::arg("seed"), py::arg("games"),
        py::arg("instances") = 20);
}
