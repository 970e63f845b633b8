#include "blamelogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace blamelogic {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_proposition_name(std::string_view s) {
  return is_identifier(s) && s != "true" && s != "false";
}

// ---------------------------------------------------------------------------
// Coalition

Coalition::Coalition(std::initializer_list<AgentId> members)
    : Coalition(std::vector<AgentId>(members)) {}

Coalition::Coalition(std::vector<AgentId> members) : members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!is_identifier(m)) throw std::invalid_argument("invalid agent identifier '" + m + "'");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Coalition::contains(std::string_view agent) const {
  return std::binary_search(members_.begin(), members_.end(), agent);
}

bool Coalition::is_subset_of(const Coalition& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

bool Coalition::is_disjoint_from(const Coalition& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

Coalition Coalition::united_with(const Coalition& other) const {
  std::vector<AgentId> merged;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(merged));
  Coalition result;
  result.members_ = std::move(merged);
  return result;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  Kind kind;
  std::string name;
  Coalition coalition;
  std::vector<Formula> children;
};

namespace {

const std::string kEmptyName;
const Coalition kEmptyCoalition;

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::make(Kind kind, std::string name, Coalition coalition,
                      std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(coalition), std::move(children)}));
}

Formula Formula::prop(std::string name) {
  if (!is_proposition_name(name)) {
    throw std::invalid_argument("invalid proposition name '" + name + "'");
  }
  return make(Kind::kProp, std::move(name), {}, {});
}

Formula Formula::top() {
  static const Formula kTop = make(Kind::kTop, {}, {}, {});
  return kTop;
}

Formula Formula::bottom() {
  static const Formula kBottom = make(Kind::kBottom, {}, {}, {});
  return kBottom;
}

Formula Formula::negation(Formula f) { return make(Kind::kNot, {}, {}, {std::move(f)}); }

Formula Formula::implies(Formula lhs, Formula rhs) {
  return make(Kind::kImplies, {}, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::necessity(Formula f) { return make(Kind::kNecessity, {}, {}, {std::move(f)}); }

Formula Formula::possibility(Formula f) {
  return negation(necessity(negation(std::move(f))));
}

Formula Formula::blame(Coalition coalition, Formula f) {
  return make(Kind::kBlame, {}, std::move(coalition), {std::move(f)});
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::kAnd, {}, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::kOr, {}, {}, {std::move(lhs), std::move(rhs)});
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return make(Kind::kIff, {}, {}, {std::move(lhs), std::move(rhs)});
}

Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  return node_->kind == Kind::kProp ? node_->name : kEmptyName;
}

const Coalition& Formula::coalition() const {
  return node_->kind == Kind::kBlame ? node_->coalition : kEmptyCoalition;
}

const Formula& Formula::lhs() const {
  if (node_->children.empty()) throw std::logic_error("formula node has no operand");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() < 2) throw std::logic_error("formula node is not binary");
  return node_->children[1];
}

std::size_t Formula::arity() const { return node_->children.size(); }

bool Formula::is_possibility() const {
  return kind() == Kind::kNot && lhs().kind() == Kind::kNecessity &&
         lhs().lhs().kind() == Kind::kNot;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const Formula::Node& x = *a.node_;
  const Formula::Node& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.coalition != y.coalition ||
      x.children.size() != y.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.children.size(); ++i) {
    if (!(x.children[i] == y.children[i])) return false;
  }
  return true;
}

bool syntactic_eq(const Formula& a, const Formula& b) { return a == b; }

std::size_t modal_depth(const Formula& f) {
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    deepest = std::max(deepest, modal_depth(i == 0 ? f.lhs() : f.rhs()));
  }
  return deepest + (f.is_modal() ? 1 : 0);
}

std::size_t depth(const Formula& f) {
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    deepest = std::max(deepest, depth(i == 0 ? f.lhs() : f.rhs()) + 1);
  }
  return deepest;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += node_count(i == 0 ? f.lhs() : f.rhs());
  return n;
}

namespace {

template <typename Visit>
void walk(const Formula& f, Visit&& visit) {
  visit(f);
  for (std::size_t i = 0; i < f.arity(); ++i) walk(i == 0 ? f.lhs() : f.rhs(), visit);
}

}  // namespace

std::set<AgentId> agents_mentioned(const Formula& f) {
  std::set<AgentId> agents;
  walk(f, [&](const Formula& g) {
    if (g.kind() == Kind::kBlame) {
      agents.insert(g.coalition().members().begin(), g.coalition().members().end());
    }
  });
  return agents;
}

std::set<std::string> propositions(const Formula& f) {
  std::set<std::string> names;
  walk(f, [&](const Formula& g) {
    if (g.kind() == Kind::kProp) names.insert(g.name());
  });
  return names;
}

}  // namespace blamelogic
