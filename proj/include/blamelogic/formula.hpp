#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace blamelogic {

using AgentId = std::string;

// Lowercase letter followed by letters, digits or underscores.
bool is_identifier(std::string_view s);

// Identifiers usable as propositions: is_identifier minus the literals
// "true" and "false".
bool is_proposition_name(std::string_view s);

// A finite set of agents kept in sorted order without duplicates, so that
// structural equality is set equality.
class Coalition {
 public:
  Coalition() = default;
  Coalition(std::initializer_list<AgentId> members);
  explicit Coalition(std::vector<AgentId> members);

  const std::vector<AgentId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::string_view agent) const;

  bool is_subset_of(const Coalition& other) const;
  bool is_disjoint_from(const Coalition& other) const;
  Coalition united_with(const Coalition& other) const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<AgentId> members_;
};

enum class Kind {
  kProp,
  kNot,
  kImplies,
  kNecessity,
  kBlame,
  kTop,
  kBottom,
  kAnd,
  kOr,
  kIff,
};

// Immutable formula tree. Copies share structure; nodes are never mutated
// after construction. The dual of necessity is not a node of its own: it is
// always represented as Not(Necessity(Not(f))).
class Formula {
 public:
  static Formula prop(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula necessity(Formula f);
  static Formula possibility(Formula f);  // !N!f
  static Formula blame(Coalition coalition, Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const;
  // Proposition name; empty for other kinds.
  const std::string& name() const;
  // Blame coalition; empty for other kinds.
  const Coalition& coalition() const;
  // Operand of a unary node or left side of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }
  std::size_t arity() const;

  bool is_modal() const {
    return kind() == Kind::kNecessity || kind() == Kind::kBlame;
  }
  // Matches Not(Necessity(Not(g))); the dual operand is then
  // operand().operand().operand().
  bool is_possibility() const;

  // Node identity, usable as a cache key within one evaluation.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula make(Kind kind, std::string name, Coalition coalition,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

bool syntactic_eq(const Formula& a, const Formula& b);

// Maximal nesting of Necessity/Blame nodes.
std::size_t modal_depth(const Formula& f);

// Tree height; an atom has depth 0.
std::size_t depth(const Formula& f);

std::size_t node_count(const Formula& f);

std::set<AgentId> agents_mentioned(const Formula& f);

std::set<std::string> propositions(const Formula& f);

}  // namespace blamelogic
