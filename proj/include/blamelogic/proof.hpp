#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blamelogic/formula.hpp"

namespace blamelogic {

enum class Schema {
  kTruthN,                 // N phi -> phi
  kTruthB,                 // B_C phi -> phi
  kDistributivity,         // N(phi -> psi) -> (N phi -> N psi)
  kNegativeIntrospection,  // !N phi -> N !N phi
  kNoneToBlame,            // !B_{} phi
  kJointResponsibility,    // <N>B_C phi & <N>B_D psi -> (phi | psi -> B_{C u D}(phi | psi)), C, D disjoint
  kBlameForCause,          // N(phi -> psi) -> (B_C psi -> (phi -> B_C phi))
  kMonotonicity,           // B_C phi -> B_D phi, C subset of D
  kFairness,               // B_C phi -> N(phi -> B_C phi)
};

inline constexpr std::array<Schema, 9> kAllSchemas = {
    Schema::kTruthN,         Schema::kTruthB,        Schema::kDistributivity,
    Schema::kNegativeIntrospection, Schema::kNoneToBlame, Schema::kJointResponsibility,
    Schema::kBlameForCause,  Schema::kMonotonicity,  Schema::kFairness,
};

// "TruthN", "TruthB", "Distributivity", ...
std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);
// Human-readable template, e.g. "B_C phi -> N (phi -> B_C phi)".
std::string_view schema_template(Schema s);

struct SchemaUsage {
  bool phi = false;
  bool psi = false;
  bool c = false;
  bool d = false;
};
SchemaUsage schema_usage(Schema s);

struct Substitution {
  std::optional<Formula> phi;
  std::optional<Formula> psi;
  std::optional<Coalition> c;
  std::optional<Coalition> d;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

class SchemaError : public std::runtime_error {
 public:
  enum class Reason { kUnbound, kExtra, kSideCondition };
  SchemaError(Reason reason, const std::string& message)
      : std::runtime_error(message), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// The schema instance under `sub`. Throws SchemaError when a metavariable is
// unbound, an unused one is bound, or (unless disabled) the coalition side
// condition fails.
Formula instantiate_schema(Schema s, const Substitution& sub, bool check_side_condition = true);

class TooManyAtoms : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxTautologyAtoms = 20;

// Classical validity, treating every maximal subformula rooted at a
// proposition, N or B as an opaque atom. Throws TooManyAtoms past
// kMaxTautologyAtoms distinct atoms.
bool is_tautology(const Formula& f);

enum class RuleKind { kHyp, kTaut, kAxiom, kMp, kNec };

struct Justification {
  RuleKind kind = RuleKind::kTaut;
  // kHyp: hypothesis index. kMp: {antecedent line, implication line}.
  // kNec: {premise line}. All 0-based.
  std::vector<std::size_t> from;
  Schema schema = Schema::kTruthN;
  Substitution subst;

  static Justification hyp(std::size_t index) { return {RuleKind::kHyp, {index}, {}, {}}; }
  static Justification taut() { return {RuleKind::kTaut, {}, {}, {}}; }
  static Justification axiom(Schema s, Substitution sub) {
    return {RuleKind::kAxiom, {}, s, std::move(sub)};
  }
  static Justification mp(std::size_t antecedent, std::size_t implication) {
    return {RuleKind::kMp, {antecedent, implication}, {}, {}};
  }
  static Justification nec(std::size_t premise) { return {RuleKind::kNec, {premise}, {}, {}}; }
};

struct ProofLine {
  Formula formula;
  Justification just;
};

// A derivation of `claim` from `hypotheses`. Necessitation applies only to
// lines that do not depend on hypotheses.
struct Proof {
  std::vector<Formula> hypotheses;
  std::vector<ProofLine> lines;
  Formula claim = Formula::top();
};

enum class ProofFailure {
  kNone,
  kBadReference,
  kHypothesisMismatch,
  kNotTautology,
  kAxiomMismatch,
  kSideCondition,
  kSchemaArguments,
  kModusPonensMismatch,
  kNecessitationMismatch,
  kNecessitationUnderHypothesis,
  kTooManyAtoms,
  kEmptyProof,
  kClaimMismatch,
};

struct ProofCheck {
  ProofFailure failure = ProofFailure::kNone;
  std::size_t line = 0;  // 0-based index of the first failing line
  std::string reason;

  bool ok() const { return failure == ProofFailure::kNone; }
  // "ok", or "line N: reason" with N 1-based.
  std::string describe() const;
};

ProofCheck check_proof(const Proof& p);

// For each line, whether it is derived without the hypotheses. Assumes the
// references are well formed.
std::vector<bool> hypothesis_free_lines(const Proof& p);

class ProofFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON proof script with 1-based line and hypothesis numbers in "from".
Proof load_proof(std::string_view document);
Proof load_proof_file(const std::string& path);
std::string save_proof(const Proof& p);

struct NamedProof {
  std::string name;
  Proof proof;
};

// Shipped derivations of the example lemmas, at fixed instances over atoms
// p, q, r and agents a, b, c.
const std::vector<NamedProof>& bundled_scripts();
const Proof* find_bundled(std::string_view name);

}  // namespace blamelogic
