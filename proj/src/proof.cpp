#include "blamelogic/proof.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "blamelogic/parser.hpp"

namespace blamelogic {

namespace {

struct SchemaInfo {
  Schema schema;
  std::string_view name;
  std::string_view text;
  SchemaUsage usage;
};

constexpr std::array<SchemaInfo, 9> kSchemaTable = {{
    {Schema::kTruthN, "TruthN", "N phi -> phi", {true, false, false, false}},
    {Schema::kTruthB, "TruthB", "B_C phi -> phi", {true, false, true, false}},
    {Schema::kDistributivity, "Distributivity", "N (phi -> psi) -> (N phi -> N psi)",
     {true, true, false, false}},
    {Schema::kNegativeIntrospection, "NegativeIntrospection", "!N phi -> N !N phi",
     {true, false, false, false}},
    {Schema::kNoneToBlame, "NoneToBlame", "!B_{} phi", {true, false, false, false}},
    {Schema::kJointResponsibility, "JointResponsibility",
     "<N> B_C phi & <N> B_D psi -> (phi | psi -> B_{C u D} (phi | psi)), C and D disjoint",
     {true, true, true, true}},
    {Schema::kBlameForCause, "BlameForCause", "N (phi -> psi) -> (B_C psi -> (phi -> B_C phi))",
     {true, true, true, false}},
    {Schema::kMonotonicity, "Monotonicity", "B_C phi -> B_D phi, C a subset of D",
     {true, false, true, true}},
    {Schema::kFairness, "Fairness", "B_C phi -> N (phi -> B_C phi)", {true, false, true, false}},
}};

const SchemaInfo& info(Schema s) {
  for (const auto& entry : kSchemaTable) {
    if (entry.schema == s) return entry;
  }
  throw std::logic_error("unknown schema");
}

}  // namespace

std::string_view schema_name(Schema s) { return info(s).name; }
std::string_view schema_template(Schema s) { return info(s).text; }
SchemaUsage schema_usage(Schema s) { return info(s).usage; }

std::optional<Schema> schema_from_name(std::string_view name) {
  for (const auto& entry : kSchemaTable) {
    if (entry.name == name) return entry.schema;
  }
  return std::nullopt;
}

Formula instantiate_schema(Schema s, const Substitution& sub, bool check_side_condition) {
  const SchemaUsage usage = schema_usage(s);
  const std::string name(schema_name(s));
  auto check = [&](bool used, bool bound, const char* var) {
    if (used && !bound) {
      throw SchemaError(SchemaError::Reason::kUnbound, name + ": metavariable " + var + " is unbound");
    }
    if (!used && bound) {
      throw SchemaError(SchemaError::Reason::kExtra, name + ": metavariable " + var + " is not used");
    }
  };
  check(usage.phi, sub.phi.has_value(), "phi");
  check(usage.psi, sub.psi.has_value(), "psi");
  check(usage.c, sub.c.has_value(), "C");
  check(usage.d, sub.d.has_value(), "D");

  using F = Formula;
  switch (s) {
    case Schema::kTruthN: return F::implies(F::necessity(*sub.phi), *sub.phi);
    case Schema::kTruthB: return F::implies(F::blame(*sub.c, *sub.phi), *sub.phi);
    case Schema::kDistributivity:
      return F::implies(F::necessity(F::implies(*sub.phi, *sub.psi)),
                        F::implies(F::necessity(*sub.phi), F::necessity(*sub.psi)));
    case Schema::kNegativeIntrospection:
      return F::implies(F::negation(F::necessity(*sub.phi)),
                        F::necessity(F::negation(F::necessity(*sub.phi))));
    case Schema::kNoneToBlame: return F::negation(F::blame(Coalition{}, *sub.phi));
    case Schema::kJointResponsibility: {
      if (check_side_condition && !sub.c->is_disjoint_from(*sub.d)) {
        throw SchemaError(SchemaError::Reason::kSideCondition,
                          name + ": coalitions C and D must be disjoint");
      }
      const F either = F::disjunction(*sub.phi, *sub.psi);
      return F::implies(F::conjunction(F::possibility(F::blame(*sub.c, *sub.phi)),
                                       F::possibility(F::blame(*sub.d, *sub.psi))),
                        F::implies(either, F::blame(sub.c->united_with(*sub.d), either)));
    }
    case Schema::kBlameForCause:
      return F::implies(F::necessity(F::implies(*sub.phi, *sub.psi)),
                        F::implies(F::blame(*sub.c, *sub.psi),
                                   F::implies(*sub.phi, F::blame(*sub.c, *sub.phi))));
    case Schema::kMonotonicity:
      if (check_side_condition && !sub.c->is_subset_of(*sub.d)) {
        throw SchemaError(SchemaError::Reason::kSideCondition,
                          name + ": coalition C must be a subset of D");
      }
      return F::implies(F::blame(*sub.c, *sub.phi), F::blame(*sub.d, *sub.phi));
    case Schema::kFairness:
      return F::implies(F::blame(*sub.c, *sub.phi),
                        F::necessity(F::implies(*sub.phi, F::blame(*sub.c, *sub.phi))));
  }
  throw std::logic_error("unknown schema");
}

// ---------------------------------------------------------------------------
// Tautology checking
//
// The formula is compiled into a flat node list over opaque atoms, then
// evaluated 64 assignments at a time: assignment m sets atom i to bit i of m.

namespace {

struct CompiledNode {
  Kind kind;
  int atom = -1;
  int lhs = -1;
  int rhs = -1;
};

class PropositionalSkeleton {
 public:
  explicit PropositionalSkeleton(const Formula& f) { root_ = compile(f); }

  std::size_t atom_count() const { return atoms_.size(); }

  bool valid() const {
    const std::size_t n = atoms_.size();
    const std::uint64_t words = n <= 6 ? 1 : std::uint64_t{1} << (n - 6);
    const std::uint64_t live =
        n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    std::vector<std::uint64_t> values(nodes_.size());
    for (std::uint64_t w = 0; w < words; ++w) {
      for (std::size_t i = 0; i < nodes_.size(); ++i) values[i] = eval(nodes_[i], w, values);
      if ((values[root_] & live) != live) return false;
    }
    return true;
  }

 private:
  static constexpr std::array<std::uint64_t, 6> kLowPatterns = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
  };

  static std::uint64_t atom_word(int atom, std::uint64_t w) {
    if (atom < 6) return kLowPatterns[atom];
    return ((w >> (atom - 6)) & 1) ? ~std::uint64_t{0} : 0;
  }

  std::uint64_t eval(const CompiledNode& n, std::uint64_t w,
                     const std::vector<std::uint64_t>& v) const {
    switch (n.kind) {
      case Kind::kTop: return ~std::uint64_t{0};
      case Kind::kBottom: return 0;
      case Kind::kNot: return ~v[n.lhs];
      case Kind::kImplies: return ~v[n.lhs] | v[n.rhs];
      case Kind::kAnd: return v[n.lhs] & v[n.rhs];
      case Kind::kOr: return v[n.lhs] | v[n.rhs];
      case Kind::kIff: return ~(v[n.lhs] ^ v[n.rhs]);
      default: return atom_word(n.atom, w);
    }
  }

  // Children precede parents in nodes_.
  int compile(const Formula& f) {
    CompiledNode node{f.kind()};
    switch (f.kind()) {
      case Kind::kProp:
      case Kind::kNecessity:
      case Kind::kBlame: node.atom = atom_index(f); break;
      case Kind::kTop:
      case Kind::kBottom: break;
      case Kind::kNot: node.lhs = compile(f.operand()); break;
      default:
        node.lhs = compile(f.lhs());
        node.rhs = compile(f.rhs());
        break;
    }
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size() - 1);
  }

  int atom_index(const Formula& f) {
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (atoms_[i] == f) return static_cast<int>(i);
    }
    if (atoms_.size() == kMaxTautologyAtoms) {
      throw TooManyAtoms("more than " + std::to_string(kMaxTautologyAtoms) +
                         " distinct propositional atoms");
    }
    atoms_.push_back(f);
    return static_cast<int>(atoms_.size() - 1);
  }

  std::vector<Formula> atoms_;
  std::vector<CompiledNode> nodes_;
  int root_ = -1;
};

}  // namespace

bool is_tautology(const Formula& f) { return PropositionalSkeleton(f).valid(); }

// ---------------------------------------------------------------------------
// Proof checking

std::string ProofCheck::describe() const {
  if (ok()) return "ok";
  return "line " + std::to_string(line + 1) + ": " + reason;
}

std::vector<bool> hypothesis_free_lines(const Proof& p) {
  std::vector<bool> free(p.lines.size(), false);
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const Justification& j = p.lines[i].just;
    switch (j.kind) {
      case RuleKind::kHyp: free[i] = false; break;
      case RuleKind::kTaut:
      case RuleKind::kAxiom: free[i] = true; break;
      case RuleKind::kMp:
        free[i] = j.from.size() == 2 && j.from[0] < i && j.from[1] < i && free[j.from[0]] &&
                  free[j.from[1]];
        break;
      case RuleKind::kNec: free[i] = j.from.size() == 1 && j.from[0] < i && free[j.from[0]]; break;
    }
  }
  return free;
}

ProofCheck check_proof(const Proof& p) {
  if (p.lines.empty()) return {ProofFailure::kEmptyProof, 0, "proof has no lines"};
  std::vector<bool> free(p.lines.size(), false);

  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& line = p.lines[i];
    const Justification& j = line.just;
    auto fail = [&](ProofFailure kind, std::string why) { return ProofCheck{kind, i, std::move(why)}; };
    auto earlier = [&](std::size_t ref) { return ref < i; };
    const std::size_t arity = j.kind == RuleKind::kMp ? 2
                              : (j.kind == RuleKind::kNec || j.kind == RuleKind::kHyp) ? 1
                                                                                      : 0;
    if (j.from.size() != arity) {
      return fail(ProofFailure::kBadReference,
                  "expected " + std::to_string(arity) + " references, got " +
                      std::to_string(j.from.size()));
    }

    switch (j.kind) {
      case RuleKind::kHyp:
        if (j.from[0] >= p.hypotheses.size()) {
          return fail(ProofFailure::kBadReference,
                      "no hypothesis number " + std::to_string(j.from[0] + 1));
        }
        if (!(p.hypotheses[j.from[0]] == line.formula)) {
          return fail(ProofFailure::kHypothesisMismatch,
                      "formula differs from hypothesis " + std::to_string(j.from[0] + 1));
        }
        free[i] = false;
        break;

      case RuleKind::kTaut:
        try {
          if (!is_tautology(line.formula)) {
            return fail(ProofFailure::kNotTautology, "not a propositional tautology");
          }
        } catch (const TooManyAtoms& e) {
          return fail(ProofFailure::kTooManyAtoms, e.what());
        }
        free[i] = true;
        break;

      case RuleKind::kAxiom: {
        std::optional<Formula> instance;
        try {
          instance = instantiate_schema(j.schema, j.subst);
        } catch (const SchemaError& e) {
          return fail(e.reason() == SchemaError::Reason::kSideCondition
                          ? ProofFailure::kSideCondition
                          : ProofFailure::kSchemaArguments,
                      e.what());
        }
        if (!(*instance == line.formula)) {
          return fail(ProofFailure::kAxiomMismatch,
                      "not the " + std::string(schema_name(j.schema)) + " instance " +
                          print(*instance));
        }
        free[i] = true;
        break;
      }

      case RuleKind::kMp: {
        const std::size_t a = j.from[0];
        const std::size_t b = j.from[1];
        if (!earlier(a) || !earlier(b)) {
          return fail(ProofFailure::kBadReference, "modus ponens must cite earlier lines");
        }
        const Formula& implication = p.lines[b].formula;
        if (implication.kind() != Kind::kImplies || !(implication.lhs() == p.lines[a].formula) ||
            !(implication.rhs() == line.formula)) {
          return fail(ProofFailure::kModusPonensMismatch,
                      "line " + std::to_string(b + 1) + " is not line " + std::to_string(a + 1) +
                          " -> this line");
        }
        free[i] = free[a] && free[b];
        break;
      }

      case RuleKind::kNec: {
        const std::size_t a = j.from[0];
        if (!earlier(a)) {
          return fail(ProofFailure::kBadReference, "necessitation must cite an earlier line");
        }
        if (line.formula.kind() != Kind::kNecessity || !(line.formula.operand() == p.lines[a].formula)) {
          return fail(ProofFailure::kNecessitationMismatch,
                      "formula is not N applied to line " + std::to_string(a + 1));
        }
        if (!free[a]) {
          return fail(ProofFailure::kNecessitationUnderHypothesis,
                      "necessitation under hypothesis (line " + std::to_string(a + 1) +
                          " depends on hypotheses)");
        }
        free[i] = true;
        break;
      }
    }
  }

  if (!(p.lines.back().formula == p.claim)) {
    return {ProofFailure::kClaimMismatch, p.lines.size() - 1,
            "final line does not match the claim " + print(p.claim)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// JSON scripts

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::kHyp: return "hyp";
    case RuleKind::kTaut: return "taut";
    case RuleKind::kAxiom: return "axiom";
    case RuleKind::kMp: return "mp";
    case RuleKind::kNec: return "nec";
  }
  return "";
}

Formula formula_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw ProofFormatError(where + ": expected a formula string");
  try {
    return parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ProofFormatError(where + ": " + e.what());
  }
}

Coalition coalition_field(const json& v, const std::string& where) {
  if (!v.is_array()) throw ProofFormatError(where + ": expected an array of agent ids");
  std::vector<AgentId> members;
  for (const auto& m : v) {
    if (!m.is_string() || !is_identifier(m.get<std::string>())) {
      throw ProofFormatError(where + ": invalid agent id");
    }
    members.push_back(m.get<std::string>());
  }
  return Coalition(std::move(members));
}

Justification justification_field(const json& v, const std::string& where) {
  if (!v.is_object()) throw ProofFormatError(where + ": expected an object");
  auto kind_it = v.find("kind");
  if (kind_it == v.end() || !kind_it->is_string()) {
    throw ProofFormatError(where + ": missing \"kind\"");
  }
  const std::string kind = kind_it->get<std::string>();
  Justification j;
  if (kind == "hyp") j.kind = RuleKind::kHyp;
  else if (kind == "taut") j.kind = RuleKind::kTaut;
  else if (kind == "axiom") j.kind = RuleKind::kAxiom;
  else if (kind == "mp") j.kind = RuleKind::kMp;
  else if (kind == "nec") j.kind = RuleKind::kNec;
  else throw ProofFormatError(where + ": unknown kind \"" + kind + "\"");

  if (auto it = v.find("from"); it != v.end()) {
    if (!it->is_array()) throw ProofFormatError(where + ".from: expected an array");
    for (const auto& n : *it) {
      if (!n.is_number_unsigned() || n.get<std::size_t>() == 0) {
        throw ProofFormatError(where + ".from: numbers are 1-based");
      }
      j.from.push_back(n.get<std::size_t>() - 1);
    }
  }
  if (j.kind == RuleKind::kAxiom) {
    auto name = v.find("name");
    if (name == v.end() || !name->is_string()) throw ProofFormatError(where + ": missing \"name\"");
    auto schema = schema_from_name(name->get<std::string>());
    if (!schema) throw ProofFormatError(where + ": unknown schema \"" + name->get<std::string>() + "\"");
    j.schema = *schema;
    auto subst = v.find("subst");
    if (subst == v.end() || !subst->is_object()) {
      throw ProofFormatError(where + ": missing \"subst\"");
    }
    for (const auto& [key, value] : subst->items()) {
      const std::string at = where + ".subst." + key;
      if (key == "phi") j.subst.phi = formula_field(value, at);
      else if (key == "psi") j.subst.psi = formula_field(value, at);
      else if (key == "C") j.subst.c = coalition_field(value, at);
      else if (key == "D") j.subst.d = coalition_field(value, at);
      else throw ProofFormatError(at + ": unknown metavariable");
    }
  }
  return j;
}

}  // namespace

Proof load_proof(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ProofFormatError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ProofFormatError("proof document must be a JSON object");
  Proof p;
  if (auto it = doc.find("hypotheses"); it != doc.end()) {
    if (!it->is_array()) throw ProofFormatError("hypotheses: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      p.hypotheses.push_back(formula_field((*it)[i], "hypotheses[" + std::to_string(i) + "]"));
    }
  }
  auto claim = doc.find("claim");
  if (claim == doc.end()) throw ProofFormatError("missing \"claim\"");
  p.claim = formula_field(*claim, "claim");
  auto lines = doc.find("lines");
  if (lines == doc.end() || !lines->is_array()) throw ProofFormatError("missing \"lines\" array");
  for (std::size_t i = 0; i < lines->size(); ++i) {
    const std::string where = "lines[" + std::to_string(i) + "]";
    const json& l = (*lines)[i];
    if (!l.is_object()) throw ProofFormatError(where + ": expected an object");
    auto f = l.find("formula");
    auto j = l.find("just");
    if (f == l.end()) throw ProofFormatError(where + ": missing \"formula\"");
    if (j == l.end()) throw ProofFormatError(where + ": missing \"just\"");
    p.lines.push_back({formula_field(*f, where + ".formula"), justification_field(*j, where + ".just")});
  }
  return p;
}

Proof load_proof_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProofFormatError("cannot open proof file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_proof(buf.str());
}

std::string save_proof(const Proof& p) {
  ordered_json doc;
  ordered_json hyps = ordered_json::array();
  for (const auto& h : p.hypotheses) hyps.push_back(print(h));
  doc["hypotheses"] = std::move(hyps);
  doc["claim"] = print(p.claim);
  ordered_json lines = ordered_json::array();
  for (const auto& line : p.lines) {
    ordered_json just;
    just["kind"] = rule_name(line.just.kind);
    if (line.just.kind == RuleKind::kAxiom) {
      just["name"] = schema_name(line.just.schema);
      ordered_json subst = ordered_json::object();
      const Substitution& s = line.just.subst;
      if (s.phi) subst["phi"] = print(*s.phi);
      if (s.psi) subst["psi"] = print(*s.psi);
      if (s.c) subst["C"] = s.c->members();
      if (s.d) subst["D"] = s.d->members();
      just["subst"] = std::move(subst);
    }
    if (!line.just.from.empty()) {
      ordered_json from = ordered_json::array();
      for (std::size_t n : line.just.from) from.push_back(n + 1);
      just["from"] = std::move(from);
    }
    ordered_json entry;
    entry["formula"] = print(line.formula);
    entry["just"] = std::move(just);
    lines.push_back(std::move(entry));
  }
  doc["lines"] = std::move(lines);
  return doc.dump(2) + "\n";
}

}  // namespace blamelogic
