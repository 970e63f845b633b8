// Shipped derivations. Every script here must pass check_proof; the unit and
// acceptance tests enforce that, and additionally that each hypothesis-free
// claim is valid on random games.

#include <string_view>

#include "blamelogic/parser.hpp"
#include "blamelogic/proof.hpp"

namespace blamelogic {

namespace {

using F = Formula;

F fm(std::string_view text) { return parse(text); }

F imp(F a, F b) { return F::implies(std::move(a), std::move(b)); }

// premises[0] -> (premises[1] -> (... -> conclusion))
F chain(const std::vector<F>& premises, F conclusion) {
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) conclusion = imp(*it, conclusion);
  return conclusion;
}

Substitution sub(std::optional<std::string_view> phi, std::optional<std::string_view> psi = {},
                 std::optional<Coalition> c = {}, std::optional<Coalition> d = {}) {
  Substitution s;
  if (phi) s.phi = fm(*phi);
  if (psi) s.psi = fm(*psi);
  s.c = std::move(c);
  s.d = std::move(d);
  return s;
}

class ScriptBuilder {
 public:
  ScriptBuilder(std::vector<std::string_view> hypotheses, std::string_view claim) {
    for (auto h : hypotheses) proof_.hypotheses.push_back(fm(h));
    proof_.claim = fm(claim);
  }

  const F& at(std::size_t line) const { return proof_.lines.at(line).formula; }
  const F& claim() const { return proof_.claim; }

  std::size_t hyp(std::size_t k) {
    return add(proof_.hypotheses.at(k), Justification::hyp(k));
  }
  std::size_t taut(F f) { return add(std::move(f), Justification::taut()); }
  std::size_t axiom(Schema s, Substitution subst) {
    F instance = instantiate_schema(s, subst);
    return add(std::move(instance), Justification::axiom(s, std::move(subst)));
  }
  // Concludes the consequent of line `implication`.
  std::size_t mp(std::size_t antecedent, std::size_t implication) {
    return add(at(implication).rhs(), Justification::mp(antecedent, implication));
  }
  std::size_t nec(std::size_t premise) {
    return add(F::necessity(at(premise)), Justification::nec(premise));
  }

  // Detaches the given lines, in order, from the implication chain at `from`.
  std::size_t mp_all(std::size_t from, std::initializer_list<std::size_t> antecedents) {
    for (std::size_t a : antecedents) from = mp(a, from);
    return from;
  }

  // Contracts  A -> (A -> B)  at line `l` into  A -> B.
  std::size_t contract(std::size_t l) {
    const F& a = at(l).lhs();
    const F& b = at(l).rhs().rhs();
    return mp(l, taut(imp(at(l), imp(a, b))));
  }

  Proof build() && { return std::move(proof_); }

 private:
  std::size_t add(F f, Justification j) {
    proof_.lines.push_back({std::move(f), std::move(j)});
    return proof_.lines.size() - 1;
  }

  Proof proof_;
};

// Appends a derivation of  N phi -> N N phi  and returns its line.
std::size_t positive_introspection(ScriptBuilder& b, std::string_view phi_text) {
  const F phi = fm(phi_text);
  const F n_phi = F::necessity(phi);
  const F not_n_phi = F::negation(n_phi);

  // N !N phi -> !N phi, contraposed to N phi -> !N !N phi
  const auto truth = b.axiom(Schema::kTruthN, Substitution{not_n_phi, {}, {}, {}});
  const auto contra = b.taut(imp(b.at(truth), imp(n_phi, F::negation(F::necessity(not_n_phi)))));
  const auto to_dual = b.mp(truth, contra);

  // !N !N phi -> N !N !N phi
  const auto intro_outer =
      b.axiom(Schema::kNegativeIntrospection, Substitution{not_n_phi, {}, {}, {}});
  // !N phi -> N !N phi, contraposed to !N !N phi -> N phi
  const auto intro_inner = b.axiom(Schema::kNegativeIntrospection, Substitution{phi, {}, {}, {}});
  const F back_impl = imp(F::negation(F::necessity(not_n_phi)), n_phi);
  const auto back = b.mp(intro_inner, b.taut(imp(b.at(intro_inner), back_impl)));
  const auto boxed = b.nec(back);
  const auto dist = b.axiom(Schema::kDistributivity,
                            Substitution{back_impl.lhs(), back_impl.rhs(), {}, {}});
  const auto lifted = b.mp(boxed, dist);  // N !N !N phi -> N N phi

  const F goal = imp(n_phi, F::necessity(n_phi));
  const auto glue = b.taut(chain({b.at(to_dual), b.at(intro_outer), b.at(lifted)}, goal));
  return b.mp_all(glue, {to_dual, intro_outer, lifted});
}

Proof lemma1() {
  ScriptBuilder b({}, "B{a} p -> B{a} B{a} p");
  const auto truth = b.axiom(Schema::kTruthB, sub("p", {}, Coalition{"a"}));
  const auto boxed = b.nec(truth);
  const auto cause = b.axiom(Schema::kBlameForCause, sub("B{a} p", "p", Coalition{"a"}));
  const auto twice = b.mp(boxed, cause);  // B{a} p -> (B{a} p -> B{a} B{a} p)
  b.contract(twice);
  return std::move(b).build();
}

Proof lemma2() {
  ScriptBuilder b({}, "<N> B{a} p -> (p -> B{a} p)");
  const F fair_inner = fm("p -> B{a} p");
  const F not_box = F::negation(F::necessity(fair_inner));  // !N (p -> B{a} p)
  const F not_blame = fm("!B{a} p");

  const auto fair = b.axiom(Schema::kFairness, sub("p", {}, Coalition{"a"}));
  const auto contra = b.mp(fair, b.taut(imp(b.at(fair), imp(not_box, not_blame))));
  const auto boxed = b.nec(contra);
  const auto dist = b.axiom(Schema::kDistributivity, Substitution{not_box, not_blame, {}, {}});
  const auto lifted = b.mp(boxed, dist);  // N !N (p -> B{a} p) -> N !B{a} p
  const auto intro =
      b.axiom(Schema::kNegativeIntrospection, Substitution{fair_inner, {}, {}, {}});
  const auto truth = b.axiom(Schema::kTruthN, Substitution{fair_inner, {}, {}, {}});
  const auto glue = b.taut(chain({b.at(intro), b.at(lifted), b.at(truth)}, b.claim()));
  b.mp_all(glue, {intro, lifted, truth});
  return std::move(b).build();
}

Proof lemma3_instance() {
  // The premise p | q <-> q | p of the derived rule is itself a tautology.
  ScriptBuilder b({}, "B{a} (p | q) -> B{a} (q | p)");
  const auto premise = b.taut(fm("p | q <-> q | p"));
  const auto reverse = b.mp(premise, b.taut(imp(b.at(premise), fm("q | p -> p | q"))));
  const auto boxed = b.nec(reverse);
  const auto cause = b.axiom(Schema::kBlameForCause, sub("q | p", "p | q", Coalition{"a"}));
  const auto step = b.mp(boxed, cause);  // B{a} (p | q) -> (q | p -> B{a} (q | p))
  const auto truth = b.axiom(Schema::kTruthB, sub("p | q", {}, Coalition{"a"}));
  const auto glue = b.taut(chain({b.at(step), b.at(truth), b.at(premise)}, b.claim()));
  b.mp_all(glue, {step, truth, premise});
  return std::move(b).build();
}

Proof lemma4() {
  ScriptBuilder b({"p"}, "<N> p");
  const auto h = b.hyp(0);
  const auto truth = b.axiom(Schema::kTruthN, sub("!p"));
  const auto contra = b.mp(truth, b.taut(imp(b.at(truth), fm("p -> <N> p"))));
  b.mp(h, contra);
  return std::move(b).build();
}

Proof lemma5_n2() {
  ScriptBuilder b({"<N> B{a} p", "<N> B{b} q", "p | q"}, "B{a,b} (p | q)");
  const auto joint = b.axiom(Schema::kJointResponsibility,
                             sub("p", "q", Coalition{"a"}, Coalition{"b"}));
  const F curried = chain({fm("<N> B{a} p"), fm("<N> B{b} q"), fm("p | q")}, b.claim());
  const auto uncurry = b.mp(joint, b.taut(imp(b.at(joint), curried)));
  const auto h0 = b.hyp(0);
  const auto h1 = b.hyp(1);
  const auto h2 = b.hyp(2);
  b.mp_all(uncurry, {h0, h1, h2});
  return std::move(b).build();
}

Proof lemma5_n3() {
  ScriptBuilder b({"<N> B{a} p", "<N> B{b} q", "<N> B{c} r", "p | q | r"},
                  "B{a,b,c} (p | q | r)");
  const F x = fm("<N> B{a} p");
  const F y = fm("<N> B{b} q");
  const F not_ab = fm("!B{a,b} (p | q)");
  const F not_a = fm("!B{a} p");
  const F w = imp(not_ab, not_a);

  // First fold the two leftmost disjuncts: <N> B{a} p, <N> B{b} q |- <N> B{a,b} (p | q).
  const auto joint = b.axiom(Schema::kJointResponsibility,
                             sub("p", "q", Coalition{"a"}, Coalition{"b"}));
  const auto truth = b.axiom(Schema::kTruthB, sub("p", {}, Coalition{"a"}));
  const auto local = b.mp_all(
      b.taut(chain({b.at(joint), b.at(truth)}, chain({x, y}, w))), {joint, truth});
  const auto boxed = b.nec(local);  // N (X -> (Y -> W))
  const auto d1 = b.axiom(Schema::kDistributivity, Substitution{x, imp(y, w), {}, {}});
  const auto l1 = b.mp(boxed, d1);
  const auto d2 = b.axiom(Schema::kDistributivity, Substitution{y, w, {}, {}});
  const auto d3 = b.axiom(Schema::kDistributivity, Substitution{not_ab, not_a, {}, {}});
  const auto i1 = b.axiom(Schema::kNegativeIntrospection, sub("!B{a} p"));
  const auto i2 = b.axiom(Schema::kNegativeIntrospection, sub("!B{b} q"));
  const F somewhere_ab = fm("<N> B{a,b} (p | q)");
  const auto glue = b.taut(
      chain({b.at(i1), b.at(i2), b.at(l1), b.at(d2), b.at(d3)}, chain({x, y}, somewhere_ab)));
  const auto lifted = b.mp_all(glue, {i1, i2, l1, d2, d3});
  const auto h0 = b.hyp(0);
  const auto h1 = b.hyp(1);
  const auto ab = b.mp_all(lifted, {h0, h1});

  // Then join {a,b} with {c}.
  const auto joint2 = b.axiom(Schema::kJointResponsibility,
                              sub("p | q", "r", Coalition{"a", "b"}, Coalition{"c"}));
  const F curried = chain({somewhere_ab, fm("<N> B{c} r"), fm("p | q | r")}, b.claim());
  const auto uncurry = b.mp(joint2, b.taut(imp(b.at(joint2), curried)));
  const auto h2 = b.hyp(2);
  const auto h3 = b.hyp(3);
  b.mp_all(uncurry, {ab, h2, h3});
  return std::move(b).build();
}

Proof lemma6_n2() {
  // Instance of the derived rule for p, p -> q |- q.
  ScriptBuilder b({"N p", "N (p -> q)"}, "N q");
  const auto inner = b.taut(fm("p -> (p -> q) -> q"));
  const auto boxed = b.nec(inner);
  const auto d1 = b.axiom(Schema::kDistributivity, sub("p", "(p -> q) -> q"));
  const auto l1 = b.mp(boxed, d1);
  const auto h0 = b.hyp(0);
  const auto l2 = b.mp(h0, l1);  // N ((p -> q) -> q)
  const auto d2 = b.axiom(Schema::kDistributivity, sub("p -> q", "q"));
  const auto l3 = b.mp(l2, d2);
  const auto h1 = b.hyp(1);
  b.mp(h1, l3);
  return std::move(b).build();
}

Proof lemma7() {
  ScriptBuilder b({}, "N p -> N N p");
  positive_introspection(b, "p");
  return std::move(b).build();
}

Proof lemma8_n2() {
  ScriptBuilder b({"<N> B{a} p", "<N> B{b} q", "N (r -> p | q)"}, "N (r -> B{a,b} r)");
  const F x = fm("<N> B{a} p");
  const F y = fm("<N> B{b} q");
  const F k = fm("N (r -> p | q)");
  const F r = fm("r -> B{a,b} r");

  // |- X -> (Y -> (K -> R))
  const auto joint = b.axiom(Schema::kJointResponsibility,
                             sub("p", "q", Coalition{"a"}, Coalition{"b"}));
  const auto cause = b.axiom(Schema::kBlameForCause, sub("r", "p | q", Coalition{"a", "b"}));
  const auto truth = b.axiom(Schema::kTruthN, sub("r -> p | q"));
  const auto local = b.mp_all(
      b.taut(chain({b.at(joint), b.at(cause), b.at(truth)}, chain({x, y, k}, r))),
      {joint, cause, truth});

  // Push it under N and distribute.
  const auto boxed = b.nec(local);
  const auto d1 = b.axiom(Schema::kDistributivity, Substitution{x, imp(y, imp(k, r)), {}, {}});
  const auto l1 = b.mp(boxed, d1);
  const auto d2 = b.axiom(Schema::kDistributivity, Substitution{y, imp(k, r), {}, {}});
  const auto d3 = b.axiom(Schema::kDistributivity, Substitution{k, r, {}, {}});

  // The hypotheses are necessary whenever true.
  const auto i1 = b.axiom(Schema::kNegativeIntrospection, sub("!B{a} p"));
  const auto i2 = b.axiom(Schema::kNegativeIntrospection, sub("!B{b} q"));
  const auto i3 = positive_introspection(b, "r -> p | q");

  const auto glue = b.taut(chain({b.at(i1), b.at(i2), b.at(i3), b.at(l1), b.at(d2), b.at(d3)},
                                 chain({x, y, k}, b.claim())));
  const auto lifted = b.mp_all(glue, {i1, i2, i3, l1, d2, d3});
  const auto h0 = b.hyp(0);
  const auto h1 = b.hyp(1);
  const auto h2 = b.hyp(2);
  b.mp_all(lifted, {h0, h1, h2});
  return std::move(b).build();
}

}  // namespace

const std::vector<NamedProof>& bundled_scripts() {
  static const std::vector<NamedProof> kScripts = {
      {"lemma1", lemma1()},       {"lemma2", lemma2()},       {"lemma3_instance", lemma3_instance()},
      {"lemma4", lemma4()},       {"lemma5_n2", lemma5_n2()}, {"lemma5_n3", lemma5_n3()},
      {"lemma6_n2", lemma6_n2()}, {"lemma7", lemma7()},       {"lemma8_n2", lemma8_n2()},
  };
  return kScripts;
}

const Proof* find_bundled(std::string_view name) {
  for (const auto& s : bundled_scripts()) {
    if (s.name == name) return &s.proof;
  }
  return nullptr;
}

}  // namespace blamelogic
