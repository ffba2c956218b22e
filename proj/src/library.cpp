#include "aieo/library.hpp"

#include "aieo/text.hpp"

namespace aieo {

namespace {

Formula f(const char* text) { return parse_formula(text); }

NamedDerivation checked(std::string name, Derivation d) {
  check_derivation(d);
  return {std::move(name), nd::labeled(std::move(d), name)};
}

// Gamma |- goal from the axiom goal, weakened into Gamma.
Derivation hyp(const Formula& goal, const std::vector<Formula>& context) {
  return nd::weaken_to(nd::axiom(goal), context);
}

}  // namespace

Formula tau_to_eps_axiom() {
  return f("P(tau x. S(x)) -> P(eps x. S(x))");
}

Formula eps_to_tau_axiom() {
  return f("P(eps x. S(x)) -> P(tau x. S(x))");
}

std::vector<NamedDerivation> derive_dual_equivalences() {
  std::vector<NamedDerivation> out;
  const Formula eps_p = f("P(eps x. P(x))");
  const Formula tau_not_p = f("P(tau x. ~P(x))");
  const Formula tau_p = f("P(tau x. P(x))");
  const Formula eps_not_p = f("P(eps x. ~P(x))");
  auto nn = [](const Formula& a) {
    return Formula::negation(Formula::negation(a));
  };

  out.push_back(checked(
      "dual-eps-to-tau",
      nd::double_neg_intro(nd::dual_rewrite(nd::axiom(eps_p), tau_not_p))));
  out.push_back(checked(
      "dual-tau-to-eps",
      nd::dual_rewrite(nd::double_neg_elim(nd::axiom(nn(tau_not_p))), eps_p)));
  out.push_back(checked(
      "dual-tau-to-neg-eps",
      nd::double_neg_intro(nd::dual_rewrite(nd::axiom(tau_p), eps_not_p))));
  out.push_back(checked(
      "dual-neg-eps-to-tau",
      nd::dual_rewrite(nd::double_neg_elim(nd::axiom(nn(eps_not_p))), tau_p)));
  return out;
}

std::vector<NamedDerivation> derive_witness_entailments() {
  std::vector<NamedDerivation> out;
  const Term eps_s = parse_term("eps x. S(x)");
  {
    // P(eps S), S(eps S) |- S(t) & P(t), t = eps x. (S(x) & P(x))
    const Formula p_eps = f("P(eps x. S(x))");
    const Formula s_eps = expand_quantifiers(f("exists x. S(x)"));
    const std::vector<Formula> ctx{p_eps, s_eps};
    Derivation both = nd::and_intro(hyp(s_eps, ctx), hyp(p_eps, ctx));
    out.push_back(checked(
        "witness-conjunction",
        nd::eps_intro(std::move(both), "x", f("S(x) & P(x)"), eps_s)));
  }
  {
    // S(eps S), S(tau y. (S(y) -> P(y))) -> P(tau y. ...) |- P(eps S)
    const Formula s_eps = expand_quantifiers(f("exists x. S(x)"));
    const Formula all = expand_quantifiers(f("forall y. (S(y) -> P(y))"));
    const std::vector<Formula> ctx{s_eps, all};
    Derivation inst =
        nd::tau_elim(hyp(all, ctx), "y", f("S(y) -> P(y)"), eps_s);
    out.push_back(checked("witness-universal",
                          nd::imp_elim(std::move(inst), hyp(s_eps, ctx))));
  }
  return out;
}

std::vector<NamedDerivation> derive_square_proofs() {
  std::vector<NamedDerivation> out;
  const Formula p_tau = f("P(tau x. S(x))");
  const Formula p_eps = f("P(eps x. S(x))");
  auto neg = [](const Formula& a) { return Formula::negation(a); };

  // Contradictories for both squares: X |- ~~X, ~~X |- X, ~Y |- ~Y.
  for (bool negated : {false, true}) {
    const std::string tag = negated ? "S,~P" : "S,P";
    const Formula A = negated ? neg(p_tau) : p_tau;
    const Formula I = negated ? neg(p_eps) : p_eps;
    const Formula O = neg(A);
    const Formula E = neg(I);
    out.push_back(checked("square(" + tag + ") A |- ~O",
                          nd::double_neg_intro(nd::axiom(A))));
    out.push_back(checked("square(" + tag + ") ~O |- A",
                          nd::double_neg_elim(nd::axiom(neg(O)))));
    out.push_back(checked("square(" + tag + ") E |- ~I", nd::axiom(E)));
    out.push_back(checked("square(" + tag + ") ~I |- E", nd::axiom(neg(I))));
  }

  // Subalterns of S(S,P) under P(tau S) -> P(eps S).
  {
    const Formula g = tau_to_eps_axiom();
    const std::vector<Formula> ctx{g, p_tau};
    out.push_back(checked("square(S,P) A |- I",
                          nd::imp_elim(hyp(g, ctx), hyp(p_tau, ctx))));
    // g, ~P(eps S) |- ~P(tau S)
    const std::vector<Formula> inner{g, neg(p_eps), p_tau};
    Derivation i = nd::imp_elim(hyp(g, inner), hyp(p_tau, inner));
    Derivation bottom = nd::not_elim(std::move(i), hyp(neg(p_eps), inner));
    out.push_back(
        checked("square(S,P) E |- O", nd::not_intro(std::move(bottom), p_tau)));
  }

  // Subalterns of S(S,~P) under P(eps S) -> P(tau S).
  {
    const Formula g = eps_to_tau_axiom();
    // g, ~P(tau S) |- ~P(eps S)
    const std::vector<Formula> inner{g, neg(p_tau), p_eps};
    Derivation t = nd::imp_elim(hyp(g, inner), hyp(p_eps, inner));
    Derivation bottom = nd::not_elim(std::move(t), hyp(neg(p_tau), inner));
    out.push_back(checked("square(S,~P) A |- I",
                          nd::not_intro(std::move(bottom), p_eps)));
    // g, ~~P(eps S) |- ~~P(tau S)
    const std::vector<Formula> ctx{g, neg(neg(p_eps))};
    Derivation e = nd::double_neg_elim(hyp(neg(neg(p_eps)), ctx));
    Derivation tau = nd::imp_elim(hyp(g, ctx), std::move(e));
    out.push_back(
        checked("square(S,~P) E |- O", nd::double_neg_intro(std::move(tau))));
  }
  return out;
}

std::vector<NamedDerivation> shipped_derivations() {
  std::vector<NamedDerivation> out = derive_dual_equivalences();
  for (auto& d : derive_witness_entailments()) out.push_back(std::move(d));
  for (auto& d : derive_square_proofs()) out.push_back(std::move(d));
  return out;
}

}  // namespace aieo
