#ifndef AIEO_KERNEL_HPP
#define AIEO_KERNEL_HPP

// Natural deduction for classical logic with the epsilon/tau rules.
//
// Derivations are explicit trees. The builders in namespace `nd` compute the
// conclusion a rule application would have; check_derivation independently
// re-validates every node, so a hand-assembled (or script-supplied) tree is
// only trusted once the kernel has accepted it.
//
// Hypotheses are multisets compared up to alpha-equivalence. Rules with
// several premises require every premise to carry the conclusion's
// hypotheses (apart from the ones a rule discharges); Weakening adds one.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aieo/error.hpp"
#include "aieo/syntax.hpp"

namespace aieo {

enum class Rule {
  Axiom,
  Weakening,
  AndIntro,
  AndElimLeft,
  AndElimRight,
  OrIntroLeft,
  OrIntroRight,
  OrElim,
  ImpIntro,
  ImpElim,
  NotIntro,
  NotElim,
  FalsumElim,
  DoubleNegElim,
  EqRefl,
  EqSubst,
  TauIntro,
  TauElim,
  EpsIntro,
  DualRewrite,
};

const char* rule_name(Rule r);
// Case-insensitive; '-' and '_' are ignored ("and-intro" == "AndIntro").
std::optional<Rule> rule_from_name(std::string_view name);

struct Sequent {
  std::vector<Formula> hypotheses;
  Formula conclusion;
};

std::string to_string(const Sequent& s);

// Multiset equality up to alpha-equivalence.
bool same_hypotheses(const std::vector<Formula>& a,
                     const std::vector<Formula>& b);
bool alpha_eq(const Sequent& a, const Sequent& b);

// Side data a rule needs beyond its premises.
struct RulePayload {
  std::optional<std::string> var;       // bound variable of the schema
  std::optional<Formula> body;          // schema F(x)
  std::optional<Term> witness;          // instance term t
  std::optional<Formula> formula;       // added / discharged / new formula
  std::optional<std::vector<Formula>> hypotheses;  // DualRewrite target
};

struct Derivation {
  Rule rule;
  std::vector<Derivation> premises;
  Sequent conclusion;
  RulePayload payload;
  std::string label;
};

class KernelError : public Error {
 public:
  KernelError(ErrorCode code, std::string label, Rule rule, std::string reason);

  const std::string& label() const { return label_; }
  Rule rule() const { return rule_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string label_;
  Rule rule_;
  std::string reason_;
};

// Returns the end-sequent iff every node is valid; otherwise throws
// KernelError for the first failing node in post-order, with code
// EigenvariableViolation, RuleMismatch, or Arity.
Sequent check_derivation(const Derivation& d);

std::size_t derivation_size(const Derivation& d);

namespace nd {

Derivation axiom(const Formula& a);
Derivation weaken(Derivation d, const Formula& extra);
// Weakens until the hypotheses equal `target` (as multisets). Throws
// KernelError(RuleMismatch) when d has a hypothesis target lacks.
Derivation weaken_to(Derivation d, const std::vector<Formula>& target);
Derivation and_intro(Derivation left, Derivation right);
Derivation and_elim_left(Derivation d);
Derivation and_elim_right(Derivation d);
Derivation or_intro_left(Derivation d, const Formula& right);
Derivation or_intro_right(const Formula& left, Derivation d);
Derivation or_elim(Derivation disj, Derivation left_case,
                   Derivation right_case);
Derivation imp_intro(Derivation d, const Formula& discharged);
Derivation imp_elim(Derivation imp, Derivation arg);
Derivation not_intro(Derivation d, const Formula& discharged);
Derivation not_elim(Derivation pos, Derivation neg);
Derivation falsum_elim(Derivation d, const Formula& goal);
Derivation double_neg_elim(Derivation d);
Derivation eq_refl(const Term& t);
Derivation eq_subst(Derivation eq, Derivation d, const std::string& var,
                    const Formula& body);
Derivation tau_intro(Derivation d, const std::string& var);
Derivation tau_elim(Derivation d, const std::string& var, const Formula& body,
                    const Term& witness);
Derivation eps_intro(Derivation d, const std::string& var, const Formula& body,
                     const Term& witness);
Derivation dual_rewrite(Derivation d, std::vector<Formula> hypotheses,
                        const Formula& conclusion);
Derivation dual_rewrite(Derivation d, const Formula& conclusion);

// A |- ~~A from a derivation of A.
Derivation double_neg_intro(Derivation d);

Derivation labeled(Derivation d, std::string label);

}  // namespace nd

// Line-oriented proof scripts:
//
//   # comment
//   <label>: <Rule> [premise labels...] [; key: value]...
//
// Keys: formula, var, body, witness, hyp (repeatable), concl. The last line
// is the derivation returned. `concl` overrides the computed conclusion so a
// script can assert what a step proves; the kernel rejects a mismatch.
// Throws Error(Parse) on malformed lines and KernelError when a builder
// cannot apply a rule.
Derivation parse_proof_script(std::string_view text,
                              const Signature* sig = nullptr);

// Prints a derivation in the script format, one line per node.
std::string to_script(const Derivation& d);

}  // namespace aieo

#endif  // AIEO_KERNEL_HPP
