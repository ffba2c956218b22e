#ifndef AIEO_SQUARE_HPP
#define AIEO_SQUARE_HPP

// The A/E/I/O epsilon square, its opposition conditions, bivalence, and the
// square-selection result, checked against a pluggable entailment oracle.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aieo/kernel.hpp"
#include "aieo/library.hpp"
#include "aieo/model.hpp"
#include "aieo/syntax.hpp"

namespace aieo {

struct AieoSquare {
  std::string subject;    // S
  std::string predicate;  // P
  bool negated = false;   // true for the square built from ~P
  Formula A, E, I, O;
};

// A = P(tau x. S(x)), I = P(eps x. S(x)), E = ~I, O = ~A, with P(_) replaced
// by ~P(_) when `negate_p`. Throws Error(Arity) when `sig` declares S or P
// with an arity other than 1, Error(InvalidArgument) for a bad name.
AieoSquare build_square(const std::string& s, const std::string& p,
                        bool negate_p, const Signature* sig = nullptr);

// Fills the square's hole: P(t) or ~P(t).
Formula fill(const AieoSquare& sq, const Term& t);

struct OracleAnswer {
  bool holds = false;
  // Bounded oracle: a model of the theory and hypotheses falsifying the goal.
  std::optional<ChoiceModel> countermodel;
  Assignment assignment;
  // Kernel oracle: the name of the library derivation used.
  std::string derivation;
};

class EntailmentOracle {
 public:
  virtual ~EntailmentOracle() = default;
  // hypotheses |- goal, relative to the oracle's theory.
  virtual OracleAnswer query(const std::vector<Formula>& hypotheses,
                             const Formula& goal) = 0;
  virtual std::string describe() const = 0;
  virtual const std::vector<Formula>& theory() const = 0;
};

// Truth in every model of the theory up to `bound` elements. Closed formulas
// over the construction signature are answered from cached truth vectors;
// anything else falls back to a direct sweep.
class BoundedOracle : public EntailmentOracle {
 public:
  BoundedOracle(std::vector<Formula> theory, int bound, Signature sig = {},
                std::uint64_t budget = kDefaultBudget);

  OracleAnswer query(const std::vector<Formula>& hypotheses,
                     const Formula& goal) override;
  std::string describe() const override;
  const std::vector<Formula>& theory() const override { return theory_; }

  int bound() const { return bound_; }
  std::size_t model_count() const { return models_.size(); }
  const ChoiceModel& model(std::size_t i) const { return models_[i]; }

  // One bit per enumerated model, in enumeration order.
  using Bits = std::vector<std::uint64_t>;
  const Bits& truth(const Formula& closed);
  const Bits& theory_mask() const { return theory_mask_; }

 private:
  bool covered(const Formula& f) const;

  std::vector<Formula> theory_;
  int bound_;
  Signature sig_;
  std::uint64_t budget_;
  std::vector<ChoiceModel> models_;
  Bits theory_mask_;
  std::map<std::string, Bits> cache_;
};

// Entailment by the shipped derivation library: holds when a kernel-checked
// derivation concludes the goal from hypotheses drawn from theory + hyps.
class KernelOracle : public EntailmentOracle {
 public:
  KernelOracle(const std::vector<NamedDerivation>& library,
               std::vector<Formula> theory = {});

  OracleAnswer query(const std::vector<Formula>& hypotheses,
                     const Formula& goal) override;
  std::string describe() const override;
  const std::vector<Formula>& theory() const override { return theory_; }

 private:
  std::vector<std::pair<std::string, Sequent>> proved_;
  std::vector<Formula> theory_;
};

struct ConditionCheck {
  std::string label;  // e.g. "A |- I"
  std::vector<Formula> hypotheses;
  Formula goal;
  OracleAnswer answer;
};

struct SquareReport {
  AieoSquare square;
  std::string oracle;
  std::vector<Formula> theory;

  bool a_iff_not_o = false;      // i
  bool e_iff_not_i = false;      // i
  bool contraries_ok = false;    // ii
  bool subcontraries_ok = false; // iii
  bool a_entails_i = false;      // iv
  bool e_entails_o = false;      // iv

  // Informational: ~I |- ~A and ~O |- ~E.
  bool not_i_entails_not_a = false;
  bool not_o_entails_not_e = false;
  // Informational: I and O are never both false (~I and ~O not both valid).
  bool i_o_not_both_false = false;

  std::vector<ConditionCheck> checks;
  std::vector<std::string> notes;

  bool contradictories_ok() const { return a_iff_not_o && e_iff_not_i; }
  bool subalterns_ok() const { return a_entails_i && e_entails_o; }
  bool all_ok() const {
    return contradictories_ok() && contraries_ok && subcontraries_ok &&
           subalterns_ok();
  }
};

SquareReport check_square(const AieoSquare& sq, EntailmentOracle& oracle);

enum class Bivalence { LeftToRight, RightToLeft, Both, Neither };
const char* bivalence_name(Bivalence b);

struct BivalenceResult {
  Bivalence verdict = Bivalence::Neither;
  ConditionCheck eps_to_tau;  // P(eps S) |- P(tau S)
  ConditionCheck tau_to_eps;  // P(tau S) |- P(eps S)
};

BivalenceResult bivalence(const std::string& s, const std::string& p,
                          EntailmentOracle& oracle);

struct PropositionResult {
  BivalenceResult bivalence;
  bool negated = false;  // false: S(S,P) chosen; true: S(S,~P)
  SquareReport report;
};

// Throws Error(HypothesisNotMet) when bivalence is Neither.
PropositionResult proposition_check(const std::string& s, const std::string& p,
                                    EntailmentOracle& oracle);

struct RemarkOptions {
  int bound = 3;
  std::size_t random_quadruples = 500;
  std::uint64_t seed = 20240229;
  // Theories to relativize the oracle to; the empty theory is always used.
  std::vector<std::vector<Formula>> theories;
};

struct RemarkViolation {
  std::string part;  // "iii" or "iv"
  std::vector<Formula> theory;
  Formula A, E, I, O;
};

struct RemarkReport {
  std::size_t exhaustive = 0;
  std::size_t random = 0;
  // Quadruples where the premises of each part held.
  std::size_t iii_premises_held = 0;
  std::size_t iv_premises_held = 0;
  std::vector<RemarkViolation> violations;
};

// Closed formulas over {S, P} used for the exhaustive quadruples.
std::vector<Formula> remark_pool();

// Checks, for every quadruple: (i and ii) implies iii, and (i and A |- I)
// implies E |- O. Exhaustive over remark_pool()^4 plus random quadruples of
// depth <= 2, under each theory.
RemarkReport remark_check(const RemarkOptions& opts = {});

// ASCII rendering of the square with its edges and check marks.
std::string render_square(const SquareReport& r);

}  // namespace aieo

#endif  // AIEO_SQUARE_HPP
