#ifndef AIEO_SYNTAX_HPP
#define AIEO_SYNTAX_HPP

// Terms and formulas of the epsilon/tau calculus. The two syntactic
// categories are mutually recursive: epsilon and tau binders turn a formula
// into a term, predicates and equality turn terms into formulas.
//
// Values are immutable handles onto shared nodes, so copying is cheap and
// sharing between threads is safe.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace aieo {

class Formula;
struct TermNode;
struct FormulaNode;

class Term {
 public:
  enum class Kind { Variable, Constant, FunApp, Epsilon, Tau };

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term fun_app(std::string symbol, std::vector<Term> args);
  static Term epsilon(std::string var, Formula body);
  static Term tau(std::string var, Formula body);

  Kind kind() const;
  bool is_binder() const {
    return kind() == Kind::Epsilon || kind() == Kind::Tau;
  }

  // Variable/constant name, function symbol, or bound variable of a binder.
  const std::string& name() const;
  // Arguments of a FunApp; empty otherwise.
  const std::vector<Term>& args() const;
  // Body of an Epsilon/Tau. Precondition: is_binder().
  const Formula& body() const;

  // Structural equality (bound names must match too; see alpha_eq).
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

class Formula {
 public:
  enum class Kind {
    Pred,
    Equals,
    Not,
    And,
    Or,
    Implies,
    Exists,
    Forall,
    Falsum,
    Verum,
  };

  // `true`.
  Formula();

  static Formula pred(std::string symbol, std::vector<Term> args);
  static Formula equals(Term lhs, Term rhs);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula falsum();
  static Formula verum();

  Kind kind() const;
  bool is_binary() const {
    return kind() == Kind::And || kind() == Kind::Or ||
           kind() == Kind::Implies;
  }
  bool is_quantifier() const {
    return kind() == Kind::Exists || kind() == Kind::Forall;
  }

  // Predicate symbol or quantified variable.
  const std::string& name() const;
  // Pred arguments, or {lhs, rhs} for Equals.
  const std::vector<Term>& terms() const;
  // Operand of Not, body of a quantifier, left operand of a binary node.
  const Formula& left() const;
  // Right operand of a binary node.
  const Formula& right() const;
  const Formula& operand() const { return left(); }
  const Formula& body() const { return left(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

// The language: constant names, function and predicate arities.
struct Signature {
  std::set<std::string> constants;
  std::map<std::string, std::size_t> functions;
  std::map<std::string, std::size_t> predicates;

  // Throws Error(Arity) when the name sets overlap.
  void validate() const;
  // Adds every symbol of `other`; throws Error(Arity) on conflicting arity.
  void merge(const Signature& other);
};

// Collects the symbols used by the expressions. Conflicting arities, or a
// name used both as a function and a predicate, raise Error(Arity).
Signature signature_of(const Term& t);
Signature signature_of(const Formula& f);
Signature signature_of(const std::vector<Formula>& fs);

// Throws Error(Arity) when the expression uses a symbol with a different
// arity than declared, or a symbol the signature lacks.
void check_well_formed(const Term& t, const Signature& sig);
void check_well_formed(const Formula& f, const Signature& sig);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool occurs_free(const std::string& var, const Term& t);
bool occurs_free(const std::string& var, const Formula& f);

// Capture-avoiding substitution of `replacement` for the free occurrences of
// `var`. A binder whose variable occurs free in `replacement` is renamed to
// the variable with the fewest appended primes that is not free in scope.
Term substitute(const Term& t, const std::string& var, const Term& replacement);
Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement);

bool alpha_eq(const Term& a, const Term& b);
bool alpha_eq(const Formula& a, const Formula& b);

// Rewrites every tau x. F into eps x. ~F, bottom-up.
Term dual_normalize(const Term& t);
Formula dual_normalize(const Formula& f);

// Canonical representative of the class generated by eps x. F = tau x. ~F
// read in both directions: every tau x. G becomes eps x. ~G, then pairs of
// leading negations in each epsilon body cancel. Two expressions are
// interconvertible by the rewrite iff their canonical forms are
// alpha-equivalent.
Term dual_canonical(const Term& t);
Formula dual_canonical(const Formula& f);

// Innermost first, exists x. F becomes F[eps x. F / x] and forall x. F
// becomes F[tau x. F / x].
Formula expand_quantifiers(const Formula& f);

// Replaces occurrences of the variable by the corresponding term binder:
// instantiate_eps(x, F) = F[eps x. F / x].
Formula instantiate_eps(const std::string& var, const Formula& body);
Formula instantiate_tau(const std::string& var, const Formula& body);

// Smallest primed variant of `base` not in `avoid`.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid);

// Number of nested constructors along the deepest path.
std::size_t depth(const Term& t);
std::size_t depth(const Formula& f);

}  // namespace aieo

#endif  // AIEO_SYNTAX_HPP
