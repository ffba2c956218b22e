#ifndef AIEO_MONTAGUE_HPP
#define AIEO_MONTAGUE_HPP

// Simply typed lambda calculus over the base types e and t, the quantifier
// lexicon, and the bridge from normal forms to first-order formulas.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aieo/error.hpp"
#include "aieo/model.hpp"
#include "aieo/syntax.hpp"

namespace aieo {

class SemType {
 public:
  enum class Kind { E, T, Arrow };

  static SemType e();
  static SemType t();
  static SemType arrow(SemType from, SemType to);

  Kind kind() const { return kind_; }
  const SemType& from() const;
  const SemType& to() const;

  friend bool operator==(const SemType& a, const SemType& b);

 private:
  SemType(Kind k, std::shared_ptr<const SemType> from,
          std::shared_ptr<const SemType> to)
      : kind_(k), from_(std::move(from)), to_(std::move(to)) {}

  Kind kind_;
  std::shared_ptr<const SemType> from_;
  std::shared_ptr<const SemType> to_;
};

// "e", "t", "(e->t)->t"; arrows associate to the right.
std::string to_string(const SemType& t);
SemType parse_type(std::string_view text);

struct LambdaNode;

class LambdaTerm {
 public:
  enum class Kind { Var, Const, Abs, App };

  static LambdaTerm var(std::string name, SemType type);
  static LambdaTerm constant(std::string name, SemType type);
  static LambdaTerm abs(std::string var, SemType var_type, LambdaTerm body);
  static LambdaTerm app(LambdaTerm fun, LambdaTerm arg);

  Kind kind() const;
  // Var / Const / Abs: the name or bound variable.
  const std::string& name() const;
  // Var / Const: the annotated type; Abs: the bound variable's type.
  const SemType& type() const;
  const LambdaTerm& body() const;
  const LambdaTerm& fun() const;
  const LambdaTerm& arg() const;

 private:
  explicit LambdaTerm(std::shared_ptr<const LambdaNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const LambdaNode> node_;
};

bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b);
std::string to_string(const LambdaTerm& t);

// Throws Error(TypeMismatch) for an ill-typed application or a variable whose
// annotation disagrees with its binder, Error(UnboundVariable) for a variable
// with no enclosing abstraction.
SemType typecheck(const LambdaTerm& t);

inline constexpr std::size_t kDefaultFuel = 100'000;

// Normal-order reduction to beta-normal form. Throws
// Error(NormalizationFuel) after `fuel` contractions.
LambdaTerm beta_normalize(const LambdaTerm& t, std::size_t fuel = kDefaultFuel);

// A beta-normal term of type t built from the logical constants (exists,
// forall, and, or, implies, not, eps, tau) and first-order predicate and
// function constants. Abstractions passed to binders become the bound
// variable; other predicate arguments are eta-expanded. Throws
// Error(NotFirstOrder) otherwise.
Formula reify(const LambdaTerm& t);

class Lexicon {
 public:
  struct Entry {
    std::string word;
    SemType type;
    // Unset for primitive constants.
    std::optional<LambdaTerm> definition;
  };

  // The compiled-in entries: logical constants, the quantifier words, and
  // the demo vocabulary.
  static Lexicon builtin();
  static const char* builtin_text();

  // One entry per line: `word : type [= term]`; '#' starts a comment. Later
  // entries replace earlier ones. Definitions may use earlier words.
  void load(std::string_view text);

  void add_constant(const std::string& word, SemType type);
  // Throws Error(TypeMismatch) when the definition's type is not `type`.
  void define(const std::string& word, SemType type, LambdaTerm definition);

  // Exact match first, then lowercase.
  const Entry* find(std::string_view word) const;
  // The term a word stands for: its definition, or the constant itself.
  // Throws Error(UnknownWord).
  LambdaTerm term(std::string_view word) const;
  // Follows alias definitions (a word defined as another constant) down to
  // the primitive constant name, e.g. "politicians" -> "politician".
  std::string base_name(std::string_view word) const;

  std::vector<std::string> words() const;

 private:
  std::map<std::string, Entry> entries_;
};

// `\x:e. body`, application by juxtaposition. Free identifiers resolve
// through the lexicon; unknown words raise Error(UnknownWord).
LambdaTerm parse_lambda(std::string_view text, const Lexicon& lex);

// Computable forms of the three objections to the standard translation.
struct InadequacyReport {
  int which = 0;
  std::string title;

  // 1: two readings and a model where they differ.
  std::optional<Formula> left, right;
  std::optional<ChoiceModel> model;
  bool left_value = false, right_value = false;

  // 2: constituent mismatch.
  std::string syntax_tree;
  std::string semantic_tree;
  std::optional<Formula> standard_translation;
  std::optional<Formula> epsilon_translation;

  // 3: noun phrase types.
  std::optional<LambdaTerm> epsilon_term, standard_term;
  std::optional<SemType> epsilon_type, standard_type;
  std::optional<Term> epsilon_reading;
};

// Throws Error(InvalidArgument) unless which is 1, 2 or 3.
InadequacyReport demonstrate_inadequacy(int which, const Lexicon& lex);

}  // namespace aieo

#endif  // AIEO_MONTAGUE_HPP
