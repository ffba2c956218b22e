#ifndef AIEO_MODEL_HPP
#define AIEO_MODEL_HPP

// Finite choice-function semantics. An epsilon term denotes the choice
// function applied to the extension of its body; a tau term denotes the
// epsilon term of the negated body. The semantics is sound for the calculus
// but not complete, so bounded validity is only ever a bounded claim.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aieo/syntax.hpp"

namespace aieo {

// Domain elements are 1..n.
using Element = int;
// A subset of the domain: bit (e - 1) is set iff e is a member.
using Subset = std::uint32_t;
using Assignment = std::map<std::string, Element>;

inline constexpr int kMaxDomainSize = 16;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

class ChoiceModel {
 public:
  // Every predicate empty, choice({...}) = least member, default 1.
  explicit ChoiceModel(int size);

  int size() const { return size_; }
  Subset full_set() const { return (Subset{1} << size_) - 1; }

  void set_predicate(const std::string& name, std::size_t arity,
                     const std::vector<std::vector<Element>>& tuples);
  // Unary shorthand.
  void set_predicate(const std::string& name, Subset extension);
  void set_constant(const std::string& name, Element e);
  void set_function(const std::string& name, std::size_t arity,
                    std::vector<Element> table);
  void set_choice(Subset s, Element e);
  void set_default(Element e);

  bool has_predicate(const std::string& name) const;
  std::size_t predicate_arity(const std::string& name) const;
  std::vector<std::vector<Element>> extension(const std::string& name) const;
  bool holds(const std::string& name, const std::vector<Element>& args) const;

  const std::map<std::string, Element>& constants() const { return constants_; }
  Element constant(const std::string& name) const;

  std::vector<std::string> function_names() const;
  std::size_t function_arity(const std::string& name) const;
  // Row-major over argument tuples: index sum (a_i - 1) * n^i.
  const std::vector<Element>& function_table(const std::string& name) const;
  Element apply(const std::string& name, const std::vector<Element>& args) const;

  std::vector<std::string> predicate_names() const;

  // choose(0) is the default element.
  Element choose(Subset s) const { return choice_[s]; }
  Element default_element() const { return choice_[0]; }

  // Throws Error(InvalidModel) unless choice(X) is in X for every nonempty X
  // and every interpretation is total over the domain.
  void validate() const;

  // Internal accessors used by the evaluator.
  struct Relation {
    std::size_t arity;
    std::vector<char> table;
    friend bool operator==(const Relation&, const Relation&) = default;
  };
  struct Function {
    std::size_t arity;
    std::vector<Element> table;
    friend bool operator==(const Function&, const Function&) = default;
  };
  const Relation* find_relation(const std::string& name) const;
  const Function* find_function(const std::string& name) const;
  std::size_t tuple_index(const std::vector<Element>& args) const;

  friend bool operator==(const ChoiceModel&, const ChoiceModel&) = default;

 private:
  int size_;
  std::map<std::string, Relation> predicates_;
  std::map<std::string, Function> functions_;
  std::map<std::string, Element> constants_;
  std::vector<Element> choice_;
};

// Throws Error(UnboundVariable) when a free variable is not assigned, and
// Error(InvalidModel) when a symbol has no interpretation.
Element eval_term(const ChoiceModel& m, const Assignment& env, const Term& t);
bool eval_formula(const ChoiceModel& m, const Assignment& env,
                  const Formula& f);

std::vector<Element> members(Subset s);
Subset subset_of(const std::vector<Element>& elements);

// Raw enumeration of every model with domain 1..n for n = 1..max_size: all
// predicate extensions, constant values, function tables, choice functions,
// and defaults. Within a size, predicate extensions vary fastest and the
// default element slowest.
class ModelStream {
 public:
  // Throws Error(InvalidArgument) for max_size < 1, for function symbols with
  // max_size > 2, or for max_size > kMaxDomainSize; Error(BudgetExceeded)
  // when the total count exceeds `budget`.
  ModelStream(const Signature& sig, int max_size,
              std::uint64_t budget = kDefaultBudget);

  std::optional<ChoiceModel> next();
  std::uint64_t total() const { return total_; }

  // Number of models with exactly `size` elements; saturates at UINT64_MAX.
  static std::uint64_t count(const Signature& sig, int size);

 private:
  void start_stratum();
  ChoiceModel build() const;

  Signature sig_;
  int max_size_;
  int size_ = 0;
  std::uint64_t total_ = 0;
  bool exhausted_ = false;
  bool fresh_stratum_ = true;
  std::vector<std::uint64_t> digits_;
  std::vector<std::uint64_t> radix_;
  std::vector<Subset> choice_subsets_;
};

std::vector<ChoiceModel> enumerate_models(const Signature& sig, int max_size,
                                          std::uint64_t budget = kDefaultBudget);

struct EntailmentVerdict {
  bool valid = false;
  int bound = 0;
  // Present iff !valid.
  std::optional<ChoiceModel> model;
  Assignment assignment;
};

// Sweeps every model up to `bound` and every assignment of the free variables
// (implicitly universally closed) and returns the first one where all of
// `hypotheses` hold and `goal` fails. The model signature is `sig` extended
// with every symbol the formulas use.
EntailmentVerdict entails(const std::vector<Formula>& hypotheses,
                          const Formula& goal, const Signature& sig, int bound,
                          std::uint64_t budget = kDefaultBudget);

// True iff the verdict's countermodel satisfies every hypothesis and falsifies
// the goal.
bool is_genuine_countermodel(const EntailmentVerdict& v,
                             const std::vector<Formula>& hypotheses,
                             const Formula& goal);

// Every assignment of `vars` over 1..n, in lexicographic order.
std::vector<Assignment> all_assignments(const std::set<std::string>& vars,
                                        int n);

}  // namespace aieo

#endif  // AIEO_MODEL_HPP
