#include "aieo/syntax.hpp"

#include <algorithm>
#include <utility>

#include "aieo/error.hpp"

namespace aieo {

struct TermNode {
  Term::Kind kind;
  std::string name;
  std::vector<Term> args;
  std::vector<Formula> body;  // exactly one element for binders
};

struct FormulaNode {
  Formula::Kind kind;
  std::string name;
  std::vector<Term> terms;
  std::vector<Formula> subs;
};

// ---------------------------------------------------------------------------
// Term

Term Term::variable(std::string name) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Variable, std::move(name), {}, {}}));
}

Term Term::constant(std::string name) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Constant, std::move(name), {}, {}}));
}

Term Term::fun_app(std::string symbol, std::vector<Term> args) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::FunApp, std::move(symbol), std::move(args), {}}));
}

Term Term::epsilon(std::string var, Formula body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Epsilon, std::move(var), {}, {std::move(body)}}));
}

Term Term::tau(std::string var, Formula body) {
  return Term(std::make_shared<const TermNode>(
      TermNode{Kind::Tau, std::move(var), {}, {std::move(body)}}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const std::vector<Term>& Term::args() const { return node_->args; }
const Formula& Term::body() const { return node_->body.front(); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() &&
         a.args() == b.args() && a.node_->body == b.node_->body;
}

// ---------------------------------------------------------------------------
// Formula

Formula Formula::pred(std::string symbol, std::vector<Term> args) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Pred, std::move(symbol), std::move(args), {}}));
}

Formula Formula::equals(Term lhs, Term rhs) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{
      Kind::Equals, "", {std::move(lhs), std::move(rhs)}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Not, "", {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{
      Kind::And, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Or, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Implies, "", {}, {std::move(a), std::move(b)}}));
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Exists, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Forall, std::move(var), {}, {std::move(body)}}));
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Falsum, "", {}, {}}));
  return f;
}

Formula::Formula() : Formula(verum()) {}

Formula Formula::verum() {
  static const Formula f(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::Verum, "", {}, {}}));
  return f;
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Term>& Formula::terms() const { return node_->terms; }
const Formula& Formula::left() const { return node_->subs.at(0); }
const Formula& Formula::right() const { return node_->subs.at(1); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.name() == b.name() &&
         a.terms() == b.terms() && a.node_->subs == b.node_->subs;
}

// ---------------------------------------------------------------------------
// Signatures

void Signature::validate() const {
  for (const auto& [name, arity] : functions) {
    if (constants.count(name) || predicates.count(name))
      throw Error(ErrorCode::Arity,
                  "symbol '" + name + "' declared with two roles");
  }
  for (const auto& [name, arity] : predicates) {
    if (constants.count(name))
      throw Error(ErrorCode::Arity,
                  "symbol '" + name + "' declared with two roles");
  }
}

namespace {

void add_symbol(std::map<std::string, std::size_t>& table,
                const std::string& name, std::size_t arity) {
  auto [it, inserted] = table.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw Error(ErrorCode::Arity, "symbol '" + name + "' used with arity " +
                                      std::to_string(arity) + " and " +
                                      std::to_string(it->second));
}

void collect(const Formula& f, Signature& sig);

void collect(const Term& t, Signature& sig) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return;
    case Term::Kind::Constant:
      sig.constants.insert(t.name());
      return;
    case Term::Kind::FunApp:
      add_symbol(sig.functions, t.name(), t.args().size());
      for (const auto& a : t.args()) collect(a, sig);
      return;
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      collect(t.body(), sig);
      return;
  }
}

void collect(const Formula& f, Signature& sig) {
  switch (f.kind()) {
    case Formula::Kind::Pred:
      add_symbol(sig.predicates, f.name(), f.terms().size());
      [[fallthrough]];
    case Formula::Kind::Equals:
      for (const auto& t : f.terms()) collect(t, sig);
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      collect(f.left(), sig);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      collect(f.left(), sig);
      collect(f.right(), sig);
      return;
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return;
  }
}

}  // namespace

void Signature::merge(const Signature& other) {
  constants.insert(other.constants.begin(), other.constants.end());
  for (const auto& [name, arity] : other.functions)
    add_symbol(functions, name, arity);
  for (const auto& [name, arity] : other.predicates)
    add_symbol(predicates, name, arity);
  validate();
}

Signature signature_of(const Term& t) {
  Signature sig;
  collect(t, sig);
  sig.validate();
  return sig;
}

Signature signature_of(const Formula& f) {
  Signature sig;
  collect(f, sig);
  sig.validate();
  return sig;
}

Signature signature_of(const std::vector<Formula>& fs) {
  Signature sig;
  for (const auto& f : fs) collect(f, sig);
  sig.validate();
  return sig;
}

void check_well_formed(const Term& t, const Signature& sig) {
  Signature used = signature_of(t);
  for (const auto& c : used.constants)
    if (!sig.constants.count(c))
      throw Error(ErrorCode::Arity, "undeclared constant '" + c + "'");
  for (const auto& [name, arity] : used.functions) {
    auto it = sig.functions.find(name);
    if (it == sig.functions.end() || it->second != arity)
      throw Error(ErrorCode::Arity, "function '" + name + "' applied to " +
                                        std::to_string(arity) + " arguments");
  }
}

void check_well_formed(const Formula& f, const Signature& sig) {
  Signature used = signature_of(f);
  for (const auto& c : used.constants)
    if (!sig.constants.count(c))
      throw Error(ErrorCode::Arity, "undeclared constant '" + c + "'");
  for (const auto& [name, arity] : used.functions) {
    auto it = sig.functions.find(name);
    if (it == sig.functions.end() || it->second != arity)
      throw Error(ErrorCode::Arity, "function '" + name + "' applied to " +
                                        std::to_string(arity) + " arguments");
  }
  for (const auto& [name, arity] : used.predicates) {
    auto it = sig.predicates.find(name);
    if (it == sig.predicates.end() || it->second != arity)
      throw Error(ErrorCode::Arity, "predicate '" + name + "' applied to " +
                                        std::to_string(arity) + " arguments");
  }
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void free_vars_into(const Formula& f, std::vector<std::string>& bound,
                    std::set<std::string>& out);

bool is_bound(const std::vector<std::string>& bound, const std::string& v) {
  return std::find(bound.begin(), bound.end(), v) != bound.end();
}

void free_vars_into(const Term& t, std::vector<std::string>& bound,
                    std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (!is_bound(bound, t.name())) out.insert(t.name());
      return;
    case Term::Kind::Constant:
      return;
    case Term::Kind::FunApp:
      for (const auto& a : t.args()) free_vars_into(a, bound, out);
      return;
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      bound.push_back(t.name());
      free_vars_into(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

void free_vars_into(const Formula& f, std::vector<std::string>& bound,
                    std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equals:
      for (const auto& t : f.terms()) free_vars_into(t, bound, out);
      return;
    case Formula::Kind::Not:
      free_vars_into(f.operand(), bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      free_vars_into(f.left(), bound, out);
      free_vars_into(f.right(), bound, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      bound.push_back(f.name());
      free_vars_into(f.body(), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_vars_into(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_vars_into(f, bound, out);
  return out;
}

bool occurs_free(const std::string& var, const Term& t) {
  return free_vars(t).count(var) > 0;
}

bool occurs_free(const std::string& var, const Formula& f) {
  return free_vars(f).count(var) > 0;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate)) candidate += '\'';
  return candidate;
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

// Renames the bound variable of a binder when it would capture a free
// variable of the replacement. Returns the (possibly renamed) variable and
// body.
std::pair<std::string, Formula> open_binder(const std::string& bound_var,
                                            const Formula& body,
                                            const std::string& var,
                                            const Term& replacement) {
  std::set<std::string> repl_free = free_vars(replacement);
  if (!repl_free.count(bound_var)) return {bound_var, body};
  std::set<std::string> avoid = free_vars(body);
  avoid.insert(repl_free.begin(), repl_free.end());
  avoid.insert(var);
  std::string renamed = fresh_name(bound_var, avoid);
  return {renamed, substitute(body, bound_var, Term::variable(renamed))};
}

}  // namespace

Term substitute(const Term& t, const std::string& var,
                const Term& replacement) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return t.name() == var ? replacement : t;
    case Term::Kind::Constant:
      return t;
    case Term::Kind::FunApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args())
        args.push_back(substitute(a, var, replacement));
      return Term::fun_app(t.name(), std::move(args));
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau: {
      if (t.name() == var || !occurs_free(var, t.body())) return t;
      auto [bv, body] = open_binder(t.name(), t.body(), var, replacement);
      Formula new_body = substitute(body, var, replacement);
      return t.kind() == Term::Kind::Epsilon
                 ? Term::epsilon(std::move(bv), std::move(new_body))
                 : Term::tau(std::move(bv), std::move(new_body));
    }
  }
  return t;
}

Formula substitute(const Formula& f, const std::string& var,
                   const Term& replacement) {
  switch (f.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& a : f.terms())
        args.push_back(substitute(a, var, replacement));
      return Formula::pred(f.name(), std::move(args));
    }
    case Formula::Kind::Equals:
      return Formula::equals(substitute(f.terms()[0], var, replacement),
                             substitute(f.terms()[1], var, replacement));
    case Formula::Kind::Not:
      return Formula::negation(substitute(f.operand(), var, replacement));
    case Formula::Kind::And:
      return Formula::conjunction(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::Or:
      return Formula::disjunction(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::Implies:
      return Formula::implication(substitute(f.left(), var, replacement),
                                  substitute(f.right(), var, replacement));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (f.name() == var || !occurs_free(var, f.body())) return f;
      auto [bv, body] = open_binder(f.name(), f.body(), var, replacement);
      Formula new_body = substitute(body, var, replacement);
      return f.kind() == Formula::Kind::Exists
                 ? Formula::exists(std::move(bv), std::move(new_body))
                 : Formula::forall(std::move(bv), std::move(new_body));
    }
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return f;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace {

struct BinderStack {
  std::vector<std::string> left, right;

  // Level of the innermost binder of `name`, or -1 if free.
  static long level(const std::vector<std::string>& names,
                    const std::string& name) {
    for (std::size_t i = names.size(); i-- > 0;)
      if (names[i] == name) return static_cast<long>(i);
    return -1;
  }
};

bool alpha(const Formula& a, const Formula& b, BinderStack& st);

bool alpha(const Term& a, const Term& b, BinderStack& st) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: {
      long la = BinderStack::level(st.left, a.name());
      long lb = BinderStack::level(st.right, b.name());
      if (la != lb) return false;
      return la >= 0 || a.name() == b.name();
    }
    case Term::Kind::Constant:
      return a.name() == b.name();
    case Term::Kind::FunApp: {
      if (a.name() != b.name() || a.args().size() != b.args().size())
        return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha(a.args()[i], b.args()[i], st)) return false;
      return true;
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau: {
      st.left.push_back(a.name());
      st.right.push_back(b.name());
      bool eq = alpha(a.body(), b.body(), st);
      st.left.pop_back();
      st.right.pop_back();
      return eq;
    }
  }
  return false;
}

bool alpha(const Formula& a, const Formula& b, BinderStack& st) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equals: {
      if (a.name() != b.name() || a.terms().size() != b.terms().size())
        return false;
      for (std::size_t i = 0; i < a.terms().size(); ++i)
        if (!alpha(a.terms()[i], b.terms()[i], st)) return false;
      return true;
    }
    case Formula::Kind::Not:
      return alpha(a.operand(), b.operand(), st);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return alpha(a.left(), b.left(), st) && alpha(a.right(), b.right(), st);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      st.left.push_back(a.name());
      st.right.push_back(b.name());
      bool eq = alpha(a.body(), b.body(), st);
      st.left.pop_back();
      st.right.pop_back();
      return eq;
    }
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return true;
  }
  return false;
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  BinderStack st;
  return alpha(a, b, st);
}

bool alpha_eq(const Formula& a, const Formula& b) {
  BinderStack st;
  return alpha(a, b, st);
}

// ---------------------------------------------------------------------------
// Structural maps over terms

namespace {

// Rebuilds a formula, applying `on_binder` to each epsilon/tau term after its
// body has been rewritten.
template <typename OnBinder>
Formula map_binders(const Formula& f, const OnBinder& on_binder);

template <typename OnBinder>
Term map_binders(const Term& t, const OnBinder& on_binder) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      return t;
    case Term::Kind::FunApp: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(map_binders(a, on_binder));
      return Term::fun_app(t.name(), std::move(args));
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      return on_binder(t.kind(), t.name(), map_binders(t.body(), on_binder));
  }
  return t;
}

template <typename OnBinder>
Formula map_binders(const Formula& f, const OnBinder& on_binder) {
  switch (f.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f.terms().size());
      for (const auto& a : f.terms()) args.push_back(map_binders(a, on_binder));
      return Formula::pred(f.name(), std::move(args));
    }
    case Formula::Kind::Equals:
      return Formula::equals(map_binders(f.terms()[0], on_binder),
                             map_binders(f.terms()[1], on_binder));
    case Formula::Kind::Not:
      return Formula::negation(map_binders(f.operand(), on_binder));
    case Formula::Kind::And:
      return Formula::conjunction(map_binders(f.left(), on_binder),
                                  map_binders(f.right(), on_binder));
    case Formula::Kind::Or:
      return Formula::disjunction(map_binders(f.left(), on_binder),
                                  map_binders(f.right(), on_binder));
    case Formula::Kind::Implies:
      return Formula::implication(map_binders(f.left(), on_binder),
                                  map_binders(f.right(), on_binder));
    case Formula::Kind::Exists:
      return Formula::exists(f.name(), map_binders(f.body(), on_binder));
    case Formula::Kind::Forall:
      return Formula::forall(f.name(), map_binders(f.body(), on_binder));
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return f;
  }
  return f;
}

Term to_epsilon(Term::Kind kind, const std::string& var, Formula body) {
  if (kind == Term::Kind::Epsilon) return Term::epsilon(var, std::move(body));
  return Term::epsilon(var, Formula::negation(std::move(body)));
}

// Both readings of the duality rule are closed under, so pairs of leading
// negations in an epsilon body cancel.
Term to_canonical(Term::Kind kind, const std::string& var, Formula body) {
  if (kind == Term::Kind::Tau) body = Formula::negation(std::move(body));
  while (body.kind() == Formula::Kind::Not &&
         body.operand().kind() == Formula::Kind::Not)
    body = body.operand().operand();
  return Term::epsilon(var, std::move(body));
}

}  // namespace

Term dual_normalize(const Term& t) { return map_binders(t, to_epsilon); }
Formula dual_normalize(const Formula& f) { return map_binders(f, to_epsilon); }
Term dual_canonical(const Term& t) { return map_binders(t, to_canonical); }
Formula dual_canonical(const Formula& f) {
  return map_binders(f, to_canonical);
}

// ---------------------------------------------------------------------------
// Quantifier expansion

Formula instantiate_eps(const std::string& var, const Formula& body) {
  return substitute(body, var, Term::epsilon(var, body));
}

Formula instantiate_tau(const std::string& var, const Formula& body) {
  return substitute(body, var, Term::tau(var, body));
}

namespace {

Formula expand(const Formula& f);

Term expand(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      return t;
    case Term::Kind::FunApp: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(expand(a));
      return Term::fun_app(t.name(), std::move(args));
    }
    case Term::Kind::Epsilon:
      return Term::epsilon(t.name(), expand(t.body()));
    case Term::Kind::Tau:
      return Term::tau(t.name(), expand(t.body()));
  }
  return t;
}

Formula expand(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      for (const auto& a : f.terms()) args.push_back(expand(a));
      return Formula::pred(f.name(), std::move(args));
    }
    case Formula::Kind::Equals:
      return Formula::equals(expand(f.terms()[0]), expand(f.terms()[1]));
    case Formula::Kind::Not:
      return Formula::negation(expand(f.operand()));
    case Formula::Kind::And:
      return Formula::conjunction(expand(f.left()), expand(f.right()));
    case Formula::Kind::Or:
      return Formula::disjunction(expand(f.left()), expand(f.right()));
    case Formula::Kind::Implies:
      return Formula::implication(expand(f.left()), expand(f.right()));
    case Formula::Kind::Exists:
      return instantiate_eps(f.name(), expand(f.body()));
    case Formula::Kind::Forall:
      return instantiate_tau(f.name(), expand(f.body()));
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return f;
  }
  return f;
}

}  // namespace

Formula expand_quantifiers(const Formula& f) { return expand(f); }

// ---------------------------------------------------------------------------

std::size_t depth(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      return 1;
    case Term::Kind::FunApp: {
      std::size_t d = 0;
      for (const auto& a : t.args()) d = std::max(d, depth(a));
      return d + 1;
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      return depth(t.body()) + 1;
  }
  return 1;
}

std::size_t depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Pred:
    case Formula::Kind::Equals: {
      std::size_t d = 0;
      for (const auto& a : f.terms()) d = std::max(d, depth(a));
      return d + 1;
    }
    case Formula::Kind::Not:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return depth(f.left()) + 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      return std::max(depth(f.left()), depth(f.right())) + 1;
    case Formula::Kind::Falsum:
    case Formula::Kind::Verum:
      return 1;
  }
  return 1;
}

}  // namespace aieo
