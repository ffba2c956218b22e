// Test-side generators and reference oracles. The oracles here are written
// against the public AST and model accessors only, without calling the
// library's own evaluator or variable analysis.
#ifndef AIEO_TESTS_SUPPORT_HPP
#define AIEO_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aieo/kernel.hpp"
#include "aieo/model.hpp"
#include "aieo/syntax.hpp"
#include "aieo/text.hpp"

namespace testing {

using aieo::Formula;
using aieo::Term;

// ---------------------------------------------------------------------------
// Reference free-variable scanner.

inline void scan(const Term& t, std::vector<std::string>& bound,
                 std::set<std::string>& out);

inline void scan(const Formula& f, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Pred:
    case K::Equals:
      for (const auto& t : f.terms()) scan(t, bound, out);
      return;
    case K::Not:
      scan(f.operand(), bound, out);
      return;
    case K::And:
    case K::Or:
    case K::Implies:
      scan(f.left(), bound, out);
      scan(f.right(), bound, out);
      return;
    case K::Exists:
    case K::Forall:
      bound.push_back(f.name());
      scan(f.body(), bound, out);
      bound.pop_back();
      return;
    case K::Falsum:
    case K::Verum:
      return;
  }
}

inline void scan(const Term& t, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      bool is_bound = false;
      for (const auto& b : bound) is_bound = is_bound || b == t.name();
      if (!is_bound) out.insert(t.name());
      return;
    }
    case Term::Kind::Constant:
      return;
    case Term::Kind::FunApp:
      for (const auto& a : t.args()) scan(a, bound, out);
      return;
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      bound.push_back(t.name());
      scan(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

template <class E>
std::set<std::string> reference_free_vars(const E& e) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  scan(e, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Reference evaluator: epsilon picks choice(extension), tau picks
// choice(complement), choice of the empty set is the default element.

inline bool ref_eval(const aieo::ChoiceModel& m, aieo::Assignment env,
                     const Formula& f);

inline int ref_eval(const aieo::ChoiceModel& m, const aieo::Assignment& env,
                    const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      return env.at(t.name());
    case Term::Kind::Constant:
      return m.constant(t.name());
    case Term::Kind::FunApp: {
      std::vector<int> args;
      for (const auto& a : t.args()) args.push_back(ref_eval(m, env, a));
      return m.apply(t.name(), args);
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau: {
      const bool want = t.kind() == Term::Kind::Epsilon;
      std::uint32_t set = 0;
      for (int d = 1; d <= m.size(); ++d) {
        aieo::Assignment e = env;
        e[t.name()] = d;
        if (ref_eval(m, e, t.body()) == want) set |= 1u << (d - 1);
      }
      return set == 0 ? m.default_element() : m.choose(set);
    }
  }
  return 0;
}

inline bool ref_eval(const aieo::ChoiceModel& m, aieo::Assignment env,
                     const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Pred: {
      std::vector<int> args;
      for (const auto& a : f.terms()) args.push_back(ref_eval(m, env, a));
      return m.holds(f.name(), args);
    }
    case K::Equals:
      return ref_eval(m, env, f.terms()[0]) == ref_eval(m, env, f.terms()[1]);
    case K::Not:
      return !ref_eval(m, env, f.operand());
    case K::And:
      return ref_eval(m, env, f.left()) && ref_eval(m, env, f.right());
    case K::Or:
      return ref_eval(m, env, f.left()) || ref_eval(m, env, f.right());
    case K::Implies:
      return !ref_eval(m, env, f.left()) || ref_eval(m, env, f.right());
    case K::Exists:
    case K::Forall: {
      const bool any = f.kind() == K::Exists;
      for (int d = 1; d <= m.size(); ++d) {
        env[f.name()] = d;
        if (ref_eval(m, env, f.body()) == any) return any;
      }
      return !any;
    }
    case K::Falsum:
      return false;
    case K::Verum:
      return true;
  }
  return false;
}

// Number of choice models with exactly n elements over k unary predicates:
// 2^(n k) extensions, |X| choices for each nonempty X, n defaults.
inline std::uint64_t unary_model_count(int k, int n) {
  std::uint64_t count = 1;
  for (int i = 0; i < n * k; ++i) count *= 2;
  for (std::uint32_t x = 1; x < (1u << n); ++x)
    count *= static_cast<std::uint64_t>(__builtin_popcount(x));
  return count * static_cast<std::uint64_t>(n);
}

// ---------------------------------------------------------------------------
// Random ASTs.

struct GenOptions {
  std::vector<std::string> unary{"S", "P"};
  bool binary = false;     // R/2
  bool constants = false;  // c, d
  bool functions = false;  // f/1
  bool equality = false;
  bool truth_values = false;
  bool quantifiers = true;
  std::vector<std::string> binder_vars{"x", "y", "z"};
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed, GenOptions opts = {})
      : rng_(seed), opts_(std::move(opts)) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(int percent) { return pick(100) < percent; }
  std::mt19937_64& rng() { return rng_; }

  // A formula whose recursion depth is at most `depth`; free variables come
  // from `scope`.
  Formula formula(int depth, std::vector<std::string> scope = {}) {
    if (depth <= 1) return atom(1, scope);
    switch (pick(opts_.quantifiers ? 7 : 5)) {
      case 0:
      case 1:
        return atom(depth, scope);
      case 2:
        return Formula::negation(formula(depth - 1, scope));
      case 3:
        return Formula::conjunction(formula(depth - 1, scope), formula(depth - 1, scope));
      case 4:
        return pick(2) ? Formula::disjunction(formula(depth - 1, scope),
                                              formula(depth - 1, scope))
                       : Formula::implication(formula(depth - 1, scope),
                                              formula(depth - 1, scope));
      default: {
        std::string v = binder_var();
        auto inner = scope;
        inner.push_back(v);
        Formula body = formula(depth - 1, inner);
        return pick(2) ? Formula::exists(v, body) : Formula::forall(v, body);
      }
    }
  }

  Term term(int depth, const std::vector<std::string>& scope) {
    std::vector<int> choices;
    if (!scope.empty()) choices.insert(choices.end(), {0, 0});
    if (opts_.constants) choices.push_back(1);
    if (opts_.functions && depth > 1) choices.push_back(2);
    if (depth > 1) choices.insert(choices.end(), {3, 3});
    if (choices.empty()) return minimal_binder_term();
    switch (choices[pick(static_cast<int>(choices.size()))]) {
      case 0:
        return Term::variable(scope[pick(static_cast<int>(scope.size()))]);
      case 1:
        return Term::constant(pick(2) ? "c" : "d");
      case 2:
        return Term::fun_app("f", {term(depth - 1, scope)});
      default: {
        std::string v = binder_var();
        auto inner = scope;
        inner.push_back(v);
        Formula body = formula(depth - 1, inner);
        return pick(2) ? Term::epsilon(v, body) : Term::tau(v, body);
      }
    }
  }

 private:
  Formula atom(int depth, const std::vector<std::string>& scope) {
    std::vector<int> kinds{0, 0, 0};
    if (opts_.binary) kinds.push_back(1);
    if (opts_.equality) kinds.push_back(2);
    if (opts_.truth_values) kinds.push_back(3);
    switch (kinds[pick(static_cast<int>(kinds.size()))]) {
      case 1:
        return Formula::pred("R", {term(depth, scope), term(depth, scope)});
      case 2:
        return Formula::equals(term(depth, scope), term(depth, scope));
      case 3:
        return pick(2) ? Formula::verum() : Formula::falsum();
      default: {
        const auto& names = opts_.unary;
        return Formula::pred(names[pick(static_cast<int>(names.size()))],
                             {term(depth, scope)});
      }
    }
  }

  Term minimal_binder_term() {
    std::string v = binder_var();
    Formula body = Formula::pred(opts_.unary[pick(static_cast<int>(opts_.unary.size()))],
                                 {Term::variable(v)});
    return pick(2) ? Term::epsilon(v, body) : Term::tau(v, body);
  }

  std::string binder_var() {
    return opts_.binder_vars[pick(static_cast<int>(opts_.binder_vars.size()))];
  }

  std::mt19937_64 rng_;
  GenOptions opts_;
};

// ---------------------------------------------------------------------------
// Random derivations built from the nd helpers over closed formulas. Every
// returned derivation has been accepted by the kernel.

class DerivationGen {
 public:
  explicit DerivationGen(std::uint64_t seed) : gen_(seed) {}

  std::vector<aieo::Derivation> run(std::size_t steps) {
    namespace nd = aieo::nd;
    for (std::size_t i = 0; i < steps; ++i) {
      try {
        step();
      } catch (const aieo::Error&) {
        // The builder refused; try something else.
      }
    }
    std::vector<aieo::Derivation> accepted;
    for (auto& d : pool_) {
      try {
        aieo::check_derivation(d);
        accepted.push_back(d);
      } catch (const aieo::Error&) {
      }
    }
    return accepted;
  }

 private:
  using D = aieo::Derivation;

  Formula closed(int depth) { return gen_.formula(depth); }

  const D& any() { return pool_[gen_.pick(static_cast<int>(pool_.size()))]; }

  const D* find(Formula::Kind k) {
    std::vector<const D*> hits;
    for (const auto& d : pool_)
      if (d.conclusion.conclusion.kind() == k) hits.push_back(&d);
    return hits.empty() ? nullptr : hits[gen_.pick(static_cast<int>(hits.size()))];
  }

  // Both derivations over the sum of their contexts.
  std::pair<D, D> align(D a, D b) {
    std::vector<Formula> ctx = a.conclusion.hypotheses;
    for (const auto& h : b.conclusion.hypotheses) ctx.push_back(h);
    return {aieo::nd::weaken_to(std::move(a), ctx), aieo::nd::weaken_to(std::move(b), ctx)};
  }

  void push(D d) {
    if (aieo::derivation_size(d) <= 60) pool_.push_back(std::move(d));
  }

  void step() {
    namespace nd = aieo::nd;
    if (pool_.size() < 4) {
      push(nd::axiom(closed(3)));
      return;
    }
    switch (gen_.pick(16)) {
      case 0:
        push(nd::axiom(closed(3)));
        return;
      case 1:
        push(nd::weaken(any(), closed(2)));
        return;
      case 2: {
        auto [a, b] = align(any(), any());
        push(nd::and_intro(std::move(a), std::move(b)));
        return;
      }
      case 3:
        if (auto* d = find(Formula::Kind::And))
          push(gen_.pick(2) ? nd::and_elim_left(*d) : nd::and_elim_right(*d));
        return;
      case 4:
        push(gen_.pick(2) ? nd::or_intro_left(any(), closed(2))
                          : nd::or_intro_right(closed(2), any()));
        return;
      case 5: {
        const D& d = any();
        const auto& hs = d.conclusion.hypotheses;
        if (hs.empty()) return;
        push(nd::imp_intro(d, hs[gen_.pick(static_cast<int>(hs.size()))]));
        return;
      }
      case 6: {
        // Gamma |- A and Gamma, A |- B give Gamma |- A -> B, then A -> B applied.
        const D& a = any();
        D b = nd::weaken(any(), a.conclusion.conclusion);
        D imp = nd::imp_intro(std::move(b), a.conclusion.conclusion);
        auto [i, x] = align(std::move(imp), a);
        push(nd::imp_elim(std::move(i), std::move(x)));
        return;
      }
      case 7: {
        // A, ~A |- false, then ~~A or anything.
        const D& a = any();
        Formula na = Formula::negation(a.conclusion.conclusion);
        auto [p, n] = align(a, nd::axiom(na));
        D bottom = nd::not_elim(std::move(p), std::move(n));
        push(gen_.pick(2) ? nd::not_intro(std::move(bottom), na)
                          : nd::falsum_elim(std::move(bottom), closed(2)));
        return;
      }
      case 8:
        if (auto* d = find(Formula::Kind::Not))
          if (d->conclusion.conclusion.operand().kind() == Formula::Kind::Not)
            push(nd::double_neg_elim(*d));
        return;
      case 9: {
        // From F(t) infer F(eps x. F(x)) for an atom F.
        const D& d = any();
        const Formula& c = d.conclusion.conclusion;
        if (c.kind() != Formula::Kind::Pred || c.terms().size() != 1) return;
        push(nd::eps_intro(d, "x", Formula::pred(c.name(), {Term::variable("x")}),
                           c.terms()[0]));
        return;
      }
      case 10: {
        // F(tau x. F) |- F(t).
        Formula body = gen_.formula(2, {"x"});
        D a = nd::axiom(aieo::instantiate_tau("x", body));
        push(nd::tau_elim(std::move(a), "x", body, gen_.term(2, {})));
        return;
      }
      case 11: {
        const D& d = any();
        push(nd::dual_rewrite(d, aieo::dual_normalize(d.conclusion.conclusion)));
        return;
      }
      case 12: {
        // Disjunction elimination with both cases weakened from one proof.
        const D* dis = find(Formula::Kind::Or);
        if (!dis) return;
        const Formula& f = dis->conclusion.conclusion;
        const D& e = any();
        std::vector<Formula> ctx = dis->conclusion.hypotheses;
        for (const auto& h : e.conclusion.hypotheses) ctx.push_back(h);
        D disj = nd::weaken_to(*dis, ctx);
        auto with = [&](const Formula& extra) {
          auto c = ctx;
          c.push_back(extra);
          return nd::weaken_to(e, c);
        };
        push(nd::or_elim(std::move(disj), with(f.left()), with(f.right())));
        return;
      }
      case 13: {
        Term t = gen_.term(2, {});
        push(nd::eq_refl(t));
        return;
      }
      case 14: {
        // t = t and F(t) give F(t) again through EqSubst.
        const D& d = any();
        const Formula& c = d.conclusion.conclusion;
        if (c.kind() != Formula::Kind::Pred || c.terms().size() != 1) return;
        const Term& t = c.terms()[0];
        auto [eq, body] = align(nd::eq_refl(t), d);
        push(nd::eq_subst(std::move(eq), std::move(body), "x",
                          Formula::pred(c.name(), {Term::variable("x")})));
        return;
      }
      default:
        push(nd::double_neg_intro(any()));
        return;
    }
  }

  Gen gen_;
  std::vector<D> pool_;
};

}  // namespace testing

#endif  // AIEO_TESTS_SUPPORT_HPP
