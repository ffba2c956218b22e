#include "aieo/kernel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "aieo/text.hpp"

namespace aieo {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
};

constexpr RuleInfo kRules[] = {
    {Rule::Axiom, "Axiom"},
    {Rule::Weakening, "Weakening"},
    {Rule::AndIntro, "AndIntro"},
    {Rule::AndElimLeft, "AndElimL"},
    {Rule::AndElimRight, "AndElimR"},
    {Rule::OrIntroLeft, "OrIntroL"},
    {Rule::OrIntroRight, "OrIntroR"},
    {Rule::OrElim, "OrElim"},
    {Rule::ImpIntro, "ImpIntro"},
    {Rule::ImpElim, "ImpElim"},
    {Rule::NotIntro, "NotIntro"},
    {Rule::NotElim, "NotElim"},
    {Rule::FalsumElim, "FalsumElim"},
    {Rule::DoubleNegElim, "DoubleNegElim"},
    {Rule::EqRefl, "EqRefl"},
    {Rule::EqSubst, "EqSubst"},
    {Rule::TauIntro, "TauIntro"},
    {Rule::TauElim, "TauElim"},
    {Rule::EpsIntro, "EpsIntro"},
    {Rule::DualRewrite, "DualRewrite"},
};

std::string fold_name(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != '-' && c != '_')
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string describe(const Derivation& d) {
  return d.label.empty() ? to_string(d.conclusion) : d.label;
}

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& info : kRules)
    if (info.rule == r) return info.name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  std::string folded = fold_name(name);
  for (const auto& info : kRules)
    if (fold_name(info.name) == folded) return info.rule;
  // Long spellings of the directional rules.
  if (folded == "andelimleft") return Rule::AndElimLeft;
  if (folded == "andelimright") return Rule::AndElimRight;
  if (folded == "orintroleft") return Rule::OrIntroLeft;
  if (folded == "orintroright") return Rule::OrIntroRight;
  if (folded == "dne") return Rule::DoubleNegElim;
  return std::nullopt;
}

KernelError::KernelError(ErrorCode code, std::string label, Rule rule,
                         std::string reason)
    : Error(code, "node '" + label + "' (" + rule_name(rule) + "): " + reason),
      label_(std::move(label)),
      rule_(rule),
      reason_(std::move(reason)) {}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.hypotheses[i]);
  }
  out += out.empty() ? "|- " : " |- ";
  out += to_string(s.conclusion);
  return out;
}

namespace {

// a - b as multisets, or nullopt when b is not contained in a.
std::optional<std::vector<Formula>> multiset_minus(std::vector<Formula> a,
                                                   const std::vector<Formula>& b) {
  for (const auto& f : b) {
    auto it = std::find_if(a.begin(), a.end(),
                           [&](const Formula& g) { return alpha_eq(f, g); });
    if (it == a.end()) return std::nullopt;
    a.erase(it);
  }
  return a;
}

std::vector<Formula> plus(std::vector<Formula> a, const Formula& f) {
  a.push_back(f);
  return a;
}

std::vector<Formula> canonical(const std::vector<Formula>& fs) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(dual_canonical(f));
  return out;
}

}  // namespace

bool same_hypotheses(const std::vector<Formula>& a,
                     const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  auto rest = multiset_minus(a, b);
  return rest && rest->empty();
}

bool alpha_eq(const Sequent& a, const Sequent& b) {
  return same_hypotheses(a.hypotheses, b.hypotheses) &&
         alpha_eq(a.conclusion, b.conclusion);
}

// ---------------------------------------------------------------------------
// Checking

namespace {

class NodeCheck {
 public:
  explicit NodeCheck(const Derivation& d) : d_(d) {}

  [[noreturn]] void fail(ErrorCode code, const std::string& reason) const {
    throw KernelError(code, describe(d_), d_.rule, reason);
  }
  void require(bool ok, const std::string& reason) const {
    if (!ok) fail(ErrorCode::RuleMismatch, reason);
  }

  void premises(std::size_t n) const {
    if (d_.premises.size() != n)
      fail(ErrorCode::Arity, "expects " + std::to_string(n) +
                                 " premise(s), got " +
                                 std::to_string(d_.premises.size()));
  }

  const Sequent& premise(std::size_t i) const {
    return d_.premises[i].conclusion;
  }
  const std::vector<Formula>& hyps() const { return d_.conclusion.hypotheses; }
  const Formula& concl() const { return d_.conclusion.conclusion; }

  void same_context(std::size_t i) const {
    require(same_hypotheses(premise(i).hypotheses, hyps()),
            "premise " + std::to_string(i + 1) +
                " has different hypotheses than the conclusion");
  }

  // Premise i has the conclusion's hypotheses plus `discharged`.
  void context_plus(std::size_t i, const Formula& discharged) const {
    require(same_hypotheses(premise(i).hypotheses, plus(hyps(), discharged)),
            "premise " + std::to_string(i + 1) +
                " must have the conclusion's hypotheses plus " +
                to_string(discharged));
  }

  void concl_is(const Formula& expected) const {
    require(alpha_eq(concl(), expected),
            "conclusion " + to_string(concl()) + " is not " +
                to_string(expected));
  }

  void premise_concl_is(std::size_t i, const Formula& expected) const {
    require(alpha_eq(premise(i).conclusion, expected),
            "premise " + std::to_string(i + 1) + " concludes " +
                to_string(premise(i).conclusion) + ", expected " +
                to_string(expected));
  }

  void concl_kind(Formula::Kind k, const char* what) const {
    require(concl().kind() == k, std::string("conclusion must be ") + what);
  }

  void premise_kind(std::size_t i, Formula::Kind k, const char* what) const {
    require(premise(i).conclusion.kind() == k,
            "premise " + std::to_string(i + 1) + " must conclude " + what);
  }

  const std::string& var() const {
    if (!d_.payload.var) fail(ErrorCode::RuleMismatch, "missing variable");
    return *d_.payload.var;
  }
  const Formula& body() const {
    if (!d_.payload.body) fail(ErrorCode::RuleMismatch, "missing body");
    return *d_.payload.body;
  }
  const Term& witness() const {
    if (!d_.payload.witness) fail(ErrorCode::RuleMismatch, "missing witness");
    return *d_.payload.witness;
  }

 private:
  const Derivation& d_;
};

void check_node(const Derivation& d) {
  NodeCheck c(d);
  using K = Formula::Kind;
  switch (d.rule) {
    case Rule::Axiom:
      c.premises(0);
      c.require(c.hyps().size() == 1, "axiom has exactly one hypothesis");
      c.concl_is(c.hyps()[0]);
      return;
    case Rule::Weakening: {
      c.premises(1);
      auto extra = multiset_minus(c.hyps(), c.premise(0).hypotheses);
      c.require(extra && extra->size() == 1,
                "conclusion must add exactly one hypothesis");
      if (d.payload.formula)
        c.require(alpha_eq((*extra)[0], *d.payload.formula),
                  "added hypothesis differs from the stated one");
      c.concl_is(c.premise(0).conclusion);
      return;
    }
    case Rule::AndIntro:
      c.premises(2);
      c.same_context(0);
      c.same_context(1);
      c.concl_is(Formula::conjunction(c.premise(0).conclusion,
                                      c.premise(1).conclusion));
      return;
    case Rule::AndElimLeft:
    case Rule::AndElimRight:
      c.premises(1);
      c.same_context(0);
      c.premise_kind(0, K::And, "a conjunction");
      c.concl_is(d.rule == Rule::AndElimLeft ? c.premise(0).conclusion.left()
                                              : c.premise(0).conclusion.right());
      return;
    case Rule::OrIntroLeft:
    case Rule::OrIntroRight:
      c.premises(1);
      c.same_context(0);
      c.concl_kind(K::Or, "a disjunction");
      c.premise_concl_is(0, d.rule == Rule::OrIntroLeft ? c.concl().left()
                                                        : c.concl().right());
      return;
    case Rule::OrElim: {
      c.premises(3);
      c.same_context(0);
      c.premise_kind(0, K::Or, "a disjunction");
      const Formula& disj = c.premise(0).conclusion;
      c.context_plus(1, disj.left());
      c.context_plus(2, disj.right());
      c.premise_concl_is(1, c.concl());
      c.premise_concl_is(2, c.concl());
      return;
    }
    case Rule::ImpIntro:
      c.premises(1);
      c.concl_kind(K::Implies, "an implication");
      c.context_plus(0, c.concl().left());
      c.premise_concl_is(0, c.concl().right());
      return;
    case Rule::ImpElim:
      c.premises(2);
      c.same_context(0);
      c.same_context(1);
      c.premise_kind(0, K::Implies, "an implication");
      c.premise_concl_is(1, c.premise(0).conclusion.left());
      c.concl_is(c.premise(0).conclusion.right());
      return;
    case Rule::NotIntro:
      c.premises(1);
      c.concl_kind(K::Not, "a negation");
      c.context_plus(0, c.concl().operand());
      c.premise_concl_is(0, Formula::falsum());
      return;
    case Rule::NotElim:
      c.premises(2);
      c.same_context(0);
      c.same_context(1);
      c.premise_concl_is(1, Formula::negation(c.premise(0).conclusion));
      c.concl_is(Formula::falsum());
      return;
    case Rule::FalsumElim:
      c.premises(1);
      c.same_context(0);
      c.premise_concl_is(0, Formula::falsum());
      return;
    case Rule::DoubleNegElim:
      c.premises(1);
      c.same_context(0);
      c.premise_concl_is(0, Formula::negation(Formula::negation(c.concl())));
      return;
    case Rule::EqRefl:
      c.premises(0);
      c.require(c.hyps().empty(), "reflexivity has no hypotheses");
      c.concl_kind(K::Equals, "an equation");
      c.require(alpha_eq(c.concl().terms()[0], c.concl().terms()[1]),
                "sides of the equation differ");
      return;
    case Rule::EqSubst: {
      c.premises(2);
      c.same_context(0);
      c.same_context(1);
      c.premise_kind(0, K::Equals, "an equation");
      const Term& from = c.premise(0).conclusion.terms()[0];
      const Term& to = c.premise(0).conclusion.terms()[1];
      c.premise_concl_is(1, substitute(c.body(), c.var(), from));
      c.concl_is(substitute(c.body(), c.var(), to));
      return;
    }
    case Rule::TauIntro: {
      c.premises(1);
      c.same_context(0);
      const std::string& x = c.var();
      const Formula& body =
          d.payload.body ? *d.payload.body : c.premise(0).conclusion;
      c.premise_concl_is(0, body);
      for (const auto& h : c.hyps())
        if (occurs_free(x, h))
          c.fail(ErrorCode::EigenvariableViolation,
                 "variable " + x + " occurs free in hypothesis " +
                     to_string(h));
      c.concl_is(instantiate_tau(x, body));
      return;
    }
    case Rule::TauElim:
      c.premises(1);
      c.same_context(0);
      c.premise_concl_is(0, instantiate_tau(c.var(), c.body()));
      c.concl_is(substitute(c.body(), c.var(), c.witness()));
      return;
    case Rule::EpsIntro:
      c.premises(1);
      c.same_context(0);
      c.premise_concl_is(0, substitute(c.body(), c.var(), c.witness()));
      c.concl_is(instantiate_eps(c.var(), c.body()));
      return;
    case Rule::DualRewrite:
      c.premises(1);
      c.require(same_hypotheses(canonical(c.hyps()),
                                canonical(c.premise(0).hypotheses)),
                "hypotheses are not dual rewrites of the premise's");
      c.require(alpha_eq(dual_canonical(c.concl()),
                         dual_canonical(c.premise(0).conclusion)),
                "conclusion is not a dual rewrite of the premise's");
      return;
  }
}

void check_tree(const Derivation& d) {
  for (const auto& p : d.premises) check_tree(p);
  check_node(d);
}

void gather(const Derivation& d, std::vector<Formula>& out) {
  out.insert(out.end(), d.conclusion.hypotheses.begin(),
             d.conclusion.hypotheses.end());
  out.push_back(d.conclusion.conclusion);
  for (const auto& p : d.premises) gather(p, out);
}

}  // namespace

Sequent check_derivation(const Derivation& d) {
  std::vector<Formula> all;
  gather(d, all);
  try {
    signature_of(all);
  } catch (const KernelError&) {
    throw;
  } catch (const Error& e) {
    throw KernelError(ErrorCode::Arity, describe(d), d.rule, e.what());
  }
  check_tree(d);
  return d.conclusion;
}

std::size_t derivation_size(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += derivation_size(p);
  return n;
}

// ---------------------------------------------------------------------------
// Builders

namespace nd {

namespace {

[[noreturn]] void mismatch(Rule r, const std::string& reason) {
  throw KernelError(ErrorCode::RuleMismatch, "", r, reason);
}

Derivation node(Rule r, std::vector<Derivation> premises,
                std::vector<Formula> hyps, Formula concl,
                RulePayload payload = {}) {
  return Derivation{r, std::move(premises),
                    Sequent{std::move(hyps), std::move(concl)},
                    std::move(payload), ""};
}

const Sequent& seq(const Derivation& d) { return d.conclusion; }

std::vector<Formula> discharge(Rule r, const std::vector<Formula>& hyps,
                               const Formula& a) {
  auto rest = multiset_minus(hyps, {a});
  if (!rest) mismatch(r, "hypothesis " + to_string(a) + " is not available");
  return *rest;
}

}  // namespace

Derivation axiom(const Formula& a) {
  RulePayload p;
  p.formula = a;
  return node(Rule::Axiom, {}, {a}, a, p);
}

Derivation weaken(Derivation d, const Formula& extra) {
  auto hyps = plus(seq(d).hypotheses, extra);
  Formula c = seq(d).conclusion;
  RulePayload p;
  p.formula = extra;
  return node(Rule::Weakening, {std::move(d)}, std::move(hyps), c, p);
}

Derivation weaken_to(Derivation d, const std::vector<Formula>& target) {
  auto missing = multiset_minus(target, seq(d).hypotheses);
  if (!missing)
    mismatch(Rule::Weakening, "cannot weaken " + to_string(seq(d)) +
                                  " to a smaller context");
  for (const auto& f : *missing) d = weaken(std::move(d), f);
  return d;
}

Derivation and_intro(Derivation left, Derivation right) {
  auto hyps = seq(left).hypotheses;
  Formula c = Formula::conjunction(seq(left).conclusion, seq(right).conclusion);
  return node(Rule::AndIntro, {std::move(left), std::move(right)},
              std::move(hyps), c);
}

Derivation and_elim_left(Derivation d) {
  if (seq(d).conclusion.kind() != Formula::Kind::And)
    mismatch(Rule::AndElimLeft, "premise is not a conjunction");
  auto hyps = seq(d).hypotheses;
  Formula c = seq(d).conclusion.left();
  return node(Rule::AndElimLeft, {std::move(d)}, std::move(hyps), c);
}

Derivation and_elim_right(Derivation d) {
  if (seq(d).conclusion.kind() != Formula::Kind::And)
    mismatch(Rule::AndElimRight, "premise is not a conjunction");
  auto hyps = seq(d).hypotheses;
  Formula c = seq(d).conclusion.right();
  return node(Rule::AndElimRight, {std::move(d)}, std::move(hyps), c);
}

Derivation or_intro_left(Derivation d, const Formula& right) {
  auto hyps = seq(d).hypotheses;
  Formula c = Formula::disjunction(seq(d).conclusion, right);
  RulePayload p;
  p.formula = right;
  return node(Rule::OrIntroLeft, {std::move(d)}, std::move(hyps), c, p);
}

Derivation or_intro_right(const Formula& left, Derivation d) {
  auto hyps = seq(d).hypotheses;
  Formula c = Formula::disjunction(left, seq(d).conclusion);
  RulePayload p;
  p.formula = left;
  return node(Rule::OrIntroRight, {std::move(d)}, std::move(hyps), c, p);
}

Derivation or_elim(Derivation disj, Derivation left_case,
                   Derivation right_case) {
  if (seq(disj).conclusion.kind() != Formula::Kind::Or)
    mismatch(Rule::OrElim, "first premise is not a disjunction");
  auto hyps = seq(disj).hypotheses;
  Formula c = seq(left_case).conclusion;
  return node(Rule::OrElim,
              {std::move(disj), std::move(left_case), std::move(right_case)},
              std::move(hyps), c);
}

Derivation imp_intro(Derivation d, const Formula& discharged) {
  auto hyps = discharge(Rule::ImpIntro, seq(d).hypotheses, discharged);
  Formula c = Formula::implication(discharged, seq(d).conclusion);
  RulePayload p;
  p.formula = discharged;
  return node(Rule::ImpIntro, {std::move(d)}, std::move(hyps), c, p);
}

Derivation imp_elim(Derivation imp, Derivation arg) {
  if (seq(imp).conclusion.kind() != Formula::Kind::Implies)
    mismatch(Rule::ImpElim, "first premise is not an implication");
  auto hyps = seq(imp).hypotheses;
  Formula c = seq(imp).conclusion.right();
  return node(Rule::ImpElim, {std::move(imp), std::move(arg)}, std::move(hyps),
              c);
}

Derivation not_intro(Derivation d, const Formula& discharged) {
  auto hyps = discharge(Rule::NotIntro, seq(d).hypotheses, discharged);
  RulePayload p;
  p.formula = discharged;
  return node(Rule::NotIntro, {std::move(d)}, std::move(hyps),
              Formula::negation(discharged), p);
}

Derivation not_elim(Derivation pos, Derivation neg) {
  auto hyps = seq(pos).hypotheses;
  return node(Rule::NotElim, {std::move(pos), std::move(neg)}, std::move(hyps),
              Formula::falsum());
}

Derivation falsum_elim(Derivation d, const Formula& goal) {
  auto hyps = seq(d).hypotheses;
  RulePayload p;
  p.formula = goal;
  return node(Rule::FalsumElim, {std::move(d)}, std::move(hyps), goal, p);
}

Derivation double_neg_elim(Derivation d) {
  const Formula& c = seq(d).conclusion;
  if (c.kind() != Formula::Kind::Not ||
      c.operand().kind() != Formula::Kind::Not)
    mismatch(Rule::DoubleNegElim, "premise is not a double negation");
  auto hyps = seq(d).hypotheses;
  Formula inner = c.operand().operand();
  return node(Rule::DoubleNegElim, {std::move(d)}, std::move(hyps), inner);
}

Derivation eq_refl(const Term& t) {
  RulePayload p;
  p.witness = t;
  return node(Rule::EqRefl, {}, {}, Formula::equals(t, t), p);
}

Derivation eq_subst(Derivation eq, Derivation d, const std::string& var,
                    const Formula& body) {
  if (seq(eq).conclusion.kind() != Formula::Kind::Equals)
    mismatch(Rule::EqSubst, "first premise is not an equation");
  auto hyps = seq(d).hypotheses;
  Formula c = substitute(body, var, seq(eq).conclusion.terms()[1]);
  RulePayload p;
  p.var = var;
  p.body = body;
  return node(Rule::EqSubst, {std::move(eq), std::move(d)}, std::move(hyps), c,
              p);
}

Derivation tau_intro(Derivation d, const std::string& var) {
  auto hyps = seq(d).hypotheses;
  Formula body = seq(d).conclusion;
  RulePayload p;
  p.var = var;
  p.body = body;
  return node(Rule::TauIntro, {std::move(d)}, std::move(hyps),
              instantiate_tau(var, body), p);
}

Derivation tau_elim(Derivation d, const std::string& var, const Formula& body,
                    const Term& witness) {
  auto hyps = seq(d).hypotheses;
  RulePayload p;
  p.var = var;
  p.body = body;
  p.witness = witness;
  return node(Rule::TauElim, {std::move(d)}, std::move(hyps),
              substitute(body, var, witness), p);
}

Derivation eps_intro(Derivation d, const std::string& var, const Formula& body,
                     const Term& witness) {
  auto hyps = seq(d).hypotheses;
  RulePayload p;
  p.var = var;
  p.body = body;
  p.witness = witness;
  return node(Rule::EpsIntro, {std::move(d)}, std::move(hyps),
              instantiate_eps(var, body), p);
}

Derivation dual_rewrite(Derivation d, std::vector<Formula> hypotheses,
                        const Formula& conclusion) {
  RulePayload p;
  p.formula = conclusion;
  p.hypotheses = hypotheses;
  return node(Rule::DualRewrite, {std::move(d)}, std::move(hypotheses),
              conclusion, p);
}

Derivation dual_rewrite(Derivation d, const Formula& conclusion) {
  auto hyps = seq(d).hypotheses;
  return dual_rewrite(std::move(d), std::move(hyps), conclusion);
}

Derivation double_neg_intro(Derivation d) {
  const auto hyps = seq(d).hypotheses;
  const Formula a = seq(d).conclusion;
  const Formula not_a = Formula::negation(a);
  Derivation neg = weaken_to(axiom(not_a), plus(hyps, not_a));
  Derivation pos = weaken(std::move(d), not_a);
  return not_intro(not_elim(std::move(pos), std::move(neg)), not_a);
}

Derivation labeled(Derivation d, std::string label) {
  d.label = std::move(label);
  return d;
}

}  // namespace nd

// ---------------------------------------------------------------------------
// Scripts

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

struct ScriptLine {
  std::size_t number;
  std::string label;
  Rule rule;
  std::vector<std::string> premises;
  std::multimap<std::string, std::string> fields;
};

[[noreturn]] void script_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + msg);
}

ScriptLine parse_line(std::size_t number, std::string_view text) {
  auto fields = split(text, ';');
  ScriptLine line{number, "", Rule::Axiom, {}, {}};
  auto colon = fields[0].find(':');
  if (colon == std::string::npos)
    script_error(number, "expected '<label>: <Rule> [premises]'");
  line.label = trim(std::string_view(fields[0]).substr(0, colon));
  if (line.label.empty() ||
      line.label.find_first_of(" \t") != std::string::npos)
    script_error(number, "bad label '" + line.label + "'");
  std::istringstream head(fields[0].substr(colon + 1));
  std::string word;
  if (!(head >> word)) script_error(number, "missing rule name");
  auto rule = rule_from_name(word);
  if (!rule) script_error(number, "unknown rule '" + word + "'");
  line.rule = *rule;
  while (head >> word) line.premises.push_back(word);
  for (std::size_t i = 1; i < fields.size(); ++i) {
    if (fields[i].empty()) continue;
    auto kc = fields[i].find(':');
    if (kc == std::string::npos)
      script_error(number, "expected 'key: value' in '" + fields[i] + "'");
    line.fields.emplace(trim(std::string_view(fields[i]).substr(0, kc)),
                        trim(std::string_view(fields[i]).substr(kc + 1)));
  }
  return line;
}

class ScriptBuilder {
 public:
  explicit ScriptBuilder(const Signature* sig) : sig_(sig) {}

  Derivation build(const ScriptLine& line,
                   const std::map<std::string, Derivation>& done) {
    line_ = &line;
    std::vector<Derivation> ps;
    for (const auto& name : line.premises) {
      auto it = done.find(name);
      if (it == done.end())
        script_error(line.number, "unknown premise '" + name + "'");
      ps.push_back(it->second);
    }
    Derivation d = apply(line.rule, std::move(ps));
    if (auto c = field("concl")) d.conclusion.conclusion = formula(*c);
    d.label = line.label;
    return d;
  }

 private:
  std::optional<std::string> field(const char* key) const {
    auto it = line_->fields.find(key);
    if (it == line_->fields.end()) return std::nullopt;
    return it->second;
  }
  std::string required(const char* key) const {
    auto v = field(key);
    if (!v) script_error(line_->number, std::string("missing '") + key + "'");
    return *v;
  }
  Formula formula(const std::string& text) const {
    try {
      return parse_formula(text, sig_);
    } catch (const Error& e) {
      script_error(line_->number, e.what());
    }
  }
  Term term(const std::string& text) const {
    try {
      return parse_term(text, sig_);
    } catch (const Error& e) {
      script_error(line_->number, e.what());
    }
  }

  void arity(Rule r, const std::vector<Derivation>& ps, std::size_t n) const {
    if (ps.size() != n)
      throw KernelError(ErrorCode::Arity, line_->label, r,
                        "expects " + std::to_string(n) + " premise(s), got " +
                            std::to_string(ps.size()));
  }

  Derivation apply(Rule r, std::vector<Derivation> ps) const {
    try {
      return apply_unlabeled(r, std::move(ps));
    } catch (const KernelError& e) {
      throw KernelError(e.code(), line_->label, e.rule(), e.reason());
    }
  }

  Derivation apply_unlabeled(Rule r, std::vector<Derivation> ps) const {
    switch (r) {
      case Rule::Axiom:
        arity(r, ps, 0);
        return nd::axiom(formula(required("formula")));
      case Rule::Weakening:
        arity(r, ps, 1);
        return nd::weaken(ps[0], formula(required("formula")));
      case Rule::AndIntro:
        arity(r, ps, 2);
        return nd::and_intro(ps[0], ps[1]);
      case Rule::AndElimLeft:
        arity(r, ps, 1);
        return nd::and_elim_left(ps[0]);
      case Rule::AndElimRight:
        arity(r, ps, 1);
        return nd::and_elim_right(ps[0]);
      case Rule::OrIntroLeft:
        arity(r, ps, 1);
        return nd::or_intro_left(ps[0], formula(required("formula")));
      case Rule::OrIntroRight:
        arity(r, ps, 1);
        return nd::or_intro_right(formula(required("formula")), ps[0]);
      case Rule::OrElim:
        arity(r, ps, 3);
        return nd::or_elim(ps[0], ps[1], ps[2]);
      case Rule::ImpIntro:
        arity(r, ps, 1);
        return nd::imp_intro(ps[0], formula(required("formula")));
      case Rule::ImpElim:
        arity(r, ps, 2);
        return nd::imp_elim(ps[0], ps[1]);
      case Rule::NotIntro:
        arity(r, ps, 1);
        return nd::not_intro(ps[0], formula(required("formula")));
      case Rule::NotElim:
        arity(r, ps, 2);
        return nd::not_elim(ps[0], ps[1]);
      case Rule::FalsumElim:
        arity(r, ps, 1);
        return nd::falsum_elim(ps[0], formula(required("formula")));
      case Rule::DoubleNegElim:
        arity(r, ps, 1);
        return nd::double_neg_elim(ps[0]);
      case Rule::EqRefl:
        arity(r, ps, 0);
        return nd::eq_refl(term(required("witness")));
      case Rule::EqSubst:
        arity(r, ps, 2);
        return nd::eq_subst(ps[0], ps[1], required("var"),
                            formula(required("body")));
      case Rule::TauIntro: {
        arity(r, ps, 1);
        Derivation d = nd::tau_intro(ps[0], required("var"));
        if (auto b = field("body")) {
          d.payload.body = formula(*b);
          d.conclusion.conclusion = instantiate_tau(*d.payload.var, *d.payload.body);
        }
        return d;
      }
      case Rule::TauElim:
        arity(r, ps, 1);
        return nd::tau_elim(ps[0], required("var"), formula(required("body")),
                            term(required("witness")));
      case Rule::EpsIntro:
        arity(r, ps, 1);
        return nd::eps_intro(ps[0], required("var"), formula(required("body")),
                             term(required("witness")));
      case Rule::DualRewrite: {
        arity(r, ps, 1);
        Formula c = formula(required("formula"));
        auto range = line_->fields.equal_range("hyp");
        if (range.first == range.second) return nd::dual_rewrite(ps[0], c);
        std::vector<Formula> hyps;
        for (auto it = range.first; it != range.second; ++it)
          hyps.push_back(formula(it->second));
        return nd::dual_rewrite(ps[0], std::move(hyps), c);
      }
    }
    script_error(line_->number, "unsupported rule");
  }

  const Signature* sig_;
  const ScriptLine* line_ = nullptr;
};

}  // namespace

Derivation parse_proof_script(std::string_view text, const Signature* sig) {
  std::map<std::string, Derivation> done;
  std::optional<Derivation> last;
  ScriptBuilder builder(sig);
  std::size_t number = 0;
  for (const auto& raw : split(text, '\n')) {
    ++number;
    std::string_view content = raw;
    if (auto hash = content.find('#'); hash != std::string_view::npos)
      content = content.substr(0, hash);
    std::string line_text = trim(content);
    if (line_text.empty()) continue;
    ScriptLine line = parse_line(number, line_text);
    if (done.count(line.label))
      script_error(number, "duplicate label '" + line.label + "'");
    Derivation d = builder.build(line, done);
    done.emplace(line.label, d);
    last = std::move(d);
  }
  if (!last) throw Error(ErrorCode::Parse, "empty proof script");
  return *last;
}

namespace {

std::string emit(const Derivation& d, std::size_t& counter,
                 std::vector<std::string>& lines) {
  std::vector<std::string> premise_labels;
  for (const auto& p : d.premises)
    premise_labels.push_back(emit(p, counter, lines));
  std::string label = "s" + std::to_string(++counter);
  std::string line = label + ": " + rule_name(d.rule);
  for (const auto& p : premise_labels) line += " " + p;
  const RulePayload& p = d.payload;
  if (p.var) line += " ; var: " + *p.var;
  if (p.body) line += " ; body: " + to_string(*p.body);
  if (p.witness) line += " ; witness: " + to_string(*p.witness);
  if (p.formula) line += " ; formula: " + to_string(*p.formula);
  if (p.hypotheses)
    for (const auto& h : *p.hypotheses) line += " ; hyp: " + to_string(h);
  lines.push_back(std::move(line));
  return label;
}

}  // namespace

std::string to_script(const Derivation& d) {
  std::size_t counter = 0;
  std::vector<std::string> lines;
  emit(d, counter, lines);
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace aieo
