#include "aieo/square.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>

#include "aieo/text.hpp"

namespace aieo {

namespace {

bool valid_symbol(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) ||
                        name[0] == '_'))
    return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void require_unary(const std::string& name, const Signature* sig) {
  if (!valid_symbol(name))
    throw Error(ErrorCode::InvalidArgument, "bad predicate name '" + name + "'");
  if (!sig) return;
  auto it = sig->predicates.find(name);
  if (it != sig->predicates.end() && it->second != 1)
    throw Error(ErrorCode::Arity, name + " has arity " +
                                      std::to_string(it->second) + ", not 1");
  if (sig->constants.count(name) || sig->functions.count(name))
    throw Error(ErrorCode::Arity, name + " is not a predicate");
}

Formula neg(const Formula& f) { return Formula::negation(f); }

Formula unary(const std::string& p, const Term& t) { return Formula::pred(p, {t}); }

Term eps_of(const std::string& s) {
  return Term::epsilon("x", unary(s, Term::variable("x")));
}
Term tau_of(const std::string& s) {
  return Term::tau("x", unary(s, Term::variable("x")));
}

bool contains_alpha(const std::vector<Formula>& fs, const Formula& f) {
  return std::any_of(fs.begin(), fs.end(),
                     [&](const Formula& g) { return alpha_eq(f, g); });
}

}  // namespace

AieoSquare build_square(const std::string& s, const std::string& p,
                        bool negate_p, const Signature* sig) {
  require_unary(s, sig);
  require_unary(p, sig);
  AieoSquare sq;
  sq.subject = s;
  sq.predicate = p;
  sq.negated = negate_p;
  sq.A = fill(sq, tau_of(s));
  sq.I = fill(sq, eps_of(s));
  sq.E = neg(sq.I);
  sq.O = neg(sq.A);
  return sq;
}

Formula fill(const AieoSquare& sq, const Term& t) {
  Formula f = unary(sq.predicate, t);
  return sq.negated ? neg(f) : f;
}

// ---------------------------------------------------------------------------
// Bounded oracle

BoundedOracle::BoundedOracle(std::vector<Formula> theory, int bound,
                             Signature sig, std::uint64_t budget)
    : theory_(std::move(theory)), bound_(bound), sig_(std::move(sig)),
      budget_(budget) {
  sig_.merge(signature_of(theory_));
  sig_.validate();
  models_ = enumerate_models(sig_, bound_, budget_);
  theory_mask_.assign((models_.size() + 63) / 64, ~std::uint64_t{0});
  if (models_.size() % 64)
    theory_mask_.back() = (std::uint64_t{1} << (models_.size() % 64)) - 1;
  for (const auto& f : theory_) {
    if (!free_vars(f).empty())
      throw Error(ErrorCode::InvalidArgument,
                  "theory formula " + to_string(f) + " is not closed");
    const Bits& t = truth(f);
    for (std::size_t w = 0; w < theory_mask_.size(); ++w) theory_mask_[w] &= t[w];
  }
}

bool BoundedOracle::covered(const Formula& f) const {
  if (!free_vars(f).empty()) return false;
  Signature used = signature_of(f);
  for (const auto& [name, arity] : used.predicates) {
    auto it = sig_.predicates.find(name);
    if (it == sig_.predicates.end() || it->second != arity) return false;
  }
  for (const auto& [name, arity] : used.functions) {
    auto it = sig_.functions.find(name);
    if (it == sig_.functions.end() || it->second != arity) return false;
  }
  return std::all_of(used.constants.begin(), used.constants.end(),
                     [&](const std::string& c) { return sig_.constants.count(c); });
}

const BoundedOracle::Bits& BoundedOracle::truth(const Formula& closed) {
  std::string key = to_string(closed);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Bits bits((models_.size() + 63) / 64, 0);
  const Assignment env;
  for (std::size_t i = 0; i < models_.size(); ++i)
    if (eval_formula(models_[i], env, closed))
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
  return cache_.emplace(std::move(key), std::move(bits)).first->second;
}

OracleAnswer BoundedOracle::query(const std::vector<Formula>& hypotheses,
                                  const Formula& goal) {
  OracleAnswer out;
  bool fast = covered(goal) && std::all_of(hypotheses.begin(), hypotheses.end(),
                                           [&](const Formula& h) { return covered(h); });
  if (!fast) {
    std::vector<Formula> all = theory_;
    all.insert(all.end(), hypotheses.begin(), hypotheses.end());
    EntailmentVerdict v = entails(all, goal, sig_, bound_, budget_);
    out.holds = v.valid;
    out.countermodel = v.model;
    out.assignment = v.assignment;
    return out;
  }
  Bits bad = theory_mask_;
  for (const auto& h : hypotheses) {
    const Bits& t = truth(h);
    for (std::size_t w = 0; w < bad.size(); ++w) bad[w] &= t[w];
  }
  const Bits& g = truth(goal);
  for (std::size_t w = 0; w < bad.size(); ++w) {
    std::uint64_t word = bad[w] & ~g[w];
    if (word) {
      out.countermodel = models_[w * 64 + std::countr_zero(word)];
      return out;
    }
  }
  out.holds = true;
  return out;
}

std::string BoundedOracle::describe() const {
  std::string s = "bounded(" + std::to_string(bound_) + ")";
  if (!theory_.empty()) {
    s += " under {";
    for (std::size_t i = 0; i < theory_.size(); ++i)
      s += (i ? ", " : "") + to_string(theory_[i]);
    s += "}";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Kernel oracle

KernelOracle::KernelOracle(const std::vector<NamedDerivation>& library,
                           std::vector<Formula> theory)
    : theory_(std::move(theory)) {
  for (const auto& entry : library)
    proved_.emplace_back(entry.name, check_derivation(entry.derivation));
}

OracleAnswer KernelOracle::query(const std::vector<Formula>& hypotheses,
                                 const Formula& goal) {
  std::vector<Formula> available = theory_;
  available.insert(available.end(), hypotheses.begin(), hypotheses.end());
  OracleAnswer out;
  for (const auto& [name, seq] : proved_) {
    if (!alpha_eq(seq.conclusion, goal)) continue;
    bool ok = std::all_of(seq.hypotheses.begin(), seq.hypotheses.end(),
                          [&](const Formula& h) { return contains_alpha(available, h); });
    if (ok) {
      out.holds = true;
      out.derivation = name;
      return out;
    }
  }
  return out;
}

std::string KernelOracle::describe() const {
  std::string s = "kernel(" + std::to_string(proved_.size()) + " derivations)";
  if (!theory_.empty()) {
    s += " under {";
    for (std::size_t i = 0; i < theory_.size(); ++i)
      s += (i ? ", " : "") + to_string(theory_[i]);
    s += "}";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

class Asker {
 public:
  Asker(EntailmentOracle& oracle, std::vector<ConditionCheck>& log)
      : oracle_(oracle), log_(log) {}

  bool operator()(std::string label, std::vector<Formula> hyps,
                  const Formula& goal) {
    ConditionCheck c{std::move(label), std::move(hyps), goal, {}};
    c.answer = oracle_.query(c.hypotheses, c.goal);
    bool holds = c.answer.holds;
    log_.push_back(std::move(c));
    return holds;
  }

 private:
  EntailmentOracle& oracle_;
  std::vector<ConditionCheck>& log_;
};

}  // namespace

SquareReport check_square(const AieoSquare& sq, EntailmentOracle& oracle) {
  SquareReport r;
  r.square = sq;
  r.oracle = oracle.describe();
  r.theory = oracle.theory();
  Asker ask(oracle, r.checks);
  const Formula bottom = Formula::falsum();

  bool a_not_o = ask("A |- ~O", {sq.A}, neg(sq.O));
  bool not_o_a = ask("~O |- A", {neg(sq.O)}, sq.A);
  bool e_not_i = ask("E |- ~I", {sq.E}, neg(sq.I));
  bool not_i_e = ask("~I |- E", {neg(sq.I)}, sq.E);
  r.a_iff_not_o = a_not_o && not_o_a;
  r.e_iff_not_i = e_not_i && not_i_e;

  bool a_valid = ask("|- A", {}, sq.A);
  bool e_valid = ask("|- E", {}, sq.E);
  r.contraries_ok = !(a_valid && e_valid);

  bool i_absurd = ask("I |- false", {sq.I}, bottom);
  bool e_absurd = ask("E |- false", {sq.E}, bottom);
  r.subcontraries_ok = !(i_absurd && e_absurd);

  r.a_entails_i = ask("A |- I", {sq.A}, sq.I);
  r.e_entails_o = ask("E |- O", {sq.E}, sq.O);

  r.not_i_entails_not_a = ask("~I |- ~A", {neg(sq.I)}, neg(sq.A));
  r.not_o_entails_not_e = ask("~O |- ~E", {neg(sq.O)}, neg(sq.E));
  bool not_i_valid = ask("|- ~I", {}, neg(sq.I));
  bool not_o_valid = ask("|- ~O", {}, neg(sq.O));
  r.i_o_not_both_false = !(not_i_valid && not_o_valid);

  if (dynamic_cast<BoundedOracle*>(&oracle))
    r.notes.push_back("entailments are checked in every model up to the bound; "
                      "a countermodel is definitive, validity is a bounded claim");
  if (dynamic_cast<KernelOracle*>(&oracle))
    r.notes.push_back("an entailment holds only when a checked derivation "
                      "proves it; a missing derivation reads as non-entailment");
  r.notes.push_back("iii is checked as: not (I |- false and E |- false)");
  if (!r.i_o_not_both_false)
    r.notes.push_back("I and O can both be false");
  if (!(r.not_i_entails_not_a && r.not_o_entails_not_e))
    r.notes.push_back("falsity of I or O does not carry up to A or E "
                      "(informational, not required)");
  return r;
}

const char* bivalence_name(Bivalence b) {
  switch (b) {
    case Bivalence::LeftToRight: return "LeftToRight";
    case Bivalence::RightToLeft: return "RightToLeft";
    case Bivalence::Both: return "Both";
    case Bivalence::Neither: return "Neither";
  }
  return "?";
}

BivalenceResult bivalence(const std::string& s, const std::string& p,
                          EntailmentOracle& oracle) {
  require_unary(s, nullptr);
  require_unary(p, nullptr);
  const Formula p_eps = unary(p, eps_of(s));
  const Formula p_tau = unary(p, tau_of(s));
  BivalenceResult r;
  r.eps_to_tau = {"P(eps S) |- P(tau S)", {p_eps}, p_tau, oracle.query({p_eps}, p_tau)};
  r.tau_to_eps = {"P(tau S) |- P(eps S)", {p_tau}, p_eps, oracle.query({p_tau}, p_eps)};
  bool l = r.eps_to_tau.answer.holds;
  bool rt = r.tau_to_eps.answer.holds;
  r.verdict = l && rt ? Bivalence::Both
              : l     ? Bivalence::LeftToRight
              : rt    ? Bivalence::RightToLeft
                      : Bivalence::Neither;
  return r;
}

PropositionResult proposition_check(const std::string& s, const std::string& p,
                                    EntailmentOracle& oracle) {
  PropositionResult r;
  r.bivalence = bivalence(s, p, oracle);
  if (r.bivalence.verdict == Bivalence::Neither)
    throw Error(ErrorCode::HypothesisNotMet,
                p + " is not bivalent with respect to " + s + " under " +
                    oracle.describe());
  r.negated = r.bivalence.verdict == Bivalence::LeftToRight;
  r.report = check_square(build_square(s, p, r.negated), oracle);
  return r;
}

// ---------------------------------------------------------------------------
// Remark

namespace {

class QuadGen {
 public:
  explicit QuadGen(std::uint64_t seed) : rng_(seed) {}

  Formula formula(int depth) { return gen_formula(depth, 0); }

  // A quadruple whose diagonals are often (not always) contradictory, so the
  // premises of both implications get exercised.
  std::array<Formula, 4> quadruple() {
    Formula a = formula(2);
    Formula i = formula(2);
    Formula o = partner(a);
    Formula e = partner(i);
    return {a, e, i, o};
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  Formula partner(const Formula& f) {
    switch (pick(4)) {
      case 0: return neg(f);
      case 1: return neg(dual_normalize(f));
      case 2: return dual_normalize(neg(neg(neg(f))));
      default: return formula(2);
    }
  }

  std::string var(int scope) {
    static const char* names[] = {"x", "y", "z", "w"};
    return names[scope % 4];
  }

  Term gen_term(int depth, int scope) {
    if (scope > 0 && (depth == 0 || pick(2) == 0))
      return Term::variable(var(pick(scope)));
    if (depth == 0) {
      std::string p = pick(2) ? "S" : "P";
      return pick(2) ? eps_of(p) : tau_of(p);
    }
    std::string x = var(scope);
    Formula body = gen_formula(depth - 1, scope + 1);
    return pick(2) ? Term::epsilon(x, body) : Term::tau(x, body);
  }

  Formula gen_formula(int depth, int scope) {
    int choice = depth == 0 ? 0 : pick(7);
    switch (choice) {
      case 0:
      case 1:
        return unary(pick(2) ? "S" : "P", gen_term(depth == 0 ? 0 : depth - 1, scope));
      case 2:
        return neg(gen_formula(depth - 1, scope));
      case 3:
        return Formula::conjunction(gen_formula(depth - 1, scope),
                                    gen_formula(depth - 1, scope));
      case 4:
        return Formula::disjunction(gen_formula(depth - 1, scope),
                                    gen_formula(depth - 1, scope));
      case 5:
        return Formula::implication(gen_formula(depth - 1, scope),
                                    gen_formula(depth - 1, scope));
      default: {
        std::string x = var(scope);
        Formula body = gen_formula(depth - 1, scope + 1);
        return pick(2) ? Formula::exists(x, body) : Formula::forall(x, body);
      }
    }
  }

  std::mt19937_64 rng_;
};

using Bits = BoundedOracle::Bits;

struct Quad {
  const Bits* a;
  const Bits* e;
  const Bits* i;
  const Bits* o;
};

// mask & x & ~y == 0
bool entails_bits(const Bits& mask, const Bits& x, bool neg_x, const Bits& y,
                  bool neg_y) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t xv = neg_x ? ~x[w] : x[w];
    std::uint64_t yv = neg_y ? ~y[w] : y[w];
    if (mask[w] & xv & ~yv) return false;
  }
  return true;
}

bool valid_bits(const Bits& mask, const Bits& x, bool neg_x) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t xv = neg_x ? ~x[w] : x[w];
    if (mask[w] & ~xv) return false;
  }
  return true;
}

bool absurd_bits(const Bits& mask, const Bits& x) {
  for (std::size_t w = 0; w < mask.size(); ++w)
    if (mask[w] & x[w]) return false;
  return true;
}

struct QuadVerdict {
  bool iii_premises, iii, iv_premises, iv;
};

QuadVerdict judge(const Bits& m, const Quad& q) {
  bool cond_i = entails_bits(m, *q.a, false, *q.o, true) &&
                entails_bits(m, *q.o, true, *q.a, false) &&
                entails_bits(m, *q.e, false, *q.i, true) &&
                entails_bits(m, *q.i, true, *q.e, false);
  bool cond_ii = !(valid_bits(m, *q.a, false) && valid_bits(m, *q.e, false));
  bool cond_iii = !(absurd_bits(m, *q.i) && absurd_bits(m, *q.e));
  bool a_i = entails_bits(m, *q.a, false, *q.i, false);
  bool e_o = entails_bits(m, *q.e, false, *q.o, false);
  return {cond_i && cond_ii, cond_iii, cond_i && a_i, e_o};
}

}  // namespace

std::vector<Formula> remark_pool() {
  std::vector<Formula> pool;
  for (const char* text :
       {"false", "true", "P(eps x. S(x))", "P(tau x. S(x))", "~P(eps x. S(x))",
        "~P(tau x. S(x))", "S(eps x. P(x))", "~S(tau x. P(x))",
        "exists x. (S(x) & P(x))", "forall x. (S(x) -> P(x))"})
    pool.push_back(parse_formula(text));
  return pool;
}

RemarkReport remark_check(const RemarkOptions& opts) {
  Signature sig;
  sig.predicates = {{"S", 1}, {"P", 1}};
  BoundedOracle plain({}, opts.bound, sig);

  std::vector<std::vector<Formula>> theories{{}};
  theories.insert(theories.end(), opts.theories.begin(), opts.theories.end());
  std::vector<Bits> masks;
  for (const auto& th : theories) {
    Bits m = plain.theory_mask();
    for (const auto& f : th) {
      const Bits& t = plain.truth(f);
      for (std::size_t w = 0; w < m.size(); ++w) m[w] &= t[w];
    }
    masks.push_back(std::move(m));
  }

  RemarkReport report;
  auto run = [&](const std::array<Formula, 4>& fs, std::size_t& counter) {
    Quad q{&plain.truth(fs[0]), &plain.truth(fs[1]), &plain.truth(fs[2]),
           &plain.truth(fs[3])};
    ++counter;
    for (std::size_t t = 0; t < theories.size(); ++t) {
      QuadVerdict v = judge(masks[t], q);
      if (v.iii_premises) ++report.iii_premises_held;
      if (v.iv_premises) ++report.iv_premises_held;
      if (v.iii_premises && !v.iii)
        report.violations.push_back({"iii", theories[t], fs[0], fs[1], fs[2], fs[3]});
      if (v.iv_premises && !v.iv)
        report.violations.push_back({"iv", theories[t], fs[0], fs[1], fs[2], fs[3]});
    }
  };

  const std::vector<Formula> pool = remark_pool();
  for (const auto& a : pool)
    for (const auto& e : pool)
      for (const auto& i : pool)
        for (const auto& o : pool) run({a, e, i, o}, report.exhaustive);

  QuadGen gen(opts.seed);
  for (std::size_t n = 0; n < opts.random_quadruples; ++n)
    run(gen.quadruple(), report.random);
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_square(const SquareReport& r) {
  auto mark = [](bool ok) { return std::string(ok ? "[ok]" : "[FAIL]"); };
  const AieoSquare& sq = r.square;
  std::ostringstream out;
  out << "square S(" << sq.subject << "," << (sq.negated ? "~" : "")
      << sq.predicate << ")  oracle: " << r.oracle << "\n\n";
  out << "  A  " << to_string(sq.A) << "\n";
  out << "  E  " << to_string(sq.E) << "\n";
  out << "  I  " << to_string(sq.I) << "\n";
  out << "  O  " << to_string(sq.O) << "\n\n";

  // Corners at columns 0 and kWidth of the grid; diagonals cross mid-way.
  constexpr int kWidth = 36, kRows = 11, kMargin = 14;
  std::vector<std::string> grid(kRows, std::string(kWidth + 1, ' '));
  for (int row = 1; row < kRows - 1; ++row) {
    grid[row][0] = grid[row][kWidth] = '|';
    int c = 2 + (row - 1) * (kWidth - 4) / (kRows - 3);
    grid[row][c] = '\\';
    grid[row][kWidth - c] = grid[row][kWidth - c] == '\\' ? 'X' : '/';
  }
  grid[kRows - 2][0] = grid[kRows - 2][kWidth] = 'v';
  auto edge = [&](const std::string& label) {
    std::string line(kWidth + 1, '-');
    line.front() = 'A';
    std::size_t at = (line.size() - label.size()) / 2;
    line.replace(at - 1, label.size() + 2, " " + label + " ");
    return line;
  };
  grid[0] = edge("contrary " + mark(r.contraries_ok));
  grid[0].front() = 'A';
  grid[0].back() = 'E';
  grid[kRows - 1] = edge("subcontrary " + mark(r.subcontraries_ok));
  grid[kRows - 1].front() = 'I';
  grid[kRows - 1].back() = 'O';

  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  const int mid = kRows / 2;
  for (int row = 0; row < kRows; ++row) {
    std::string left, right;
    if (row == mid - 1) left = right = "subaltern";
    if (row == mid) {
      left = "A|-I " + mark(r.a_entails_i);
      right = "E|-O " + mark(r.e_entails_o);
    }
    std::string line = pad(left, kMargin) + grid[row] + "  " + right;
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << "\n";
  }
  out << "\n" << pad("", kMargin) << "diagonals: A-O contradictory "
      << mark(r.a_iff_not_o) << ", E-I contradictory " << mark(r.e_iff_not_i)
      << "\n\n";
  out << "square of opposition: " << (r.all_ok() ? "yes" : "no") << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

}  // namespace aieo
