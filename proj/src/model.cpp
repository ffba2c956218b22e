#include "aieo/model.hpp"

#include <bit>
#include <limits>

#include "aieo/error.hpp"

namespace aieo {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

void check_element(int size, Element e, const std::string& what) {
  if (e < 1 || e > size)
    throw Error(ErrorCode::InvalidModel,
                what + ": element " + std::to_string(e) +
                    " outside domain 1.." + std::to_string(size));
}

}  // namespace

std::vector<Element> members(Subset s) {
  std::vector<Element> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1u) out.push_back(i + 1);
  return out;
}

Subset subset_of(const std::vector<Element>& elements) {
  Subset s = 0;
  for (Element e : elements) {
    if (e < 1 || e > kMaxDomainSize)
      throw Error(ErrorCode::InvalidModel,
                  "element " + std::to_string(e) + " out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// ChoiceModel

ChoiceModel::ChoiceModel(int size) : size_(size) {
  if (size < 1 || size > kMaxDomainSize)
    throw Error(ErrorCode::InvalidModel,
                "domain size must be in 1.." + std::to_string(kMaxDomainSize));
  choice_.resize(std::size_t{1} << size);
  choice_[0] = 1;
  for (Subset s = 1; s < choice_.size(); ++s)
    choice_[s] = std::countr_zero(s) + 1;
}

std::size_t ChoiceModel::tuple_index(const std::vector<Element>& args) const {
  std::size_t index = 0, scale = 1;
  for (Element a : args) {
    check_element(size_, a, "argument");
    index += static_cast<std::size_t>(a - 1) * scale;
    scale *= static_cast<std::size_t>(size_);
  }
  return index;
}

void ChoiceModel::set_predicate(const std::string& name, std::size_t arity,
                                const std::vector<std::vector<Element>>& tuples) {
  Relation rel{arity, std::vector<char>(saturating_pow(size_, arity), 0)};
  for (const auto& t : tuples) {
    if (t.size() != arity)
      throw Error(ErrorCode::InvalidModel,
                  "tuple of wrong arity for predicate '" + name + "'");
    rel.table[tuple_index(t)] = 1;
  }
  predicates_[name] = std::move(rel);
}

void ChoiceModel::set_predicate(const std::string& name, Subset extension) {
  if (extension & ~full_set())
    throw Error(ErrorCode::InvalidModel,
                "extension of '" + name + "' exceeds the domain");
  Relation rel{1, std::vector<char>(size_, 0)};
  for (Element e : members(extension)) rel.table[e - 1] = 1;
  predicates_[name] = std::move(rel);
}

void ChoiceModel::set_constant(const std::string& name, Element e) {
  check_element(size_, e, "constant '" + name + "'");
  constants_[name] = e;
}

void ChoiceModel::set_function(const std::string& name, std::size_t arity,
                               std::vector<Element> table) {
  if (table.size() != saturating_pow(size_, arity))
    throw Error(ErrorCode::InvalidModel,
                "function '" + name + "' is not total over the domain");
  for (Element e : table) check_element(size_, e, "function '" + name + "'");
  functions_[name] = Function{arity, std::move(table)};
}

void ChoiceModel::set_choice(Subset s, Element e) {
  if (s == 0 || (s & ~full_set()))
    throw Error(ErrorCode::InvalidModel, "choice on a non-subset");
  if (e < 1 || e > size_ || !(s & (Subset{1} << (e - 1))))
    throw Error(ErrorCode::InvalidModel,
                "choice must pick a member of the subset");
  choice_[s] = e;
}

void ChoiceModel::set_default(Element e) {
  check_element(size_, e, "default");
  choice_[0] = e;
}

bool ChoiceModel::has_predicate(const std::string& name) const {
  return predicates_.count(name) > 0;
}

std::size_t ChoiceModel::predicate_arity(const std::string& name) const {
  auto r = find_relation(name);
  if (!r) throw Error(ErrorCode::InvalidModel, "no predicate '" + name + "'");
  return r->arity;
}

const ChoiceModel::Relation* ChoiceModel::find_relation(
    const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const ChoiceModel::Function* ChoiceModel::find_function(
    const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

std::vector<std::vector<Element>> ChoiceModel::extension(
    const std::string& name) const {
  auto r = find_relation(name);
  if (!r) throw Error(ErrorCode::InvalidModel, "no predicate '" + name + "'");
  std::vector<std::vector<Element>> out;
  for (std::size_t i = 0; i < r->table.size(); ++i) {
    if (!r->table[i]) continue;
    std::vector<Element> tuple;
    std::size_t rest = i;
    for (std::size_t k = 0; k < r->arity; ++k) {
      tuple.push_back(static_cast<Element>(rest % size_) + 1);
      rest /= size_;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

bool ChoiceModel::holds(const std::string& name,
                        const std::vector<Element>& args) const {
  auto r = find_relation(name);
  if (!r) throw Error(ErrorCode::InvalidModel, "no predicate '" + name + "'");
  if (r->arity != args.size())
    throw Error(ErrorCode::Arity, "predicate '" + name + "' arity mismatch");
  return r->table[tuple_index(args)] != 0;
}

Element ChoiceModel::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end())
    throw Error(ErrorCode::InvalidModel, "no constant '" + name + "'");
  return it->second;
}

std::vector<std::string> ChoiceModel::function_names() const {
  std::vector<std::string> out;
  for (const auto& [name, f] : functions_) out.push_back(name);
  return out;
}

std::vector<std::string> ChoiceModel::predicate_names() const {
  std::vector<std::string> out;
  for (const auto& [name, r] : predicates_) out.push_back(name);
  return out;
}

std::size_t ChoiceModel::function_arity(const std::string& name) const {
  auto f = find_function(name);
  if (!f) throw Error(ErrorCode::InvalidModel, "no function '" + name + "'");
  return f->arity;
}

const std::vector<Element>& ChoiceModel::function_table(
    const std::string& name) const {
  auto f = find_function(name);
  if (!f) throw Error(ErrorCode::InvalidModel, "no function '" + name + "'");
  return f->table;
}

Element ChoiceModel::apply(const std::string& name,
                           const std::vector<Element>& args) const {
  auto f = find_function(name);
  if (!f) throw Error(ErrorCode::InvalidModel, "no function '" + name + "'");
  if (f->arity != args.size())
    throw Error(ErrorCode::Arity, "function '" + name + "' arity mismatch");
  return f->table[tuple_index(args)];
}

void ChoiceModel::validate() const {
  if (size_ < 1) throw Error(ErrorCode::InvalidModel, "empty domain");
  check_element(size_, choice_[0], "default");
  for (Subset s = 1; s < choice_.size(); ++s) {
    Element e = choice_[s];
    if (e < 1 || e > size_ || !(s & (Subset{1} << (e - 1))))
      throw Error(ErrorCode::InvalidModel, "choice function leaves its subset");
  }
  for (const auto& [name, r] : predicates_)
    if (r.table.size() != saturating_pow(size_, r.arity))
      throw Error(ErrorCode::InvalidModel, "predicate '" + name + "' not total");
  for (const auto& [name, f] : functions_) {
    if (f.table.size() != saturating_pow(size_, f.arity))
      throw Error(ErrorCode::InvalidModel, "function '" + name + "' not total");
    for (Element e : f.table) check_element(size_, e, "function '" + name + "'");
  }
  for (const auto& [name, e] : constants_)
    check_element(size_, e, "constant '" + name + "'");
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  explicit Evaluator(const ChoiceModel& m) : m_(m) {}

  void bind(const std::string& name, Element e) { env_.push_back({&name, e}); }

  Element term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        return lookup(t.name());
      case Term::Kind::Constant:
        return m_.constant(t.name());
      case Term::Kind::FunApp: {
        const auto* f = m_.find_function(t.name());
        if (!f)
          throw Error(ErrorCode::InvalidModel,
                      "no interpretation for function '" + t.name() + "'");
        if (f->arity != t.args().size())
          throw Error(ErrorCode::Arity,
                      "function '" + t.name() + "' arity mismatch");
        return f->table[index(t.args())];
      }
      case Term::Kind::Epsilon:
        return m_.choose(extension(t.name(), t.body(), true));
      case Term::Kind::Tau:
        return m_.choose(extension(t.name(), t.body(), false));
    }
    return 0;
  }

  bool formula(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Pred: {
        const auto* r = m_.find_relation(f.name());
        if (!r)
          throw Error(ErrorCode::InvalidModel,
                      "no interpretation for predicate '" + f.name() + "'");
        if (r->arity != f.terms().size())
          throw Error(ErrorCode::Arity,
                      "predicate '" + f.name() + "' arity mismatch");
        return r->table[index(f.terms())] != 0;
      }
      case Formula::Kind::Equals:
        return term(f.terms()[0]) == term(f.terms()[1]);
      case Formula::Kind::Not:
        return !formula(f.operand());
      case Formula::Kind::And:
        return formula(f.left()) && formula(f.right());
      case Formula::Kind::Or:
        return formula(f.left()) || formula(f.right());
      case Formula::Kind::Implies:
        return !formula(f.left()) || formula(f.right());
      case Formula::Kind::Exists:
        return extension(f.name(), f.body(), true) != 0;
      case Formula::Kind::Forall:
        return extension(f.name(), f.body(), false) == 0;
      case Formula::Kind::Falsum:
        return false;
      case Formula::Kind::Verum:
        return true;
    }
    return false;
  }

 private:
  Element lookup(const std::string& name) const {
    for (std::size_t i = env_.size(); i-- > 0;)
      if (*env_[i].first == name) return env_[i].second;
    throw Error(ErrorCode::UnboundVariable,
                "variable '" + name + "' is not assigned");
  }

  std::size_t index(const std::vector<Term>& args) {
    std::size_t idx = 0, scale = 1;
    for (const auto& a : args) {
      idx += static_cast<std::size_t>(term(a) - 1) * scale;
      scale *= static_cast<std::size_t>(m_.size());
    }
    return idx;
  }

  // {d : body[d/var] == polarity}
  Subset extension(const std::string& var, const Formula& body, bool polarity) {
    Subset s = 0;
    for (Element d = 1; d <= m_.size(); ++d) {
      env_.push_back({&var, d});
      bool v = formula(body);
      env_.pop_back();
      if (v == polarity) s |= Subset{1} << (d - 1);
    }
    return s;
  }

  const ChoiceModel& m_;
  std::vector<std::pair<const std::string*, Element>> env_;
};

}  // namespace

Element eval_term(const ChoiceModel& m, const Assignment& env, const Term& t) {
  Evaluator ev(m);
  for (const auto& [name, e] : env) ev.bind(name, e);
  return ev.term(t);
}

bool eval_formula(const ChoiceModel& m, const Assignment& env,
                  const Formula& f) {
  Evaluator ev(m);
  for (const auto& [name, e] : env) ev.bind(name, e);
  return ev.formula(f);
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t ModelStream::count(const Signature& sig, int n) {
  std::uint64_t c = 1;
  for (const auto& [name, arity] : sig.predicates)
    c = saturating_mul(c, saturating_pow(2, saturating_pow(n, arity)));
  c = saturating_mul(c, saturating_pow(n, sig.constants.size()));
  for (const auto& [name, arity] : sig.functions)
    c = saturating_mul(c, saturating_pow(n, saturating_pow(n, arity)));
  for (Subset s = 1; s < (Subset{1} << n); ++s)
    c = saturating_mul(c, static_cast<std::uint64_t>(std::popcount(s)));
  return saturating_mul(c, static_cast<std::uint64_t>(n));
}

ModelStream::ModelStream(const Signature& sig, int max_size,
                         std::uint64_t budget)
    : sig_(sig), max_size_(max_size) {
  if (max_size < 1)
    throw Error(ErrorCode::InvalidArgument,
                "model size bound must be at least 1 (domains are nonempty)");
  if (max_size > kMaxDomainSize)
    throw Error(ErrorCode::InvalidArgument, "model size bound too large");
  if (!sig.functions.empty() && max_size > 2)
    throw Error(ErrorCode::InvalidArgument,
                "function symbols are only enumerated up to size 2");
  for (int n = 1; n <= max_size; ++n) {
    std::uint64_t c = count(sig, n);
    total_ = total_ > std::numeric_limits<std::uint64_t>::max() - c
                 ? std::numeric_limits<std::uint64_t>::max()
                 : total_ + c;
  }
  if (total_ > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "enumeration of " + std::to_string(total_) +
                    " models exceeds the budget of " + std::to_string(budget));
  size_ = 1;
  start_stratum();
}

void ModelStream::start_stratum() {
  const auto n = static_cast<std::uint64_t>(size_);
  digits_.clear();
  radix_.clear();
  choice_subsets_.clear();
  for (const auto& [name, arity] : sig_.predicates)
    radix_.push_back(saturating_pow(2, saturating_pow(n, arity)));
  for (std::size_t i = 0; i < sig_.constants.size(); ++i) radix_.push_back(n);
  for (const auto& [name, arity] : sig_.functions)
    for (std::uint64_t i = 0; i < saturating_pow(n, arity); ++i)
      radix_.push_back(n);
  for (Subset s = 1; s < (Subset{1} << size_); ++s) {
    if (std::popcount(s) < 2) continue;
    choice_subsets_.push_back(s);
    radix_.push_back(static_cast<std::uint64_t>(std::popcount(s)));
  }
  radix_.push_back(n);  // default element
  digits_.assign(radix_.size(), 0);
  fresh_stratum_ = true;
}

ChoiceModel ModelStream::build() const {
  ChoiceModel m(size_);
  std::size_t d = 0;
  for (const auto& [name, arity] : sig_.predicates) {
    std::uint64_t bits = digits_[d++];
    std::size_t cells = saturating_pow(size_, arity);
    std::vector<std::vector<Element>> tuples;
    for (std::size_t i = 0; i < cells; ++i) {
      if (!((bits >> i) & 1u)) continue;
      std::vector<Element> tuple;
      std::size_t rest = i;
      for (std::size_t k = 0; k < arity; ++k) {
        tuple.push_back(static_cast<Element>(rest % size_) + 1);
        rest /= size_;
      }
      tuples.push_back(std::move(tuple));
    }
    m.set_predicate(name, arity, tuples);
  }
  for (const auto& name : sig_.constants)
    m.set_constant(name, static_cast<Element>(digits_[d++]) + 1);
  for (const auto& [name, arity] : sig_.functions) {
    std::vector<Element> table;
    for (std::uint64_t i = 0; i < saturating_pow(size_, arity); ++i)
      table.push_back(static_cast<Element>(digits_[d++]) + 1);
    m.set_function(name, arity, std::move(table));
  }
  for (Subset s : choice_subsets_)
    m.set_choice(s, members(s)[digits_[d++]]);
  m.set_default(static_cast<Element>(digits_[d++]) + 1);
  return m;
}

std::optional<ChoiceModel> ModelStream::next() {
  if (exhausted_) return std::nullopt;
  if (fresh_stratum_) {
    fresh_stratum_ = false;
    return build();
  }
  // Predicates vary fastest and the default slowest, so the first models of
  // each size use default 1 and the least-member choice function.
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (++digits_[i] < radix_[i]) return build();
    digits_[i] = 0;
  }
  if (++size_ > max_size_) {
    exhausted_ = true;
    return std::nullopt;
  }
  start_stratum();
  fresh_stratum_ = false;
  return build();
}

std::vector<ChoiceModel> enumerate_models(const Signature& sig, int max_size,
                                          std::uint64_t budget) {
  ModelStream stream(sig, max_size, budget);
  std::vector<ChoiceModel> out;
  out.reserve(stream.total());
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

// ---------------------------------------------------------------------------
// Entailment

std::vector<Assignment> all_assignments(const std::set<std::string>& vars,
                                        int n) {
  std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<Assignment> out;
  std::vector<Element> values(names.size(), 1);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < names.size(); ++i) a[names[i]] = values[i];
    out.push_back(std::move(a));
    std::size_t i = names.size();
    while (i > 0) {
      --i;
      if (++values[i] <= n) break;
      values[i] = 1;
      if (i == 0) return out;
    }
    if (names.empty()) return out;
  }
}

EntailmentVerdict entails(const std::vector<Formula>& hypotheses,
                          const Formula& goal, const Signature& sig, int bound,
                          std::uint64_t budget) {
  std::vector<Formula> all = hypotheses;
  all.push_back(goal);
  Signature full = sig;
  full.merge(signature_of(all));

  std::set<std::string> vars;
  for (const auto& f : all) {
    auto fv = free_vars(f);
    vars.insert(fv.begin(), fv.end());
  }

  ModelStream stream(full, bound, budget);
  while (auto m = stream.next()) {
    for (const auto& a : all_assignments(vars, m->size())) {
      bool premises = true;
      for (const auto& h : hypotheses) {
        if (!eval_formula(*m, a, h)) {
          premises = false;
          break;
        }
      }
      if (premises && !eval_formula(*m, a, goal))
        return EntailmentVerdict{false, bound, std::move(*m), a};
    }
  }
  return EntailmentVerdict{true, bound, std::nullopt, {}};
}

bool is_genuine_countermodel(const EntailmentVerdict& v,
                             const std::vector<Formula>& hypotheses,
                             const Formula& goal) {
  if (v.valid || !v.model) return false;
  for (const auto& h : hypotheses)
    if (!eval_formula(*v.model, v.assignment, h)) return false;
  return !eval_formula(*v.model, v.assignment, goal);
}

}  // namespace aieo
