#include "aieo/montague.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "aieo/text.hpp"

namespace aieo {

// ---------------------------------------------------------------------------
// Types

SemType SemType::e() { return SemType(Kind::E, nullptr, nullptr); }
SemType SemType::t() { return SemType(Kind::T, nullptr, nullptr); }
SemType SemType::arrow(SemType from, SemType to) {
  return SemType(Kind::Arrow, std::make_shared<const SemType>(std::move(from)),
                 std::make_shared<const SemType>(std::move(to)));
}

const SemType& SemType::from() const {
  if (kind_ != Kind::Arrow)
    throw Error(ErrorCode::TypeMismatch, "not a function type");
  return *from_;
}

const SemType& SemType::to() const {
  if (kind_ != Kind::Arrow)
    throw Error(ErrorCode::TypeMismatch, "not a function type");
  return *to_;
}

bool operator==(const SemType& a, const SemType& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SemType::Kind::Arrow) return true;
  return *a.from_ == *b.from_ && *a.to_ == *b.to_;
}

std::string to_string(const SemType& t) {
  switch (t.kind()) {
    case SemType::Kind::E: return "e";
    case SemType::Kind::T: return "t";
    case SemType::Kind::Arrow: {
      std::string from = to_string(t.from());
      if (t.from().kind() == SemType::Kind::Arrow) from = "(" + from + ")";
      return from + "->" + to_string(t.to());
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Lexing shared by types and lambda terms

namespace {

enum class LTok { Ident, Lambda, Colon, Dot, LParen, RParen, Arrow, End };

struct LToken {
  LTok kind;
  std::string text;
  std::size_t offset;
};

std::vector<LToken> lex(std::string_view s) {
  std::vector<LToken> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalnum(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_'))
        ++i;
      while (i < s.size() && s[i] == '\'') ++i;
      out.push_back({LTok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({LTok::Arrow, "->", start});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "\xE2\x86\x92") {  // →
      out.push_back({LTok::Arrow, "->", start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "\xCE\xBB") {  // λ
      out.push_back({LTok::Lambda, "\\", start});
      i += 2;
      continue;
    }
    LTok k;
    switch (c) {
      case '\\': k = LTok::Lambda; break;
      case ':': k = LTok::Colon; break;
      case '.': k = LTok::Dot; break;
      case '(': k = LTok::LParen; break;
      case ')': k = LTok::RParen; break;
      default:
        throw Error(ErrorCode::Parse, "unexpected character '" +
                                          std::string(1, s[i]) + "' at " +
                                          std::to_string(i));
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({LTok::End, "", s.size()});
  return out;
}

class LParser {
 public:
  LParser(std::string_view text, const Lexicon* lex)
      : toks_(aieo::lex(text)), lex_(lex) {}

  SemType type() {
    SemType from = base_type();
    if (accept(LTok::Arrow)) return SemType::arrow(from, type());
    return from;
  }

  LambdaTerm term() {
    if (accept(LTok::Lambda)) {
      std::string var = expect(LTok::Ident, "variable").text;
      expect(LTok::Colon, "':'");
      SemType ty = type();
      expect(LTok::Dot, "'.'");
      scope_.emplace_back(var, ty);
      LambdaTerm body = term();
      scope_.pop_back();
      return LambdaTerm::abs(var, ty, body);
    }
    LambdaTerm head = atom();
    while (peek().kind == LTok::Ident || peek().kind == LTok::LParen ||
           peek().kind == LTok::Lambda) {
      if (peek().kind == LTok::Lambda) {
        head = LambdaTerm::app(head, term());
        break;
      }
      head = LambdaTerm::app(head, atom());
    }
    return head;
  }

  void finish() {
    if (peek().kind != LTok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const LToken& peek() const { return toks_[pos_]; }
  bool accept(LTok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const LToken& expect(LTok k, const char* what) {
    if (peek().kind != k)
      fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse,
                msg + " at offset " + std::to_string(peek().offset));
  }

  SemType base_type() {
    if (accept(LTok::LParen)) {
      SemType t = type();
      expect(LTok::RParen, "')'");
      return t;
    }
    const LToken& tok = expect(LTok::Ident, "type");
    if (tok.text == "e") return SemType::e();
    if (tok.text == "t") return SemType::t();
    throw Error(ErrorCode::Parse, "unknown base type '" + tok.text + "'");
  }

  LambdaTerm atom() {
    if (accept(LTok::LParen)) {
      LambdaTerm t = term();
      expect(LTok::RParen, "')'");
      return t;
    }
    std::string name = expect(LTok::Ident, "term").text;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->first == name) return LambdaTerm::var(name, it->second);
    if (!lex_) throw Error(ErrorCode::UnknownWord, "unknown word '" + name + "'");
    return lex_->term(name);
  }

  std::vector<LToken> toks_;
  std::size_t pos_ = 0;
  const Lexicon* lex_;
  std::vector<std::pair<std::string, SemType>> scope_;
};

}  // namespace

SemType parse_type(std::string_view text) {
  LParser p(text, nullptr);
  SemType t = p.type();
  p.finish();
  return t;
}

LambdaTerm parse_lambda(std::string_view text, const Lexicon& lex) {
  LParser p(text, &lex);
  LambdaTerm t = p.term();
  p.finish();
  return t;
}

// ---------------------------------------------------------------------------
// Terms

struct LambdaNode {
  LambdaTerm::Kind kind;
  std::string name;
  std::optional<SemType> type;
  std::optional<LambdaTerm> left;
  std::optional<LambdaTerm> right;
};

LambdaTerm LambdaTerm::var(std::string name, SemType type) {
  return LambdaTerm(std::make_shared<const LambdaNode>(
      LambdaNode{Kind::Var, std::move(name), std::move(type), {}, {}}));
}

LambdaTerm LambdaTerm::constant(std::string name, SemType type) {
  return LambdaTerm(std::make_shared<const LambdaNode>(
      LambdaNode{Kind::Const, std::move(name), std::move(type), {}, {}}));
}

LambdaTerm LambdaTerm::abs(std::string var, SemType var_type, LambdaTerm body) {
  return LambdaTerm(std::make_shared<const LambdaNode>(LambdaNode{
      Kind::Abs, std::move(var), std::move(var_type), std::move(body), {}}));
}

LambdaTerm LambdaTerm::app(LambdaTerm fun, LambdaTerm arg) {
  return LambdaTerm(std::make_shared<const LambdaNode>(
      LambdaNode{Kind::App, "", {}, std::move(fun), std::move(arg)}));
}

LambdaTerm::Kind LambdaTerm::kind() const { return node_->kind; }
const std::string& LambdaTerm::name() const { return node_->name; }
const SemType& LambdaTerm::type() const {
  if (!node_->type) throw Error(ErrorCode::InvalidArgument, "application has no annotation");
  return *node_->type;
}
const LambdaTerm& LambdaTerm::body() const {
  if (node_->kind != Kind::Abs) throw Error(ErrorCode::InvalidArgument, "not an abstraction");
  return *node_->left;
}
const LambdaTerm& LambdaTerm::fun() const {
  if (node_->kind != Kind::App) throw Error(ErrorCode::InvalidArgument, "not an application");
  return *node_->left;
}
const LambdaTerm& LambdaTerm::arg() const {
  if (node_->kind != Kind::App) throw Error(ErrorCode::InvalidArgument, "not an application");
  return *node_->right;
}

namespace {

using LK = LambdaTerm::Kind;

bool alpha_rec(const LambdaTerm& a, const LambdaTerm& b,
               std::vector<std::string>& sa, std::vector<std::string>& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case LK::Var: {
      // Compare binder depth; free variables compare by name.
      auto ia = std::find(sa.rbegin(), sa.rend(), a.name());
      auto ib = std::find(sb.rbegin(), sb.rend(), b.name());
      if ((ia == sa.rend()) != (ib == sb.rend())) return false;
      if (ia == sa.rend()) return a.name() == b.name() && a.type() == b.type();
      return (ia - sa.rbegin()) == (ib - sb.rbegin());
    }
    case LK::Const:
      return a.name() == b.name() && a.type() == b.type();
    case LK::Abs: {
      if (!(a.type() == b.type())) return false;
      sa.push_back(a.name());
      sb.push_back(b.name());
      bool ok = alpha_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return ok;
    }
    case LK::App:
      return alpha_rec(a.fun(), b.fun(), sa, sb) &&
             alpha_rec(a.arg(), b.arg(), sa, sb);
  }
  return false;
}

void free_lvars(const LambdaTerm& t, std::set<std::string>& bound,
                std::set<std::string>& out) {
  switch (t.kind()) {
    case LK::Var:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case LK::Const:
      return;
    case LK::Abs: {
      bool fresh = bound.insert(t.name()).second;
      free_lvars(t.body(), bound, out);
      if (fresh) bound.erase(t.name());
      return;
    }
    case LK::App:
      free_lvars(t.fun(), bound, out);
      free_lvars(t.arg(), bound, out);
      return;
  }
}

std::set<std::string> free_lvars(const LambdaTerm& t) {
  std::set<std::string> bound, out;
  free_lvars(t, bound, out);
  return out;
}

void all_names(const LambdaTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case LK::Var:
    case LK::Const:
      out.insert(t.name());
      return;
    case LK::Abs:
      out.insert(t.name());
      all_names(t.body(), out);
      return;
    case LK::App:
      all_names(t.fun(), out);
      all_names(t.arg(), out);
      return;
  }
}

LambdaTerm subst(const LambdaTerm& t, const std::string& x,
                 const LambdaTerm& s, const std::set<std::string>& fv_s) {
  switch (t.kind()) {
    case LK::Var:
      return t.name() == x ? s : t;
    case LK::Const:
      return t;
    case LK::App:
      return LambdaTerm::app(subst(t.fun(), x, s, fv_s),
                             subst(t.arg(), x, s, fv_s));
    case LK::Abs: {
      if (t.name() == x) return t;
      std::set<std::string> fv_body = free_lvars(t.body());
      if (!fv_body.count(x)) return t;
      if (!fv_s.count(t.name()))
        return LambdaTerm::abs(t.name(), t.type(), subst(t.body(), x, s, fv_s));
      std::set<std::string> avoid = fv_body;
      avoid.insert(fv_s.begin(), fv_s.end());
      avoid.insert(x);
      std::string y = fresh_name(t.name(), avoid);
      LambdaTerm renamed_var = LambdaTerm::var(y, t.type());
      LambdaTerm body =
          subst(t.body(), t.name(), renamed_var, std::set<std::string>{y});
      return LambdaTerm::abs(y, t.type(), subst(body, x, s, fv_s));
    }
  }
  return t;
}

LambdaTerm subst(const LambdaTerm& t, const std::string& x, const LambdaTerm& s) {
  return subst(t, x, s, free_lvars(s));
}

SemType type_of(const LambdaTerm& t,
                std::vector<std::pair<std::string, SemType>>& env) {
  switch (t.kind()) {
    case LK::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first != t.name()) continue;
        if (!(it->second == t.type()))
          throw Error(ErrorCode::TypeMismatch,
                      "variable " + t.name() + " annotated " +
                          to_string(t.type()) + " but bound at " +
                          to_string(it->second));
        return t.type();
      }
      throw Error(ErrorCode::UnboundVariable, "unbound variable " + t.name());
    case LK::Const:
      return t.type();
    case LK::Abs: {
      env.emplace_back(t.name(), t.type());
      SemType body = type_of(t.body(), env);
      env.pop_back();
      return SemType::arrow(t.type(), body);
    }
    case LK::App: {
      SemType f = type_of(t.fun(), env);
      SemType a = type_of(t.arg(), env);
      if (f.kind() != SemType::Kind::Arrow || !(f.from() == a))
        throw Error(ErrorCode::TypeMismatch,
                    "cannot apply " + to_string(t.fun()) + " : " +
                        to_string(f) + " to " + to_string(t.arg()) + " : " +
                        to_string(a));
      return f.to();
    }
  }
  throw Error(ErrorCode::TypeMismatch, "unknown term");
}

class Reducer {
 public:
  explicit Reducer(std::size_t fuel) : fuel_(fuel) {}

  LambdaTerm whnf(const LambdaTerm& t) {
    if (t.kind() != LK::App) return t;
    LambdaTerm f = whnf(t.fun());
    if (f.kind() == LK::Abs) {
      spend();
      return whnf(subst(f.body(), f.name(), t.arg()));
    }
    return LambdaTerm::app(f, t.arg());
  }

  LambdaTerm normalize(const LambdaTerm& t) {
    LambdaTerm h = whnf(t);
    switch (h.kind()) {
      case LK::Abs:
        return LambdaTerm::abs(h.name(), h.type(), normalize(h.body()));
      case LK::App:
        return LambdaTerm::app(normalize(h.fun()), normalize(h.arg()));
      default:
        return h;
    }
  }

 private:
  void spend() {
    if (fuel_ == 0)
      throw Error(ErrorCode::NormalizationFuel, "normalization fuel exhausted");
    --fuel_;
  }
  std::size_t fuel_;
};

}  // namespace

bool alpha_eq(const LambdaTerm& a, const LambdaTerm& b) {
  std::vector<std::string> sa, sb;
  return alpha_rec(a, b, sa, sb);
}

std::string to_string(const LambdaTerm& t) {
  switch (t.kind()) {
    case LK::Var:
    case LK::Const:
      return t.name();
    case LK::Abs:
      return "\\" + t.name() + ":" + to_string(t.type()) + ". " +
             to_string(t.body());
    case LK::App: {
      std::string f = to_string(t.fun());
      if (t.fun().kind() == LK::Abs) f = "(" + f + ")";
      std::string a = to_string(t.arg());
      if (t.arg().kind() == LK::Abs || t.arg().kind() == LK::App)
        a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return "?";
}

SemType typecheck(const LambdaTerm& t) {
  std::vector<std::pair<std::string, SemType>> env;
  return type_of(t, env);
}

LambdaTerm beta_normalize(const LambdaTerm& t, std::size_t fuel) {
  return Reducer(fuel).normalize(t);
}

// ---------------------------------------------------------------------------
// Reification

namespace {

class Reifier {
 public:
  explicit Reifier(const LambdaTerm& root) { all_names(root, names_); }

  Formula formula(const LambdaTerm& t) {
    auto [head, args] = spine(t);
    if (head.kind() != LK::Const)
      fail(t, "head is not a constant");
    const std::string& c = head.name();
    if ((c == "exists" || c == "forall") && args.size() == 1) {
      auto [x, body] = binder(args[0]);
      return c == "exists" ? Formula::exists(x, body) : Formula::forall(x, body);
    }
    if ((c == "and" || c == "or" || c == "implies") && args.size() == 2) {
      Formula a = formula(args[0]);
      Formula b = formula(args[1]);
      if (c == "and") return Formula::conjunction(a, b);
      if (c == "or") return Formula::disjunction(a, b);
      return Formula::implication(a, b);
    }
    if (c == "not" && args.size() == 1) return Formula::negation(formula(args[0]));
    if (is_logical(c)) fail(t, "logical constant " + c + " is not fully applied");
    if (!first_order(head.type(), args.size(), SemType::t()))
      fail(t, "constant " + c + " : " + to_string(head.type()) +
                  " is not a first-order predicate");
    std::vector<Term> terms;
    for (const auto& a : args) terms.push_back(term(a));
    return Formula::pred(c, std::move(terms));
  }

  Term term(const LambdaTerm& t) {
    if (t.kind() == LK::Var) {
      if (!(t.type() == SemType::e()))
        fail(t, "variable " + t.name() + " is not of type e");
      return Term::variable(t.name());
    }
    auto [head, args] = spine(t);
    if (head.kind() != LK::Const) fail(t, "head is not a constant");
    const std::string& c = head.name();
    if ((c == "eps" || c == "tau") && args.size() == 1) {
      auto [x, body] = binder(args[0]);
      return c == "eps" ? Term::epsilon(x, body) : Term::tau(x, body);
    }
    if (is_logical(c)) fail(t, "logical constant " + c + " in term position");
    if (!first_order(head.type(), args.size(), SemType::e()))
      fail(t, "constant " + c + " : " + to_string(head.type()) +
                  " is not a first-order function");
    if (args.empty()) return Term::constant(c);
    std::vector<Term> terms;
    for (const auto& a : args) terms.push_back(term(a));
    return Term::fun_app(c, std::move(terms));
  }

 private:
  [[noreturn]] static void fail(const LambdaTerm& t, const std::string& why) {
    throw Error(ErrorCode::NotFirstOrder, to_string(t) + ": " + why);
  }

  static bool is_logical(const std::string& c) {
    return c == "exists" || c == "forall" || c == "and" || c == "or" ||
           c == "implies" || c == "not" || c == "eps" || c == "tau";
  }

  // e -> ... -> e -> result with exactly `n` arguments.
  static bool first_order(SemType ty, std::size_t n, const SemType& result) {
    for (std::size_t i = 0; i < n; ++i) {
      if (ty.kind() != SemType::Kind::Arrow || !(ty.from() == SemType::e()))
        return false;
      SemType next = ty.to();
      ty = next;
    }
    return ty == result;
  }

  static std::pair<LambdaTerm, std::vector<LambdaTerm>> spine(LambdaTerm t) {
    std::vector<LambdaTerm> args;
    while (t.kind() == LK::App) {
      args.push_back(t.arg());
      LambdaTerm f = t.fun();
      t = f;
    }
    std::reverse(args.begin(), args.end());
    return {t, args};
  }

  // An e->t argument of a binder constant; eta-expanded when not an
  // abstraction.
  std::pair<std::string, Formula> binder(const LambdaTerm& pred) {
    if (pred.kind() == LK::Abs) {
      if (!(pred.type() == SemType::e()))
        fail(pred, "binder over a non-entity variable");
      return {pred.name(), formula(pred.body())};
    }
    std::string x = fresh_name("x", names_);
    names_.insert(x);
    LambdaTerm applied = LambdaTerm::app(pred, LambdaTerm::var(x, SemType::e()));
    return {x, formula(applied)};
  }

  std::set<std::string> names_;
};

}  // namespace

Formula reify(const LambdaTerm& t) {
  SemType ty = typecheck(t);
  if (!(ty == SemType::t()))
    throw Error(ErrorCode::NotFirstOrder,
                to_string(t) + " has type " + to_string(ty) + ", not t");
  return Reifier(t).formula(t);
}

// ---------------------------------------------------------------------------
// Lexicon

const char* Lexicon::builtin_text() {
  return R"(# logical constants
exists : (e->t)->t
forall : (e->t)->t
and : t->t->t
or : t->t->t
implies : t->t->t
not : t->t
eps : (e->t)->e
tau : (e->t)->e

# quantifier words
something : (e->t)->t = exists
everything : (e->t)->t = forall
some : (e->t)->(e->t)->t = \P:e->t. \Q:e->t. exists (\x:e. and (P x) (Q x))
every : (e->t)->(e->t)->t = \P:e->t. \Q:e->t. forall (\x:e. implies (P x) (Q x))
no : (e->t)->(e->t)->t = \P:e->t. \Q:e->t. not (exists (\x:e. and (P x) (Q x)))
a : (e->t)->(e->t)->t = some

# schematic predicates
S : e->t
P : e->t

# demo vocabulary
politician : e->t
politicians : e->t = politician
crook : e->t
crooks : e->t = crook
student : e->t
students : e->t = student
employee : e->t
employees : e->t = employee
hit : e->t
hits : e->t = hit
goat : e->t
goats : e->t = goat
keith : e
composed : e->e->t
)";
}

Lexicon Lexicon::builtin() {
  Lexicon lex;
  lex.load(builtin_text());
  return lex;
}

void Lexicon::load(std::string_view text) {
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto is_blank = [](std::string_view s) {
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isspace(static_cast<unsigned char>(c));
      });
    };
    if (is_blank(line)) continue;
    auto where = [&] { return "lexicon line " + std::to_string(number) + ": "; };
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::Parse, where() + "expected 'word : type [= term]'");
    std::string word;
    for (char c : line.substr(0, colon))
      if (!std::isspace(static_cast<unsigned char>(c))) word += c;
    if (word.empty()) throw Error(ErrorCode::Parse, where() + "missing word");
    std::string_view rest = line.substr(colon + 1);
    auto eq = rest.find('=');
    try {
      SemType ty = parse_type(rest.substr(0, eq));
      if (eq == std::string_view::npos)
        add_constant(word, ty);
      else
        define(word, ty, parse_lambda(rest.substr(eq + 1), *this));
    } catch (const Error& e) {
      throw Error(e.code(), where() + e.what());
    }
  }
}

void Lexicon::add_constant(const std::string& word, SemType type) {
  entries_.insert_or_assign(word, Entry{word, std::move(type), std::nullopt});
}

void Lexicon::define(const std::string& word, SemType type,
                     LambdaTerm definition) {
  SemType actual = typecheck(definition);
  if (!(actual == type))
    throw Error(ErrorCode::TypeMismatch, "definition of " + word + " has type " +
                                             to_string(actual) + ", declared " +
                                             to_string(type));
  entries_.insert_or_assign(word, Entry{word, std::move(type), std::move(definition)});
}

const Lexicon::Entry* Lexicon::find(std::string_view word) const {
  auto it = entries_.find(std::string(word));
  if (it != entries_.end()) return &it->second;
  std::string lower;
  for (char c : word)
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  it = entries_.find(lower);
  return it == entries_.end() ? nullptr : &it->second;
}

LambdaTerm Lexicon::term(std::string_view word) const {
  const Entry* e = find(word);
  if (!e) throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(word) + "'");
  if (e->definition) return *e->definition;
  return LambdaTerm::constant(e->word, e->type);
}

std::string Lexicon::base_name(std::string_view word) const {
  const Entry* e = find(word);
  if (!e) throw Error(ErrorCode::UnknownWord, "unknown word '" + std::string(word) + "'");
  // Definitions are inlined at load time, so an alias is a primitive constant.
  if (e->definition && e->definition->kind() == LK::Const)
    return e->definition->name();
  return e->word;
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> out;
  for (const auto& [w, e] : entries_) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Inadequacy demos

InadequacyReport demonstrate_inadequacy(int which, const Lexicon& lex) {
  InadequacyReport r;
  r.which = which;
  auto lam = [&](const char* text) { return parse_lambda(text, lex); };
  switch (which) {
    case 1: {
      r.title = "quantifier asymmetry: P(eps S) vs S(eps P)";
      r.left = parse_formula("P(eps x. S(x))");
      r.right = parse_formula("S(eps x. P(x))");
      Signature sig;
      sig.predicates = {{"S", 1}, {"P", 1}};
      ModelStream models(sig, 2);
      while (auto m = models.next()) {
        bool l = eval_formula(*m, {}, *r.left);
        bool rv = eval_formula(*m, {}, *r.right);
        if (l != rv) {
          r.model = *m;
          r.left_value = l;
          r.right_value = rv;
          break;
        }
      }
      return r;
    }
    case 2: {
      r.title = "constituent mismatch: Keith composed some hits";
      r.syntax_tree = "(Keith (composed (some (hits))))";
      r.semantic_tree = "(some (hits)) (\xCE\xBBx. Keith composed x)";
      r.standard_translation =
          reify(beta_normalize(lam("some hits (\\x:e. composed x keith)")));
      r.epsilon_translation = reify(beta_normalize(lam("composed (eps hits) keith")));
      return r;
    }
    case 3: {
      r.title = "noun phrase type: A goat!";
      r.epsilon_term = beta_normalize(lam("eps goat"));
      r.epsilon_type = typecheck(*r.epsilon_term);
      r.standard_term = beta_normalize(lam("a goat"));
      r.standard_type = typecheck(*r.standard_term);
      // Read the term back through goat(_).
      Formula probe = reify(LambdaTerm::app(
          LambdaTerm::constant("goat", SemType::arrow(SemType::e(), SemType::t())),
          *r.epsilon_term));
      r.epsilon_reading = probe.terms()[0];
      return r;
    }
    default:
      throw Error(ErrorCode::InvalidArgument,
                  "inadequacy demo must be 1, 2 or 3, got " + std::to_string(which));
  }
}

}  // namespace aieo
