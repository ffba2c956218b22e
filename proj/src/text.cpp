#include "aieo/text.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "aieo/error.hpp"

namespace aieo {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  Comma,
  Dot,
  Tilde,
  Amp,
  Bar,
  Arrow,
  Eq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Unicode spellings accepted as input aliases. The printer never emits them.
struct Alias {
  std::string_view utf8;
  Tok kind;
  std::string_view text;
};

constexpr Alias kAliases[] = {
    {"\xC2\xAC", Tok::Tilde, "~"},          // ¬
    {"\xE2\x88\xA7", Tok::Amp, "&"},        // ∧
    {"\xE2\x88\xA8", Tok::Bar, "|"},        // ∨
    {"\xE2\x86\x92", Tok::Arrow, "->"},     // →
    {"\xE2\x87\x92", Tok::Arrow, "->"},     // ⇒
    {"\xCE\xB5", Tok::Ident, "eps"},        // ε
    {"\xCF\x84", Tok::Ident, "tau"},        // τ
    {"\xE2\x88\x83", Tok::Ident, "exists"}, // ∃
    {"\xE2\x88\x80", Tok::Ident, "forall"}, // ∀
    {"\xE2\x8A\xA5", Tok::Ident, "false"},  // ⊥
    {"\xE2\x8A\xA4", Tok::Ident, "true"},   // ⊤
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      while (i < s.size() && s[i] == '\'') ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
      case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
      case ',': out.push_back({Tok::Comma, ",", start}); ++i; continue;
      case '.': out.push_back({Tok::Dot, ".", start}); ++i; continue;
      case '~': out.push_back({Tok::Tilde, "~", start}); ++i; continue;
      case '!': out.push_back({Tok::Tilde, "~", start}); ++i; continue;
      case '&': out.push_back({Tok::Amp, "&", start}); ++i; continue;
      case '|': out.push_back({Tok::Bar, "|", start}); ++i; continue;
      case '=':
        if (s.substr(i, 2) == "=>") {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
        } else {
          out.push_back({Tok::Eq, "=", start});
          ++i;
        }
        continue;
      case '-':
        if (s.substr(i, 2) == "->") {
          out.push_back({Tok::Arrow, "->", start});
          i += 2;
          continue;
        }
        break;
      default:
        break;
    }
    bool matched = false;
    for (const auto& alias : kAliases) {
      if (s.substr(i, alias.utf8.size()) == alias.utf8) {
        out.push_back({alias.kind, std::string(alias.text), start});
        i += alias.utf8.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw Error(ErrorCode::Parse, "unexpected character '" +
                                        std::string(1, c) + "' at offset " +
                                        std::to_string(i));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "eps" || s == "tau" ||
         s == "true" || s == "false";
}

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig)
      : tokens_(lex(text)), sig_(sig) {}

  Formula formula_to_end() {
    Formula f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword(const char* kw) const {
    return at(Tok::Ident) && peek().text == kw;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorCode::Parse, "expected " + expected + " but found " +
                                      found + " at offset " +
                                      std::to_string(t.offset));
  }

  Token expect(Tok k, const char* what) {
    if (!at(k)) fail(what);
    return tokens_[pos_++];
  }

  std::string identifier() {
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail("identifier");
    return tokens_[pos_++].text;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (at(Tok::Arrow)) {
      ++pos_;
      return Formula::implication(lhs, formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at(Tok::Bar)) {
      ++pos_;
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (at(Tok::Amp)) {
      ++pos_;
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      ++pos_;
      return Formula::negation(unary());
    }
    if (at_keyword("exists") || at_keyword("forall")) {
      bool is_exists = peek().text == "exists";
      ++pos_;
      std::string var = identifier();
      expect(Tok::Dot, "'.'");
      bound_.push_back(var);
      Formula body = formula();
      bound_.pop_back();
      return is_exists ? Formula::exists(var, body) : Formula::forall(var, body);
    }
    return atom();
  }

  Formula equation_from(Term lhs) {
    expect(Tok::Eq, "'='");
    return Formula::equals(std::move(lhs), term());
  }

  Formula atom() {
    if (at_keyword("true")) {
      ++pos_;
      return Formula::verum();
    }
    if (at_keyword("false")) {
      ++pos_;
      return Formula::falsum();
    }
    if (at(Tok::LParen)) {
      // "(" term ")" "=" term, else "(" formula ")".
      std::size_t saved = pos_;
      std::size_t saved_scope = bound_.size();
      try {
        ++pos_;
        Term lhs = term();
        expect(Tok::RParen, "')'");
        if (at(Tok::Eq)) return equation_from(lhs);
      } catch (const Error&) {
        bound_.resize(saved_scope);
      }
      pos_ = saved + 1;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (at_keyword("eps") || at_keyword("tau")) return equation_from(term());
    if (!at(Tok::Ident) || is_keyword(peek().text)) fail("formula");
    if (peek(1).kind == Tok::LParen) {
      std::string symbol = identifier();
      std::vector<Term> args = arguments();
      if (at(Tok::Eq)) return equation_from(Term::fun_app(symbol, args));
      return Formula::pred(symbol, std::move(args));
    }
    return equation_from(term());
  }

  std::vector<Term> arguments() {
    expect(Tok::LParen, "'('");
    std::vector<Term> args;
    if (at(Tok::RParen)) {
      ++pos_;
      return args;
    }
    args.push_back(term());
    while (at(Tok::Comma)) {
      ++pos_;
      args.push_back(term());
    }
    expect(Tok::RParen, "')' or ','");
    return args;
  }

  Term term() {
    if (at_keyword("eps") || at_keyword("tau")) {
      bool is_eps = peek().text == "eps";
      ++pos_;
      std::string var = identifier();
      expect(Tok::Dot, "'.'");
      bound_.push_back(var);
      Formula body = formula();
      bound_.pop_back();
      return is_eps ? Term::epsilon(var, body) : Term::tau(var, body);
    }
    if (at(Tok::LParen)) {
      ++pos_;
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    std::string name = identifier();
    if (at(Tok::LParen)) return Term::fun_app(name, arguments());
    return resolve(name);
  }

  Term resolve(const std::string& name) const {
    for (const auto& b : bound_)
      if (b == name) return Term::variable(name);
    if (sig_ && sig_->constants.count(name)) return Term::constant(name);
    if (is_variable_name(name)) return Term::variable(name);
    return Term::constant(name);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
  std::vector<std::string> bound_;
};

// ---------------------------------------------------------------------------
// Printing

constexpr int kQuantifierPrec = 0;
constexpr int kImpliesPrec = 1;
constexpr int kOrPrec = 2;
constexpr int kAndPrec = 3;
constexpr int kNotPrec = 4;
constexpr int kAtomPrec = 5;

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      return kQuantifierPrec;
    case Formula::Kind::Implies:
      return kImpliesPrec;
    case Formula::Kind::Or:
      return kOrPrec;
    case Formula::Kind::And:
      return kAndPrec;
    case Formula::Kind::Not:
      return kNotPrec;
    default:
      return kAtomPrec;
  }
}

void print(const Formula& f, int context, std::string& out);

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant:
      out += t.name();
      return;
    case Term::Kind::FunApp:
      out += t.name();
      out += '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ", ";
        print(t.args()[i], out);
      }
      out += ')';
      return;
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      out += t.kind() == Term::Kind::Epsilon ? "eps " : "tau ";
      out += t.name();
      out += ". ";
      print(t.body(), kQuantifierPrec, out);
      return;
  }
}

void print_equation_side(const Term& t, std::string& out) {
  if (t.is_binder()) {
    out += '(';
    print(t, out);
    out += ')';
  } else {
    print(t, out);
  }
}

void print(const Formula& f, int context, std::string& out) {
  bool parens = precedence(f) < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Pred:
      out += f.name();
      out += '(';
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ", ";
        print(f.terms()[i], out);
      }
      out += ')';
      break;
    case Formula::Kind::Equals:
      print_equation_side(f.terms()[0], out);
      out += " = ";
      print_equation_side(f.terms()[1], out);
      break;
    case Formula::Kind::Not:
      out += '~';
      print(f.operand(), kNotPrec, out);
      break;
    case Formula::Kind::And:
      print(f.left(), kAndPrec, out);
      out += " & ";
      print(f.right(), kNotPrec, out);
      break;
    case Formula::Kind::Or:
      print(f.left(), kOrPrec, out);
      out += " | ";
      print(f.right(), kAndPrec, out);
      break;
    case Formula::Kind::Implies:
      print(f.left(), kOrPrec, out);
      out += " -> ";
      print(f.right(), kImpliesPrec, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "exists " : "forall ";
      out += f.name();
      out += ". ";
      print(f.body(), kQuantifierPrec, out);
      break;
    case Formula::Kind::Falsum:
      out += "false";
      break;
    case Formula::Kind::Verum:
      out += "true";
      break;
  }
  if (parens) out += ')';
}

void tree(const Formula& f, std::string& out);

void tree(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out += "(Var " + t.name() + ")";
      return;
    case Term::Kind::Constant:
      out += "(Const " + t.name() + ")";
      return;
    case Term::Kind::FunApp:
      out += "(Fun " + t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        tree(a, out);
      }
      out += ')';
      return;
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      out += t.kind() == Term::Kind::Epsilon ? "(Eps " : "(Tau ";
      out += t.name() + " ";
      tree(t.body(), out);
      out += ')';
      return;
  }
}

void tree(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Pred:
      out += "(Pred " + f.name();
      for (const auto& a : f.terms()) {
        out += ' ';
        tree(a, out);
      }
      out += ')';
      return;
    case Formula::Kind::Equals:
      out += "(Equals ";
      tree(f.terms()[0], out);
      out += ' ';
      tree(f.terms()[1], out);
      out += ')';
      return;
    case Formula::Kind::Not:
      out += "(Not ";
      tree(f.operand(), out);
      out += ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      out += f.kind() == Formula::Kind::And  ? "(And "
             : f.kind() == Formula::Kind::Or ? "(Or "
                                             : "(Implies ";
      tree(f.left(), out);
      out += ' ';
      tree(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "(Exists " : "(Forall ";
      out += f.name() + " ";
      tree(f.body(), out);
      out += ')';
      return;
    case Formula::Kind::Falsum:
      out += "(Falsum)";
      return;
    case Formula::Kind::Verum:
      out += "(Verum)";
      return;
  }
}

}  // namespace

// Symbols must be used consistently within one input.
Formula parse_formula(std::string_view text, const Signature* sig) {
  Formula f = Parser(text, sig).formula_to_end();
  signature_of(f);
  return f;
}

Term parse_term(std::string_view text, const Signature* sig) {
  Term t = Parser(text, sig).term_to_end();
  signature_of(t);
  return t;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, kQuantifierPrec, out);
  return out;
}

std::string to_tree(const Formula& f) {
  std::string out;
  tree(f, out);
  return out;
}

bool is_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'u' || name[0] > 'z') return false;
  std::size_t i = 1;
  while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i])))
    ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size();
}

}  // namespace aieo
