#include "aieo/translate.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace aieo {

const char* sentence_form_name(SentenceForm f) {
  switch (f) {
    case SentenceForm::Every: return "Every";
    case SentenceForm::Some: return "Some";
    case SentenceForm::No: return "No";
    case SentenceForm::NotAll: return "NotAll";
    case SentenceForm::SomeNot: return "SomeNot";
  }
  return "?";
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_word(const std::string& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool copula(const std::string& w) {
  std::string l = lower(w);
  return l == "is" || l == "are";
}

const SemType& predicate_type() {
  static const SemType t = SemType::arrow(SemType::e(), SemType::t());
  return t;
}

std::string base_predicate(const std::string& word, const Lexicon& lex) {
  const Lexicon::Entry* e = lex.find(word);
  if (!e) throw Error(ErrorCode::UnknownWord, "unknown word '" + word + "'");
  if (!(e->type == predicate_type()))
    throw Error(ErrorCode::TypeMismatch, "'" + word + "' has type " +
                                             to_string(e->type) + ", not e->t");
  return lex.base_name(word);
}

}  // namespace

SentencePattern match_sentence(std::string_view sentence) {
  std::string text(sentence);
  while (!text.empty() && (std::isspace(static_cast<unsigned char>(text.back())) ||
                           text.back() == '.' || text.back() == '!'))
    text.pop_back();
  std::istringstream in(text);
  std::vector<std::string> w;
  for (std::string tok; in >> tok;) w.push_back(tok);
  auto fail = [&]() -> SentencePattern {
    throw Error(ErrorCode::UnrecognizedPattern,
                "not an A/E/I/O sentence: '" + std::string(sentence) + "'");
  };
  if (std::any_of(w.begin(), w.end(), [](const std::string& s) { return !is_word(s); }))
    return fail();
  std::vector<std::string> l;
  for (const auto& s : w) l.push_back(lower(s));

  if (w.size() == 4 && copula(w[2])) {
    if (l[0] == "every") return {SentenceForm::Every, w[1], w[3]};
    if (l[0] == "some") return {SentenceForm::Some, w[1], w[3]};
    if (l[0] == "no") return {SentenceForm::No, w[1], w[3]};
  }
  if (w.size() == 5 && l[0] == "not" && l[1] == "all" && copula(w[3]))
    return {SentenceForm::NotAll, w[2], w[4]};
  if (w.size() == 5 && l[0] == "some" && copula(w[2]) && l[3] == "not")
    return {SentenceForm::SomeNot, w[1], w[4]};
  return fail();
}

Formula translate(std::string_view sentence, TranslationMode mode,
                  const Lexicon& lex) {
  return translate(match_sentence(sentence), mode, lex);
}

Formula translate(const SentencePattern& s, TranslationMode mode,
                  const Lexicon& lex) {
  if (mode == TranslationMode::Epsilon) {
    const std::string subj = base_predicate(s.subject, lex);
    const std::string pred = base_predicate(s.predicate, lex);
    const Formula body = Formula::pred(subj, {Term::variable("x")});
    const Term eps = Term::epsilon("x", body);
    const Term tau = Term::tau("x", body);
    switch (s.form) {
      case SentenceForm::Every: return Formula::pred(pred, {tau});
      case SentenceForm::Some: return Formula::pred(pred, {eps});
      case SentenceForm::No: return Formula::negation(Formula::pred(pred, {eps}));
      case SentenceForm::NotAll:
      case SentenceForm::SomeNot:
        return Formula::negation(Formula::pred(pred, {tau}));
    }
  }

  base_predicate(s.subject, lex);
  base_predicate(s.predicate, lex);
  LambdaTerm noun = lex.term(s.subject);
  LambdaTerm verb = lex.term(s.predicate);
  auto quant = [&](const char* q, const LambdaTerm& restriction, const LambdaTerm& scope) {
    return LambdaTerm::app(LambdaTerm::app(lex.term(q), restriction), scope);
  };
  LambdaTerm t = noun;
  switch (s.form) {
    case SentenceForm::Every: t = quant("every", noun, verb); break;
    case SentenceForm::Some: t = quant("some", noun, verb); break;
    case SentenceForm::No: t = quant("no", noun, verb); break;
    case SentenceForm::NotAll:
      t = LambdaTerm::app(lex.term("not"), quant("every", noun, verb));
      break;
    case SentenceForm::SomeNot: {
      LambdaTerm x = LambdaTerm::var("x", SemType::e());
      LambdaTerm negated = LambdaTerm::abs(
          "x", SemType::e(),
          LambdaTerm::app(lex.term("not"), LambdaTerm::app(verb, x)));
      t = quant("some", noun, negated);
      break;
    }
  }
  return reify(beta_normalize(t));
}

}  // namespace aieo
