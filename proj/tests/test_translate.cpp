#include <doctest.h>

#include "aieo/error.hpp"
#include "aieo/model.hpp"
#include "aieo/text.hpp"
#include "aieo/translate.hpp"
#include "support.hpp"

using namespace aieo;

namespace {

Formula F(const char* s) { return parse_formula(s); }

const Lexicon& lex() {
  static const Lexicon l = Lexicon::builtin();
  return l;
}

Formula eps(const char* s) { return translate(s, TranslationMode::Epsilon, lex()); }
Formula mon(const char* s) { return translate(s, TranslationMode::Montague, lex()); }

ErrorCode code_of(const char* sentence) {
  try {
    eps(sentence);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for: " << sentence);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("sentence patterns") {
  CHECK(match_sentence("every S is P").form == SentenceForm::Every);
  CHECK(match_sentence("some S is P").form == SentenceForm::Some);
  CHECK(match_sentence("no S is P").form == SentenceForm::No);
  CHECK(match_sentence("not all S are P").form == SentenceForm::NotAll);
  CHECK(match_sentence("some S are not P").form == SentenceForm::SomeNot);

  const SentencePattern p = match_sentence("  Some politicians ARE crooks.");
  CHECK(p.form == SentenceForm::Some);
  CHECK(p.subject == "politicians");
  CHECK(p.predicate == "crooks");
  CHECK(match_sentence("EVERY S ARE P!").form == SentenceForm::Every);
  CHECK(std::string(sentence_form_name(SentenceForm::NotAll)) == "NotAll");

  for (const char* bad : {"most S are P", "every S is", "S is P", "every S is P and Q",
                          "all S are P", "some S are not P Q", "every S, is P", ""}) {
    CHECK_THROWS_WITH_AS(match_sentence(bad), doctest::Contains("A/E/I/O"), Error);
    CHECK(code_of(bad) == ErrorCode::UnrecognizedPattern);
  }
}

TEST_CASE("epsilon translations") {
  CHECK(alpha_eq(eps("every S is P"), F("P(tau x. S(x))")));
  CHECK(alpha_eq(eps("some S is P"), F("P(eps x. S(x))")));
  CHECK(alpha_eq(eps("no S is P"), F("~P(eps x. S(x))")));
  CHECK(alpha_eq(eps("not all S are P"), F("~P(tau x. S(x))")));
  CHECK(alpha_eq(eps("some S are not P"), F("~P(tau x. S(x))")));
  CHECK(to_string(eps("some politicians are crooks")) == "crook(eps x. politician(x))");
  CHECK(to_string(eps("Every student is employee")) == "employee(tau x. student(x))");
}

TEST_CASE("montague translations") {
  CHECK(alpha_eq(mon("every S is P"), F("forall x. S(x) -> P(x)")));
  CHECK(alpha_eq(mon("some S is P"), F("exists x. S(x) & P(x)")));
  CHECK(alpha_eq(mon("no S is P"), F("~(exists x. S(x) & P(x))")));
  CHECK(alpha_eq(mon("not all S are P"), F("~(forall x. S(x) -> P(x))")));
  CHECK(alpha_eq(mon("some S are not P"), F("exists x. S(x) & ~P(x)")));
  CHECK(alpha_eq(mon("some politicians are crooks"),
                 F("exists x. politician(x) & crook(x)")));
}

TEST_CASE("the two O forms agree semantically") {
  Signature sig;
  sig.predicates["S"] = 1;
  sig.predicates["P"] = 1;
  ModelStream stream(sig, 3);
  const Formula not_all = mon("not all S are P");
  const Formula some_not = mon("some S are not P");
  const Formula eps_o = eps("some S are not P");
  const Formula eps_o_alt = F("~P(eps x. ~S(x))");
  while (auto m = stream.next()) {
    REQUIRE(testing::ref_eval(*m, {}, not_all) == testing::ref_eval(*m, {}, some_not));
    REQUIRE(testing::ref_eval(*m, {}, eps_o) == testing::ref_eval(*m, {}, eps_o_alt));
  }
}

TEST_CASE("words outside the lexicon") {
  CHECK(code_of("every unicorn is P") == ErrorCode::UnknownWord);
  CHECK(code_of("some S is sparkly") == ErrorCode::UnknownWord);
  CHECK(code_of("every keith is P") == ErrorCode::TypeMismatch);

  Lexicon extended = Lexicon::builtin();
  extended.load("unicorn : e->t\nunicorns : e->t = unicorn\n");
  CHECK(to_string(translate("no unicorns are goats", TranslationMode::Epsilon, extended)) ==
        "~goat(eps x. unicorn(x))");
  CHECK(alpha_eq(translate("every unicorn is goat", TranslationMode::Montague, extended),
                 F("forall x. unicorn(x) -> goat(x)")));
}

TEST_CASE("property: translate, print, parse, print is a fixpoint") {
  const std::vector<std::string> forms{"every {} is {}", "some {} is {}", "no {} are {}",
                                       "not all {} are {}", "some {} are not {}"};
  const std::vector<std::string> words{"S", "P", "politicians", "crooks", "student",
                                       "employees", "hits", "goat"};
  for (const auto& form : forms)
    for (const auto& s : words)
      for (const auto& p : words) {
        std::string sentence = form;
        sentence.replace(sentence.find("{}"), 2, s);
        sentence.replace(sentence.find("{}"), 2, p);
        for (auto mode : {TranslationMode::Epsilon, TranslationMode::Montague}) {
          const std::string once = to_string(translate(sentence, mode, lex()));
          const std::string twice = to_string(parse_formula(once));
          CHECK_MESSAGE(once == twice, sentence);
          CHECK(to_string(parse_formula(twice)) == twice);
        }
      }
}
