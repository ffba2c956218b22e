#ifndef AIEO_TRANSLATE_HPP
#define AIEO_TRANSLATE_HPP

// Controlled English A/E/I/O sentences to formulas.

#include <string>
#include <string_view>

#include "aieo/montague.hpp"
#include "aieo/syntax.hpp"

namespace aieo {

enum class SentenceForm { Every, Some, No, NotAll, SomeNot };
const char* sentence_form_name(SentenceForm f);

struct SentencePattern {
  SentenceForm form;
  std::string subject;    // noun as written
  std::string predicate;  // predicate word as written
};

// Exactly: "every X is Y", "some X is Y", "no X is Y", "not all X are Y",
// "some X are not Y". Keywords are case-insensitive, "is" and "are" are
// interchangeable, and a final '.' or '!' is ignored. Throws
// Error(UnrecognizedPattern) for anything else.
SentencePattern match_sentence(std::string_view sentence);

enum class TranslationMode { Epsilon, Montague };

// Epsilon mode: every -> P(tau x. S(x)), some -> P(eps x. S(x)),
// no -> ~P(eps x. S(x)), not all / some not -> ~P(tau x. S(x)), where S and
// P are the lexicon's base predicates for the two words. Montague mode
// normalizes the lexicon application and reifies it. Throws
// Error(UnknownWord) for words missing from the lexicon and
// Error(TypeMismatch) when a word is not a one-place predicate.
Formula translate(std::string_view sentence, TranslationMode mode,
                  const Lexicon& lex);
Formula translate(const SentencePattern& s, TranslationMode mode,
                  const Lexicon& lex);

}  // namespace aieo

#endif  // AIEO_TRANSLATE_HPP
