#ifndef AIEO_TEXT_HPP
#define AIEO_TEXT_HPP

// Concrete syntax for terms and formulas.
//
//   formula := "~" formula | formula "&" formula | formula "|" formula
//            | formula "->" formula | pred "(" terms ")" | term "=" term
//            | ("exists" | "forall") ident "." formula | "(" formula ")"
//            | "true" | "false"
//   term    := ident | ident "(" terms ")" | ("eps" | "tau") ident "." formula
//            | "(" term ")"
//
// Precedence: ~ > & > | > ->, with -> right-associative and & | left-
// associative. Binders extend as far right as possible. The printer emits
// the same syntax with single spaces around binary operators, so printing is
// a right inverse of parsing.
//
// An identifier in term position is a variable when a binder in scope binds
// it, or otherwise when it is not a declared constant of the optional
// signature and looks like a variable (one of u..z, then digits, then
// primes). Everything else is a constant.

#include <string>
#include <string_view>

#include "aieo/syntax.hpp"

namespace aieo {

Formula parse_formula(std::string_view text, const Signature* sig = nullptr);
Term parse_term(std::string_view text, const Signature* sig = nullptr);

std::string to_string(const Term& t);
std::string to_string(const Formula& f);

// Fully parenthesized constructor tree, e.g. (Pred P (Eps x (Pred S (Var x)))).
std::string to_tree(const Formula& f);

bool is_variable_name(std::string_view name);

}  // namespace aieo

#endif  // AIEO_TEXT_HPP
