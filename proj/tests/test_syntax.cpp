#include <doctest.h>

#include <set>
#include <string>

#include "aieo/error.hpp"
#include "aieo/syntax.hpp"
#include "aieo/text.hpp"
#include "support.hpp"

using namespace aieo;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term T(const char* s) { return parse_term(s); }

std::set<std::string> vars(std::initializer_list<const char*> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("free variables") {
  CHECK(free_vars(F("P(x)")) == vars({"x"}));
  CHECK(free_vars(F("P(eps x. S(x))")).empty());
  const Formula mixed = F("R(x, eps x. S(x, y))");
  CHECK(free_vars(mixed) == vars({"x", "y"}));
  CHECK(free_vars(mixed) == testing::reference_free_vars(mixed));
  CHECK(free_vars(F("exists x. R(x, y) & Q(z)")) == vars({"y", "z"}));
  CHECK(free_vars(T("f(x, tau y. R(y, x))")) == vars({"x"}));
}

TEST_CASE("free variables agree with a brute-force scan") {
  testing::GenOptions opts;
  opts.binary = true;
  opts.constants = true;
  opts.functions = true;
  opts.equality = true;
  testing::Gen gen(7, opts);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(5, {"x", "u"});
    CHECK(free_vars(f) == testing::reference_free_vars(f));
  }
}

TEST_CASE("substitution") {
  CHECK(to_string(substitute(F("P(x)"), "x", T("c"))) == "P(c)");
  CHECK(to_string(substitute(F("P(x)"), "y", T("c"))) == "P(x)");

  const Formula captured = substitute(F("P(eps y. R(x, y))"), "x", T("y"));
  CHECK(alpha_eq(captured, F("P(eps y'. R(y, y'))")));
  CHECK(to_string(captured) == "P(eps y'. R(y, y'))");
  CHECK(free_vars(captured) == vars({"y"}));

  // Bound occurrences are untouched.
  CHECK(to_string(substitute(F("exists x. S(x)"), "x", T("c"))) == "exists x. S(x)");
  // The fresh name avoids every name free in the body and the replacement.
  const Formula twice = substitute(F("forall y. R(x, y) & Q(y')"), "x", T("y"));
  CHECK(free_vars(twice) == vars({"y", "y'"}));
  CHECK(alpha_eq(twice, F("forall w. R(y, w) & Q(y')")));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(T("eps x. S(x)"), T("eps y. S(y)")));
  CHECK_FALSE(alpha_eq(T("eps x. S(x)"), T("eps x. P(x)")));
  CHECK(alpha_eq(T("tau x. (S(x) & P(x))"), T("tau z. (S(z) & P(z))")));
  CHECK_FALSE(alpha_eq(F("exists x. R(x, y)"), F("exists y. R(y, y)")));
  CHECK_FALSE(alpha_eq(F("P(x)"), F("P(y)")));
  CHECK(alpha_eq(F("forall x. exists y. R(x, y)"), F("forall y. exists x. R(y, x)")));
  CHECK_FALSE(alpha_eq(T("eps x. S(x)"), T("tau x. S(x)")));
}

TEST_CASE("dual normalization") {
  CHECK(to_string(dual_normalize(F("P(tau x. S(x))"))) == "P(eps x. ~S(x))");
  CHECK(to_string(dual_normalize(F("P(eps x. S(x))"))) == "P(eps x. S(x))");
  CHECK(to_string(dual_normalize(F("~P(tau x. ~S(x))"))) == "~P(eps x. ~~S(x))");
  // Nested binders are rewritten bottom-up.
  CHECK(to_string(dual_normalize(F("P(tau x. S(tau y. R(x, y)))"))) ==
        "P(eps x. ~S(eps y. ~R(x, y)))");
}

TEST_CASE("quantifier expansion") {
  CHECK(to_string(expand_quantifiers(F("exists x. S(x)"))) == "S(eps x. S(x))");
  CHECK(to_string(expand_quantifiers(F("forall x. S(x)"))) == "S(tau x. S(x))");
  const Term t = T("eps x. S(x) & P(x)");
  const Formula expected = Formula::conjunction(Formula::pred("S", {t}),
                                                Formula::pred("P", {t}));
  CHECK(alpha_eq(expand_quantifiers(F("exists x. (S(x) & P(x))")), expected));
  // Innermost first, no quantifier left.
  const Formula nested = expand_quantifiers(F("forall x. exists y. R(x, y)"));
  CHECK(to_string(nested).find("exists") == std::string::npos);
  CHECK(to_string(nested).find("forall") == std::string::npos);
}

TEST_CASE("concrete syntax") {
  CHECK(to_string(F("A() -> B() -> C()")) == "A() -> B() -> C()");
  CHECK(F("A() -> B() -> C()").right().kind() == Formula::Kind::Implies);
  CHECK(to_string(F("(A() -> B()) -> C()")) == "(A() -> B()) -> C()");
  CHECK(to_string(F("~A() & B() | C()")) == "~A() & B() | C()");
  CHECK(F("~A() & B() | C()").kind() == Formula::Kind::Or);
  CHECK(to_string(F("~(A() & B())")) == "~(A() & B())");
  CHECK(to_string(F("  P( eps  x .S(x) )")) == "P(eps x. S(x))");
  CHECK(to_string(F("(exists x. S(x)) & P(c)")) == "(exists x. S(x)) & P(c)");
  CHECK(to_string(F("exists x. S(x) & P(c)")) == "exists x. S(x) & P(c)");
  CHECK(F("exists x. S(x) & P(c)").kind() == Formula::Kind::Exists);
  CHECK(to_string(F("f(x) = eps y. (y = c)")) == "f(x) = (eps y. y = c)");
  CHECK(to_string(F("true -> false")) == "true -> false");
  CHECK(to_tree(F("P(eps x. S(x))")) == "(Pred P (Eps x (Pred S (Var x))))");
  CHECK(F("P(c)").terms()[0].kind() == Term::Kind::Constant);
  CHECK(F("P(x')").terms()[0].kind() == Term::Kind::Variable);
}

TEST_CASE("parse and signature errors") {
  auto code_of = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const Error& e) {
      return static_cast<int>(e.code());
    }
    return -1;
  };
  CHECK(code_of("P(x") == static_cast<int>(ErrorCode::Parse));
  CHECK(code_of("P(x) &") == static_cast<int>(ErrorCode::Parse));
  CHECK(code_of("eps x. S(x)") == static_cast<int>(ErrorCode::Parse));
  CHECK(code_of("exists . S(x)") == static_cast<int>(ErrorCode::Parse));
  CHECK(code_of("P(x) P(y)") == static_cast<int>(ErrorCode::Parse));
  CHECK(code_of("P(x) & P(x, y)") == static_cast<int>(ErrorCode::Arity));
  CHECK(code_of("P(f(x)) & P(f(x, y))") == static_cast<int>(ErrorCode::Arity));
  CHECK(code_of("P(x) & Q(P)") == static_cast<int>(ErrorCode::Arity));

  Signature sig;
  sig.predicates["S"] = 1;
  CHECK_THROWS_AS(check_well_formed(F("S(x, y)"), sig), Error);
  CHECK_NOTHROW(check_well_formed(F("S(x)"), sig));
}

TEST_CASE("vacuous binders are legal") {
  const Formula f = F("P(eps x. S(c))");
  CHECK(free_vars(f).empty());
  CHECK(to_string(f) == "P(eps x. S(c))");
  CHECK(alpha_eq(f, F("P(eps y. S(c))")));
}

TEST_CASE("property: substituting a variable for itself is the identity") {
  testing::GenOptions opts;
  opts.binary = true;
  opts.constants = true;
  opts.functions = true;
  testing::Gen gen(11, opts);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(5, {"x", "y"});
    CHECK(alpha_eq(substitute(f, "x", Term::variable("x")), f));
  }
}

TEST_CASE("property: substitution never captures") {
  testing::GenOptions opts;
  opts.binary = true;
  testing::Gen gen(12, opts);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(4, {"x"});
    Term t = gen.term(3, {"y", "z"});
    Formula g = substitute(f, "x", t);
    std::set<std::string> expected = testing::reference_free_vars(f);
    if (expected.erase("x")) {
      for (const auto& v : testing::reference_free_vars(t)) expected.insert(v);
    }
    CHECK(testing::reference_free_vars(g) == expected);
  }
}

TEST_CASE("property: dual normalization") {
  testing::GenOptions opts;
  opts.binary = true;
  opts.constants = true;
  testing::Gen gen(13, opts);
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.formula(5, {"x"});
    Formula once = dual_normalize(f);
    CHECK(free_vars(once) == free_vars(f));
    CHECK(alpha_eq(dual_normalize(once), once));
    CHECK(to_string(once).find("tau") == std::string::npos);
  }
}

TEST_CASE("property: print then parse is the identity up to alpha") {
  testing::GenOptions opts;
  opts.binary = true;
  opts.constants = true;
  opts.functions = true;
  opts.equality = true;
  opts.truth_values = true;
  testing::Gen gen(14, opts);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.formula(6, {"x", "y'"});
    const std::string printed = to_string(f);
    Formula back = parse_formula(printed);
    CHECK_MESSAGE(alpha_eq(back, f), printed);
    CHECK(to_string(back) == printed);
  }
}
