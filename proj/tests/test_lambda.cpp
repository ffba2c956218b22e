#include <doctest.h>

#include <random>

#include "aieo/error.hpp"
#include "aieo/montague.hpp"
#include "aieo/text.hpp"
#include "support.hpp"

using namespace aieo;

namespace {

const Lexicon& lex() {
  static const Lexicon l = Lexicon::builtin();
  return l;
}

LambdaTerm L(const char* s) { return parse_lambda(s, lex()); }

SemType ty(const char* s) { return parse_type(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

bool has_redex(const LambdaTerm& t) {
  switch (t.kind()) {
    case LambdaTerm::Kind::Var:
    case LambdaTerm::Kind::Const:
      return false;
    case LambdaTerm::Kind::Abs:
      return has_redex(t.body());
    case LambdaTerm::Kind::App:
      return t.fun().kind() == LambdaTerm::Kind::Abs || has_redex(t.fun()) ||
             has_redex(t.arg());
  }
  return false;
}

// Random well-typed terms of a requested type over e, t, e->t and t->t.
class TypedGen {
 public:
  explicit TypedGen(std::uint64_t seed) : rng_(seed) {}

  LambdaTerm make(const SemType& want, int depth) {
    std::vector<int> options;
    for (const auto& [name, type] : scope_)
      if (type == want) options.push_back(0);
    if (want == SemType::e() || want == ty("e->t") || want == ty("t->t") ||
        want == SemType::t() || want == ty("(e->t)->t") || want == ty("t->t->t"))
      options.push_back(1);
    // Abstraction always terminates because the type shrinks.
    if (want.kind() == SemType::Kind::Arrow) options.insert(options.end(), {2, 2});
    if (depth > 0) options.insert(options.end(), {3, 3});
    switch (options[pick(options.size())]) {
      case 0: {
        std::vector<std::string> names;
        for (const auto& [name, type] : scope_)
          if (type == want) names.push_back(name);
        const std::string n = names[pick(names.size())];
        return LambdaTerm::var(n, want);
      }
      case 1:
        return constant(want);
      case 2: {
        const std::string v = std::string(1, "xyzuvw"[pick(6)]);
        auto saved = scope_;
        scope_.erase(std::remove_if(scope_.begin(), scope_.end(),
                                    [&](const auto& p) { return p.first == v; }),
                     scope_.end());
        scope_.push_back({v, want.from()});
        LambdaTerm body = make(want.to(), depth - 1);
        scope_ = saved;
        return LambdaTerm::abs(v, want.from(), body);
      }
      default: {
        static const char* args[] = {"e", "t", "e->t"};
        const SemType arg = ty(args[pick(3)]);
        return LambdaTerm::app(make(SemType::arrow(arg, want), depth - 1),
                               make(arg, depth - 1));
      }
    }
  }

 private:
  LambdaTerm constant(const SemType& want) {
    if (want == SemType::e()) return LambdaTerm::constant("keith", want);
    if (want == ty("e->t")) return LambdaTerm::constant(pick(2) ? "S" : "P", want);
    if (want == ty("t->t")) return LambdaTerm::constant("not", want);
    if (want == ty("(e->t)->t")) return LambdaTerm::constant(pick(2) ? "exists" : "forall", want);
    if (want == ty("t->t->t")) return LambdaTerm::constant(pick(2) ? "and" : "or", want);
    return LambdaTerm::app(LambdaTerm::constant("S", ty("e->t")),
                           LambdaTerm::constant("keith", SemType::e()));
  }

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::mt19937_64 rng_;
  std::vector<std::pair<std::string, SemType>> scope_;
};

}  // namespace

TEST_CASE("types") {
  CHECK(to_string(ty("(e->t)->(e->t)->t")) == "(e->t)->(e->t)->t");
  CHECK(ty("e->t->t") == SemType::arrow(SemType::e(), ty("t->t")));
  CHECK(ty("e → t") == ty("e->t"));
  CHECK_FALSE(ty("(e->t)->t") == ty("e->t->t"));
  CHECK(code_of([] { parse_type("e->"); }) == ErrorCode::Parse);
}

TEST_CASE("type checking") {
  CHECK(typecheck(L("some")) == ty("(e->t)->((e->t)->t)"));
  CHECK(typecheck(L("some S")) == ty("(e->t)->t"));
  CHECK(typecheck(L("\\x:e. S x")) == ty("e->t"));
  CHECK(typecheck(L("λx:e. not (S x)")) == ty("e->t"));
  CHECK(code_of([] { typecheck(L("S S")); }) == ErrorCode::TypeMismatch);
  CHECK(code_of([] { typecheck(LambdaTerm::var("x", SemType::e())); }) ==
        ErrorCode::UnboundVariable);
  CHECK(code_of([] { L("unicorn"); }) == ErrorCode::UnknownWord);
}

TEST_CASE("lexicon entries have their types") {
  CHECK(typecheck(lex().term("something")) == ty("(e->t)->t"));
  CHECK(typecheck(lex().term("everything")) == ty("(e->t)->t"));
  CHECK(typecheck(lex().term("some")) == ty("(e->t)->(e->t)->t"));
  CHECK(typecheck(lex().term("every")) == ty("(e->t)->(e->t)->t"));
  for (const auto& w : lex().words()) {
    const auto* entry = lex().find(w);
    REQUIRE(entry);
    CHECK_MESSAGE(typecheck(lex().term(w)) == entry->type, w);
  }
  CHECK(lex().base_name("politicians") == "politician");
  CHECK(lex().base_name("Crooks") == "crook");
  CHECK(lex().find("EVERY") != nullptr);
}

TEST_CASE("beta normalization") {
  CHECK(alpha_eq(beta_normalize(L("some S P")),
                 L("exists (\\x:e. and (S x) (P x))")));
  CHECK(alpha_eq(beta_normalize(L("every S P")),
                 L("forall (\\y:e. implies (S y) (P y))")));
  const LambdaTerm c = LambdaTerm::constant("keith", SemType::e());
  CHECK(alpha_eq(beta_normalize(c), c));
}

TEST_CASE("beta reduction avoids capture") {
  // (\y:e. \x:e. composed x y) x  reduces to  \x'. composed x' x, not \x. composed x x.
  const LambdaTerm inner = LambdaTerm::abs(
      "x", SemType::e(),
      LambdaTerm::app(LambdaTerm::app(LambdaTerm::constant("composed", ty("e->e->t")),
                                      LambdaTerm::var("x", SemType::e())),
                      LambdaTerm::var("y", SemType::e())));
  const LambdaTerm redex = LambdaTerm::app(LambdaTerm::abs("y", SemType::e(), inner),
                                           LambdaTerm::var("x", SemType::e()));
  const LambdaTerm nf = beta_normalize(redex);
  const LambdaTerm expected = LambdaTerm::abs(
      "z", SemType::e(),
      LambdaTerm::app(LambdaTerm::app(LambdaTerm::constant("composed", ty("e->e->t")),
                                      LambdaTerm::var("z", SemType::e())),
                      LambdaTerm::var("x", SemType::e())));
  CHECK(alpha_eq(nf, expected));
}

TEST_CASE("normalization fuel") {
  CHECK(code_of([] { beta_normalize(L("some S P"), 1); }) ==
        ErrorCode::NormalizationFuel);
  CHECK_NOTHROW(beta_normalize(L("some S P"), 100));
}

TEST_CASE("reification") {
  CHECK(alpha_eq(reify(beta_normalize(L("some S P"))),
                 parse_formula("exists x. S(x) & P(x)")));
  CHECK(alpha_eq(reify(beta_normalize(L("every S P"))),
                 parse_formula("forall x. S(x) -> P(x)")));
  CHECK(alpha_eq(reify(beta_normalize(L("no S P"))),
                 parse_formula("~exists x. S(x) & P(x)")));
  CHECK(alpha_eq(reify(beta_normalize(L("something S"))),
                 parse_formula("exists x. S(x)")));
  CHECK(alpha_eq(reify(beta_normalize(L("P (eps S)"))),
                 parse_formula("P(eps x. S(x))")));
  CHECK(alpha_eq(reify(L("composed keith (tau P)")),
                 parse_formula("composed(keith, tau x. P(x))")));
  CHECK(code_of([] { reify(L("exists")); }) == ErrorCode::NotFirstOrder);
  CHECK(code_of([] { reify(L("S")); }) == ErrorCode::NotFirstOrder);
}

TEST_CASE("lexicon loading") {
  Lexicon l = Lexicon::builtin();
  l.load("# pets\ndog : e->t\ndogs : e->t = dog\nboth : (e->t)->(e->t)->e->t = \\A:e->t. \\B:e->t. \\x:e. and (A x) (B x)\n");
  CHECK(typecheck(l.term("dogs")) == ty("e->t"));
  CHECK(l.base_name("dogs") == "dog");
  CHECK(alpha_eq(reify(beta_normalize(parse_lambda("some (both dog S) P", l))),
                 parse_formula("exists x. (dog(x) & S(x)) & P(x)")));
  CHECK(code_of([&] { l.load("cat : e->t = keith"); }) == ErrorCode::TypeMismatch);
  CHECK(code_of([&] { l.load("cat e->t"); }) == ErrorCode::Parse);
  CHECK(code_of([&] { l.term("unicorn"); }) == ErrorCode::UnknownWord);
}

TEST_CASE("inadequacy demonstrations") {
  const auto one = demonstrate_inadequacy(1, lex());
  REQUIRE(one.model);
  REQUIRE(one.left);
  REQUIRE(one.right);
  CHECK(one.model->size() <= 2);
  CHECK(alpha_eq(*one.left, parse_formula("P(eps x. S(x))")));
  CHECK(alpha_eq(*one.right, parse_formula("S(eps x. P(x))")));
  CHECK(one.left_value != one.right_value);
  CHECK(testing::ref_eval(*one.model, {}, *one.left) == one.left_value);
  CHECK(testing::ref_eval(*one.model, {}, *one.right) == one.right_value);

  // The hand-built model with the roles the other way round.
  ChoiceModel m(2);
  m.set_predicate("S", subset_of({1}));
  m.set_predicate("P", subset_of({1, 2}));
  m.set_choice(subset_of({1, 2}), 2);
  CHECK(testing::ref_eval(m, {}, parse_formula("P(eps x. S(x))")));
  CHECK_FALSE(testing::ref_eval(m, {}, parse_formula("S(eps x. P(x))")));

  const auto two = demonstrate_inadequacy(2, lex());
  CHECK(two.semantic_tree == "(some (hits)) (λx. Keith composed x)");
  CHECK(two.syntax_tree == "(Keith (composed (some (hits))))");
  REQUIRE(two.standard_translation);
  REQUIRE(two.epsilon_translation);
  CHECK(alpha_eq(*two.standard_translation,
                 parse_formula("exists x. hit(x) & composed(x, keith)")));
  CHECK(alpha_eq(*two.epsilon_translation,
                 parse_formula("composed(eps x. hit(x), keith)")));

  const auto three = demonstrate_inadequacy(3, lex());
  REQUIRE(three.epsilon_term);
  REQUIRE(three.epsilon_type);
  CHECK(*three.epsilon_type == SemType::e());
  CHECK(typecheck(*three.epsilon_term) == SemType::e());
  REQUIRE(three.epsilon_reading);
  CHECK(alpha_eq(*three.epsilon_reading, parse_term("eps x. goat(x)")));
  CHECK(*three.standard_type == ty("(e->t)->t"));

  CHECK(code_of([] { demonstrate_inadequacy(4, lex()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: subject reduction and normal forms") {
  TypedGen gen(31);
  const char* targets[] = {"t", "e", "e->t", "(e->t)->t", "t->t"};
  for (int i = 0; i < 400; ++i) {
    const SemType want = ty(targets[i % 5]);
    const LambdaTerm term = gen.make(want, 5);
    REQUIRE(typecheck(term) == want);
    const LambdaTerm nf = beta_normalize(term);
    CHECK(typecheck(nf) == want);
    CHECK_FALSE(has_redex(nf));
    CHECK(alpha_eq(beta_normalize(nf), nf));
    if (want == SemType::t()) CHECK_NOTHROW(reify(nf));
  }
}
