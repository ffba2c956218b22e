#include <doctest.h>

#include "aieo/error.hpp"
#include "aieo/serialize.hpp"
#include "aieo/square.hpp"
#include "aieo/text.hpp"
#include "support.hpp"

using namespace aieo;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Signature sp() {
  Signature sig;
  sig.predicates["S"] = 1;
  sig.predicates["P"] = 1;
  return sig;
}

const std::vector<Formula> kGamma1{F("P(tau x. S(x)) -> P(eps x. S(x))")};
const std::vector<Formula> kGamma2{F("P(eps x. S(x)) -> P(tau x. S(x))")};

std::vector<ChoiceModel> models_up_to(int n) {
  std::vector<ChoiceModel> out;
  ModelStream stream(sp(), n);
  while (auto m = stream.next()) out.push_back(std::move(*m));
  return out;
}

// Reference entailment over every model up to 3 with the reference evaluator.
bool ref_entails(const std::vector<Formula>& hyps, const Formula& goal) {
  static const auto models = models_up_to(3);
  for (const auto& m : models) {
    bool all = true;
    for (const auto& h : hyps) all = all && testing::ref_eval(m, {}, h);
    if (all && !testing::ref_eval(m, {}, goal)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("square construction") {
  const AieoSquare plain = build_square("S", "P", false);
  CHECK(alpha_eq(plain.A, F("P(tau x. S(x))")));
  CHECK(alpha_eq(plain.E, F("~P(eps x. S(x))")));
  CHECK(alpha_eq(plain.I, F("P(eps x. S(x))")));
  CHECK(alpha_eq(plain.O, F("~P(tau x. S(x))")));

  const AieoSquare neg = build_square("S", "P", true);
  CHECK(alpha_eq(neg.I, F("~P(eps x. S(x))")));
  CHECK(alpha_eq(neg.I, plain.E));
  CHECK(alpha_eq(neg.A, F("~P(tau x. S(x))")));
  CHECK(alpha_eq(neg.E, F("~~P(eps x. S(x))")));
  CHECK(neg.negated);

  CHECK(alpha_eq(fill(plain, parse_term("c")), F("P(c)")));
  CHECK(alpha_eq(fill(neg, parse_term("c")), F("~P(c)")));

  Signature bad;
  bad.predicates["S"] = 2;
  try {
    build_square("S", "P", false, &bad);
    FAIL("binary subject accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Arity);
  }
  CHECK_THROWS_AS(build_square("S x", "P", false), Error);
}

TEST_CASE("syntactic identities across the squares") {
  for (bool negated : {false, true}) {
    const AieoSquare sq = build_square("S", "P", negated);
    // ~O is ~~A; dropping the root double negation gives A back.
    const Formula not_o = Formula::negation(sq.O);
    REQUIRE(not_o.operand().kind() == Formula::Kind::Not);
    CHECK(alpha_eq(dual_normalize(sq.A), dual_normalize(not_o.operand().operand())));
    CHECK(alpha_eq(sq.E, Formula::negation(sq.I)));
  }
}

TEST_CASE("O-row equivalence") {
  const Formula tau_form = F("~P(tau x. S(x))");
  const Formula eps_form = F("~P(eps x. ~S(x))");
  for (const auto& m : models_up_to(3))
    REQUIRE(testing::ref_eval(m, {}, tau_form) == testing::ref_eval(m, {}, eps_form));
}

TEST_CASE("bounded oracle agrees with the reference evaluator") {
  testing::Gen gen(71, {});
  BoundedOracle oracle({}, 3, sp());
  CHECK(oracle.model_count() == 4676);
  for (int i = 0; i < 60; ++i) {
    const Formula h = gen.formula(3);
    const Formula g = gen.formula(3);
    const OracleAnswer a = oracle.query({h}, g);
    CHECK(a.holds == ref_entails({h}, g));
    if (!a.holds) {
      REQUIRE(a.countermodel);
      CHECK(testing::ref_eval(*a.countermodel, {}, h));
      CHECK_FALSE(testing::ref_eval(*a.countermodel, {}, g));
    }
  }
}

TEST_CASE("the plain square fails subalternation") {
  BoundedOracle oracle({}, 2, sp());
  const SquareReport r = check_square(build_square("S", "P", false), oracle);
  CHECK(r.contradictories_ok());
  CHECK_FALSE(r.a_entails_i);
  CHECK_FALSE(r.all_ok());
  const ConditionCheck* ai = nullptr;
  for (const auto& c : r.checks)
    if (c.label == "A |- I") ai = &c;
  REQUIRE(ai);
  REQUIRE(ai->answer.countermodel);
  const ChoiceModel& m = *ai->answer.countermodel;
  CHECK(m.size() == 2);
  CHECK(testing::ref_eval(m, {}, F("P(tau x. S(x))")));
  CHECK_FALSE(testing::ref_eval(m, {}, F("P(eps x. S(x))")));
}

TEST_CASE("contradictories hold without a theory") {
  for (bool negated : {false, true}) {
    BoundedOracle bounded({}, 3, sp());
    CHECK(check_square(build_square("S", "P", negated), bounded).contradictories_ok());
    KernelOracle kernel(shipped_derivations());
    CHECK(check_square(build_square("S", "P", negated), kernel).contradictories_ok());
  }
}

TEST_CASE("squares under the bivalence theories") {
  BoundedOracle g1({kGamma1}, 3, sp());
  const SquareReport r1 = check_square(build_square("S", "P", false), g1);
  CHECK(r1.a_iff_not_o);
  CHECK(r1.e_iff_not_i);
  CHECK(r1.contraries_ok);
  CHECK(r1.subcontraries_ok);
  CHECK(r1.a_entails_i);
  CHECK(r1.e_entails_o);
  CHECK(r1.all_ok());
  // Cross-check every recorded verdict with the reference evaluator.
  for (const auto& c : r1.checks) {
    auto hyps = kGamma1;
    hyps.insert(hyps.end(), c.hypotheses.begin(), c.hypotheses.end());
    CHECK_MESSAGE(c.answer.holds == ref_entails(hyps, c.goal), c.label);
  }

  BoundedOracle g2({kGamma2}, 3, sp());
  CHECK(check_square(build_square("S", "P", true), g2).all_ok());
  CHECK_FALSE(check_square(build_square("S", "P", false), g2).all_ok());

  KernelOracle k1(shipped_derivations(), kGamma1);
  CHECK(check_square(build_square("S", "P", false), k1).all_ok());
  KernelOracle k2(shipped_derivations(), kGamma2);
  CHECK(check_square(build_square("S", "P", true), k2).all_ok());
  KernelOracle k0(shipped_derivations());
  CHECK_FALSE(check_square(build_square("S", "P", false), k0).subalterns_ok());
}

TEST_CASE("bivalence") {
  BoundedOracle g1({kGamma1}, 3, sp());
  const Bivalence b1 = bivalence("S", "P", g1).verdict;
  CHECK((b1 == Bivalence::RightToLeft || b1 == Bivalence::Both));

  BoundedOracle plain({}, 2, sp());
  const BivalenceResult none = bivalence("S", "P", plain);
  CHECK(none.verdict == Bivalence::Neither);
  CHECK(none.eps_to_tau.answer.countermodel);
  CHECK(none.tau_to_eps.answer.countermodel);

  BoundedOracle everywhere({F("forall x. P(x)")}, 3, sp());
  CHECK(bivalence("S", "P", everywhere).verdict == Bivalence::Both);

  CHECK(std::string(bivalence_name(Bivalence::LeftToRight)) == "LeftToRight");
}

TEST_CASE("proposition") {
  BoundedOracle g1({kGamma1}, 3, sp());
  const PropositionResult p1 = proposition_check("S", "P", g1);
  CHECK_FALSE(p1.negated);
  CHECK(p1.report.all_ok());

  BoundedOracle g2({kGamma2}, 3, sp());
  const PropositionResult p2 = proposition_check("S", "P", g2);
  CHECK(p2.negated);
  CHECK(p2.report.all_ok());

  BoundedOracle plain({}, 3, sp());
  try {
    proposition_check("S", "P", plain);
    FAIL("accepted without bivalence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisNotMet);
  }
}

TEST_CASE("property: any bivalent satisfiable theory yields a full square") {
  testing::Gen gen(81, {});
  int bivalent = 0, unsatisfiable = 0;
  for (int i = 0; i < 300 && bivalent < 25; ++i) {
    std::vector<Formula> theory{gen.formula(3)};
    if (gen.coin(50)) theory.push_back(gen.formula(2));
    BoundedOracle oracle(theory, 3, sp());
    if (bivalence("S", "P", oracle).verdict == Bivalence::Neither) continue;
    const PropositionResult r = proposition_check("S", "P", oracle);
    std::string shown;
    for (const auto& t : theory) shown += to_string(t) + " ; ";
    if (oracle.query({}, F("false")).holds) {
      // No model up to the bound: everything is entailed, so only the
      // consistency conditions can fail.
      ++unsatisfiable;
      CHECK_MESSAGE(r.report.contradictories_ok(), shown);
      CHECK_MESSAGE(r.report.subalterns_ok(), shown);
      CHECK_FALSE(r.report.all_ok());
      continue;
    }
    ++bivalent;
    CHECK_MESSAGE(r.report.all_ok(), shown);
  }
  CHECK(bivalent >= 10);
  CHECK(unsatisfiable > 0);
}

TEST_CASE("remark") {
  RemarkOptions opts;
  opts.theories = {kGamma1, kGamma2};
  const RemarkReport r = remark_check(opts);
  CHECK(r.exhaustive == remark_pool().size() * remark_pool().size() *
                           remark_pool().size() * remark_pool().size());
  CHECK(r.random >= 500);
  CHECK(r.iii_premises_held > 0);
  CHECK(r.iv_premises_held > 0);
  CHECK(r.violations.empty());

  // The plain square under the first theory: i and ii hold, and so does iii.
  BoundedOracle g1({kGamma1}, 3, sp());
  const SquareReport sq = check_square(build_square("S", "P", false), g1);
  CHECK(sq.contradictories_ok());
  CHECK(sq.contraries_ok);
  CHECK(sq.subcontraries_ok);

  // A degenerate quadruple: A = false, O = true satisfies i with E = ~I.
  BoundedOracle plain({}, 3, sp());
  const Formula A = F("false"), O = F("true"), I = F("P(eps x. S(x))");
  const Formula E = Formula::negation(I);
  CHECK(plain.query({A}, Formula::negation(O)).holds);
  CHECK(plain.query({Formula::negation(O)}, A).holds);
  CHECK(plain.query({A, E}, F("false")).holds);
  CHECK(plain.query({A}, I).holds);
}

TEST_CASE("rendering and JSON") {
  BoundedOracle g1({kGamma1}, 3, sp());
  const SquareReport r = check_square(build_square("S", "P", false), g1);
  const std::string text = render_square(r);
  CHECK(text.find("square of opposition: yes") != std::string::npos);
  CHECK(text.find("contrary [ok]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);

  const Json j = square_report_to_json(r);
  CHECK(j["all_ok"] == true);
  CHECK(j["conditions"]["iv"]["A_entails_I"] == true);
  CHECK(j["square"]["A"] == "P(tau x. S(x))");

  BoundedOracle plain({}, 2, sp());
  const SquareReport bad = check_square(build_square("S", "P", false), plain);
  CHECK(render_square(bad).find("square of opposition: no") != std::string::npos);
  CHECK(square_report_to_json(bad)["all_ok"] == false);
}
