#include "aieo/serialize.hpp"

#include "aieo/text.hpp"

namespace aieo {

Json model_to_json(const ChoiceModel& m) {
  Json j;
  j["domain"] = m.size();
  Json preds = Json::object();
  for (const auto& name : m.predicate_names()) preds[name] = m.extension(name);
  j["predicates"] = preds;
  // Only needed to recover the arity of an empty non-unary relation.
  Json arities = Json::object();
  for (const auto& name : m.predicate_names())
    if (m.predicate_arity(name) != 1) arities[name] = m.predicate_arity(name);
  if (!arities.empty()) j["arities"] = arities;
  Json consts = Json::object();
  for (const auto& [name, e] : m.constants()) consts[name] = e;
  j["constants"] = consts;
  Json funs = Json::object();
  for (const auto& name : m.function_names())
    funs[name] = {{"arity", m.function_arity(name)},
                  {"table", m.function_table(name)}};
  j["functions"] = funs;
  Json choice = Json::array();
  for (Subset s = 1; s <= m.full_set(); ++s)
    choice.push_back(Json::array({members(s), m.choose(s)}));
  j["choice"] = choice;
  j["default"] = m.default_element();
  return j;
}

ChoiceModel model_from_json(const Json& j) {
  try {
    ChoiceModel m(j.at("domain").get<int>());
    if (j.contains("predicates")) {
      for (const auto& [name, tuples] : j.at("predicates").items()) {
        std::vector<std::vector<Element>> ts;
        std::size_t arity = 1;
        bool first = true;
        for (const auto& t : tuples) {
          std::vector<Element> tuple =
              t.is_array() ? t.get<std::vector<Element>>()
                           : std::vector<Element>{t.get<Element>()};
          if (first) arity = tuple.size();
          first = false;
          ts.push_back(std::move(tuple));
        }
        if (j.contains("arities") && j["arities"].contains(name))
          arity = j["arities"][name].get<std::size_t>();
        m.set_predicate(name, arity, ts);
      }
    }
    if (j.contains("constants"))
      for (const auto& [name, e] : j.at("constants").items())
        m.set_constant(name, e.get<Element>());
    if (j.contains("functions"))
      for (const auto& [name, f] : j.at("functions").items())
        m.set_function(name, f.at("arity").get<std::size_t>(),
                       f.at("table").get<std::vector<Element>>());
    if (j.contains("choice"))
      for (const auto& entry : j.at("choice"))
        m.set_choice(subset_of(entry.at(0).get<std::vector<Element>>()),
                     entry.at(1).get<Element>());
    if (j.contains("default")) m.set_default(j.at("default").get<Element>());
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidModel, std::string("bad model document: ") + e.what());
  }
}

Json term_to_json(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable: return {{"kind", "Var"}, {"name", t.name()}};
    case Term::Kind::Constant: return {{"kind", "Const"}, {"name", t.name()}};
    case Term::Kind::FunApp: {
      Json args = Json::array();
      for (const auto& a : t.args()) args.push_back(term_to_json(a));
      return {{"kind", "FunApp"}, {"symbol", t.name()}, {"args", args}};
    }
    case Term::Kind::Epsilon:
    case Term::Kind::Tau:
      return {{"kind", t.kind() == Term::Kind::Epsilon ? "Eps" : "Tau"},
              {"var", t.name()},
              {"body", formula_to_json(t.body())}};
  }
  return {};
}

Json formula_to_json(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Pred: {
      Json args = Json::array();
      for (const auto& a : f.terms()) args.push_back(term_to_json(a));
      return {{"kind", "Pred"}, {"symbol", f.name()}, {"args", args}};
    }
    case K::Equals:
      return {{"kind", "Equals"},
              {"lhs", term_to_json(f.terms()[0])},
              {"rhs", term_to_json(f.terms()[1])}};
    case K::Not: return {{"kind", "Not"}, {"operand", formula_to_json(f.operand())}};
    case K::And:
    case K::Or:
    case K::Implies: {
      const char* k = f.kind() == K::And ? "And" : f.kind() == K::Or ? "Or" : "Implies";
      return {{"kind", k},
              {"left", formula_to_json(f.left())},
              {"right", formula_to_json(f.right())}};
    }
    case K::Exists:
    case K::Forall:
      return {{"kind", f.kind() == K::Exists ? "Exists" : "Forall"},
              {"var", f.name()},
              {"body", formula_to_json(f.body())}};
    case K::Falsum: return {{"kind", "Falsum"}};
    case K::Verum: return {{"kind", "Verum"}};
  }
  return {};
}

namespace {

Json strings(const std::vector<Formula>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

Json assignment_json(const Assignment& a) {
  Json out = Json::object();
  for (const auto& [v, e] : a) out[v] = e;
  return out;
}

}  // namespace

Json sequent_to_json(const Sequent& s) {
  return {{"hypotheses", strings(s.hypotheses)}, {"conclusion", to_string(s.conclusion)}};
}

Json verdict_to_json(const EntailmentVerdict& v, const std::vector<Formula>& hypotheses,
                     const Formula& goal) {
  Json j;
  j["hypotheses"] = strings(hypotheses);
  j["goal"] = to_string(goal);
  j["verdict"] = v.valid ? "ValidUpTo" : "Countermodel";
  j["bound"] = v.bound;
  if (v.model) {
    j["model"] = model_to_json(*v.model);
    j["assignment"] = assignment_json(v.assignment);
  }
  return j;
}

Json check_to_json(const ConditionCheck& c) {
  Json j;
  j["label"] = c.label;
  j["hypotheses"] = strings(c.hypotheses);
  j["goal"] = to_string(c.goal);
  j["holds"] = c.answer.holds;
  if (c.answer.countermodel) {
    j["countermodel"] = model_to_json(*c.answer.countermodel);
    j["assignment"] = assignment_json(c.answer.assignment);
  }
  if (!c.answer.derivation.empty()) j["derivation"] = c.answer.derivation;
  return j;
}

Json square_report_to_json(const SquareReport& r) {
  const AieoSquare& sq = r.square;
  Json j;
  j["square"] = {{"S", sq.subject},
                 {"P", sq.predicate},
                 {"negated", sq.negated},
                 {"A", to_string(sq.A)},
                 {"E", to_string(sq.E)},
                 {"I", to_string(sq.I)},
                 {"O", to_string(sq.O)}};
  j["oracle"] = r.oracle;
  j["theory"] = strings(r.theory);
  j["conditions"] = {
      {"i", {{"A_iff_notO", r.a_iff_not_o}, {"E_iff_notI", r.e_iff_not_i}}},
      {"ii", {{"contraries", r.contraries_ok}}},
      {"iii", {{"subcontraries", r.subcontraries_ok}}},
      {"iv", {{"A_entails_I", r.a_entails_i}, {"E_entails_O", r.e_entails_o}}}};
  j["informational"] = {{"notI_entails_notA", r.not_i_entails_not_a},
                        {"notO_entails_notE", r.not_o_entails_not_e},
                        {"I_O_not_both_false", r.i_o_not_both_false}};
  j["all_ok"] = r.all_ok();
  j["notes"] = r.notes;
  Json w = Json::array();
  for (const auto& c : r.checks) w.push_back(check_to_json(c));
  j["witnesses"] = w;
  return j;
}

Json bivalence_to_json(const BivalenceResult& b) {
  return {{"verdict", bivalence_name(b.verdict)},
          {"eps_to_tau", check_to_json(b.eps_to_tau)},
          {"tau_to_eps", check_to_json(b.tau_to_eps)}};
}

Json proposition_to_json(const PropositionResult& p) {
  return {{"bivalence", bivalence_to_json(p.bivalence)},
          {"chosen", p.negated ? "S(S,~P)" : "S(S,P)"},
          {"report", square_report_to_json(p.report)}};
}

Json remark_to_json(const RemarkReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"part", x.part},
                 {"theory", strings(x.theory)},
                 {"A", to_string(x.A)},
                 {"E", to_string(x.E)},
                 {"I", to_string(x.I)},
                 {"O", to_string(x.O)}});
  return {{"exhaustive", r.exhaustive},
          {"random", r.random},
          {"iii_premises_held", r.iii_premises_held},
          {"iv_premises_held", r.iv_premises_held},
          {"violations", v}};
}

Json inadequacy_to_json(const InadequacyReport& r) {
  Json j;
  j["which"] = r.which;
  j["title"] = r.title;
  if (r.left) {
    j["left"] = to_string(*r.left);
    j["right"] = to_string(*r.right);
    j["left_value"] = r.left_value;
    j["right_value"] = r.right_value;
    if (r.model) j["model"] = model_to_json(*r.model);
  }
  if (!r.syntax_tree.empty()) {
    j["syntax_tree"] = r.syntax_tree;
    j["semantic_tree"] = r.semantic_tree;
  }
  if (r.standard_translation) j["standard_translation"] = to_string(*r.standard_translation);
  if (r.epsilon_translation) j["epsilon_translation"] = to_string(*r.epsilon_translation);
  if (r.epsilon_term) {
    j["epsilon_term"] = to_string(*r.epsilon_term);
    j["epsilon_type"] = to_string(*r.epsilon_type);
    j["standard_term"] = to_string(*r.standard_term);
    j["standard_type"] = to_string(*r.standard_type);
  }
  if (r.epsilon_reading) j["epsilon_reading"] = to_string(*r.epsilon_reading);
  return j;
}

}  // namespace aieo
