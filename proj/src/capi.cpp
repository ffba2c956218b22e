#include "aieo/aieo.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "aieo/kernel.hpp"
#include "aieo/library.hpp"
#include "aieo/model.hpp"
#include "aieo/montague.hpp"
#include "aieo/serialize.hpp"
#include "aieo/square.hpp"
#include "aieo/text.hpp"
#include "aieo/translate.hpp"

struct aieo_context {
  std::string error;
  std::uint64_t budget = aieo::kDefaultBudget;
  aieo::Lexicon lexicon = aieo::Lexicon::builtin();
};

struct aieo_formula {
  aieo::Formula f;
};

struct aieo_theory {
  std::vector<aieo::Formula> formulas;
};

namespace {

using aieo::ErrorCode;

aieo_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return AIEO_ERR_PARSE;
    case ErrorCode::Arity: return AIEO_ERR_ARITY;
    case ErrorCode::TypeMismatch: return AIEO_ERR_TYPE_MISMATCH;
    case ErrorCode::UnboundVariable: return AIEO_ERR_UNBOUND_VARIABLE;
    case ErrorCode::NotFirstOrder: return AIEO_ERR_NOT_FIRST_ORDER;
    case ErrorCode::NormalizationFuel: return AIEO_ERR_NORMALIZATION_FUEL;
    case ErrorCode::EigenvariableViolation: return AIEO_ERR_EIGENVARIABLE;
    case ErrorCode::RuleMismatch: return AIEO_ERR_RULE_MISMATCH;
    case ErrorCode::BudgetExceeded: return AIEO_ERR_BUDGET_EXCEEDED;
    case ErrorCode::HypothesisNotMet: return AIEO_ERR_HYPOTHESIS_NOT_MET;
    case ErrorCode::UnrecognizedPattern: return AIEO_ERR_UNRECOGNIZED_PATTERN;
    case ErrorCode::UnknownWord: return AIEO_ERR_UNKNOWN_WORD;
    case ErrorCode::InvalidModel: return AIEO_ERR_INVALID_MODEL;
    case ErrorCode::InvalidArgument: return AIEO_ERR_INVALID_ARGUMENT;
  }
  return AIEO_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

template <class Fn>
aieo_status guarded(aieo_context* ctx, Fn&& fn) {
  if (!ctx) return AIEO_ERR_INVALID_ARGUMENT;
  try {
    fn();
    ctx->error.clear();
    return AIEO_OK;
  } catch (const aieo::Error& e) {
    ctx->error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return AIEO_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw aieo::Error(ErrorCode::InvalidArgument, what);
}

std::vector<aieo::Formula> theory_of(const aieo_theory* t) {
  return t ? t->formulas : std::vector<aieo::Formula>{};
}

std::unique_ptr<aieo::EntailmentOracle> make_oracle(aieo_context* ctx,
                                                    aieo_oracle kind,
                                                    const aieo_theory* theory,
                                                    const char* s, const char* p,
                                                    int bound) {
  if (kind == AIEO_ORACLE_KERNEL)
    return std::make_unique<aieo::KernelOracle>(aieo::shipped_derivations(),
                                                theory_of(theory));
  require(kind == AIEO_ORACLE_BOUNDED, "unknown oracle");
  aieo::Signature sig;
  sig.predicates[s] = 1;
  sig.predicates[p] = 1;
  return std::make_unique<aieo::BoundedOracle>(theory_of(theory), bound, sig,
                                               ctx->budget);
}

std::string inadequacy_text(const aieo::InadequacyReport& r) {
  using aieo::to_string;
  std::ostringstream out;
  out << "(" << r.which << ") " << r.title << "\n";
  if (r.left) {
    out << "  " << to_string(*r.left) << " = " << (r.left_value ? "true" : "false")
        << "\n  " << to_string(*r.right) << " = "
        << (r.right_value ? "true" : "false") << "\n";
    if (r.model) out << "  model: " << aieo::model_to_json(*r.model).dump() << "\n";
  }
  if (!r.syntax_tree.empty()) {
    out << "  syntax:    " << r.syntax_tree << "\n";
    out << "  semantics: " << r.semantic_tree << "\n";
  }
  if (r.standard_translation)
    out << "  standard:  " << to_string(*r.standard_translation) << "\n";
  if (r.epsilon_translation)
    out << "  epsilon:   " << to_string(*r.epsilon_translation) << "\n";
  if (r.epsilon_term) {
    out << "  epsilon:   " << to_string(*r.epsilon_term) << " : "
        << to_string(*r.epsilon_type);
    if (r.epsilon_reading) out << "  (" << to_string(*r.epsilon_reading) << ")";
    out << "\n  standard:  " << to_string(*r.standard_term) << " : "
        << to_string(*r.standard_type) << "\n";
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* aieo_status_name(aieo_status status) {
  switch (status) {
    case AIEO_OK: return "OK";
    case AIEO_ERR_PARSE: return "ParseError";
    case AIEO_ERR_ARITY: return "ArityError";
    case AIEO_ERR_TYPE_MISMATCH: return "TypeMismatch";
    case AIEO_ERR_UNBOUND_VARIABLE: return "UnboundVariable";
    case AIEO_ERR_NOT_FIRST_ORDER: return "NotFirstOrder";
    case AIEO_ERR_NORMALIZATION_FUEL: return "NormalizationFuel";
    case AIEO_ERR_EIGENVARIABLE: return "EigenvariableViolation";
    case AIEO_ERR_RULE_MISMATCH: return "RuleMismatch";
    case AIEO_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case AIEO_ERR_HYPOTHESIS_NOT_MET: return "HypothesisNotMet";
    case AIEO_ERR_UNRECOGNIZED_PATTERN: return "UnrecognizedPattern";
    case AIEO_ERR_UNKNOWN_WORD: return "UnknownWord";
    case AIEO_ERR_INVALID_MODEL: return "InvalidModel";
    case AIEO_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case AIEO_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* aieo_version(void) { return "0.1.0"; }

aieo_context* aieo_context_new(void) {
  try {
    return new aieo_context();
  } catch (...) {
    return nullptr;
  }
}

void aieo_context_free(aieo_context* ctx) { delete ctx; }

const char* aieo_last_error(const aieo_context* ctx) {
  return ctx ? ctx->error.c_str() : "null context";
}

void aieo_set_budget(aieo_context* ctx, unsigned long long budget) {
  if (ctx) ctx->budget = budget;
}

unsigned long long aieo_budget(const aieo_context* ctx) {
  return ctx ? ctx->budget : 0;
}

aieo_status aieo_load_lexicon(aieo_context* ctx, const char* text) {
  return guarded(ctx, [&] {
    require(text, "null lexicon text");
    aieo::Lexicon copy = ctx->lexicon;
    copy.load(text);
    ctx->lexicon = std::move(copy);
  });
}

void aieo_string_free(char* s) { std::free(s); }

aieo_status aieo_formula_parse(aieo_context* ctx, const char* text,
                               aieo_formula** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    *out = new aieo_formula{aieo::parse_formula(text)};
  });
}

void aieo_formula_free(aieo_formula* f) { delete f; }

aieo_formula* aieo_formula_clone(const aieo_formula* f) {
  return f ? new aieo_formula{f->f} : nullptr;
}

aieo_status aieo_formula_print(aieo_context* ctx, const aieo_formula* f,
                               char** out) {
  return guarded(ctx, [&] {
    require(f, "null formula");
    put(out, aieo::to_string(f->f));
  });
}

aieo_status aieo_formula_tree(aieo_context* ctx, const aieo_formula* f,
                              char** out) {
  return guarded(ctx, [&] {
    require(f, "null formula");
    put(out, aieo::to_tree(f->f));
  });
}

aieo_status aieo_formula_json(aieo_context* ctx, const aieo_formula* f,
                              char** out) {
  return guarded(ctx, [&] {
    require(f, "null formula");
    put(out, aieo::formula_to_json(f->f).dump());
  });
}

aieo_status aieo_formula_free_vars(aieo_context* ctx, const aieo_formula* f,
                                   char** out) {
  return guarded(ctx, [&] {
    require(f, "null formula");
    std::string s;
    for (const auto& v : aieo::free_vars(f->f)) s += (s.empty() ? "" : " ") + v;
    put(out, s);
  });
}

aieo_status aieo_formula_dual_normalize(aieo_context* ctx, const aieo_formula* f,
                                        aieo_formula** out) {
  return guarded(ctx, [&] {
    require(f && out, "null argument");
    *out = new aieo_formula{aieo::dual_normalize(f->f)};
  });
}

aieo_status aieo_formula_expand_quantifiers(aieo_context* ctx,
                                            const aieo_formula* f,
                                            aieo_formula** out) {
  return guarded(ctx, [&] {
    require(f && out, "null argument");
    *out = new aieo_formula{aieo::expand_quantifiers(f->f)};
  });
}

int aieo_formula_alpha_eq(const aieo_formula* a, const aieo_formula* b) {
  if (!a || !b) return 0;
  return aieo::alpha_eq(a->f, b->f) ? 1 : 0;
}

aieo_theory* aieo_theory_new(void) {
  try {
    return new aieo_theory();
  } catch (...) {
    return nullptr;
  }
}

void aieo_theory_free(aieo_theory* t) { delete t; }

aieo_status aieo_theory_add(aieo_context* ctx, aieo_theory* t,
                            const aieo_formula* f) {
  return guarded(ctx, [&] {
    require(t && f, "null argument");
    t->formulas.push_back(f->f);
  });
}

aieo_status aieo_theory_parse(aieo_context* ctx, aieo_theory* t,
                              const char* text) {
  return guarded(ctx, [&] {
    require(t && text, "null argument");
    std::vector<aieo::Formula> parsed;
    std::istringstream in(text);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        parsed.push_back(aieo::parse_formula(line));
      } catch (const aieo::Error& e) {
        throw aieo::Error(e.code(), "theory line " + std::to_string(n) + ": " + e.what());
      }
    }
    t->formulas.insert(t->formulas.end(), parsed.begin(), parsed.end());
  });
}

size_t aieo_theory_size(const aieo_theory* t) { return t ? t->formulas.size() : 0; }

aieo_status aieo_translate(aieo_context* ctx, const char* sentence,
                           aieo_mode mode, aieo_formula** out) {
  return guarded(ctx, [&] {
    require(sentence && out, "null argument");
    require(mode == AIEO_MODE_EPSILON || mode == AIEO_MODE_MONTAGUE, "unknown mode");
    auto m = mode == AIEO_MODE_EPSILON ? aieo::TranslationMode::Epsilon
                                       : aieo::TranslationMode::Montague;
    *out = new aieo_formula{aieo::translate(sentence, m, ctx->lexicon)};
  });
}

aieo_status aieo_entail(aieo_context* ctx, const aieo_theory* gamma,
                        const aieo_formula* phi, int bound, int* valid,
                        char** text, char** json) {
  return guarded(ctx, [&] {
    require(phi, "null formula");
    std::vector<aieo::Formula> hyps = theory_of(gamma);
    aieo::EntailmentVerdict v = aieo::entails(hyps, phi->f, {}, bound, ctx->budget);
    if (valid) *valid = v.valid ? 1 : 0;
    aieo::Json j = aieo::verdict_to_json(v, hyps, phi->f);
    if (text) {
      std::string t = v.valid ? "ValidUpTo(" + std::to_string(v.bound) + ")\n"
                              : "Countermodel\nmodel: " + j["model"].dump() + "\n";
      if (!v.valid && !v.assignment.empty())
        t += "assignment: " + j["assignment"].dump() + "\n";
      put(text, t);
    }
    put(json, j.dump(2));
  });
}

aieo_status aieo_prove_script(aieo_context* ctx, const char* script,
                              char** text, char** json) {
  return guarded(ctx, [&] {
    require(script, "null script");
    aieo::Derivation d = aieo::parse_proof_script(script);
    aieo::Sequent s = aieo::check_derivation(d);
    put(text, aieo::to_string(s) + "\n");
    aieo::Json j = {{"accepted", true},
                    {"end_sequent", aieo::sequent_to_json(s)},
                    {"nodes", aieo::derivation_size(d)}};
    put(json, j.dump(2));
  });
}

aieo_status aieo_square_check(aieo_context* ctx, const char* s, const char* p,
                              int negate_p, const aieo_theory* theory,
                              aieo_oracle oracle, int bound, int* all_ok,
                              char** text, char** json) {
  return guarded(ctx, [&] {
    require(s && p, "null predicate name");
    aieo::AieoSquare sq = aieo::build_square(s, p, negate_p != 0);
    auto o = make_oracle(ctx, oracle, theory, s, p, bound);
    aieo::SquareReport r = aieo::check_square(sq, *o);
    if (all_ok) *all_ok = r.all_ok() ? 1 : 0;
    put(text, aieo::render_square(r));
    put(json, aieo::square_report_to_json(r).dump(2));
  });
}

aieo_status aieo_bivalence(aieo_context* ctx, const char* s, const char* p,
                           const aieo_theory* theory, aieo_oracle oracle,
                           int bound, char** verdict, char** json) {
  return guarded(ctx, [&] {
    require(s && p, "null predicate name");
    auto o = make_oracle(ctx, oracle, theory, s, p, bound);
    aieo::BivalenceResult b = aieo::bivalence(s, p, *o);
    put(verdict, aieo::bivalence_name(b.verdict));
    put(json, aieo::bivalence_to_json(b).dump(2));
  });
}

aieo_status aieo_proposition_check(aieo_context* ctx, const char* s,
                                   const char* p, const aieo_theory* theory,
                                   aieo_oracle oracle, int bound, int* negated,
                                   int* all_ok, char** text, char** json) {
  return guarded(ctx, [&] {
    require(s && p, "null predicate name");
    auto o = make_oracle(ctx, oracle, theory, s, p, bound);
    aieo::PropositionResult r = aieo::proposition_check(s, p, *o);
    if (negated) *negated = r.negated ? 1 : 0;
    if (all_ok) *all_ok = r.report.all_ok() ? 1 : 0;
    std::string head = std::string("bivalence: ") +
                       aieo::bivalence_name(r.bivalence.verdict) + "\nchosen: " +
                       (r.negated ? "S(S,~P)" : "S(S,P)") + "\n\n";
    put(text, head + aieo::render_square(r.report));
    put(json, aieo::proposition_to_json(r).dump(2));
  });
}

aieo_status aieo_remark_check(aieo_context* ctx, int bound,
                              size_t random_quadruples, unsigned long long seed,
                              size_t* violations, char** json) {
  return guarded(ctx, [&] {
    aieo::RemarkOptions opts;
    opts.bound = bound;
    opts.random_quadruples = random_quadruples;
    opts.seed = seed;
    opts.theories = {{aieo::tau_to_eps_axiom()}, {aieo::eps_to_tau_axiom()}};
    aieo::RemarkReport r = aieo::remark_check(opts);
    if (violations) *violations = r.violations.size();
    put(json, aieo::remark_to_json(r).dump(2));
  });
}

aieo_status aieo_demo_inadequacy(aieo_context* ctx, int which, char** text,
                                 char** json) {
  return guarded(ctx, [&] {
    aieo::InadequacyReport r = aieo::demonstrate_inadequacy(which, ctx->lexicon);
    put(text, inadequacy_text(r));
    put(json, aieo::inadequacy_to_json(r).dump(2));
  });
}

}  // extern "C"
