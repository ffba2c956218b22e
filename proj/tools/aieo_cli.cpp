// aieo: command-line front end over the C API.
//
// Exit status: 0 when a result was produced, 1 when a requested verdict
// failed (or a proof was rejected), 2 on usage or input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aieo/aieo.h"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Context = std::unique_ptr<aieo_context, decltype(&aieo_context_free)>;
using FormulaPtr = std::unique_ptr<aieo_formula, decltype(&aieo_formula_free)>;
using TheoryPtr = std::unique_ptr<aieo_theory, decltype(&aieo_theory_free)>;

// Owns a string returned by the library.
struct Owned {
  char* p = nullptr;
  ~Owned() { aieo_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

// Input problems are usage errors; anything else is a failed verdict.
int exit_for(aieo_status s) {
  switch (s) {
    case AIEO_OK: return kOk;
    case AIEO_ERR_PARSE:
    case AIEO_ERR_UNRECOGNIZED_PATTERN:
    case AIEO_ERR_UNKNOWN_WORD:
    case AIEO_ERR_INVALID_ARGUMENT:
    case AIEO_ERR_INVALID_MODEL:
      return kUsage;
    default:
      return kVerdictFailed;
  }
}

struct Failure {
  int code;
};

void check(aieo_context* ctx, aieo_status s) {
  if (s == AIEO_OK) return;
  std::cerr << "aieo: " << aieo_status_name(s) << ": " << aieo_last_error(ctx) << "\n";
  throw Failure{exit_for(s)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Splits on commas outside parentheses: "P(x, y), Q(x)" is two formulas.
std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  std::vector<std::string> kept;
  for (auto& part : out)
    if (part.find_first_not_of(" \t") != std::string::npos) kept.push_back(part);
  return kept;
}

FormulaPtr parse(aieo_context* ctx, const std::string& text) {
  aieo_formula* f = nullptr;
  check(ctx, aieo_formula_parse(ctx, text.c_str(), &f));
  return FormulaPtr(f, aieo_formula_free);
}

std::string print(aieo_context* ctx, const aieo_formula* f) {
  Owned s;
  check(ctx, aieo_formula_print(ctx, f, s.out()));
  return s.str();
}

TheoryPtr load_theory(aieo_context* ctx, const std::string& path,
                      const std::vector<std::string>& inline_formulas) {
  TheoryPtr t(aieo_theory_new(), aieo_theory_free);
  if (!path.empty()) check(ctx, aieo_theory_parse(ctx, t.get(), read_file(path).c_str()));
  for (const auto& arg : inline_formulas)
    for (const auto& part : split_top_level(arg))
      check(ctx, aieo_theory_add(ctx, t.get(), parse(ctx, part).get()));
  return t;
}

aieo_oracle oracle_of(const std::string& name) {
  return name == "kernel" ? AIEO_ORACLE_KERNEL : AIEO_ORACLE_BOUNDED;
}

void apply_budget_env(aieo_context* ctx) {
  const char* env = std::getenv("AIEO_BUDGET");
  if (!env || !*env) return;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("bad AIEO_BUDGET: ") + env);
  aieo_set_budget(ctx, v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"epsilon/tau workbench"};
  app.require_subcommand(1);
  app.set_version_flag("--version", aieo_version());

  std::string formula_text;
  bool json = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a formula and show its structure");
  parse_cmd->add_option("formula", formula_text, "formula")->required();
  parse_cmd->add_flag("--json", json, "JSON syntax tree");

  bool dual = false, expand = false;
  auto* print_cmd = app.add_subcommand("print", "pretty-print a formula");
  print_cmd->add_option("formula", formula_text, "formula")->required();
  print_cmd->add_flag("--dual", dual, "rewrite eps terms as tau terms");
  print_cmd->add_flag("--expand", expand, "replace quantifiers with eps/tau terms");

  std::string sentence, mode = "epsilon", lexicon_path;
  auto* translate_cmd = app.add_subcommand("translate", "translate an A/E/I/O sentence");
  translate_cmd->add_option("sentence", sentence, "controlled-English sentence")->required();
  translate_cmd->add_option("--mode", mode, "epsilon or montague")
      ->check(CLI::IsMember({"epsilon", "montague"}));
  translate_cmd->add_option("--lexicon", lexicon_path, "extra lexicon entries")
      ->check(CLI::ExistingFile);
  translate_cmd->add_flag("--json", json, "JSON output");

  std::vector<std::string> gamma;
  std::string phi, theory_path;
  int bound = 3;
  bool expect_valid = false;
  auto* entail_cmd = app.add_subcommand("entail", "search for a countermodel up to a bound");
  entail_cmd->add_option("--gamma", gamma, "hypotheses, comma-separated or repeated");
  entail_cmd->add_option("--theory", theory_path, "file of hypotheses")
      ->check(CLI::ExistingFile);
  entail_cmd->add_option("--phi", phi, "goal formula")->required();
  entail_cmd->add_option("--bound", bound, "largest domain size")
      ->check(CLI::Range(1, 6));
  entail_cmd->add_flag("--expect-valid", expect_valid, "exit 1 on a countermodel");
  entail_cmd->add_flag("--json", json, "JSON output");

  std::string script_path;
  auto* prove_cmd = app.add_subcommand("prove", "check a proof script");
  prove_cmd->add_option("--script", script_path, "script file")
      ->required()
      ->check(CLI::ExistingFile);
  prove_cmd->add_flag("--json", json, "JSON output");

  std::string s_name, p_name, oracle = "bounded";
  bool negate_p = false, proposition = false, expect_square = false;
  auto* square_cmd = app.add_subcommand("square", "check a square of opposition");
  square_cmd->add_option("--s", s_name, "subject predicate")->required();
  square_cmd->add_option("--p", p_name, "predicate")->required();
  auto* negate_opt = square_cmd->add_flag("--negate-p", negate_p, "use ~P instead of P");
  square_cmd->add_option("--theory", theory_path, "theory file")
      ->check(CLI::ExistingFile);
  square_cmd->add_option("--bound", bound, "largest domain size")
      ->check(CLI::Range(1, 6));
  square_cmd->add_option("--oracle", oracle, "bounded or kernel")
      ->check(CLI::IsMember({"bounded", "kernel"}));
  square_cmd
      ->add_flag("--proposition", proposition,
                 "pick the square from the bivalence direction")
      ->excludes(negate_opt);
  square_cmd->add_flag("--expect-square", expect_square,
                       "exit 1 unless every condition holds");
  square_cmd->add_flag("--json", json, "JSON output");

  int which = 0;
  auto* demo_cmd = app.add_subcommand("demo-inadequacies",
                                      "show where standard translations fall short");
  demo_cmd->add_option("--which", which, "1, 2 or 3 (default: all)")
      ->check(CLI::Range(1, 3));
  demo_cmd->add_flag("--json", json, "JSON output");

  std::size_t random = 500;
  unsigned long long seed = 20240229;
  auto* remark_cmd = app.add_subcommand("remark",
                                        "check that conditions iii and iv are redundant");
  remark_cmd->add_option("--bound", bound, "largest domain size")
      ->check(CLI::Range(1, 3));
  remark_cmd->add_option("--random", random, "random quadruples");
  remark_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Context ctx(aieo_context_new(), aieo_context_free);
  if (!ctx) {
    std::cerr << "aieo: out of memory\n";
    return kVerdictFailed;
  }
  aieo_context* c = ctx.get();

  try {
    apply_budget_env(c);

    if (*parse_cmd) {
      FormulaPtr f = parse(c, formula_text);
      Owned out;
      if (json) {
        check(c, aieo_formula_json(c, f.get(), out.out()));
        std::cout << out.str() << "\n";
      } else {
        Owned fv;
        check(c, aieo_formula_tree(c, f.get(), out.out()));
        check(c, aieo_formula_free_vars(c, f.get(), fv.out()));
        std::cout << print(c, f.get()) << "\n" << out.str() << "\n";
        std::cout << "free:" << (fv.str().empty() ? "" : " " + fv.str()) << "\n";
      }
      return kOk;
    }

    if (*print_cmd) {
      FormulaPtr f = parse(c, formula_text);
      if (expand) {
        aieo_formula* g = nullptr;
        check(c, aieo_formula_expand_quantifiers(c, f.get(), &g));
        f.reset(g);
      }
      if (dual) {
        aieo_formula* g = nullptr;
        check(c, aieo_formula_dual_normalize(c, f.get(), &g));
        f.reset(g);
      }
      std::cout << print(c, f.get()) << "\n";
      return kOk;
    }

    if (*translate_cmd) {
      if (!lexicon_path.empty())
        check(c, aieo_load_lexicon(c, read_file(lexicon_path).c_str()));
      aieo_formula* raw = nullptr;
      check(c, aieo_translate(c, sentence.c_str(),
                              mode == "montague" ? AIEO_MODE_MONTAGUE : AIEO_MODE_EPSILON,
                              &raw));
      FormulaPtr f(raw, aieo_formula_free);
      if (json) {
        Owned tree;
        check(c, aieo_formula_json(c, f.get(), tree.out()));
        std::cout << tree.str() << "\n";
      } else {
        std::cout << print(c, f.get()) << "\n";
      }
      return kOk;
    }

    if (*entail_cmd) {
      TheoryPtr hyps = load_theory(c, theory_path, gamma);
      FormulaPtr goal = parse(c, phi);
      int valid = 0;
      Owned text, js;
      check(c, aieo_entail(c, hyps.get(), goal.get(), bound, &valid, text.out(),
                           js.out()));
      std::cout << (json ? js.str() + "\n" : text.str());
      return expect_valid && !valid ? kVerdictFailed : kOk;
    }

    if (*prove_cmd) {
      Owned text, js;
      check(c, aieo_prove_script(c, read_file(script_path).c_str(), text.out(),
                                 js.out()));
      std::cout << (json ? js.str() + "\n" : "accepted: " + text.str());
      return kOk;
    }

    if (*square_cmd) {
      TheoryPtr theory = load_theory(c, theory_path, {});
      int all_ok = 0;
      Owned text, js;
      if (proposition) {
        int negated = 0;
        check(c, aieo_proposition_check(c, s_name.c_str(), p_name.c_str(),
                                        theory.get(), oracle_of(oracle), bound,
                                        &negated, &all_ok, text.out(), js.out()));
      } else {
        check(c, aieo_square_check(c, s_name.c_str(), p_name.c_str(), negate_p ? 1 : 0,
                                   theory.get(), oracle_of(oracle), bound, &all_ok,
                                   text.out(), js.out()));
      }
      std::cout << (json ? js.str() + "\n" : text.str());
      return expect_square && !all_ok ? kVerdictFailed : kOk;
    }

    if (*demo_cmd) {
      std::vector<int> demos = which ? std::vector<int>{which} : std::vector<int>{1, 2, 3};
      std::string joined = "[";
      for (std::size_t i = 0; i < demos.size(); ++i) {
        Owned text, js;
        check(c, aieo_demo_inadequacy(c, demos[i], text.out(), js.out()));
        if (json) {
          joined += (i ? ",\n" : "\n") + js.str();
        } else {
          std::cout << (i ? "\n" : "") << text.str();
        }
      }
      if (json) std::cout << (which ? joined.substr(2) : joined + "\n]") << "\n";
      return kOk;
    }

    if (*remark_cmd) {
      std::size_t violations = 0;
      Owned js;
      check(c, aieo_remark_check(c, bound, random, seed, &violations, js.out()));
      std::cout << js.str() << "\n";
      return violations ? kVerdictFailed : kOk;
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const UsageError& e) {
    std::cerr << "aieo: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
