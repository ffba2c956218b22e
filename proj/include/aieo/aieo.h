#ifndef AIEO_AIEO_H
#define AIEO_AIEO_H

/* C interface to the epsilon/tau workbench.
 *
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function. Every fallible call returns an aieo_status and, on
 * failure, leaves a message retrievable with aieo_last_error(ctx). Strings
 * returned through char** are heap-allocated; release them with
 * aieo_string_free. Output pointers may be NULL when the value is not
 * wanted. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(AIEO_BUILDING)
#define AIEO_API __declspec(dllexport)
#else
#define AIEO_API __declspec(dllimport)
#endif
#else
#define AIEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aieo_status {
  AIEO_OK = 0,
  AIEO_ERR_PARSE,
  AIEO_ERR_ARITY,
  AIEO_ERR_TYPE_MISMATCH,
  AIEO_ERR_UNBOUND_VARIABLE,
  AIEO_ERR_NOT_FIRST_ORDER,
  AIEO_ERR_NORMALIZATION_FUEL,
  AIEO_ERR_EIGENVARIABLE,
  AIEO_ERR_RULE_MISMATCH,
  AIEO_ERR_BUDGET_EXCEEDED,
  AIEO_ERR_HYPOTHESIS_NOT_MET,
  AIEO_ERR_UNRECOGNIZED_PATTERN,
  AIEO_ERR_UNKNOWN_WORD,
  AIEO_ERR_INVALID_MODEL,
  AIEO_ERR_INVALID_ARGUMENT,
  AIEO_ERR_INTERNAL
} aieo_status;

typedef enum aieo_mode {
  AIEO_MODE_EPSILON = 0,
  AIEO_MODE_MONTAGUE = 1
} aieo_mode;

typedef enum aieo_oracle {
  AIEO_ORACLE_BOUNDED = 0, /* every model up to the bound */
  AIEO_ORACLE_KERNEL = 1   /* the shipped derivation library */
} aieo_oracle;

typedef struct aieo_context aieo_context;
typedef struct aieo_formula aieo_formula;
typedef struct aieo_theory aieo_theory;

AIEO_API const char* aieo_status_name(aieo_status status);
AIEO_API const char* aieo_version(void);

AIEO_API aieo_context* aieo_context_new(void);
AIEO_API void aieo_context_free(aieo_context* ctx);
/* Message of the last failed call on ctx; "" when none. */
AIEO_API const char* aieo_last_error(const aieo_context* ctx);
/* Cap on the number of enumerated models (default 10^7). */
AIEO_API void aieo_set_budget(aieo_context* ctx, unsigned long long budget);
AIEO_API unsigned long long aieo_budget(const aieo_context* ctx);
/* Adds lexicon entries ("word : type [= term]" per line) to the built-ins. */
AIEO_API aieo_status aieo_load_lexicon(aieo_context* ctx, const char* text);

AIEO_API void aieo_string_free(char* s);

/* Formulas */
AIEO_API aieo_status aieo_formula_parse(aieo_context* ctx, const char* text,
                                        aieo_formula** out);
AIEO_API void aieo_formula_free(aieo_formula* f);
AIEO_API aieo_formula* aieo_formula_clone(const aieo_formula* f);
AIEO_API aieo_status aieo_formula_print(aieo_context* ctx,
                                        const aieo_formula* f, char** out);
/* S-expression of the syntax tree. */
AIEO_API aieo_status aieo_formula_tree(aieo_context* ctx, const aieo_formula* f,
                                       char** out);
AIEO_API aieo_status aieo_formula_json(aieo_context* ctx, const aieo_formula* f,
                                       char** out);
/* Space-separated free variables, sorted. */
AIEO_API aieo_status aieo_formula_free_vars(aieo_context* ctx,
                                            const aieo_formula* f, char** out);
AIEO_API aieo_status aieo_formula_dual_normalize(aieo_context* ctx,
                                                 const aieo_formula* f,
                                                 aieo_formula** out);
AIEO_API aieo_status aieo_formula_expand_quantifiers(aieo_context* ctx,
                                                     const aieo_formula* f,
                                                     aieo_formula** out);
AIEO_API int aieo_formula_alpha_eq(const aieo_formula* a,
                                   const aieo_formula* b);

/* Theories: ordered lists of formulas. */
AIEO_API aieo_theory* aieo_theory_new(void);
AIEO_API void aieo_theory_free(aieo_theory* t);
AIEO_API aieo_status aieo_theory_add(aieo_context* ctx, aieo_theory* t,
                                     const aieo_formula* f);
/* One formula per line; blank lines and '#' comments are skipped. */
AIEO_API aieo_status aieo_theory_parse(aieo_context* ctx, aieo_theory* t,
                                       const char* text);
AIEO_API size_t aieo_theory_size(const aieo_theory* t);

/* Controlled-English A/E/I/O sentences. */
AIEO_API aieo_status aieo_translate(aieo_context* ctx, const char* sentence,
                                    aieo_mode mode, aieo_formula** out);

/* gamma |= phi in every choice model up to `bound` elements. *valid is 1
 * for ValidUpTo(bound), 0 when a countermodel was found. */
AIEO_API aieo_status aieo_entail(aieo_context* ctx, const aieo_theory* gamma,
                                 const aieo_formula* phi, int bound,
                                 int* valid, char** text, char** json);

/* Checks a proof script. On success *text is the end-sequent; a rejected
 * derivation returns the kernel's status with the failing node's label, rule
 * and reason in aieo_last_error. */
AIEO_API aieo_status aieo_prove_script(aieo_context* ctx, const char* script,
                                       char** text, char** json);

/* Checks the square built from S and P (or ~P) under the theory. */
AIEO_API aieo_status aieo_square_check(aieo_context* ctx, const char* s,
                                       const char* p, int negate_p,
                                       const aieo_theory* theory,
                                       aieo_oracle oracle, int bound,
                                       int* all_ok, char** text, char** json);

/* Writes "LeftToRight", "RightToLeft", "Both" or "Neither" into *verdict. */
AIEO_API aieo_status aieo_bivalence(aieo_context* ctx, const char* s,
                                    const char* p, const aieo_theory* theory,
                                    aieo_oracle oracle, int bound,
                                    char** verdict, char** json);

/* Selects and checks the square; AIEO_ERR_HYPOTHESIS_NOT_MET when P is not
 * bivalent with respect to S. *negated is 1 when the ~P square was chosen. */
AIEO_API aieo_status aieo_proposition_check(aieo_context* ctx, const char* s,
                                            const char* p,
                                            const aieo_theory* theory,
                                            aieo_oracle oracle, int bound,
                                            int* negated, int* all_ok,
                                            char** text, char** json);

/* Checks the redundancy of conditions iii and iv over generated
 * quadruples, under the empty theory and both bivalence theories. */
AIEO_API aieo_status aieo_remark_check(aieo_context* ctx, int bound,
                                       size_t random_quadruples,
                                       unsigned long long seed,
                                       size_t* violations, char** json);

/* which = 1, 2 or 3. */
AIEO_API aieo_status aieo_demo_inadequacy(aieo_context* ctx, int which,
                                          char** text, char** json);

#ifdef __cplusplus
}
#endif

#endif /* AIEO_AIEO_H */
