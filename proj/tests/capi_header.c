/* The public header must compile as C and the library must link from C. */
#include <stdio.h>
#include <string.h>

#include "aieo/aieo.h"

int main(void) {
  aieo_context* ctx = aieo_context_new();
  aieo_formula* f = NULL;
  char* text = NULL;
  int ok = aieo_formula_parse(ctx, "P(tau x. S(x))", &f) == AIEO_OK &&
           aieo_formula_print(ctx, f, &text) == AIEO_OK &&
           strcmp(text, "P(tau x. S(x))") == 0;
  aieo_string_free(text);
  aieo_formula_free(f);
  aieo_context_free(ctx);
  puts(ok ? "ok" : "failed");
  return ok ? 0 : 1;
}
