/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the lathom library: homological invariants of incidence
 * algebras of finite posets.  All functions are thread-safe as long as a
 * given lathom_poset is not used from two threads at once; error messages
 * are stored per thread and retrieved with lathom_last_error().
 *
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with lathom_string_free().
 */

#ifndef LATHOM_H
#define LATHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LATHOM_OK = 0,
  LATHOM_CHECK_FAILED = 1,   /* a verification check failed (report still produced) */
  LATHOM_PARSE_ERROR = 2,    /* malformed input text */
  LATHOM_SEMANTIC_ERROR = 3, /* well-formed input violating a precondition */
  LATHOM_INTERNAL_ERROR = 4  /* library bug or resource failure */
} lathom_status;

typedef struct lathom_poset lathom_poset;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* lathom_version(void);

/* Message for the most recent failure on this thread; empty when none.
 * Static thread-local storage; do not free. */
const char* lathom_last_error(void);

/* Parse {"elements": [...], "covers": [[a, b], ...]} into a poset. */
lathom_status lathom_poset_parse_json(const char* text, lathom_poset** out);
void lathom_poset_free(lathom_poset* p);
int lathom_poset_size(const lathom_poset* p);

/* field: "q" for the rationals or "fp:<prime>"; output: "text" or "json". */

/* Structure diagnostics plus the full homological profile. */
lathom_status lathom_analyze(const lathom_poset* p, const char* field, const char* output,
                             char** report);

/* Minimal projective resolution, injective coresolution and Bass row of one
 * module; selector has the form "kind:label" with kind one of simple,
 * projective, injective. */
lathom_status lathom_resolve(const lathom_poset* p, const char* field, const char* selector,
                             const char* output, char** report);

/* Run the verification checklist.  budget caps the linear-extension
 * enumeration behind the order-dimension oracle (checks that exceed it are
 * reported as skipped); timings toggles per-check millisecond fields in
 * JSON output.  *all_passed is set to 1 when no check failed.  Returns
 * LATHOM_CHECK_FAILED, with the report still written, when one did. */
lathom_status lathom_verify(const lathom_poset* p, const char* field, long budget,
                            int timings, const char* output, char** report,
                            int* all_passed);

/* Verification sweep over every poset with exactly n elements (n <= 6). */
lathom_status lathom_sweep(int n, const char* field, long budget, int timings,
                           const char* output, char** report, int* all_passed);

void lathom_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LATHOM_H */
