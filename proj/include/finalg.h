/* Copyright 2026 the finalg authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the finalg shared library.
 *
 * Conventions:
 *   - Handles are opaque; free them with the matching *_free function.
 *   - Fallible calls return a finalg_status. On failure the thread-local
 *     message from finalg_last_error() describes what went wrong and output
 *     parameters are left untouched.
 *   - Functions with a char** output allocate the string with malloc; release
 *     it with finalg_string_free.
 */

#ifndef FINALG_H
#define FINALG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum finalg_status {
  FINALG_OK = 0,
  FINALG_PARSE_ERROR = 1,      /* malformed input text */
  FINALG_INVALID_ARGUMENT = 2, /* precondition violated (range, arity, ...) */
  FINALG_LIMIT_EXCEEDED = 3,   /* a resource guard refused the computation */
  FINALG_INTERNAL_ERROR = 4
} finalg_status;

typedef struct finalg_algebra finalg_algebra;
typedef struct finalg_lattice finalg_lattice;

const char* finalg_version(void);

/* Thread-local message describing the most recent failure in this thread. */
const char* finalg_last_error(void);

void finalg_string_free(char* s);

/* Overrides every size guard of the library (UA_MAX_SIZE equivalent);
 * cap <= 0 restores the defaults. */
void finalg_set_max_size(int cap);

/* ----- algebras ----- */

finalg_status finalg_algebra_parse(const char* text, finalg_algebra** out);
finalg_status finalg_algebra_read_file(const char* path, finalg_algebra** out);
void finalg_algebra_free(finalg_algebra* a);

int finalg_algebra_size(const finalg_algebra* a);
/* Borrowed pointer, valid while the handle lives. */
const char* finalg_algebra_name(const finalg_algebra* a);
finalg_status finalg_algebra_to_text(const finalg_algebra* a, char** out);

/* ----- congruence lattice ----- */

finalg_status finalg_lattice_compute(const finalg_algebra* a, finalg_lattice** out);
void finalg_lattice_free(finalg_lattice* l);

int finalg_lattice_size(const finalg_lattice* l);
/* Canonical partition string of congruence `index` (canonical order). */
finalg_status finalg_lattice_congruence(const finalg_lattice* l, int index, char** out);
int finalg_lattice_cover_count(const finalg_lattice* l);
finalg_status finalg_lattice_cover(const finalg_lattice* l, int index, int* lower, int* upper);
finalg_status finalg_lattice_dot(const finalg_lattice* l, char** out);
finalg_status finalg_lattice_json(const finalg_lattice* l, char** out);
finalg_status finalg_lattice_text(const finalg_lattice* l, char** out);

/* ----- analysis ----- */

finalg_status finalg_analyze_json(const finalg_algebra* a, char** out);
finalg_status finalg_analyze_text(const finalg_algebra* a, char** out);

/* ----- quotients ----- */

/* partition uses the canonical syntax, e.g. "0|1 2 3", and must be a
 * congruence of a. */
finalg_status finalg_quotient(const finalg_algebra* a, const char* partition,
                              finalg_algebra** out);

/* ----- term checks -----
 * holds receives 1 or 0. Terms use the textual syntax name(arg,...) with
 * variables x, y, z, x0..x9. */

/* lhs ≈ rhs over all assignments. When the identity fails and counterexample
 * is non-NULL, it receives a string such as "x=0 y=1". */
finalg_status finalg_check_identity(const finalg_algebra* a, const char* lhs, const char* rhs,
                                    int* holds, char** counterexample);

/* All terms agree at (x,y) exactly when x = y. */
finalg_status finalg_check_diagonal(const finalg_algebra* a, const char* const* terms,
                                    size_t count, int* holds);

/* All terms equal `unit` at (x,y) exactly when x = y. */
finalg_status finalg_check_unit_separation(const finalg_algebra* a, int unit,
                                           const char* const* terms, size_t count, int* holds);

/* f(v(x),...,v(x)) = v(x) for every operation f; v uses at most one
 * variable. */
finalg_status finalg_check_closed_image(const finalg_algebra* a, const char* term, int* holds);

/* ----- search -----
 * signature: "op <name> <arity>" groups separated by ';'.
 * mode_exhaustive != 0 enumerates all tables (seed/random_count ignored);
 * otherwise `random_count` seed-deterministic samples are drawn.
 * require/forbid name predicates: rees, quasi-rees, obp, uniform, directoid,
 * idempotent. witness_limit < 0 keeps every witness.
 * The result is a JSON document (schema version "v": 1). */
finalg_status finalg_search_json(const char* signature, int size, int mode_exhaustive,
                                 uint64_t seed, uint64_t random_count, int up_to_iso,
                                 long long witness_limit, const char* const* require,
                                 size_t require_count, const char* const* forbid,
                                 size_t forbid_count, char** out);
finalg_status finalg_search_text(const char* signature, int size, int mode_exhaustive,
                                 uint64_t seed, uint64_t random_count, int up_to_iso,
                                 long long witness_limit, const char* const* require,
                                 size_t require_count, const char* const* forbid,
                                 size_t forbid_count, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FINALG_H */
