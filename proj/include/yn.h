/* C interface to the exact symbolic engine for the deformed matrix algebra
 * over GF(p) and its shifted subalgebras.
 *
 * All functions return a yn_status. On any non-zero status a human-readable
 * message is available from yn_last_error() (thread-local). Strings returned
 * through out-parameters are heap-allocated and must be released with
 * yn_string_free().
 */
#ifndef YN_H
#define YN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum yn_status {
  YN_OK = 0,
  YN_ERR_INVALID = 1,    /* bad arguments: unknown family, index out of range... */
  YN_ERR_PRECISION = 2,  /* requested coefficient beyond the truncation order */
  YN_ERR_INTERNAL = 3,   /* internal invariant violation */
  YN_NOT_CENTRAL = 4,    /* certification found a nonzero commutator */
  YN_CHECK_FAILED = 5    /* a verification suite reported failures */
} yn_status;

/* Opaque handle holding the (n, p) context and a truncation order. */
typedef struct yn_engine yn_engine;

/* Creates an engine for n x n generators over GF(p) with series kept exact up
 * to u^-trunc. Returns NULL on invalid arguments (see yn_last_error()). */
yn_engine* yn_engine_create(int n, long p, int trunc);
void yn_engine_destroy(yn_engine* e);

/* Message for the most recent failure on this thread; never NULL. */
const char* yn_last_error(void);

void yn_string_free(char* s);

/* Computes a member of one of the distinguished families:
 *   "C"  column-shifted determinant series        (no indices)
 *   "B"  diagonal p-fold product                  (index i)
 *   "BC" staggered product of all B_i             (no indices)
 *   "P"  p-th power of the upper root series      (indices i < j)
 *   "Q"  p-th power of the lower root series      (indices i < j)
 *   "S"  entrywise p-fold generator product       (indices i, j)
 *   "A"  p-fold product of the simple-root ratio  (index i < n)
 *   "E"  upper root coefficient, optionally shifted by sigma (indices i < j)
 *   "F"  lower root coefficient, optionally shifted by sigma (indices i < j)
 * r >= 0 selects the u^-r coefficient ("E"/"F" require r >= 1); r < 0 returns
 * the whole series (not supported for "E"/"F").
 * sigma_json is an optional shift matrix as {"rows":[[...],...]} or
 * {"upper":[...],"lower":[...]}; pass NULL for no shift (only "E"/"F" use it).
 * as_json != 0 emits canonical JSON, otherwise a plain-text expression
 * (series in text mode print one "r: expression" line per coefficient). */
yn_status yn_compute(yn_engine* e, const char* family, int i, int j, int r,
                     const char* sigma_json, int as_json, char** out);

/* Commutes the element given as text ("2 * T[1,2,1]^2 + 1") or element JSON
 * against every generator T[k,l,s] with s <= smax. Returns YN_OK and a
 * {"certified":true} payload, or YN_NOT_CENTRAL with the first failing
 * bracket: {"certified":false,"witness":{"k":..,"l":..,"s":..,"bracket":..}}. */
yn_status yn_certify(yn_engine* e, const char* element, int smax, char** out);

/* Triangular factorization of the generator matrix: JSON
 * {"n":..,"trunc":..,"F":[[series,..],..],"D":[...],"E":[...]}. */
yn_status yn_gauss(yn_engine* e, char** out);

/* Runs a named verification suite: drinfeld | gauss-identities | center |
 * graded | serieslab | shifted | all. Writes the sorted JSON report
 * {config, checks:[{name, params, status, witness?}]} and returns YN_OK if
 * every check passed, YN_CHECK_FAILED otherwise (the report is still written).
 * sigma_json optionally overrides the shift matrix used by the shifted suite. */
yn_status yn_verify(yn_engine* e, const char* suite, int smax, unsigned seed,
                    const char* sigma_json, char** out);

/* Reference tables for the structured series products: frozen small-prime
 * expansions and the closed-form/product agreement report, as JSON. */
yn_status yn_lab(yn_engine* e, char** out);

#ifdef __cplusplus
}
#endif

#endif /* YN_H */
