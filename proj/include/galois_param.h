#ifndef GALOIS_PARAM_H
#define GALOIS_PARAM_H

/* C interface to the non-parametricity toolkit. All inputs and outputs are
 * JSON text (UTF-8); polynomials are arrays of coefficient strings, lowest
 * degree first. Every function returning int yields GP_OK or an error code,
 * and writes a heap string to *out (JSON, or plain text when as_text is
 * nonzero). On error *out holds {"error":{"code":...,"message":...}}.
 * Release every returned string with gp_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#define GP_OK 0
#define GP_ERR_PARSE 1    /* malformed JSON, unknown token, bad parameter */
#define GP_ERR_DOMAIN 2   /* well-formed but mathematically inconsistent */
#define GP_ERR_CAP 3      /* enumeration or degree cap exceeded */
#define GP_ERR_INTERNAL 4

/* overall verdict of a check or case, written to *out_verdict when given */
#define GP_VERDICT_ESTABLISHED 0
#define GP_VERDICT_REFUTED 1
#define GP_VERDICT_SUPPORTED 2 /* empirically supported up to a prime bound */
#define GP_VERDICT_INCONCLUSIVE 3

const char* gp_version(void);
void gp_string_free(char* s);

/* kind: "sqrt" ({"radicand":[...]}) | "trinomial" ({"n":..,"m":..} with
 * optional "q","s", derived when absent) | "morse" ({"poly":[...]}) |
 * "cyclotomic" ({"n":..}) | "manual" (a full descriptor object).
 * Output: the validated extension descriptor. */
int gp_build(const char* kind, const char* params_json, int as_text, char** out);

/* descriptor_json may be inline JSON or a path to a file holding it (the
 * same goes for every *_json argument below). census_bound 0 means the
 * default (300). A branch-point t0 is reported as data, not an error:
 * {"separable":false,...}. */
int gp_specialize(const char* descriptor_json, const char* t0,
                  unsigned long long census_bound, int as_text, char** out);

/* criterion: "ih" | "bph" | "ic1" | "ic2" | "ic3" | "bpc" | "ramvar" |
 * "cor61" (e2_json ignored for cor61, required otherwise). prime_bound 0
 * and min_witnesses <= 0 select the defaults 10000 and 10. */
int gp_check(const char* criterion, const char* e1_json, const char* e2_json,
             unsigned long long prime_bound, long min_witnesses, int as_text,
             char** out, int* out_verdict);

/* params_json: JSON array of parameter strings or numbers, or NULL. */
int gp_case(const char* case_id, const char* params_json, int as_text,
            char** out, int* out_verdict);

/* JSON array of every known case id. */
int gp_case_ids(char** out);

/* group_spec: group JSON (see the descriptor wire format) or a short name:
 * S<n>, A<n>, D<n>, Z<n>, V4, PSL2(<p>). Output: order and class table. */
int gp_group_info(const char* group_spec, int as_text, char** out);

/* Census of primes dividing some value of the polynomial, up to the bound
 * (0 means 10000). */
int gp_primes(const char* poly_json, unsigned long long bound, int as_text,
              char** out);

#ifdef __cplusplus
}
#endif

#endif /* GALOIS_PARAM_H */
