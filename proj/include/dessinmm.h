#ifndef DESSINMM_H
#define DESSINMM_H

/* C interface to the dessin matrix-model library.
 *
 * Conventions:
 *  - every function returning dmm_status leaves a human-readable message in
 *    dmm_last_error() on failure (thread-local, overwritten by the next call)
 *  - char** outputs receive a malloc'd NUL-terminated string; release it with
 *    dmm_string_free
 *  - the *_json entry points take a JSON request and return a JSON response;
 *    numbers in responses are strings: "num/den" where the value is exact,
 *    otherwise a decimal with 15 significant digits
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dmm_status {
  DMM_OK = 0,
  DMM_ERR_ARGUMENT = 1, /* invalid argument or inconsistent inputs */
  DMM_ERR_DOMAIN = 2,   /* evaluation outside the formula's domain, e.g. a weight pole */
  DMM_ERR_SCALE = 3,    /* request exceeds a supported size bound */
  DMM_ERR_NUMERIC = 4,  /* numerical breakdown, e.g. degenerate spectrum */
  DMM_ERR_PARSE = 5,    /* malformed text or JSON input */
  DMM_ERR_VERIFY = 6,   /* internal consistency check failed */
  DMM_ERR_INTERNAL = 7  /* unexpected failure */
} dmm_status;

/* library version, static storage */
const char* dmm_version(void);

/* message for the most recent failure on this thread, static until the next call */
const char* dmm_last_error(void);

/* free a string produced by any char** output */
void dmm_string_free(char* s);

/* ---- combinatorial maps ----------------------------------------------- */

/* opaque handle to a map given by its faces; letters i and -i are the two
 * sides of edge i */
typedef struct dmm_model dmm_model;

/* faces as a JSON array of integer arrays, e.g. [[1,2,-1,-2]], or an object
 * with a "faces" key holding that array */
dmm_status dmm_model_from_faces_json(const char* faces_json, dmm_model** out);

/* text form: one face per line, letters space-separated */
dmm_status dmm_model_from_text(const char* text, dmm_model** out);

void dmm_model_free(dmm_model* m);

/* the dual map: faces and vertices exchange */
dmm_status dmm_model_dual(const dmm_model* m, dmm_model** out);

/* JSON object: edges, faces, vertices (as cycles), counts, connectivity,
 * euler characteristic, genus, face/vertex profiles */
dmm_status dmm_model_stats_json(const dmm_model* m, char** out_json);

/* ---- branched-covering counts ----------------------------------------- */

/* request: {"euler": E, "profiles": [[3],[3]], "weight_m": M?, "N": "num/den"?,
 *           "d": D?, "oracle": bool?}
 * profiles entries are partitions as integer arrays; d is only needed when
 * profiles is empty; weight_m + N switch to the weighted count; oracle
 * recomputes by brute-force enumeration over the symmetric group.
 * response: {"euler", "d", "profiles", "value": "num/den", "decimal": "..."} */
dmm_status dmm_hurwitz_json(const char* request_json, char** out_json);

/* request: {"d": D} for the full table, or {"lambda": [..], "delta": [..]}
 * for a single value; optionally {"normalized": true} for the value scaled by
 * d! / (dim * z).
 * response: table form {"d", "labels": [..], "table": [[..]]} with exact
 * integer strings, or value form {"lambda", "delta", "value"} */
dmm_status dmm_characters_json(const char* request_json, char** out_json);

/* ---- expectation values ----------------------------------------------- */

/* request:
 *  {"formula": "trace"|"schur"|"schur-det"|"mixed"|"power"|"theorem",
 *   "faces": [[...]],           map under the expectation
 *   "sources": {"1": M, "-1": M, ...},  letter -> N x N matrix, row-major,
 *                               entries as numbers, [re,im] pairs, or exact
 *                               rational strings (all-rational sources enable
 *                               the exact path)
 *   "ensemble": "G,G,U",        one letter per edge, Gaussian or unitary
 *   "N": int?,                  defaults to the source matrix size
 *   "hbar": "num/den"?,         defaults to 1/N
 *   "side": "faces"|"vertices"?,
 *   "partitions": [[...]],      schur / power: one partition per word
 *   "alphas": [int,...],        schur-det only
 *   "deltas": [[...]], "mus": [[...]],   mixed only (prefix / suffix)
 *   "dmax": int?,               theorem only, default 8
 *   "weights": ["p:a;q:b;c:s", ...],     theorem only, one per word
 *   "points": ["infty"|"geom:a"|"values:v1,v2", ...]  theorem only}
 * response: {"formula", "side", "model", "resolved", "value": {"re","im"},
 *            "exact", "series": [...], "notes", "zero_by_mismatch"} */
dmm_status dmm_expect_json(const char* request_json, char** out_json);

/* ---- tau functions ---------------------------------------------------- */

/* request:
 *  {"which": "scalar"|"xy"|"pp"|"xp"|"hciz"|"morozov",
 *   "r": "p:a1,a2;q:b1;c:s"?,   weight function, default "1"
 *   "n": int?, "cap": int?,     series order, default cap 12
 *   "x": c,                     scalar: evaluation point
 *   "X": [c,...], "Y": [c,...], xy / xp: spectra
 *   "p1": point, "p2": point,   pp: power-sum points as in expect
 *   "p": point,                 xp
 *   "alpha": c, "A": [c,...], "B": [c,...],   hciz
 *   "p": point, "pbar": point, "N": int?      morozov}
 * where c is a number, [re,im] pair, or rational string.
 * response: {"which", "resolved", "series": {"re","im"},
 *            "determinant": {"re","im"} | null, "discrepancy", "notes"} */
dmm_status dmm_tau_json(const char* request_json, char** out_json);

/* ---- closed form vs Monte Carlo --------------------------------------- */

/* request: {"suite": "lemmas"|"prop1"|"prop2"|"prop4"|"hciz"|"morozov"|"all",
 *           "N": int?, "samples": int?, "seed": int?, "workers": int?}
 * defaults: N 3, samples 200000, seed 42, workers from DMM_WORKERS or 1.
 * response: {"suite", "N", "samples", "seed", "workers", "cases": [
 *             {"name", "closed": {"re","im"}, "mc": {"re","im"},
 *              "stderr": {"re","im"}, "z": {"re","im"}, "samples",
 *              "inverted", "pass"}, ...], "all_pass"}
 * the call succeeds (DMM_OK) even when all_pass is false */
dmm_status dmm_verify_json(const char* request_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DESSINMM_H */
