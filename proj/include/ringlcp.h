#ifndef RINGLCP_H
#define RINGLCP_H

/* C interface to the ringlcp library: linear codes over finite rings,
 * complementary-pair (LCP) checks, duals, distances, projection idempotents,
 * code equivalence, and the bundled-example reproduction suite.
 *
 * Conventions:
 *   - Every function returns RINGLCP_OK (0) on success or a nonzero status
 *     code; ringlcp_last_error() then carries a message for the calling
 *     thread.
 *   - Output strings (`char** out`) are heap-allocated UTF-8 and must be
 *     released with ringlcp_string_free(). Handles are released with their
 *     matching _free function. All _free functions accept NULL.
 *   - `budget_json` is NULL or "" for environment defaults (RINGLCP_BUDGET,
 *     RINGLCP_THREADS), else a JSON object with any of: scan_cap,
 *     distance_cap, sampling, sample_count, seed, threads, timings.
 *     Unknown members are rejected.
 *   - Handles are immutable after creation and may be shared between
 *     threads; a code handle keeps its ring handle's algebra alive, so the
 *     ring handle may be freed first.
 */

#if defined(_WIN32)
#define RINGLCP_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RINGLCP_API __attribute__((visibility("default")))
#else
#define RINGLCP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  RINGLCP_OK = 0,
  RINGLCP_EINVAL = 1,       /* malformed spec or argument */
  RINGLCP_EBUDGET = 2,      /* an exact scan exceeded the configured budget */
  RINGLCP_EUNSUPPORTED = 3, /* outside the supported ring class */
  RINGLCP_EINTERNAL = 4     /* cross-check failure inside the library */
};

typedef struct ringlcp_ring ringlcp_ring;
typedef struct ringlcp_code ringlcp_code;

RINGLCP_API const char* ringlcp_version(void);

/* Message of the most recent failure on the calling thread; "" if the last
 * call succeeded. The pointer stays valid until the thread's next call. */
RINGLCP_API const char* ringlcp_last_error(void);

/* Releases an output string. */
RINGLCP_API void ringlcp_string_free(char* s);

/* ---------- rings ---------- */

/* Builds a ring from configuration text (JSON or the TOML subset; see
 * README). `filename_hint` selects the format by extension and seeds the
 * diagnostics; pass NULL to sniff the format from the text. */
RINGLCP_API int ringlcp_ring_from_spec(const char* spec_text, const char* filename_hint,
                           ringlcp_ring** out);

/* Builds one of the presets: "field(q)", "ut2(q)", "blockpair(q)",
 * "mat2(q)", "t2(q)". */
RINGLCP_API int ringlcp_ring_from_preset(const char* preset, ringlcp_ring** out);

RINGLCP_API void ringlcp_ring_free(ringlcp_ring* ring);

/* Structural report on the ring: dimension, cardinality, commutativity,
 * locality, Jacobson radical basis and nilpotency index, socle dimensions,
 * residue data, unit count (when enumerable within budget), and the
 * Frobenius-necessary certificate. */
RINGLCP_API int ringlcp_ring_info_json(const ringlcp_ring* ring, const char* budget_json,
                           char** out_json);

/* ---------- codes ---------- */

/* Builds a code over `ring` from configuration text: {ring?, n, generators}
 * with entries that are element literals, integers, or coordinate arrays.
 * A `ring` member inside the spec must present the same ring. */
RINGLCP_API int ringlcp_code_from_spec(const ringlcp_ring* ring, const char* spec_text,
                           const char* filename_hint, ringlcp_code** out);

RINGLCP_API void ringlcp_code_free(ringlcp_code* code);

/* ---------- reports ---------- */

/* Runs the complementary-pair criteria and emits the full report
 * {ring, criteria, consistent, security}. `methods_csv` is NULL or "all"
 * for every criterion, else a comma list drawn from: definition,
 * pi_reduction, parity_product, generator_stack, structural,
 * injective_hull. */
RINGLCP_API int ringlcp_check_lcp_json(const ringlcp_code* c, const ringlcp_code* d,
                           const char* methods_csv, const char* budget_json,
                           char** out_json);

/* Dual (left annihilator) of the code: length, dimension, cardinality,
 * generator rows, and its minimum distance when within budget. */
RINGLCP_API int ringlcp_dual_json(const ringlcp_code* code, const char* budget_json,
                      char** out_json);

/* Minimum Hamming distance; fails EINVAL on the zero code. */
RINGLCP_API int ringlcp_min_distance(const ringlcp_code* code, const char* budget_json,
                         int* out_distance);

/* Security parameters of a complementary pair: {d_C, d_D_dual}. */
RINGLCP_API int ringlcp_security_json(const ringlcp_code* c, const ringlcp_code* d,
                          const char* budget_json, char** out_json);

/* Projection idempotent attached to a decomposition R^n = C (+) D:
 * {e, E, e_squared}. Fails EINVAL when the pair is not complementary. */
RINGLCP_API int ringlcp_idempotent_json(const ringlcp_code* c, const ringlcp_code* d,
                            const char* budget_json, char** out_json);

/* Coordinate-equivalence search between two codes viewed as tuple sets:
 * {kind, permutation, scalars, checked_basis_size}. */
RINGLCP_API int ringlcp_equivalence_json(const ringlcp_code* c, const ringlcp_code* d,
                             const char* budget_json, char** out_json);

/* Duality pipeline on a complementary pair: constructs (or accepts) the
 * projection idempotent, checks the dual row formula, and searches for
 * equivalences between each code and the other's dual. `supplied_e_json`
 * is NULL to construct the projection, else a JSON array of rows of
 * element literals for an idempotent to analyze. */
RINGLCP_API int ringlcp_duality_json(const ringlcp_code* c, const ringlcp_code* d,
                         const char* supplied_e_json, const char* budget_json,
                         char** out_json);

/* ---------- bundled examples ---------- */

/* Re-evaluates the bundled worked examples claim by claim.
 * `examples_csv` is NULL or "all" for every example, else a comma list of
 * ids (see ringlcp_example_ids). `q_sweep_csv` is NULL for the default
 * sweep, else a comma list of primes applied to the swept example. */
RINGLCP_API int ringlcp_reproduce_json(const char* examples_csv, const char* q_sweep_csv,
                           const char* budget_json, char** out_json);
RINGLCP_API int ringlcp_reproduce_text(const char* examples_csv, const char* q_sweep_csv,
                           const char* budget_json, char** out_text);

/* Comma list of the bundled example ids. */
RINGLCP_API int ringlcp_example_ids(char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* RINGLCP_H */
