/* C interface to the covera engine: exact covering/packing bound
 * computation, design construction and verification, paper-table
 * generation, and the small exhaustive search oracle.
 *
 * All functions return COVERA_OK or an error code; covera_last_error()
 * describes the most recent failure on the calling thread. Strings handed
 * out through char** are heap-allocated and must be released with
 * covera_string_free(). Handles are opaque and freed with their matching
 * *_free function.
 */

#ifndef COVERA_H
#define COVERA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define COVERA_OK 0
#define COVERA_ERR_INVALID 1    /* bad argument or precondition */
#define COVERA_ERR_TRIVIAL 2    /* parameters outside 3 <= k < v, lambda >= 1 */
#define COVERA_ERR_PARSE 3      /* malformed design text */
#define COVERA_ERR_BUDGET 4     /* search budget exhausted */
#define COVERA_ERR_SOUNDNESS 5  /* a certified relation failed on concrete data */
#define COVERA_ERR_IO 6         /* file system failure */
#define COVERA_ERR_INTERNAL 7

#define COVERA_SIDE_COVER 0
#define COVERA_SIDE_PACK 1

#define COVERA_FORMAT_HUMAN 0
#define COVERA_FORMAT_TSV 1
#define COVERA_FORMAT_JSONL 2

#define COVERA_KIND_NEITHER 0
#define COVERA_KIND_COVERING 1
#define COVERA_KIND_PACKING 2
#define COVERA_KIND_EXACT_DESIGN 3

typedef struct covera_params covera_params;
typedef struct covera_report covera_report;
typedef struct covera_design covera_design;

const char* covera_version(void);

/* Thread-local message for the last failing call; never NULL. */
const char* covera_last_error(void);

void covera_string_free(char* s);

/* ---- parameter sets -------------------------------------------------- */

int covera_params_create(int64_t v, int64_t k, int64_t lambda, covera_params** out);
void covera_params_free(covera_params* p);

typedef struct covera_params_info {
    int64_t v, k, lambda;
    int64_t r_cov, d_cov, n_cov;
    int64_t r_pack, d_pack, n_pack;
} covera_params_info;

int covera_params_get(const covera_params* p, covera_params_info* out);

/* ---- bound reports --------------------------------------------------- */

int covera_report_create(const covera_params* p, int side, covera_report** out);
void covera_report_free(covera_report* r);

/* Best integer bound and its catalog name (name_buf may be NULL). */
int covera_report_best(const covera_report* r, int64_t* best, char* name_buf, size_t name_len);

/* Looks up one catalog entry by name (e.g. "thm_1_1"). applicable and
 * value may be NULL; value is meaningful only when applicable. exact
 * receives the pre-rounding value as a rational or surd string. */
int covera_report_entry(const covera_report* r, const char* bound, int* applicable,
                        int64_t* value, char** exact);

int covera_report_render(const covera_report* r, int format, char** out);

/* ---- tables ----------------------------------------------------------- */

/* Paper tables 1-4. k_max <= 0 selects the published default (12, 20, 13,
 * 147). refined compares tables 1-2 against the +1-refined Schonheim
 * bound. */
int covera_table_render(int table_no, int k_max, int lambda, int refined, int format, char** out);

/* ---- designs ----------------------------------------------------------- */

int covera_design_parse(const char* text, covera_design** out);
int covera_design_read(const char* path, covera_design** out);
int covera_design_render(const covera_design* d, char** out);
int covera_design_write(const covera_design* d, const char* path);
void covera_design_free(covera_design* d);

int covera_design_info(const covera_design* d, int64_t* v, int64_t* k, int64_t* lambda,
                       int64_t* blocks);
int covera_design_classify(const covera_design* d, int* kind);
int covera_design_bose_lower(const covera_design* d, int64_t* out);

/* Full soundness audit; report may be NULL. *sound is 1 when every
 * checked relation holds. Returns COVERA_OK even when unsound. */
int covera_design_verify(const covera_design* d, char** report, int* sound);

/* Weighted certificate premise on a point subset. weights is an array of
 * decimal/rational strings ("1", "2/3", ...) parallel to subset, or NULL
 * for all-ones. *holds is 1 when the premise holds for every point. */
int covera_certificate_check(const covera_design* d, const int64_t* subset, size_t subset_len,
                             const char* const* weights, int* holds);

/* ---- constructions ----------------------------------------------------- */

int covera_construct_plane(int64_t q, covera_design** out);
int covera_construct_blowup(int64_t q, int64_t s, covera_design** out);
int covera_construct_restrict(int64_t q, int64_t s, int64_t v_target, covera_design** out);

/* Interval of v certified to have covering number q^2+q; z is the exact
 * rational cutoff parameter (optional). */
int covera_exact_range(int64_t q, int64_t s, int64_t* v_lo, int64_t* v_hi, char** z);

/* ---- search oracle ----------------------------------------------------- */

/* Exact C_lambda(v,k) / D_lambda(v,k) for tiny parameters. max_nodes = 0
 * and max_seconds <= 0 mean unlimited. On COVERA_ERR_BUDGET, *value holds
 * the best block count seen so far for packings and -1 for coverings;
 * nothing is proven. witness (optional) receives an optimal design. */
int covera_search(int64_t v, int64_t k, int64_t lambda, int side, uint64_t max_nodes,
                  double max_seconds, int64_t* value, covera_design** witness);

#ifdef __cplusplus
}
#endif

#endif /* COVERA_H */
