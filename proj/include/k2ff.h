/*
 * C API for the k2ff library: exact quadratic Dirichlet L-functions,
 * K2 group orders, and mean-value experiments over F_q[T].
 *
 * All functions return a k2ff_status; on failure a thread-local message is
 * available through k2ff_last_error(). Strings returned through out
 * parameters are heap-allocated and must be released with k2ff_string_free().
 */
#ifndef K2FF_H
#define K2FF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k2ff_status {
    K2FF_OK = 0,
    K2FF_ERR_INVALID = 1,  /* bad arguments, parse error, precondition violated */
    K2FF_ERR_BUDGET = 2,   /* estimated work exceeds the configured budget */
    K2FF_ERR_INTERNAL = 3, /* internal consistency check failed */
} k2ff_status;

const char* k2ff_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* k2ff_last_error(void);

void k2ff_string_free(char* s);

/* Parse a polynomial (expression or comma form) and return its canonical
 * expression form. */
k2ff_status k2ff_poly_canonical(uint32_t q, const char* text, char** out);

/* Kronecker symbol (top/bottom); *out is -1, 0 or +1. */
k2ff_status k2ff_symbol(uint32_t q, const char* top, const char* bottom, int* out);

/* L-polynomial coefficients c_0..c_{2g} of L(s, chi_D), comma-joined. */
k2ff_status k2ff_lpoly(uint32_t q, const char* d_expr, char** out_coeffs);

/* #K2(O_D) = q^{3g} L(2, chi_D) as a decimal integer string. */
k2ff_status k2ff_k2_order(uint32_t q, const char* d_expr, char** out_order);

/* Truncated Euler product. which is "P" (uses s) or "c2" (s ignored).
 * out_value is a fixed-point decimal with `digits` fractional digits;
 * out_tail_bound is an exact rational string. */
k2ff_status k2ff_euler(uint32_t q, const char* which, int s, double rel_err, int digits,
                       char** out_value, int* out_truncation_degree,
                       char** out_tail_bound);

typedef struct k2ff_options {
    int workers;          /* >= 1 */
    uint64_t work_budget; /* estimated symbol evaluations; 0 = default */
    int use_sieve;        /* 0 forces the direct Euclidean-symbol path */
    double rel_err;       /* Euler truncation target; 0 = default 1e-12 */
    double rh_tol;        /* root-modulus tolerance; 0 = default 1e-6 */
} k2ff_options;

/* Fills in the documented defaults. */
void k2ff_options_init(k2ff_options* opts);

typedef struct k2ff_verify_params {
    int g;         /* -1: sweep 0..g_max */
    int g_max;     /* default 2 */
    int n_max;     /* lemma2 range, default 8 */
    int max_deg_f; /* lemma3 / pv modulus degree, default 3 */
    const char* f; /* lemma1 modulus expression, NULL for the default sweep */
} k2ff_verify_params;

void k2ff_verify_params_init(k2ff_verify_params* params);

/* Opaque collection of experiment reports. */
typedef struct k2ff_reports k2ff_reports;

/* what: lemma1|lemma2|lemma3|pv|fe|rh|square-term|nonsquare-term|all */
k2ff_status k2ff_verify(uint32_t q, const char* what, const k2ff_verify_params* params,
                        const k2ff_options* opts, k2ff_reports** out);

/* Mean of #K2(O_D) over H(q, g) plus the L-value mean, two reports. */
k2ff_status k2ff_average(uint32_t q, int g, const k2ff_options* opts, k2ff_reports** out);

/* All-squarefree family of odd degree M. */
k2ff_status k2ff_rosen(uint32_t q, int M, const k2ff_options* opts, k2ff_reports** out);

/* Side-by-side constants and per-g ratios up to g_max. */
k2ff_status k2ff_table(uint32_t q, int g_max, const k2ff_options* opts, k2ff_reports** out);

size_t k2ff_reports_count(const k2ff_reports* reports);
int k2ff_reports_all_pass(const k2ff_reports* reports);

/* format: "text", "csv" or "json". */
k2ff_status k2ff_reports_render(const k2ff_reports* reports, const char* format,
                                int decimal_digits, char** out);

void k2ff_reports_free(k2ff_reports* reports);

#ifdef __cplusplus
}
#endif

#endif /* K2FF_H */
