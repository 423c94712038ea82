#ifndef FVA_H
#define FVA_H

/*
 * fva - exact verification toolkit for characteristic-p vanishing failures
 * and non-Cohen-Macaulay quotient singularities.
 *
 * All functions return a status code; output strings are allocated by the
 * library and must be released with fva_string_free.  Reports are opaque
 * handles released with fva_report_free.  On error, fva_last_error() holds a
 * thread-local message valid until the next call on the same thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fva_status {
    FVA_OK = 0,
    FVA_ERR_INVALID_ARGUMENT = 1, /* malformed input */
    FVA_ERR_DOMAIN = 2,           /* input outside the operation's domain */
    FVA_ERR_UNSUPPORTED = 3,      /* e.g. DOT rendering of a report with no graph */
    FVA_ERR_INTERNAL = 4
} fva_status;

typedef enum fva_format {
    FVA_FORMAT_JSON = 0,
    FVA_FORMAT_MARKDOWN = 1,
    FVA_FORMAT_DOT = 2
} fva_format;

/* Flags for fva_verify_run / fva_sweep_run. */
#define FVA_VERIFY_SEEDLESS 0x1u   /* omit the timing field: byte-stable output */
#define FVA_VERIFY_ALL_CHARTS 0x2u /* dim3: recompute every translated chart */

typedef struct fva_report fva_report;

const char* fva_version(void);
const char* fva_last_error(void);
void fva_string_free(char* s);

/* Weyl dimension of the Schur module for the dominant weight (coeffs in the
 * fundamental-weight basis, len = n-1); decimal string out. */
fva_status fva_weyl_dim(int n, const long long* coeffs, size_t len, char** out_decimal);

/* Euler characteristic of an arbitrary weight on the full flag variety. */
fva_status fva_euler_char(int n, const long long* coeffs, size_t len, char** out_decimal);

/* Summary of G/P for the parabolic function given as comma-separated values
 * ("1,0,inf,..."; one per simple root): dimension, Picard data, -K, Fano
 * verdict, divisibility.  JSON string out. */
fva_status fva_gp_info(int n, unsigned long long p, const char* f_values_csv, char** out_json);

/* Run a verification target: thm21 | thm31 | dim3 | yasuda.
 * p may be 0 for dim3 (fixed at 2).  n_override > 0 applies to yasuda only. */
fva_status fva_verify_run(const char* target, unsigned long long p, int n_override,
                          unsigned flags, fva_report** out);

/* Run both theorem families over every prime <= max_p. */
fva_status fva_sweep_run(unsigned long long max_p, unsigned flags, fva_report** out);

/* 1 = every asserted fact passed, 0 = some failed, -1 = null handle. */
int fva_report_passed(const fva_report* r);

fva_status fva_report_render(const fva_report* r, fva_format fmt, char** out);

void fva_report_free(fva_report* r);

#ifdef __cplusplus
}
#endif

#endif /* FVA_H */
