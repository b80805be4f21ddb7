/*
 * C interface to the pentadiagonal transformation solvers.
 *
 * Objects are opaque handles created by penta_*_create/parse/load functions
 * and released with the matching *_free. Every fallible call returns a
 * penta_status; on failure a description is available from
 * penta_last_error() on the same thread. Indices are 0-based throughout.
 * Strings returned as char* are heap allocated; release them with
 * penta_string_free.
 */
#ifndef PENTA_PENTA_H
#define PENTA_PENTA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PENTA_API __declspec(dllexport)
#else
#  define PENTA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum penta_status {
    PENTA_OK = 0,
    PENTA_ERR_DIMENSION = 1,
    PENTA_ERR_INVALID_ORDER = 2,
    PENTA_ERR_INVALID_PADDING = 3,
    PENTA_ERR_PARSE = 4,
    PENTA_ERR_ZERO_PIVOT = 5,
    PENTA_ERR_SINGULAR = 6,
    PENTA_ERR_DIVISION_BY_ZERO = 7,
    PENTA_ERR_POLE_AT_ZERO = 8,
    PENTA_ERR_DEGREE_OVERFLOW = 9,
    PENTA_ERR_IO = 10,
    PENTA_ERR_INVALID_ARGUMENT = 11,
    PENTA_ERR_INTERNAL = 12
} penta_status;

typedef enum penta_algorithm {
    PENTA_PTRANS1 = 0,
    PENTA_PTRANS2 = 1,
    PENTA_SPTRANS1 = 2,
    PENTA_SPTRANS2 = 3,
    /* PTRANS-I, falling back to SPTRANS-I on a zero pivot. */
    PENTA_AUTO = 4
} penta_algorithm;

/* A pentadiagonal (or backward pentadiagonal) matrix with its right-hand side. */
typedef struct penta_system penta_system;
/* Result of one solve. */
typedef struct penta_report penta_report;

PENTA_API const char* penta_version(void);
PENTA_API const char* penta_status_name(penta_status status);
PENTA_API const char* penta_algorithm_name(penta_algorithm algorithm);
/* Accepts "ptrans1", "ptrans2", "sptrans1", "sptrans2", "auto". */
PENTA_API penta_status penta_algorithm_from_name(const char* name, penta_algorithm* out);

/* Message of the last failed call on this thread ("" if none). */
PENTA_API const char* penta_last_error(void);
/* Row of the pivot behind the last PENTA_ERR_ZERO_PIVOT on this thread. */
PENTA_API size_t penta_last_zero_pivot_index(void);
PENTA_API void penta_string_free(char* s);

/* ---- systems -------------------------------------------------------- */

/* All arrays have n entries, padding slots (a[n-1], b[n-2], b[n-1], c[0],
 * e[0], e[1]) must be zero. Values are taken at their exact binary value
 * for the symbolic algorithms. */
PENTA_API penta_status penta_system_create(size_t n, const double* d, const double* a, const double* b,
                                           const double* c, const double* e, const double* y,
                                           int backward, penta_system** out);
/* PENTA v1 text. */
PENTA_API penta_status penta_system_parse(const char* text, penta_system** out);
PENTA_API penta_status penta_system_load(const char* path, penta_system** out);
PENTA_API penta_status penta_system_save(const penta_system* system, const char* path);
/* Order-n member of the all-ones-solution test family, n >= 6. */
PENTA_API penta_status penta_system_example3(size_t n, penta_system** out);
PENTA_API void penta_system_free(penta_system* system);

PENTA_API size_t penta_system_order(const penta_system* system);
PENTA_API int penta_system_is_backward(const penta_system* system);
/* Copies the right-hand side into out[0..n). */
PENTA_API penta_status penta_system_rhs(const penta_system* system, double* out, size_t len);
/* y = A x for the system's matrix (the backward matrix when flagged). */
PENTA_API penta_status penta_system_matvec(const penta_system* system, const double* x, double* y,
                                           size_t len);
/* Determinant of the system's matrix. `value` receives the double result;
 * if `exact` is non-null it receives an exact fraction string computed in
 * rational arithmetic (release with penta_string_free). */
PENTA_API penta_status penta_system_determinant(const penta_system* system, double* value, char** exact);

/* ---- solving -------------------------------------------------------- */

/* PTRANS algorithms run in double precision, SPTRANS ones in exact
 * rational arithmetic. Backward systems are solved through their forward
 * companion and report det of the backward matrix. */
PENTA_API penta_status penta_solve(const penta_system* system, penta_algorithm algorithm, penta_report** out);
PENTA_API void penta_report_free(penta_report* report);

/* The algorithm that produced the solution (never PENTA_AUTO). */
PENTA_API penta_algorithm penta_report_algorithm(const penta_report* report);
PENTA_API size_t penta_report_size(const penta_report* report);
/* 1 when values are exact rationals (SPTRANS), 0 for doubles. */
PENTA_API int penta_report_is_exact(const penta_report* report);
PENTA_API penta_status penta_report_solution(const penta_report* report, double* out, size_t len);
PENTA_API double penta_report_determinant(const penta_report* report);
/* Doubles are rendered with 17 significant digits, exact values as
 * fractions, symbolic pivots as rational functions of p. */
PENTA_API char* penta_report_solution_str(const penta_report* report, size_t i);
PENTA_API char* penta_report_pivot_str(const penta_report* report, size_t i);
PENTA_API char* penta_report_determinant_str(const penta_report* report);
PENTA_API uint64_t penta_report_op_count(const penta_report* report);
PENTA_API size_t penta_report_rescued_count(const penta_report* report);
PENTA_API size_t penta_report_rescued_index(const penta_report* report, size_t k);
PENTA_API size_t penta_report_near_zero_count(const penta_report* report);
PENTA_API size_t penta_report_near_zero_index(const penta_report* report, size_t k);

#ifdef __cplusplus
}
#endif

#endif /* PENTA_PENTA_H */
