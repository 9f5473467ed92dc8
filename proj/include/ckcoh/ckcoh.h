#ifndef CKCOH_CKCOH_H
#define CKCOH_CKCOH_H

/*
 * C interface to the ckcoh library: exact second cohomology of Lie algebras
 * given by rational structure constants, and the classification of central
 * extensions of the Cayley-Klein unitary families su_w(N+1) and u_w(N+1).
 *
 * Conventions:
 *  - Every fallible call returns a ckcoh_status. On failure, the message is
 *    available from ckcoh_last_error() until the next call on the same
 *    thread.
 *  - Strings returned through char** are heap allocated and must be
 *    released with ckcoh_string_free().
 *  - family is "su" or "u". omega is a comma separated list of N entries,
 *    each '+', '-', '0' or a rational "p" / "p/q".
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CKCOH_BUILDING)
#    define CKCOH_API __declspec(dllexport)
#  else
#    define CKCOH_API __declspec(dllimport)
#  endif
#else
#  define CKCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ckcoh_status {
  CKCOH_OK = 0,
  CKCOH_INVALID_ARGUMENT = 1,
  CKCOH_LENGTH_MISMATCH = 2,
  CKCOH_NOT_COCYCLE = 3,
  CKCOH_INVALID_ALGEBRA = 4,
  CKCOH_CONSTRAINT = 5,
  CKCOH_VERIFICATION = 6,
  CKCOH_PARSE = 7,
  CKCOH_INTERNAL = 8
} ckcoh_status;

typedef enum ckcoh_format { CKCOH_TEXT = 0, CKCOH_JSON = 1 } ckcoh_format;

typedef struct ckcoh_algebra ckcoh_algebra;
typedef struct ckcoh_h2 ckcoh_h2;

CKCOH_API const char* ckcoh_version(void);
CKCOH_API const char* ckcoh_last_error(void);
CKCOH_API const char* ckcoh_status_name(ckcoh_status status);
CKCOH_API void ckcoh_string_free(char* s);

/* Algebras */
CKCOH_API ckcoh_status ckcoh_algebra_build(const char* family, int n, const char* omega,
                                           ckcoh_algebra** out);
/* Accepts the text or the JSON serialization. */
CKCOH_API ckcoh_status ckcoh_algebra_parse(const char* data, ckcoh_algebra** out);
/* Central extension by the cocycle with the given basic coefficients, passed
 * as JSON: {"eta":{"a,b":"r"},"tau":{...},"alpha":{"k":"r"},"beta":{"k,l":"r"},
 * "gamma":{"k":"r"}}. The central generator is the last basis element. */
CKCOH_API ckcoh_status ckcoh_algebra_build_extended(const char* family, int n, const char* omega,
                                                    const char* coefficients_json,
                                                    ckcoh_algebra** out);
CKCOH_API void ckcoh_algebra_free(ckcoh_algebra* g);
CKCOH_API int ckcoh_algebra_dim(const ckcoh_algebra* g);
/* Writes 1 when the Jacobi identity holds exactly, 0 otherwise. */
CKCOH_API ckcoh_status ckcoh_algebra_jacobi_ok(const ckcoh_algebra* g, int* ok);
/* Structure constant C_ij^k as a rational string. */
CKCOH_API ckcoh_status ckcoh_algebra_constant(const ckcoh_algebra* g, int i, int j, int k,
                                              char** out);
/* Index of a generator name such as "J02", "M13", "B2", "I", "Xi". */
CKCOH_API ckcoh_status ckcoh_algebra_generator_index(const ckcoh_algebra* g, const char* name,
                                                     int* index);
CKCOH_API ckcoh_status ckcoh_algebra_serialize(const ckcoh_algebra* g, ckcoh_format format,
                                               char** out);

/* Second cohomology */
CKCOH_API ckcoh_status ckcoh_h2_compute(const ckcoh_algebra* g, ckcoh_h2** out);
CKCOH_API void ckcoh_h2_free(ckcoh_h2* h);
CKCOH_API int ckcoh_h2_dim_z2(const ckcoh_h2* h);
CKCOH_API int ckcoh_h2_dim_b2(const ckcoh_h2* h);
CKCOH_API int ckcoh_h2_dim_h2(const ckcoh_h2* h);
/* Dimensions, representatives and, for Cayley-Klein algebras, the closed
 * formula, the match flag and representatives in basic-coefficient form. */
CKCOH_API ckcoh_status ckcoh_h2_report(const ckcoh_h2* h, ckcoh_format format, char** out);
/* 1 when the algebra carries family data and dim H2 equals the formula. */
CKCOH_API int ckcoh_h2_matches_formula(const ckcoh_h2* h);

/* Cayley-Klein reports */
CKCOH_API ckcoh_status ckcoh_classify(const char* family, int n, const char* omega,
                                      ckcoh_format format, char** out);
CKCOH_API ckcoh_status ckcoh_table(const char* family, int n, ckcoh_format format, char** out);
CKCOH_API ckcoh_status ckcoh_contract(const char* family, int n, const char* omega, int k,
                                      ckcoh_format format, char** out);
/* Fundamental matrices and the commutator / isometry check. *ok is set to 1
 * when both checks pass. */
CKCOH_API ckcoh_status ckcoh_representation(const char* family, int n, const char* omega,
                                            ckcoh_format format, int* ok, char** out);
/* Full check of the classification for one case; *pass is 1 on success.
 * out may be NULL. */
CKCOH_API ckcoh_status ckcoh_verify(const char* family, int n, const char* omega,
                                    ckcoh_format format, int* pass, char** out);

#ifdef __cplusplus
}
#endif

#endif
