/*
 * C interface to the uinv library: U-invariants of matrix tuples under
 * unitriangular conjugation.
 *
 * Objects are opaque handles released with their *_free function. Every
 * call returns a uinv_status; on failure uinv_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released
 * with uinv_string_free.
 */
#ifndef UINV_H
#define UINV_H

#include <stdint.h>

#if defined(_WIN32)
#  define UINV_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define UINV_API __attribute__((visibility("default")))
#else
#  define UINV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum uinv_status {
  UINV_OK = 0,
  UINV_ERR_PARSE = 1,        /* malformed input or arguments */
  UINV_ERR_PRECONDITION = 2, /* e.g. non-generic tuple, bad dimensions */
  UINV_ERR_CERTIFICATE = 3,  /* a certificate or self-test check failed */
  UINV_ERR_INTERNAL = 4
} uinv_status;

typedef struct uinv_tuple uinv_tuple;

UINV_API const char* uinv_last_error(void);
UINV_API void uinv_string_free(char* s);

/* Tuple documents (JSON, scalars as strings). */
UINV_API uinv_status uinv_tuple_parse(const char* json_text, uinv_tuple** out);
UINV_API uinv_status uinv_tuple_read(const char* path, uinv_tuple** out);
UINV_API uinv_status uinv_tuple_write(const uinv_tuple* t, char** out_json);
UINV_API void uinv_tuple_free(uinv_tuple* t);
UINV_API int uinv_tuple_n(const uinv_tuple* t);
UINV_API int uinv_tuple_m(const uinv_tuple* t);

/* One generator label per line, then the count on its own line. */
UINV_API uinv_status uinv_generators(int n, int m, char** out_text);

/* "<label> <value>" per line, canonical generator order. */
UINV_API uinv_status uinv_eval(const uinv_tuple* t, char** out_text);

/*
 * Genericity report, conjugator and section tuple. On a non-generic tuple
 * returns UINV_ERR_PRECONDITION with the report still written to
 * *out_report and *out_section left null.
 */
UINV_API uinv_status uinv_canon(const uinv_tuple* t, char** out_report, uinv_tuple** out_section);

/* "INVARIANTS_EQUAL yes|no" then, when equal, "CONJUGATE yes" plus the
 * conjugator, or "CONJUGATE UNDECIDED". */
UINV_API uinv_status uinv_equiv(const uinv_tuple* a, const uinv_tuple* b, char** out_text);

/* One report line per certificate; UINV_ERR_CERTIFICATE if any fails. */
UINV_API uinv_status uinv_certify(int n, int m, uint64_t p, uint64_t seed, int trials, char** out_text);

/* Full desk-scale suite; UINV_ERR_CERTIFICATE if any check fails. */
UINV_API uinv_status uinv_selftest(uint64_t seed, int trials, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* UINV_H */
