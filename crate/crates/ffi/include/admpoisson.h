#ifndef ADMPOISSON_H
#define ADMPOISSON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum AdmStatus {
  ADM_STATUS_OK = 0,
  /**
   * The predicate was evaluated and does not hold.
   */
  ADM_STATUS_FAILS = 1,
  ADM_STATUS_NULL_POINTER = 2,
  ADM_STATUS_INVALID_UTF8 = 3,
  ADM_STATUS_PARSE_ERROR = 4,
  ADM_STATUS_UNKNOWN_NAME = 5,
  ADM_STATUS_INVALID_INPUT = 6,
  ADM_STATUS_PANIC = 7,
} AdmStatus;

/**
 * A parsed structure file.
 */
typedef struct AdmFile AdmFile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to `len`). Returns the full message length without the NUL,
 * or 0 when there is no error.
 *
 * # Safety
 * `buf` is null or points to `len` writable bytes.
 */
size_t adm_last_error(char *buf, size_t len);

/**
 * Parses the text format into a new handle.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` points to writable storage.
 */
enum AdmStatus adm_file_parse(const char *text, struct AdmFile **out);

/**
 * # Safety
 * `file` is null or a handle from this library that has not been freed.
 */
void adm_file_free(struct AdmFile *file);

/**
 * The declared dimension, or 0 for a null handle.
 *
 * # Safety
 * `file` is null or a live handle.
 */
size_t adm_file_dim(const struct AdmFile *file);

/**
 * Canonical text of the file, or null for a null handle. Free with
 * `adm_string_free`.
 *
 * # Safety
 * `file` is null or a live handle.
 */
char *adm_file_print(const struct AdmFile *file);

/**
 * # Safety
 * `s` is null or a string returned by this library that has not been freed.
 */
void adm_string_free(char *s);

/**
 * Evaluates a predicate (CLI name, e.g. "adm-poisson"). Returns `Ok` when
 * it holds and `Fails` when it does not. When `report` is non-null it
 * receives the OK/FAIL line, to be freed with `adm_string_free`.
 *
 * # Safety
 * `file` is a live handle, `predicate` a NUL-terminated string, `report`
 * null or writable.
 */
enum AdmStatus adm_check(const struct AdmFile *file, const char *predicate, char **report);

/**
 * Runs a construction (CLI name, e.g. "polarize") into a new handle.
 *
 * # Safety
 * `file` is a live handle, `construction` a NUL-terminated string, `out`
 * writable.
 */
enum AdmStatus adm_build(const struct AdmFile *file,
                         const char *construction,
                         struct AdmFile **out);

/**
 * Searches over GF(`prime`) and writes the rendered instances to `out`
 * (free with `adm_string_free`). `base` may be null for targets that need
 * no base algebra; `max_count` 0 means unlimited; `samples` 0 means
 * exhaustive only.
 *
 * # Safety
 * `target` is a NUL-terminated string, `base` null or a live handle, `out`
 * writable.
 */
enum AdmStatus adm_search(const char *target,
                          size_t dim,
                          uint64_t prime,
                          const struct AdmFile *base,
                          size_t max_count,
                          uint64_t samples,
                          uint64_t seed,
                          char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ADMPOISSON_H */
