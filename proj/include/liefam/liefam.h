#ifndef LIEFAM_H
#define LIEFAM_H

/* C interface to the liefam library. Strings returned through char** out
 * parameters are owned by the caller and released with liefam_string_free.
 * Every function returns a liefam_status; on failure liefam_last_error()
 * describes the problem for the calling thread. */

#include <stdint.h>

#if defined(LIEFAM_BUILDING)
#define LIEFAM_API __attribute__((visibility("default")))
#else
#define LIEFAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum liefam_status {
  LIEFAM_OK = 0,
  LIEFAM_THEOREM_VIOLATION = 1,
  LIEFAM_INPUT_ERROR = 2, /* malformed JSON, schema or scalar text */
  LIEFAM_DIMENSION_ERROR = 3,
  LIEFAM_FIELD_ERROR = 4,
  LIEFAM_DOMAIN_ERROR = 5,
  LIEFAM_CONFIGURATION_ERROR = 6,
  LIEFAM_INTERNAL_ERROR = 7
} liefam_status;

typedef enum liefam_mode { LIEFAM_MODE_ALGEBRA = 0, LIEFAM_MODE_GROUP = 1, LIEFAM_MODE_ALL = 2 } liefam_mode;

typedef struct liefam_document liefam_document;

LIEFAM_API const char* liefam_version(void);
LIEFAM_API const char* liefam_last_error(void);
LIEFAM_API void liefam_string_free(char* s);

/* JSON array of {"name", "summary"}. */
LIEFAM_API liefam_status liefam_catalog_json(char** out);

LIEFAM_API liefam_status liefam_document_from_json(const char* json, liefam_document** out);
LIEFAM_API liefam_status liefam_document_from_file(const char* path, liefam_document** out);
LIEFAM_API liefam_status liefam_document_from_catalog(const char* name, liefam_document** out);
LIEFAM_API void liefam_document_free(liefam_document* doc);

/* Runs the verification suite. points_json may be NULL or a JSON array of
 * "a:b" strings (or an object with a "points" array). *passed is 1 when no
 * check failed. A failed check is not an error: the status is LIEFAM_OK and
 * the report lists the failures. */
LIEFAM_API liefam_status liefam_verify(const liefam_document* doc, liefam_mode mode, uint64_t seed,
                                       const char* points_json, char** report, int* passed);

/* Basis, structure constants and invariants of one fiber, point "a:b". */
LIEFAM_API liefam_status liefam_fiber(const liefam_document* doc, const char* point, char** report);

/* Canonical text form of a scalar such as "3/6+2/4*i". */
LIEFAM_API liefam_status liefam_scalar_normalize(const char* text, char** out);

#ifdef __cplusplus
}
#endif

#endif
