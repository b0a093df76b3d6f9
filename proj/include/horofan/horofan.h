/* C interface to the horofan library. Every function returns a status code;
 * on failure horofan_last_error() describes the problem. Strings handed out
 * by the library are released with horofan_string_free. */
#ifndef HOROFAN_H
#define HOROFAN_H

#include <stddef.h>

#if defined(HOROFAN_BUILDING_LIBRARY)
#define HOROFAN_API __attribute__((visibility("default")))
#else
#define HOROFAN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum horofan_status {
  HOROFAN_OK = 0,
  HOROFAN_USAGE_ERROR = 1,
  HOROFAN_PARSE_ERROR = 2,
  HOROFAN_VALIDATION_ERROR = 3,
  HOROFAN_PRECONDITION_ERROR = 4,
  HOROFAN_INTERNAL_ERROR = 5
} horofan_status;

typedef enum horofan_format { HOROFAN_FORMAT_TEXT = 0, HOROFAN_FORMAT_MACHINE = 1 } horofan_format;

typedef struct horofan_document horofan_document;

HOROFAN_API const char* horofan_version(void);

/* text need not be NUL terminated. */
HOROFAN_API horofan_status horofan_document_parse(const char* text, size_t length, horofan_document** out);
HOROFAN_API void horofan_document_free(horofan_document* doc);
/* Canonical JSON form of the document. */
HOROFAN_API horofan_status horofan_document_print(const horofan_document* doc, char** out);

HOROFAN_API horofan_status horofan_run_classify(const horofan_document* doc, horofan_format format, char** out);
HOROFAN_API horofan_status horofan_run_cox(const horofan_document* doc, horofan_format format, char** out);
HOROFAN_API horofan_status horofan_run_split(const horofan_document* doc, horofan_format format, char** out);
/* cone indexes the document's cone list. */
HOROFAN_API horofan_status horofan_run_local(const horofan_document* doc, size_t cone, horofan_format format,
                                             char** out);
HOROFAN_API horofan_status horofan_run_decolour(const horofan_document* doc, const char* const* keep,
                                                size_t keep_count, horofan_format format, char** out);

HOROFAN_API void horofan_string_free(char* s);

/* Message and stable error name of the last failure on this thread; empty
 * strings after a success. */
HOROFAN_API const char* horofan_last_error(void);
HOROFAN_API const char* horofan_last_error_code(void);

#ifdef __cplusplus
}
#endif

#endif
