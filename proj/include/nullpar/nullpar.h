/* C interface to the nullpar library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Functions
 * return NULLPAR_OK or an error status; the message for the last failure on
 * the calling thread is available from nullpar_last_error(). */
#ifndef NULLPAR_H
#define NULLPAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NULLPAR_API __declspec(dllexport)
#else
#define NULLPAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nullpar_status {
  NULLPAR_OK = 0,
  NULLPAR_ERR_ARGUMENT = 1,    /* null pointer or out-of-range option */
  NULLPAR_ERR_PARSE = 2,       /* malformed text; see nullpar_last_error_offset */
  NULLPAR_ERR_INDEX = 3,       /* variable index outside 1..n */
  NULLPAR_ERR_EVALUATION = 4,  /* division by zero or non-finite value */
  NULLPAR_ERR_DEGENERATE = 5,  /* metric degenerate at every candidate point */
  NULLPAR_ERR_RANK = 6,
  NULLPAR_ERR_INVARIANT = 7,   /* Walker conditions violated */
  NULLPAR_ERR_INCLUSION = 8,
  NULLPAR_ERR_INCONSISTENT = 9,
  NULLPAR_ERR_UNSUPPORTED = 10,
  NULLPAR_ERR_IO = 11,
  NULLPAR_ERR_INTERNAL = 12
} nullpar_status;

typedef enum nullpar_format { NULLPAR_FORMAT_JSON = 0, NULLPAR_FORMAT_TEXT = 1 } nullpar_format;

typedef struct nullpar_walker nullpar_walker;
typedef struct nullpar_report nullpar_report;
typedef struct nullpar_extension nullpar_extension;

typedef struct nullpar_verify_options {
  uint64_t seed;
  int samples;
  double tol;
} nullpar_verify_options;

typedef struct nullpar_check_info {
  const char* name;   /* valid until the report is freed */
  double max_residual;
  double tolerance;
  int points_checked;
  int passed;
} nullpar_check_info;

NULLPAR_API const char* nullpar_last_error(void);
/* Byte offset of the last parse error, or -1. */
NULLPAR_API long nullpar_last_error_offset(void);
NULLPAR_API const char* nullpar_status_name(nullpar_status status);
NULLPAR_API void nullpar_string_free(char* s);

/* Walker data */
NULLPAR_API nullpar_status nullpar_walker_generate(int n, int r, uint64_t seed, nullpar_walker** out);
NULLPAR_API nullpar_status nullpar_walker_parse(const char* text, size_t len, nullpar_walker** out);
NULLPAR_API nullpar_status nullpar_walker_load(const char* path, nullpar_walker** out);
NULLPAR_API nullpar_status nullpar_walker_save(const nullpar_walker* w, const char* path);
NULLPAR_API nullpar_status nullpar_walker_to_text(const nullpar_walker* w, char** out);
/* Checks the Walker conditions; NULLPAR_ERR_INVARIANT names the failure. */
NULLPAR_API nullpar_status nullpar_walker_validate(const nullpar_walker* w);
/* Adds x1 to H(1,1). *out is set to NULL when H is empty (no control). */
NULLPAR_API nullpar_status nullpar_walker_negative_control(const nullpar_walker* w, nullpar_walker** out);
NULLPAR_API int nullpar_walker_n(const nullpar_walker* w);
NULLPAR_API int nullpar_walker_r(const nullpar_walker* w);
NULLPAR_API void nullpar_walker_free(nullpar_walker* w);

/* Verification */
NULLPAR_API void nullpar_verify_options_default(nullpar_verify_options* opts);
/* Assembles without validation and runs every check; failures are reported,
 * not returned as errors. */
NULLPAR_API nullpar_status nullpar_verify(const nullpar_walker* w, const nullpar_verify_options* opts,
                                          nullpar_report** out);
NULLPAR_API int nullpar_report_passed(const nullpar_report* rep);
NULLPAR_API size_t nullpar_report_check_count(const nullpar_report* rep);
NULLPAR_API nullpar_status nullpar_report_check(const nullpar_report* rep, size_t index,
                                                nullpar_check_info* out);
NULLPAR_API size_t nullpar_report_skipped_count(const nullpar_report* rep);
NULLPAR_API nullpar_status nullpar_report_serialize(const nullpar_report* rep, nullpar_format format,
                                                    char** out);
NULLPAR_API void nullpar_report_free(nullpar_report* rep);

/* Extension freedom demonstration */
NULLPAR_API nullpar_status nullpar_extend(const nullpar_walker* w, const nullpar_verify_options* opts,
                                          nullpar_extension** out);
NULLPAR_API int nullpar_extension_passed(const nullpar_extension* ext);
/* Free-parameter counts: klm, r(r+1)/2, and the measured ranks. */
NULLPAR_API void nullpar_extension_counts(const nullpar_extension* ext, int* pairing_params,
                                          int* metric_params, int* pairing_rank, int* metric_rank);
NULLPAR_API nullpar_status nullpar_extension_serialize(const nullpar_extension* ext,
                                                       nullpar_format format, char** out);
NULLPAR_API void nullpar_extension_free(nullpar_extension* ext);

#ifdef __cplusplus
}
#endif

#endif /* NULLPAR_H */
