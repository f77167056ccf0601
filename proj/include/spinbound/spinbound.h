/* spinbound: curvature endomorphisms on spinors and Dirac eigenvalue bounds. */
#ifndef SPINBOUND_SPINBOUND_H
#define SPINBOUND_SPINBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SPINBOUND_BUILDING)
#    define SB_API __declspec(dllexport)
#  else
#    define SB_API __declspec(dllimport)
#  endif
#else
#  define SB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
  SB_OK = 0,
  SB_ERR_INVALID_ARGUMENT = 1,
  SB_ERR_VALIDATION = 2,
  SB_ERR_PARSE = 3,
  SB_ERR_UNKNOWN_ID = 4,
  SB_ERR_NUMERIC = 5,
  SB_ERR_INTERNAL = 6
} sb_status;

/* Curvature samples with their global metadata. Immutable once created. */
typedef struct sb_curvature sb_curvature;

typedef struct sb_report_options {
  int chiral;       /* nonzero: chirality-split nu0 and bounds (even n) */
  int restarts;     /* mu0 optimizer restarts, >= 1 */
  uint64_t seed;
} sb_report_options;

typedef struct sb_verify_options {
  const char* suite;  /* "identities", "grading", "bounds-consistency" or "all" */
  const int* dims;
  size_t dim_count;
  int trials;
  uint64_t seed;
} sb_verify_options;

SB_API void sb_report_options_init(sb_report_options* opt);
SB_API void sb_verify_options_init(sb_verify_options* opt);

/* params like "r1=1,r2=2". */
SB_API sb_status sb_curvature_from_catalog(const char* id, const char* params, sb_curvature** out);
SB_API sb_status sb_curvature_from_json(const char* text, sb_curvature** out);
SB_API sb_status sb_curvature_from_file(const char* path, sb_curvature** out);
SB_API void sb_curvature_free(sb_curvature* c);
SB_API int sb_curvature_dim(const sb_curvature* c);
SB_API size_t sb_curvature_sample_count(const sb_curvature* c);

/* Report as JSON; release with sb_string_free. */
SB_API sb_status sb_report_run(const sb_curvature* c, const sb_report_options* opt, char** json_out);

/* *all_passed is set to 1 when every residual is within tolerance. */
SB_API sb_status sb_verify_run(const sb_verify_options* opt, char** json_out, int* all_passed);

/* Renders a report or verify JSON document as text. */
SB_API sb_status sb_format_text(const char* json, char** text_out);

SB_API void sb_string_free(char* s);

/* Message of the last failure on the calling thread; empty if none. */
SB_API const char* sb_last_error(void);

SB_API const char* sb_version(void);
SB_API const char* sb_convention_version(void);

#ifdef __cplusplus
}
#endif

#endif
