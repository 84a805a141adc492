/* C API for the wavelab shallow-water model laboratory.
 *
 * All entry points return an error code; handles are opaque. The library is
 * not thread-safe per handle; distinct handles may be used concurrently. */
#ifndef WAVELAB_H
#define WAVELAB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    WL_OK = 0,
    WL_FAIL_TOLERANCE = 1, /* study ran, declared tolerance not met */
    WL_ERR_CONFIG = 2,     /* invalid config / usage */
    WL_ERR_NUMERICAL = 3,  /* solver blow-up, nonpositive depth, ... */
    WL_ERR_INTERNAL = 4
} wl_status;

typedef struct wl_study wl_study;

/* Parses and validates a TOML experiment config. On failure returns NULL and,
 * if errbuf is non-NULL, writes a message naming the offending field. */
wl_study* wl_study_open(const char* config_path, char* errbuf, size_t errbuf_len);

/* Validation-only entry point (no handle kept). */
wl_status wl_validate(const char* config_path, char* errbuf, size_t errbuf_len);

/* Runs the study, writing artifacts under out_root (NULL: config's dir under
 * the current directory). Returns WL_OK / WL_FAIL_TOLERANCE / WL_ERR_*. */
wl_status wl_study_run(wl_study* study, const char* out_root);

/* Human-readable summary of the last run (empty before wl_study_run). */
const char* wl_study_message(const wl_study* study);

/* Directory the last run wrote to (empty before wl_study_run). */
const char* wl_study_output_dir(const wl_study* study);

void wl_study_close(wl_study* study);

/* Constant coefficients A, B, E, F for family 'p' or 'q' at the given value
 * (text, e.g. "-1/12" or "0.25"; exact rational arithmetic inside).
 * out must hold 4 doubles. */
wl_status wl_coeffs_family(char family, const char* value, double out[4], char* errbuf,
                           size_t errbuf_len);

/* Derived (a, e, d) for the same family/value; out holds 3 doubles. */
wl_status wl_derived_aed(char family, const char* value, double out[3], char* errbuf,
                         size_t errbuf_len);

/* Formatted coefficient table (the `coeffs` subcommand body). The returned
 * string lives until the next call on any thread; copy if needed. */
const char* wl_coeffs_table(char family, const char* value, char* errbuf, size_t errbuf_len);

#ifdef __cplusplus
}
#endif

#endif
