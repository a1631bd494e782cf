/* C interface to libksigma. Every call that produces a document returns it as
 * a NUL-terminated JSON (or CSV/SVG) string owned by the caller and released
 * with ks_string_free. Numbers inside documents are exact rational strings. */
#ifndef KSIGMA_KSIGMA_H
#define KSIGMA_KSIGMA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KSIGMA_BUILDING)
#    define KS_API __declspec(dllexport)
#  else
#    define KS_API __declspec(dllimport)
#  endif
#else
#  define KS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ks_status {
    KS_OK = 0,
    KS_ERR_INTERNAL = 1,
    KS_ERR_INVALID_ARGUMENT = 2,
    KS_INCONCLUSIVE = 3, /* document is still produced */
    KS_ERR_IO = 4,
    KS_ERR_VERIFY_FAILED = 5 /* document is still produced */
} ks_status;

typedef struct ks_sigma ks_sigma;
typedef struct ks_options ks_options;

KS_API const char* ks_version(void);
/* Message for the last failing call on this thread, "" if none. */
KS_API const char* ks_last_error(void);
KS_API void ks_string_free(char* s);

/* "0,2,3,5" or "0 1/2 1" */
KS_API ks_status ks_sigma_parse(const char* text, ks_sigma** out);
/* Coefficients "4,3,2", optionally followed by ";q". */
KS_API ks_status ks_sigma_from_multigeometric(const char* spec, ks_sigma** out);
/* A JSON array of rationals, or an object with a "sigma" member. */
KS_API ks_status ks_sigma_from_json(const char* json_text, ks_sigma** out);
KS_API void ks_sigma_free(ks_sigma* sigma);
KS_API size_t ks_sigma_size(const ks_sigma* sigma);
/* The ratio given with a multigeometric spec, or NULL. Owned by the handle. */
KS_API const char* ks_sigma_default_q(const ks_sigma* sigma);
KS_API ks_status ks_sigma_to_json(const ks_sigma* sigma, char** out);

/* Defaults: depth 6, tolerance 1/10^12, resolution 420, max enclosure width
 * 1/1000, element cap from KSIGMA_MAX_ELEMENTS or 2^25. */
KS_API ks_status ks_options_new(ks_options** out);
KS_API void ks_options_free(ks_options* options);
KS_API ks_status ks_options_set_depth(ks_options* options, unsigned depth);
KS_API ks_status ks_options_set_tolerance(ks_options* options, const char* rational);
KS_API ks_status ks_options_set_resolution(ks_options* options, unsigned resolution);
KS_API ks_status ks_options_set_max_width(ks_options* options, const char* rational);
KS_API ks_status ks_options_set_max_elements(ks_options* options, uint64_t max_elements);

/* options may be NULL for defaults in every call below. q is a rational
 * string or "qn:s,n" for the root q_n of x + ... + x^(n-1) = 1/(s-1). */
KS_API ks_status ks_gap_stats(const ks_sigma* sigma, char** out);
/* KS_INCONCLUSIVE when no trichotomy label is certified. */
KS_API ks_status ks_classify(const ks_sigma* sigma, const char* q, const ks_options* options, char** out);
KS_API ks_status ks_sweep(const ks_sigma* sigma, const ks_options* options, char** out);
/* KS_INCONCLUSIVE when no depth up to the budget certifies a null set. */
KS_API ks_status ks_nullcert(const ks_sigma* sigma, const char* q, const ks_options* options, char** out);
KS_API ks_status ks_sumset(const ks_sigma* sigma, const char* q, unsigned depth, const ks_options* options,
                           char** out);
/* format: "json", "csv" or "svg" */
KS_API ks_status ks_cover(const ks_sigma* sigma, const char* q, unsigned depth, const char* format,
                          const ks_options* options, char** out);
KS_API ks_status ks_t12(const ks_sigma* sigma, const char* q, const ks_options* options, char** out);
KS_API ks_status ks_full_sumset(const ks_sigma* sigma, const ks_options* options, char** out);
KS_API ks_status ks_alpha(const char* d, const ks_options* options, char** out);
KS_API ks_status ks_star_min(unsigned n, const char* gamma, const ks_options* options, char** out);
KS_API ks_status ks_qn_root(unsigned s, unsigned n, const ks_options* options, char** out);
/* KS_INCONCLUSIVE when the six-element condition fails. */
KS_API ks_status ks_qnseq(const ks_sigma* sigma, unsigned count, const ks_options* options, char** out);
/* Sweeps, writes the SVG to path plus a .json sidecar, returns the diagram document. */
KS_API ks_status ks_render(const ks_sigma* sigma, const char* path, const ks_options* options, char** out);
/* Replays every certificate in a document; KS_ERR_VERIFY_FAILED on any failure. */
KS_API ks_status ks_verify(const char* json_text, char** out);

#ifdef __cplusplus
}
#endif

#endif
