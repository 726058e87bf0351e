#ifndef NCPH_NCPH_H
#define NCPH_NCPH_H

/*
 * C interface to libncph. Every function returns an ncph_status; on failure
 * ncph_last_error() describes the most recent error on the calling thread.
 * Strings handed out by the library are released with ncph_string_free.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NCPH_API __declspec(dllexport)
#else
#define NCPH_API __attribute__((visibility("default")))
#endif

typedef struct ncph_session ncph_session;

typedef enum ncph_status {
  NCPH_OK = 0,
  NCPH_INVALID_ARGUMENT = 1,
  NCPH_INVALID_DIAGRAM = 2,
  NCPH_BUDGET_EXCEEDED = 3,
  NCPH_INVARIANT = 4,
  NCPH_IO = 5,
  NCPH_INTERNAL = 6
} ncph_status;

NCPH_API const char* ncph_version(void);
NCPH_API const char* ncph_last_error(void);
NCPH_API const char* ncph_status_name(ncph_status status);

/*
 * config_json: {"type": "B", "rank": 3} or {"matrix": [[1,3],[3,1]]}, plus
 * optional swapClasses, lambdaDenominator, groupCap, simplexBudget,
 * outputDir, cache. The diagram is validated here; nothing else is built
 * until a query needs it.
 */
NCPH_API ncph_status ncph_session_create(const char* config_json, ncph_session** out);
NCPH_API void ncph_session_destroy(ncph_session* session);

/* Rewrites the config: reads a --matrix style file body ("m = [[...]]" or
 * "type=B rank=3") into the type/rank/matrix fields. */
NCPH_API ncph_status ncph_config_apply_diagram_text(const char* config_json, const char* diagram_text, char** out_json);

NCPH_API ncph_status ncph_info(ncph_session* session, char** json_out);
NCPH_API ncph_status ncph_info_text(ncph_session* session, char** text_out);

/* Comma-separated suite names, in execution order. */
NCPH_API const char* ncph_suite_names(void);

/*
 * Runs one suite, or every suite when suite is NULL. failed_out receives the
 * number of failing suites. Invariant failures are report content and still
 * return NCPH_OK; budget overruns return NCPH_BUDGET_EXCEEDED.
 */
NCPH_API ncph_status ncph_verify(ncph_session* session, const char* suite, char** report_out, int* failed_out);

/* target: "ncp", "xc", "lattice" or "embed". */
NCPH_API ncph_status ncph_export(ncph_session* session, const char* target, char** json_out);

NCPH_API ncph_status ncph_render_svg(ncph_session* session, char** svg_out);

NCPH_API void ncph_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* NCPH_NCPH_H */
