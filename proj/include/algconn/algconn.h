/*
 * C interface to the algebraic connectivity library.
 *
 * Graphs are opaque handles created by one of the algconn_graph_* constructors
 * and released with algconn_graph_destroy(). Every fallible call returns an
 * algconn_status; on failure a description is available from
 * algconn_last_error_message() on the same thread. Strings returned through
 * `char**` out-parameters are owned by the caller and must be released with
 * algconn_string_free().
 *
 * Report functions produce a JSON object of the form
 *   {"command": ..., "inputs": {...}, "results": {...}, "tolerances": {...}}
 */
#ifndef ALGCONN_ALGCONN_H
#define ALGCONN_ALGCONN_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ALGCONN_BUILDING)
#define ALGCONN_API __declspec(dllexport)
#else
#define ALGCONN_API __declspec(dllimport)
#endif
#else
#define ALGCONN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct algconn_graph algconn_graph;

typedef enum algconn_status {
  ALGCONN_OK = 0,
  ALGCONN_ERR_NULL_POINTER,
  ALGCONN_ERR_INVALID_ARGUMENT,
  ALGCONN_ERR_INVALID_VERTEX,
  ALGCONN_ERR_DISCONNECTED,
  ALGCONN_ERR_PARSE,
  ALGCONN_ERR_CAP_EXCEEDED,
  ALGCONN_ERR_NOT_CUT_VERTEX,
  ALGCONN_ERR_NOT_A_TREE,
  ALGCONN_ERR_NOT_A_BRIDGE,
  ALGCONN_ERR_NUMERICAL,
  ALGCONN_ERR_UNKNOWN_ID,
  ALGCONN_ERR_EMPTY_CLASS,
  ALGCONN_ERR_INTERNAL,
  ALGCONN_ERR_BUFFER_TOO_SMALL,
  ALGCONN_ERR_OUT_OF_MEMORY
} algconn_status;

/* Outcome of a theorem check; the values double as CLI exit codes. */
typedef enum algconn_verdict {
  ALGCONN_VERDICT_PASS = 0,
  ALGCONN_VERDICT_FAIL = 1,
  ALGCONN_VERDICT_VACUOUS = 2
} algconn_verdict;

typedef struct algconn_tolerances {
  double multiplicity;    /* eigenvalues this close to mu count toward its multiplicity */
  double disconnection;   /* lambda_2 below this means disconnected */
  double zero_relative;   /* Fiedler entries below this times max|Y| are zero */
  double perron_relative; /* relative gap for flagging Perron components */
  double tie;             /* extremal values this close are tied */
} algconn_tolerances;

ALGCONN_API algconn_tolerances algconn_tolerances_default(void);

ALGCONN_API const char* algconn_status_string(algconn_status status);
ALGCONN_API const char* algconn_last_error_message(void);
ALGCONN_API void algconn_string_free(char* s);

/* `pairs` holds 2*edge_count vertex labels. */
ALGCONN_API algconn_status algconn_graph_create(int order, const int* pairs, size_t edge_count,
                                                algconn_graph** out);
/* Edge-list or graph6 text; the format is detected from the first byte. */
ALGCONN_API algconn_status algconn_graph_parse(const char* text, size_t length,
                                               algconn_graph** out);
/* Named family, e.g. ("T_spider", {9, 3}, 2). */
ALGCONN_API algconn_status algconn_graph_family(const char* name, const int* params,
                                                size_t param_count, algconn_graph** out);
ALGCONN_API void algconn_graph_destroy(algconn_graph* g);

ALGCONN_API int algconn_graph_order(const algconn_graph* g);
ALGCONN_API int algconn_graph_size(const algconn_graph* g);
/* Writes 2*size labels; `capacity` counts ints. */
ALGCONN_API algconn_status algconn_graph_edges(const algconn_graph* g, int* pairs_out,
                                               size_t capacity);
ALGCONN_API algconn_status algconn_graph_to_edge_list(const algconn_graph* g, char** out);
ALGCONN_API algconn_status algconn_graph_to_graph6(const algconn_graph* g, char** out);
ALGCONN_API algconn_status algconn_graph_canonical_form(const algconn_graph* g, char** out);

/* `tol` may be NULL for the defaults; `fiedler_out` may be NULL or hold order() doubles. */
ALGCONN_API algconn_status algconn_algebraic_connectivity(const algconn_graph* g,
                                                          const algconn_tolerances* tol,
                                                          double* mu, int* multiplicity,
                                                          double* fiedler_out);

ALGCONN_API algconn_status algconn_report_compute(const algconn_graph* g,
                                                  const algconn_tolerances* tol, char** json);
ALGCONN_API algconn_status algconn_report_perron(const algconn_graph* g, int vertex,
                                                 const algconn_tolerances* tol, char** json);
ALGCONN_API algconn_status algconn_report_charset(const algconn_graph* g,
                                                  const algconn_tolerances* tol, char** json);
/* param < 0 means "all feasible values". `verdict` may be NULL. */
ALGCONN_API algconn_status algconn_report_verify(const char* theorem_id, int n_min, int n_max,
                                                 int param, int workers,
                                                 const algconn_tolerances* tol, char** json,
                                                 algconn_verdict* verdict);
/* Minimum and maximum of mu over a graph class; param < 0 means none. */
ALGCONN_API algconn_status algconn_report_census(const char* class_name, int n, int param,
                                                 int workers, const algconn_tolerances* tol,
                                                 char** json);
/* Registered theorem ids, classes and families as a JSON object. */
ALGCONN_API algconn_status algconn_catalog(char** json);

#ifdef __cplusplus
}
#endif

#endif /* ALGCONN_ALGCONN_H */
