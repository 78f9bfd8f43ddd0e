#ifndef FANOL2_H
#define FANOL2_H

/* C interface to the fanol2 library. Every function returns an fl2_status;
 * on failure fl2_last_error() describes the error for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * fl2_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(FL2_BUILDING_LIBRARY)
#define FL2_API __attribute__((visibility("default")))
#else
#define FL2_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    FL2_OK = 0,
    FL2_ERR_INVALID_ARGUMENT = 1,
    FL2_ERR_OUT_OF_RANGE = 2,
    FL2_ERR_PARSE = 3,
    FL2_ERR_CAPACITY = 4,
    FL2_ERR_IO = 5,
    FL2_ERR_INTERNAL = 6
} fl2_status;

typedef enum { FL2_KIND_3GRAPH = 0, FL2_KIND_GRAPH = 1, FL2_KIND_MGRAPH = 2 } fl2_kind;

/* A parsed or generated 3-graph, graph or m-multigraph. Immutable. */
typedef struct fl2_object fl2_object;

FL2_API const char* fl2_version(void);
FL2_API const char* fl2_last_error(void);
FL2_API void fl2_string_free(char* s);

FL2_API fl2_status fl2_object_parse(const char* text, fl2_object** out);
FL2_API fl2_status fl2_object_read(const char* path, fl2_object** out);
FL2_API void fl2_object_free(fl2_object* obj);
FL2_API fl2_status fl2_object_kind(const fl2_object* obj, fl2_kind* out);
FL2_API fl2_status fl2_object_to_text(const fl2_object* obj, char** out);
/* JSON object with kind, n, size and, where defined, min_degree, layers and
 * l2_norm (decimal string). */
FL2_API fl2_status fl2_object_stats(const fl2_object* obj, char** out_json);

/* Exact ||.||_p as a decimal string; 3-graphs and graphs only. */
FL2_API fl2_status fl2_norm(const fl2_object* obj, unsigned p, char** out);
FL2_API fl2_status fl2_norm_real(const fl2_object* obj, double p, double* out);
/* For a 3-graph: JSON with norm_l2, s2_stars and per-vertex l2 degrees. */
FL2_API fl2_status fl2_l2_summary(const fl2_object* obj, char** out_json);

/* pattern: "fano", "k53", "bipartite3" (3-graphs) or "k4multi" (m-multigraphs).
 * *found is 1 when the pattern occurs (or, for bipartite3, when the 3-graph
 * is not bipartite). *witness is set to NULL or to a text description. */
FL2_API fl2_status fl2_check(const fl2_object* obj, const char* pattern, int* found, char** witness);

/* construction: bn, kn3, cnk, snk, shat, mg-bipartite, mg-turan. */
FL2_API fl2_status fl2_generate(const char* construction, const uint64_t* params, size_t count, fl2_object** out);

/* Request keys: objective, n, m, engine, budget, workers, seed. Response
 * mirrors the search report. */
FL2_API fl2_status fl2_search(const char* request_json, char** out_json);

/* *passed is 1 when no check failed. Either output pointer may be NULL. */
FL2_API fl2_status fl2_verify(const char* suite, uint64_t seed, unsigned workers, double budget_seconds,
                              int* passed, char** out_text, char** out_json);

/* table: "ak", "prop23" or "f". */
FL2_API fl2_status fl2_bounds_table(const char* table, double step, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif
