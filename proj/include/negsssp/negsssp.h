/* C interface to the negative-weight shortest path solver.
 *
 * Handles are opaque and owned by the caller; free them with the matching
 * *_free function. Functions return NSP_OK or an error code, and
 * nsp_last_error() describes the most recent failure on the calling thread.
 * Strings returned through char** are released with nsp_string_free.
 * Vertex ids are 0-indexed here; only the text formats use 1-indexing. */
#ifndef NEGSSSP_NEGSSSP_H
#define NEGSSSP_NEGSSSP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NSP_API __declspec(dllexport)
#else
#define NSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nsp_status {
  NSP_OK = 0,
  NSP_ERR_INVALID_ARGUMENT = 1,
  NSP_ERR_PARSE = 2,
  NSP_ERR_IO = 3,
  NSP_ERR_OVERFLOW = 4,
  NSP_ERR_INTERNAL = 5
} nsp_status;

typedef enum nsp_gen_kind {
  NSP_GEN_RESTRICTED = 0,
  NSP_GEN_GENERAL = 1,
  NSP_GEN_NONNEG = 2
} nsp_gen_kind;

typedef struct nsp_graph nsp_graph;
typedef struct nsp_result nsp_result;

typedef struct nsp_gen_spec {
  nsp_gen_kind kind;
  size_t n;
  size_t m;
  int64_t lo;
  int64_t hi;
  uint64_t seed;
  int plant_negative_cycle;
} nsp_gen_spec;

NSP_API const char* nsp_last_error(void);
NSP_API const char* nsp_status_string(nsp_status status);
NSP_API void nsp_string_free(char* s);

/* Graphs. Weights must satisfy |w| <= 2^40. */
NSP_API nsp_status nsp_graph_create(size_t n, size_t m, const uint32_t* from, const uint32_t* to,
                                    const int64_t* weight, nsp_graph** out);
NSP_API nsp_status nsp_graph_parse(const char* text, nsp_graph** out);
NSP_API nsp_status nsp_graph_read_file(const char* path, nsp_graph** out);
NSP_API nsp_status nsp_graph_write_file(const nsp_graph* g, const char* path);
NSP_API nsp_status nsp_graph_to_text(const nsp_graph* g, char** out);
NSP_API nsp_status nsp_generate(const nsp_gen_spec* spec, nsp_graph** out);
NSP_API size_t nsp_graph_num_vertices(const nsp_graph* g);
NSP_API size_t nsp_graph_num_edges(const nsp_graph* g);
/* 1 and *source set when the graph came with an "s" line, else 0. */
NSP_API int nsp_graph_source(const nsp_graph* g, uint32_t* source);
NSP_API void nsp_graph_free(nsp_graph* g);

/* Solving. */
NSP_API nsp_status nsp_solve(const nsp_graph* g, uint32_t source, uint64_t seed, nsp_result** out);
NSP_API int nsp_result_has_cycle(const nsp_result* r);
/* Returns 1 and sets *dist when v is reachable, 0 otherwise. */
NSP_API int nsp_result_distance(const nsp_result* r, uint32_t v, int64_t* dist);
/* Returns 1 and sets *parent when v has a tree parent, 0 otherwise. */
NSP_API int nsp_result_parent(const nsp_result* r, uint32_t v, uint32_t* parent);
/* Closed walk length including the repeated first vertex; 0 without a cycle. */
NSP_API size_t nsp_result_cycle_length(const nsp_result* r);
NSP_API void nsp_result_cycle_vertices(const nsp_result* r, uint32_t* out);
NSP_API uint64_t nsp_result_work(const nsp_result* r);
NSP_API uint64_t nsp_result_span(const nsp_result* r);
NSP_API uint64_t nsp_result_oracle_calls(const nsp_result* r);
NSP_API nsp_status nsp_result_to_text(const nsp_result* r, char** out);
NSP_API nsp_status nsp_result_to_json(const nsp_result* r, char** out);
NSP_API void nsp_result_free(nsp_result* r);

/* Decomposition of a graph with nonnegative weights, as "part"/"cut" text. */
NSP_API nsp_status nsp_ldd(const nsp_graph* g, int64_t d, uint64_t seed, char** out);

/* Structural check, or the restricted-graph check when restricted != 0.
 * *ok is 1 on success; *report holds a one-line summary. */
NSP_API nsp_status nsp_validate(const nsp_graph* g, int restricted, int* ok, char** report);

/* Doubling benchmark on restricted graphs with m = 4n, seeds base_seed,
 * base_seed + 1, ... per size. *csv gets the rows (with a wall_time column
 * when wall_time != 0), *summary the fitted slopes and bound checks;
 * *bounds_ok is 1 when every row stays within its closed-form bounds. */
NSP_API nsp_status nsp_bench(const size_t* sizes, size_t count, size_t seeds, uint64_t base_seed, int wall_time,
                             char** csv, char** summary, int* bounds_ok);

#ifdef __cplusplus
}
#endif

#endif
