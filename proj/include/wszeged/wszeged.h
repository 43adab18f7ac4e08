/* C interface to the weighted Szeged toolkit.
 *
 * Every function returns a wsz_status. On failure a human-readable message is
 * available from wsz_last_error() on the calling thread until the next call.
 * Strings returned through char** outputs are owned by the caller and must be
 * released with wsz_string_free(). Handles are released with their *_free
 * function; passing NULL to any *_free function is a no-op. */
#ifndef WSZEGED_H
#define WSZEGED_H

#include <stddef.h>
#include <stdint.h>

#if defined(WSZ_BUILDING_LIBRARY)
#define WSZ_API __attribute__((visibility("default")))
#else
#define WSZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wsz_status {
  WSZ_OK = 0,
  WSZ_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed option */
  WSZ_ERR_PARSE = 2,            /* malformed edge list, branch or JSON */
  WSZ_ERR_VALIDATION = 3,       /* self-loop, duplicate edge, disconnected graph, ... */
  WSZ_ERR_DOMAIN = 4,           /* argument outside the operation's domain */
  WSZ_ERR_OVERFLOW = 5,         /* exact arithmetic would overflow */
  WSZ_ERR_LIMIT = 6,            /* configured size or enumeration cap exceeded */
  WSZ_ERR_IO = 7,               /* cache or file access failed */
  WSZ_ERR_INTERNAL = 8          /* invariant violation; a bug */
} wsz_status;

typedef struct wsz_graph wsz_graph;
typedef struct wsz_branch wsz_branch;
typedef struct wsz_branch_table wsz_branch_table;

typedef struct wsz_run_options {
  const char* cache_path; /* NULL: use $WSZ_CACHE_DIR if set, else no cache; "" disables */
  unsigned jobs;          /* worker threads for scans; 0 means 1 */
} wsz_run_options;

WSZ_API const char* wsz_version(void);
WSZ_API const char* wsz_last_error(void);
/* Newline-separated notices (cache misses, recomputations) from the last call. */
WSZ_API const char* wsz_last_notices(void);
WSZ_API const char* wsz_status_name(wsz_status status);
WSZ_API void wsz_string_free(char* s);

/* Graphs */
WSZ_API wsz_status wsz_graph_parse_edge_list(const char* text, wsz_graph** out);
/* `pairs` holds 2 * edge_count vertex labels. */
WSZ_API wsz_status wsz_graph_from_edges(size_t vertex_count, const size_t* pairs, size_t edge_count,
                                        wsz_graph** out);
WSZ_API void wsz_graph_free(wsz_graph* g);
WSZ_API wsz_status wsz_graph_vertex_count(const wsz_graph* g, size_t* out);
WSZ_API wsz_status wsz_graph_edge_count(const wsz_graph* g, size_t* out);
WSZ_API wsz_status wsz_graph_edge_split(const wsz_graph* g, size_t u, size_t v, size_t* n_u, size_t* n_v);
WSZ_API wsz_status wsz_graph_szeged(const wsz_graph* g, int64_t* out);
WSZ_API wsz_status wsz_graph_weighted_szeged(const wsz_graph* g, int64_t* out);
/* Decimal rendering of either index: kind is "wsz" or "sz". */
WSZ_API wsz_status wsz_graph_index_string(const wsz_graph* g, const char* kind, char** out);

/* Branch shapes in parenthesis notation, "()" being a single vertex. */
WSZ_API wsz_status wsz_branch_parse(const char* text, wsz_branch** out);
/* Children-size shorthand "16,16,16,18": a root over minimal branches of those
 * sizes in a tree of order n, or a whole tree of order 1 + sum when n == 0. */
WSZ_API wsz_status wsz_branch_from_sizes(const char* text, int64_t n, wsz_branch** out);
WSZ_API void wsz_branch_free(wsz_branch* b);
WSZ_API wsz_status wsz_branch_size(const wsz_branch* b, size_t* out);
WSZ_API wsz_status wsz_branch_print(const wsz_branch* b, char** out);
/* cost(n) = slope * n + intercept for trees of order n >= size + 1. */
WSZ_API wsz_status wsz_branch_cost(const wsz_branch* b, int64_t* slope, int64_t* intercept);
WSZ_API wsz_status wsz_branch_cost_at(const wsz_branch* b, int64_t n, int64_t* out);
/* The branch hung from a path of host_path_length vertices; 0 gives the
 * shape itself as a tree (vertex 0 is its root). */
WSZ_API wsz_status wsz_branch_to_graph(const wsz_branch* b, size_t host_path_length, wsz_graph** out);

/* Minimal branches at a fixed tree order n, sizes 1..max_size <= n - 1. */
WSZ_API wsz_status wsz_branch_table_new(int64_t n, size_t max_size, wsz_branch_table** out);
WSZ_API void wsz_branch_table_free(wsz_branch_table* t);
WSZ_API wsz_status wsz_branch_table_cost(const wsz_branch_table* t, size_t m, int64_t* out);
WSZ_API wsz_status wsz_branch_table_record(const wsz_branch_table* t, size_t m, char** json, char** text);

/* Minimum weighted Szeged tree on n >= 2 vertices. dot may be NULL. */
WSZ_API wsz_status wsz_optimal_tree(int64_t n, char** json, char** text, char** dot);

/* Table of minimal branches, sizes 2..max_size, thresholds scanned to n_max. */
WSZ_API wsz_status wsz_threshold_table(size_t max_size, int64_t n_max, const wsz_run_options* options,
                                       char** json, char** text);
/* Optimal trees for n = 2..max_n. */
WSZ_API wsz_status wsz_tree_table(int64_t max_n, const wsz_run_options* options, char** json, char** text);
/* Structural conjectures over all optimal trees with 2 <= n <= max_n. */
WSZ_API wsz_status wsz_conjectures(int64_t max_n, const wsz_run_options* options, char** json, char** text);
/* Oracle comparison and invariants; *passed is 1 when every check passed. */
WSZ_API wsz_status wsz_verify(size_t tree_max, size_t branch_max, int* passed, char** json, char** text);
/* Optimal size-326 branches against the regular candidate for n_lo..n_hi. */
WSZ_API wsz_status wsz_order326(int64_t n_lo, int64_t n_hi, int64_t step, const wsz_run_options* options,
                                char** json, char** text);

WSZ_API wsz_status wsz_kary_estimate(double n, unsigned k, double* out);

#ifdef __cplusplus
}
#endif

#endif
