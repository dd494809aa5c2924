// Copyright 2026 The unistat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to libunistat.
 *
 * Graphs are opaque handles created by unistat_graph_parse or
 * unistat_generate and released with unistat_graph_free. Every fallible
 * call returns a unistat_status; on failure unistat_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * unistat_string_free.
 */
#ifndef UNISTAT_UNISTAT_H_
#define UNISTAT_UNISTAT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UNISTAT_API __declspec(dllexport)
#else
#define UNISTAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum unistat_status {
  UNISTAT_OK = 0,
  UNISTAT_ERR_INVALID_ARGUMENT = 1,
  UNISTAT_ERR_PARSE = 2,
  UNISTAT_ERR_NOT_DEGREE_DELTA = 3,
  UNISTAT_ERR_CAP_EXCEEDED = 4,
  UNISTAT_ERR_WALK_UNDEFINED = 5,
  UNISTAT_ERR_GENERATION = 6,
  UNISTAT_ERR_NOT_BIPARTITE = 7,
  UNISTAT_ERR_SINGULAR = 8,
  UNISTAT_ERR_INTERNAL = 99
} unistat_status;

UNISTAT_API const char* unistat_last_error(void);
UNISTAT_API const char* unistat_status_name(unistat_status status);
UNISTAT_API const char* unistat_version(void);
UNISTAT_API void unistat_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

typedef struct unistat_graph unistat_graph;

/* Parses the text graph format. On UNISTAT_ERR_PARSE, *error_line (if not
 * NULL) receives the 1-based line number. */
UNISTAT_API unistat_status unistat_graph_parse(const char* text, size_t length,
                                               unistat_graph** out,
                                               size_t* error_line);
UNISTAT_API void unistat_graph_free(unistat_graph* g);
UNISTAT_API size_t unistat_graph_num_vertices(const unistat_graph* g);
UNISTAT_API size_t unistat_graph_num_edges(const unistat_graph* g);
/* Common undirected degree, or -1 if the graph is not degree-Delta. */
UNISTAT_API int64_t unistat_graph_degree_delta(const unistat_graph* g);
UNISTAT_API unistat_status unistat_graph_serialize(const unistat_graph* g,
                                                   char** out);
/* Arc of edge e as (tail, head). */
UNISTAT_API unistat_status unistat_graph_arc(const unistat_graph* g,
                                             uint32_t e, uint32_t* tail,
                                             uint32_t* head);
UNISTAT_API unistat_status unistat_graph_is_eulerian(const unistat_graph* g,
                                                     int* out);

/* ---- structure --------------------------------------------------------- */

typedef enum unistat_witness_kind {
  UNISTAT_WITNESS_NONE = 0,
  UNISTAT_WITNESS_VERTEX = 1, /* zero in- or out-degree, or unbalanced */
  UNISTAT_WITNESS_EDGE = 2    /* arc tail -> head with d+(tail) != d-(head) */
} unistat_witness_kind;

typedef struct unistat_witness {
  unistat_witness_kind kind;
  uint32_t vertex;
  uint32_t edge;
  uint32_t tail;
  uint32_t head;
} unistat_witness;

typedef struct unistat_check_report {
  uint32_t delta;
  int property_p;
  int uniform_stationary;
  size_t num_components;
  unistat_witness witness;
} unistat_check_report;

typedef enum unistat_class_kind {
  UNISTAT_CLASS_NON_BIPARTITE_EULERIAN = 0,
  UNISTAT_CLASS_BIPARTITE_BALANCED = 1,
  UNISTAT_CLASS_VIOLATION = 2
} unistat_class_kind;

typedef struct unistat_component_report {
  uint32_t smallest_vertex;
  size_t num_vertices;
  size_t num_edges;
  int property_p;
  int uniform_stationary;
  unistat_class_kind kind;
  uint32_t k1; /* BIPARTITE_BALANCED: left (d-, d+) = (k1, k2) */
  uint32_t k2;
  size_t left_size;
  size_t right_size;
  unistat_witness witness;
} unistat_component_report;

/* Property P and exact uniform stationarity for the whole graph. Returns
 * UNISTAT_ERR_NOT_DEGREE_DELTA for non-regular inputs and
 * UNISTAT_ERR_INTERNAL if the two verdicts ever disagree. */
UNISTAT_API unistat_status unistat_check(const unistat_graph* g,
                                         unistat_check_report* out);
UNISTAT_API unistat_status unistat_check_component(
    const unistat_graph* g, size_t index, unistat_component_report* out);

/* ---- testers ----------------------------------------------------------- */

typedef struct unistat_test_params {
  double eps;
  double alpha;
  int has_alpha;
  int exact;
  uint64_t seed;
} unistat_test_params;

typedef enum unistat_decision {
  UNISTAT_ACCEPT = 0,
  UNISTAT_REJECT = 1,
  UNISTAT_NOT_APPLICABLE = 2
} unistat_decision;

typedef struct unistat_verdict {
  unistat_decision decision;
  uint64_t queries_used;
  uint64_t budget_allowed;
  /* Counter of the hidden-orientation oracle after the run. */
  uint64_t oracle_counter;
  int budget_exhausted;
  unistat_witness witness;
} unistat_verdict;

/* Runs the uniformity tester with the graph's orientation hidden behind a
 * fresh query oracle. */
UNISTAT_API unistat_status unistat_test(const unistat_graph* g,
                                        const unistat_test_params* params,
                                        unistat_verdict* out);

typedef enum unistat_budget_mode {
  UNISTAT_BUDGET_EXPANDER = 0,
  UNISTAT_BUDGET_EXACT = 1,
  UNISTAT_BUDGET_LARGE_DEGREE = 2
} unistat_budget_mode;

UNISTAT_API unistat_status unistat_budget(uint32_t delta, uint64_t num_edges,
                                          double eps, double alpha,
                                          unistat_budget_mode mode,
                                          uint64_t* out);

/* ---- markov ------------------------------------------------------------ */

typedef struct unistat_walk_params {
  double tol;         /* <= 0 selects 1e-12 */
  uint64_t max_iters; /* 0 selects the default cap */
  int lazy;
} unistat_walk_params;

typedef struct unistat_stationary_info {
  uint64_t iterations;
  double residual;
  int converged;
  int verified; /* every component strongly connected */
} unistat_stationary_info;

/* Power iteration; `out` must hold num_vertices doubles. */
UNISTAT_API unistat_status unistat_stationary(const unistat_graph* g,
                                              const unistat_walk_params* params,
                                              double* out,
                                              unistat_stationary_info* info);
/* Exact solve; *out receives space-separated fractions such as "1/3". */
UNISTAT_API unistat_status unistat_stationary_exact(const unistat_graph* g,
                                                    char** out);

/* ---- brute force ------------------------------------------------------- */

typedef enum unistat_target {
  UNISTAT_TARGET_PROPERTY_P = 0,
  UNISTAT_TARGET_EULERIAN = 1
} unistat_target;

typedef struct unistat_distance_result {
  int reachable;
  uint32_t min_flips;
  uint64_t num_edges;
  size_t witness_len;
  uint32_t witness[20];
} unistat_distance_result;

UNISTAT_API unistat_status unistat_distance(const unistat_graph* g,
                                            unistat_target target,
                                            unistat_distance_result* out);

/* ---- generation -------------------------------------------------------- */

typedef enum unistat_family {
  UNISTAT_FAMILY_CYCLE = 0,              /* p1 = n */
  UNISTAT_FAMILY_COMPLETE_BIPARTITE = 1, /* p1 = a, p2 = b */
  UNISTAT_FAMILY_REGULAR_RANDOM = 2,     /* p1 = n, p2 = Delta */
  UNISTAT_FAMILY_HYPERCUBE = 3,          /* p1 = dimension */
  UNISTAT_FAMILY_PETERSEN = 4,
  UNISTAT_FAMILY_COMPLETE = 5            /* p1 = n */
} unistat_family;

typedef enum unistat_mode {
  UNISTAT_MODE_RANDOM = 0,
  UNISTAT_MODE_EULERIAN = 1,
  UNISTAT_MODE_PROPERTY_P = 2, /* uses k1, k2 */
  UNISTAT_MODE_ALL_ONE_WAY = 3
} unistat_mode;

typedef struct unistat_gen_spec {
  unistat_family family;
  uint32_t p1;
  uint32_t p2;
  unistat_mode mode;
  uint32_t k1;
  uint32_t k2;
  uint64_t seed;
} unistat_gen_spec;

UNISTAT_API unistat_status unistat_generate(const unistat_gen_spec* spec,
                                            unistat_graph** out);
UNISTAT_API unistat_status unistat_plant_far(const unistat_graph* g, double eps,
                                             uint64_t seed, unistat_graph** out,
                                             uint32_t* flips,
                                             double* certificate);

/* ---- reduction --------------------------------------------------------- */

typedef enum unistat_reduce_outcome {
  UNISTAT_REDUCE_OK = 0,
  UNISTAT_REDUCE_SIZE_MISMATCH = 1, /* |V_L| != |V_R|: P cannot hold */
  UNISTAT_REDUCE_INFEASIBLE = 2     /* no G* exists: P cannot hold */
} unistat_reduce_outcome;

typedef struct unistat_reduce_info {
  unistat_reduce_outcome outcome;
  uint64_t queries_used;
  uint32_t failing_component_vertex; /* smallest vertex, when not OK */
} unistat_reduce_info;

/* Builds the superimposition of every component (all must be bipartite) and
 * writes it in the graph format, hidden edges first, each line tagged
 * "#origin=E" or "#origin=E*". *out is NULL unless outcome is OK. */
UNISTAT_API unistat_status unistat_reduce(const unistat_graph* g, uint64_t seed,
                                          char** out, unistat_reduce_info* info);

#ifdef __cplusplus
}
#endif

#endif /* UNISTAT_UNISTAT_H_ */
