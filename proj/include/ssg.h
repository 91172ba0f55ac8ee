#ifndef SSG_H
#define SSG_H

#include <stdint.h>

#if defined(SSG_BUILDING_LIBRARY)
#define SSG_API __attribute__((visibility("default")))
#else
#define SSG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ssg_graph ssg_graph;
typedef struct ssg_coloring ssg_coloring;

typedef enum ssg_status {
  SSG_OK = 0,
  SSG_ERR_INVALID_PARAMETER,
  SSG_ERR_PARSE,
  SSG_ERR_MISSING_GRID_METADATA,
  SSG_ERR_SAME_COLOR_SWAP,
  SSG_ERR_INCONSISTENT_COLORING,
  SSG_ERR_BUDGET_EXCEEDED,
  SSG_ERR_CONSTRUCTION_FAILED,
  SSG_ERR_NOT_A_TREE,
  SSG_ERR_WRONG_K,
  SSG_ERR_UNKNOWN_FAMILY,
  SSG_ERR_INCOMPLETE_PARAMS,
  SSG_ERR_UNKNOWN_EXPERIMENT,
  SSG_ERR_INTERNAL
} ssg_status;

SSG_API const char* ssg_version(void);
// Kebab-case name, e.g. "budget-exceeded".
SSG_API const char* ssg_status_name(ssg_status status);
// Message of the last failed call on this thread; empty after a success.
SSG_API const char* ssg_last_error(void);
// Every char* handed out by the library is released with this.
SSG_API void ssg_string_free(char* s);

// Graphs. params_json is an object such as {"rows": 2, "cols": 3}.
// Families: path, cycle, grid4, grid8, regular-gadget, pendants,
// double-star, random-tree, random-graph.
SSG_API ssg_status ssg_graph_generate(const char* family, const char* params_json, ssg_graph** out);
SSG_API ssg_status ssg_graph_parse(const char* text, ssg_graph** out);
SSG_API ssg_status ssg_graph_serialize(const ssg_graph* g, char** out);
SSG_API int ssg_graph_vertices(const ssg_graph* g);
SSG_API void ssg_graph_free(ssg_graph* g);

// Colorings: one line of space-separated 0-based colors.
SSG_API ssg_status ssg_coloring_parse(const char* text, ssg_coloring** out);
SSG_API ssg_status ssg_coloring_random(const int* counts, int k, uint64_t seed, ssg_coloring** out);
SSG_API ssg_status ssg_coloring_serialize(const ssg_coloring* c, char** out);
SSG_API void ssg_coloring_free(ssg_coloring* c);

// The operations below take an options object and write a JSON document to
// *out_json. Common options: "locality": "global" | "local".

// Options: locality, method ("direct" | "characterization").
SSG_API ssg_status ssg_check(const ssg_graph* g, const ssg_coloring* c, const char* options_json, char** out_json,
                             int* is_equilibrium);

// Options: locality, scheduler ("first" | "best-gain" | "random" | "scripted"),
// seed, script ([[u, v], ...]), budget. *outcome: 0 converged, 1 cycle, 2 budget.
SSG_API ssg_status ssg_simulate(const ssg_graph* g, const ssg_coloring* init, const char* options_json,
                                char** out_json, int* outcome);

// Options: types ([t1, t2, ...]) or o, locality, budget, jobs, symmetry.
SSG_API ssg_status ssg_poa(const ssg_graph* g, const char* options_json, char** out_json);

// Empirical PoA of a family instance next to its closed-form bound.
// Families: cycle, path, grid4, grid8, regular-gadget; params include o.
// *verdict: 0 pass, 1 fail, 2 not applicable.
SSG_API ssg_status ssg_poa_family(const char* family, const char* params_json, const char* options_json,
                                  char** out_json, int* verdict);

// Renders an ssg_poa_family document as "text" or "csv".
SSG_API ssg_status ssg_format_poa(const char* report_json, const char* format, char** out);

SSG_API ssg_status ssg_bound(const char* family, const char* params_json, const char* locality, char** out_json);

// Builders: tree-lse, grid8, frame, cycle-worst, path-worst,
// regular-gadget, pendants, double-star, 2xh.
SSG_API ssg_status ssg_construct(const char* which, const char* params_json, ssg_graph** graph,
                                 ssg_coloring** coloring, char** info_json);

// Options: types, locality, max_states, seeded_starts, seed.
SSG_API ssg_status ssg_find_irc(const ssg_graph* g, const char* options_json, char** out_json, int* found);

SSG_API ssg_status ssg_experiment_names(char** out_json);
SSG_API ssg_status ssg_reproduce(const char* name, unsigned jobs, char** out_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
