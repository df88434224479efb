/* C interface to the absorbing-random-walk community detection library.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return ABW_OK on success; on failure they return a status code and leave
 * a message retrievable (per thread) via abw_last_error().
 */
#ifndef ABWALK_ABWALK_H
#define ABWALK_ABWALK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ABW_API __declspec(dllexport)
#else
#define ABW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ABW_OK = 0,
    ABW_ERR_ARGUMENT = 1,
    ABW_ERR_PARSE = 2,
    ABW_ERR_CONFIG = 3,
    ABW_ERR_SOLVER = 4,
    ABW_ERR_GENERATION = 5,
    ABW_ERR_IO = 6,
    ABW_ERR_INTERNAL = 7
} abw_status;

typedef enum { ABW_MODE_DISJOINT = 0, ABW_MODE_OVERLAPPING = 1 } abw_mode;

typedef struct abw_graph abw_graph;
typedef struct abw_truth abw_truth;
typedef struct abw_seeds abw_seeds;
typedef struct abw_result abw_result;

/* Message for the most recent failure on this thread. */
ABW_API const char* abw_last_error(void);

/* ---- graphs ---- */

ABW_API abw_status abw_graph_load_file(const char* path, int one_indexed, abw_graph** out);
ABW_API abw_status abw_graph_node_count(const abw_graph* g, int32_t* out);
ABW_API abw_status abw_graph_edge_count(const abw_graph* g, int64_t* out);
ABW_API abw_status abw_graph_degree(const abw_graph* g, int32_t node, int32_t* out);
ABW_API abw_status abw_graph_is_connected(const abw_graph* g, int32_t* out);
/* Edge list with both orientations, LFR style; one_indexed shifts ids by 1
 * for graphs whose external ids are 0-based. */
ABW_API abw_status abw_graph_write_file(const abw_graph* g, const char* path, int one_indexed);
ABW_API void abw_graph_free(abw_graph* g);

/* ---- benchmark ---- */

typedef struct {
    int32_t n;
    double avg_degree;
    int32_t max_degree;
    double degree_exponent;
    double community_exponent;
    double mu;
    int32_t c_min;
    int32_t c_max;
    double overlap_fraction;
    int32_t memberships_per_overlap_node;
    uint64_t rng_seed;
} abw_benchmark_config;

ABW_API void abw_benchmark_config_default(abw_benchmark_config* cfg);
ABW_API abw_status abw_generate(const abw_benchmark_config* cfg, abw_graph** graph,
                                abw_truth** truth);
ABW_API abw_status abw_read_lfr_files(const char* network_path, const char* community_path,
                                      abw_graph** graph, abw_truth** truth);
ABW_API abw_status abw_truth_community_count(const abw_truth* t, int32_t* out);
ABW_API abw_status abw_truth_write_file(const abw_truth* t, const abw_graph* g,
                                        const char* path, int one_indexed);
ABW_API void abw_truth_free(abw_truth* t);

/* ---- seeds ---- */

ABW_API abw_status abw_pick_seeds(const abw_graph* g, const abw_truth* t, double fraction,
                                  uint64_t rng_seed, abw_seeds** out);
/* "node<TAB>community[,community...]" or "node<TAB>a_1 ... a_k". */
ABW_API abw_status abw_seeds_load_file(const char* path, const abw_graph* g, abw_seeds** out);
ABW_API abw_status abw_seeds_count(const abw_seeds* s, int32_t* out);
ABW_API abw_status abw_seeds_community_count(const abw_seeds* s, int32_t* out);
ABW_API void abw_seeds_free(abw_seeds* s);

/* ---- pipeline ---- */

ABW_API abw_status abw_run(const abw_graph* g, const abw_seeds* s, abw_mode mode,
                           int32_t iterations, double epsilon, double rel_tolerance,
                           abw_result** out);
ABW_API abw_status abw_result_affinity(const abw_result* r, int32_t node, int32_t community,
                                       double* out);
/* Disjoint assignments only. */
ABW_API abw_status abw_result_label(const abw_result* r, int32_t node, int32_t* out);
/* Overlapping assignments; writes up to cap indices, sets *count to the
 * full membership count. */
ABW_API abw_status abw_result_memberships(const abw_result* r, int32_t node, int32_t* buf,
                                          int32_t cap, int32_t* count);
ABW_API abw_status abw_result_score(const abw_result* r, const abw_truth* t, double* nmi);
ABW_API void abw_result_free(abw_result* r);

/* detect, end to end: graph file + seed file -> assignment file
 * (node id, community label(s), affinity vector per line). out_path "-"
 * writes to stdout. */
ABW_API abw_status abw_detect_file(const char* graph_path, int one_indexed,
                                   const char* seed_path, abw_mode mode, int32_t iterations,
                                   double epsilon, double rel_tolerance, const char* out_path);

/* NMI between two community files (community.dat format). overlapping = 0
 * scores partitions, nonzero scores covers with the LFK measure. */
ABW_API abw_status abw_score_files(const char* file_a, const char* file_b, int overlapping,
                                   double* out_nmi);

/* ---- experiment sweeps ---- */

typedef struct {
    abw_benchmark_config benchmark;
    double seed_fraction;
    abw_mode mode;
    int32_t iterations;
    double epsilon;
    int32_t repetitions;
    int32_t sweep_variable; /* 0 = mu, 1 = overlap_fraction */
    const double* sweep_values;
    int32_t sweep_count;
    double rel_tolerance;
    uint64_t rng_seed;
    int32_t workers; /* 0 = available parallelism */
} abw_experiment_spec;

ABW_API void abw_experiment_spec_default(abw_experiment_spec* spec);
/* Runs the sweep and writes one CSV row per sweep value. out_path "-"
 * writes to stdout. */
ABW_API abw_status abw_run_experiment_csv(const abw_experiment_spec* spec,
                                          const char* out_path);

#ifdef __cplusplus
}
#endif

#endif
