/* C API for the medoid toolkit: datasets, metric oracles with evaluation
 * counters, medoid search, top-k ranking, and K-medoids clustering.
 *
 * Conventions: every fallible function returns a medoid_status and writes
 * results through out-parameters; MEDOID_OK is 0. On failure,
 * medoid_last_error() returns a thread-local message describing the most
 * recent error on the calling thread. Objects returned through
 * medoid_*_create/load/gen functions are owned by the caller and released
 * with the matching medoid_*_free (free functions accept NULL).
 *
 * Handles are opaque. A medoid_oracle keeps a reference to the dataset or
 * graph it was built from, so the source object may be freed first.
 */

#ifndef MEDOID_MEDOID_H
#define MEDOID_MEDOID_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum medoid_status {
  MEDOID_OK = 0,
  MEDOID_ERR_INVALID_ARGUMENT = 1, /* bad parameter or precondition */
  MEDOID_ERR_PARSE = 2,            /* malformed input data */
  MEDOID_ERR_IO = 3,               /* filesystem failure */
  MEDOID_ERR_DISCONNECTED = 4,     /* graph not (strongly) connected */
  MEDOID_ERR_GENERATION = 5,       /* generator retry budget exhausted */
  MEDOID_ERR_INTERNAL = 6          /* unexpected failure */
} medoid_status;

/* Human-readable name of a status code (static storage). */
const char* medoid_status_name(medoid_status status);

/* Message of the calling thread's most recent error; empty string if none.
 * Valid until the next failing call on the same thread. */
const char* medoid_last_error(void);

/* Library version as "major.minor.patch" (static storage). */
const char* medoid_version(void);

/* ---- datasets ---------------------------------------------------------- */

typedef struct medoid_vectors medoid_vectors;
typedef struct medoid_graph medoid_graph;

/* Copies n * dim doubles (row-major points). */
medoid_status medoid_vectors_create(int64_t n, int64_t dim, const double* values,
                                    medoid_vectors** out);
/* Text loader: one point per line, '#' comments and blank lines skipped,
 * comma or whitespace delimited. */
medoid_status medoid_vectors_load(const char* path, int comma_delimited,
                                  medoid_vectors** out);
medoid_status medoid_vectors_save(const medoid_vectors* vectors, const char* path,
                                  int comma_delimited);
int64_t medoid_vectors_n(const medoid_vectors* vectors);
int64_t medoid_vectors_dim(const medoid_vectors* vectors);
/* Borrowed pointer to the n * dim row-major values. */
const double* medoid_vectors_values(const medoid_vectors* vectors);
void medoid_vectors_free(medoid_vectors* vectors);

/* endpoints holds n_edges (u, v) pairs; weights may be NULL for all-1. */
medoid_status medoid_graph_create(int64_t n_nodes, int64_t n_edges,
                                  const int64_t* endpoints, const double* weights,
                                  int directed, medoid_graph** out);
/* Text loader: "u v [w]" per line, weight defaults to 1. */
medoid_status medoid_graph_load(const char* path, int directed, medoid_graph** out);
medoid_status medoid_graph_save(const medoid_graph* graph, const char* path);
int64_t medoid_graph_n_nodes(const medoid_graph* graph);
int64_t medoid_graph_n_edges(const medoid_graph* graph);
int medoid_graph_directed(const medoid_graph* graph);
/* MEDOID_OK when connected (strongly connected if directed); otherwise
 * MEDOID_ERR_DISCONNECTED with a witness pair in medoid_last_error(). */
medoid_status medoid_graph_validate(const medoid_graph* graph);
void medoid_graph_free(medoid_graph* graph);

/* ---- generators --------------------------------------------------------- */

medoid_status medoid_gen_uniform_cube(int64_t n, int64_t dim, uint64_t seed,
                                      medoid_vectors** out);
medoid_status medoid_gen_ball_uniform(int64_t n, int64_t dim, uint64_t seed,
                                      medoid_vectors** out);
/* Half-volume inner shell kept with probability p_keep, else pushed to the
 * outer shell; p_keep = 1 matches medoid_gen_ball_uniform. */
medoid_status medoid_gen_ball_skewed(int64_t n, int64_t dim, double p_keep,
                                     uint64_t seed, medoid_vectors** out);
/* Random geometric graph in the unit square with connection radius
 * radius_const / sqrt(n); resamples with incremented seeds until connected.
 * out_coords (optional) receives the sampled points; out_retries (optional)
 * the number of resamples used. */
medoid_status medoid_gen_sensor_graph(int64_t n, double radius_const, int directed,
                                      uint64_t seed, int64_t max_retries,
                                      medoid_graph** out,
                                      medoid_vectors** out_coords,
                                      int64_t* out_retries);

/* ---- metric oracles ----------------------------------------------------- */

typedef struct medoid_oracle medoid_oracle;

medoid_status medoid_oracle_euclidean(const medoid_vectors* vectors,
                                      medoid_oracle** out);
/* Shortest-path metric honoring edge directions; requires a (strongly)
 * connected graph. */
medoid_status medoid_oracle_graph(const medoid_graph* graph, medoid_oracle** out);
/* Symmetric view of a directed graph: (d(i,j) + d(j,i)) / 2. */
medoid_status medoid_oracle_graph_symmetrized(const medoid_graph* graph,
                                              medoid_oracle** out);
int64_t medoid_oracle_n(const medoid_oracle* oracle);
int medoid_oracle_symmetric(const medoid_oracle* oracle);

/* Counted queries. A full row costs n scalar evaluations (one shortest-path
 * sweep per source for graphs); out must hold n doubles. */
medoid_status medoid_oracle_dist(medoid_oracle* oracle, int64_t i, int64_t j,
                                 double* out);
medoid_status medoid_oracle_row(medoid_oracle* oracle, int64_t i, double* out);
/* Mean distance from i to all elements (self included): one counted row. */
medoid_status medoid_oracle_energy(medoid_oracle* oracle, int64_t i, double* out);

/* Scalar evaluations and full rows spent so far. */
uint64_t medoid_oracle_evals(const medoid_oracle* oracle);
uint64_t medoid_oracle_rows(const medoid_oracle* oracle);
void medoid_oracle_reset_counters(medoid_oracle* oracle);
void medoid_oracle_free(medoid_oracle* oracle);

/* ---- medoid search ------------------------------------------------------ */

typedef struct medoid_result {
  int64_t index;           /* element id of the returned medoid */
  double energy;           /* its mean distance to all elements */
  int64_t n_computed;      /* full rows computed */
  uint64_t distance_evals; /* scalar evaluations spent */
} medoid_result;

/* Computes every row; the reference answer. */
medoid_status medoid_brute_force(medoid_oracle* oracle, medoid_result* out);

/* Triangle-inequality lower bounds skip most rows; epsilon = 0 is exact and
 * epsilon > 0 allows energy up to (1 + epsilon) times the minimum. */
medoid_status medoid_trimed(medoid_oracle* oracle, uint64_t seed, double epsilon,
                            medoid_result* out);

/* Picks the element with the best anchor-estimated energy (n_anchors rows;
 * the winner's reported energy is exact). n_anchors <= 0 selects the same
 * default anchor count as medoid_toprank. */
medoid_status medoid_rand_select(medoid_oracle* oracle, int64_t n_anchors,
                                 uint64_t seed, medoid_result* out);

typedef struct medoid_rank_params {
  int64_t k;          /* top-k size, >= 1 */
  double alpha_prime; /* threshold width multiplier, > 0 */
  double anchor_q;    /* multiplier on n^(2/3) (ln n)^(1/3) anchors */
  int64_t l0;         /* toprank2 initial anchors; <= 0 = ceil(sqrt(n)) */
  int64_t q_incr;     /* toprank2 anchors per round; <= 0 = ceil(ln n) */
} medoid_rank_params;

/* k = 1, alpha_prime = 1, anchor_q = 1, l0 = 0, q_incr = 0. */
void medoid_rank_params_init(medoid_rank_params* params);

typedef struct medoid_rank_stats {
  int64_t n_anchors;
  int64_t n_candidates;
  int64_t n_computed; /* rows: anchors + non-anchor candidates */
  uint64_t distance_evals;
} medoid_rank_stats;

/* Writes the top-k ids (ascending exact energy, ties by index) and their
 * energies into caller buffers of size k; stats is optional. */
medoid_status medoid_toprank(medoid_oracle* oracle, const medoid_rank_params* params,
                             uint64_t seed, int64_t* out_ids, double* out_energies,
                             medoid_rank_stats* out_stats);
medoid_status medoid_toprank2(medoid_oracle* oracle, const medoid_rank_params* params,
                              uint64_t seed, int64_t* out_ids, double* out_energies,
                              medoid_rank_stats* out_stats);

/* ---- K-medoids ---------------------------------------------------------- */

typedef struct medoid_clustering medoid_clustering;

/* K distinct ids, uniform without replacement, into out_ids[K]. */
medoid_status medoid_init_uniform(int64_t n, int64_t K, uint64_t seed,
                                  int64_t* out_ids);
/* Centrality-based choice (two full passes over all pairs). out_degenerate
 * (optional) is set to 1 when a zero column sum forced terms to 0. */
medoid_status medoid_init_park(medoid_oracle* oracle, int64_t K, int64_t* out_ids,
                               int* out_degenerate);

/* Voronoi iteration over the full distance matrix. */
medoid_status medoid_kmeds(medoid_oracle* oracle, int64_t K, const int64_t* init_ids,
                           int64_t max_iters, medoid_clustering** out);
/* Bound-accelerated variant; epsilon = 0 matches medoid_kmeds exactly.
 * Requires a symmetric oracle. */
medoid_status medoid_trikmeds(medoid_oracle* oracle, int64_t K, double epsilon,
                              const int64_t* init_ids, int64_t max_iters,
                              medoid_clustering** out);

int64_t medoid_clustering_k(const medoid_clustering* clustering);
/* Borrowed pointers, valid until the clustering is freed. */
const int64_t* medoid_clustering_medoids(const medoid_clustering* clustering);
const int64_t* medoid_clustering_assignments(const medoid_clustering* clustering);
double medoid_clustering_objective(const medoid_clustering* clustering);
int64_t medoid_clustering_iterations(const medoid_clustering* clustering);
uint64_t medoid_clustering_distance_evals(const medoid_clustering* clustering);
void medoid_clustering_free(medoid_clustering* clustering);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MEDOID_MEDOID_H */
