#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "medoid/medoid.h"

namespace bench {

namespace detail {
struct vectors_free { void operator()(medoid_vectors* p) const { medoid_vectors_free(p); } };
struct graph_free { void operator()(medoid_graph* p) const { medoid_graph_free(p); } };
struct oracle_free { void operator()(medoid_oracle* p) const { medoid_oracle_free(p); } };
struct clustering_free { void operator()(medoid_clustering* p) const { medoid_clustering_free(p); } };
}  // namespace detail

using vectors_ptr = std::unique_ptr<medoid_vectors, detail::vectors_free>;
using graph_ptr = std::unique_ptr<medoid_graph, detail::graph_free>;
using oracle_ptr = std::unique_ptr<medoid_oracle, detail::oracle_free>;
using clustering_ptr = std::unique_ptr<medoid_clustering, detail::clustering_free>;

// Throws std::runtime_error carrying medoid_last_error() unless status is OK.
void check(medoid_status status);

// Generator spec with a canonical string form, e.g.
//   uniform_cube(n=1000,d=2,seed=7)
//   ball_skewed(n=4096,d=2,p_keep=0.1,seed=3)
//   sensor(n=500,radius_const=1.25,directed=0,seed=1)
// Kinds: uniform_cube, ball_uniform, ball_skewed, sensor. parse() accepts any
// key order and missing keys (left at defaults), so partial templates like
// "uniform_cube(d=2)" are valid until instantiated with n and seed.
struct GenSpec {
  std::string kind;
  int64_t n = 0;
  int64_t dim = 2;
  double p_keep = 0.1;
  double radius_const = 1.25;
  bool directed = false;
  uint64_t seed = 0;

  std::string to_string() const;
  static GenSpec parse(const std::string& text);
};

// A dataset reference is either a GenSpec string (contains '(') or a file
// reference "vec:PATH", "csv:PATH", "graph:PATH", "digraph:PATH".
struct LoadedData {
  vectors_ptr vectors;  // null for graphs
  graph_ptr graph;      // null for vectors
  vectors_ptr coords;   // sensor generator only
  int64_t retries = 0;  // sensor generator only
  std::string kind;     // "vectors" or "graph"
  int64_t n = 0;
  int64_t dim = 0;
  int64_t edges = 0;
  bool directed = false;
};

LoadedData load_data(const std::string& dataset);

// One benchmark run. Doubles round-trip bit-exactly through the CSV layer.
struct RunRecord {
  int64_t schema_version = 1;
  std::string algorithm;
  std::string dataset;  // GenSpec string or file reference
  std::string kind;     // "vectors" or "graph"
  int64_t n = 0;
  int64_t dim = 0;      // 0 for graphs
  int64_t edges = 0;    // 0 for vectors
  int64_t directed = 0;
  uint64_t seed = 0;
  int64_t k = 1;        // top-k for rank algorithms, K for clustering
  double epsilon = 0.0;
  double alpha_prime = 0.0;  // rank algorithms only
  double anchor_q = 0.0;     // rank algorithms only
  int64_t n_anchors = 0;     // rand only; 0 = default
  int64_t l0 = 0;            // toprank2 only
  int64_t q_incr = 0;        // toprank2 only
  std::string init;          // clustering runs: uniform | park
  int64_t max_iters = 0;     // clustering runs
  int64_t n_computed = 0;    // full rows; 0 for clustering runs
  uint64_t distance_evals = 0;
  std::string result;   // element id, or cluster medoid ids joined with ';'
  double objective = 0.0;  // energy (medoid) or clustering objective
  int64_t iterations = 0;
  double wall_time_s = 0.0;
  double evals_ratio = 0.0;  // distance_evals / n^2
  double phi_c = 0.0;  // evals relative to a supplied epsilon=0 baseline
  double phi_e = 0.0;  // objective relative to the same baseline
  std::string status = "ok";
  std::string note;
};

/* ---- CSV ---------------------------------------------------------------- */

// Shortest representation that parses back to the same double.
std::string format_double(double value);

std::string csv_header();
std::string to_csv_row(const RunRecord& record);
// Header-driven; unknown columns are ignored, missing known columns keep
// defaults. Throws parse failures as std::runtime_error with path:line.
std::vector<RunRecord> read_csv(const std::string& path);
void write_csv(const std::string& path, std::span<const RunRecord> records);
// Creates the file with a header when absent.
void append_csv(const std::string& path, const RunRecord& record);

/* ---- runs --------------------------------------------------------------- */

struct MedoidParams {
  uint64_t seed = 0;
  double epsilon = 0.0;      // trimed
  int64_t k = 1;             // rank algorithms
  double alpha_prime = 1.0;  // rank algorithms
  double anchor_q = 1.0;     // rank algorithms
  int64_t n_anchors = 0;     // rand; 0 = same default as toprank
  int64_t l0 = 0;            // toprank2; 0 = ceil(sqrt(n))
  int64_t q_incr = 0;        // toprank2; 0 = ceil(ln n)
};

// algorithm in {brute, trimed, rand, toprank, toprank2}. Directed graphs are
// symmetrized for brute/trimed and used as-is for the rank estimators.
RunRecord run_medoid_algo(const std::string& algorithm, const std::string& dataset,
                          const MedoidParams& params);

struct KMedoidsParams {
  uint64_t seed = 0;
  int64_t K = 2;
  double epsilon = 0.0;       // trikmeds
  std::string init = "uniform";  // uniform | park
  int64_t max_iters = 10000;
};

// algorithm in {kmeds, trikmeds}. Directed graphs are symmetrized.
// distance_evals covers initialization (park scans) plus the algorithm.
RunRecord run_kmedoids_algo(const std::string& algorithm, const std::string& dataset,
                            const KMedoidsParams& params);

// Fills record.phi_c / phi_e relative to an epsilon = 0 baseline run.
void apply_baseline(RunRecord& record, const RunRecord& baseline);

/* ---- sweeps -------------------------------------------------------------- */

struct SweepSpec {
  std::string generator;  // GenSpec template; n and seed are filled per cell
  std::vector<std::string> algorithms;
  std::vector<int64_t> n_grid;  // strictly increasing
  int64_t seeds = 1;            // runs per (algorithm, N); seed = base_seed + s
  uint64_t base_seed = 0;
  MedoidParams params;
};

struct SweepSummary {
  struct PerAlgo {
    std::string algorithm;
    std::vector<double> mean_n_computed;  // aligned with n_grid; NaN if no data
    double slope = 0.0;                   // log-log fit of mean n_computed vs N
  };
  std::vector<PerAlgo> per_algo;
};

// Runs every (algorithm, N, seed) cell; failures become status="error" records
// and the sweep continues. Single-threaded, deterministic record order.
SweepSummary sweep(const SweepSpec& spec, std::vector<RunRecord>& out_records);

std::string format_summary(const SweepSpec& spec, const SweepSummary& summary);

// Least-squares slope of ln(y) vs ln(x); requires positive values.
double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

/* ---- replay -------------------------------------------------------------- */

struct ReplayOutcome {
  RunRecord fresh;
  bool matches = false;
  std::string diff;  // empty when matches
};

// Re-runs a record from its dataset string and parameters and compares
// n_computed, distance_evals, result and objective.
ReplayOutcome replay(const RunRecord& record);

}  // namespace bench
