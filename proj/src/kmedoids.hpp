#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "oracle.hpp"

namespace medoid {

// Per-element and per-cluster working arrays, indexed by storage position.
// Elements are kept contiguous by cluster (cluster k occupies positions
// [cum[k], cum[k+1]), its medoid first) and order[pos] recovers the original
// element id. Bound invariants, preserved by every phase that claims them:
//   lc[pos][k]   <= dist(element at pos, medoid of cluster k)
//   ls[pos]      <= sum of distances from pos to the elements of its cluster
//   med_dist[pos] = dist(element at pos, medoid of its cluster), exact
struct ClusterState {
  int64_t n = 0;
  int64_t k_clusters = 0;
  std::vector<int64_t> order;       // position -> original element id
  std::vector<int64_t> assign;      // position -> cluster (a)
  std::vector<double> med_dist;     // position -> distance to own medoid (d)
  std::vector<double> lc;           // n x K lower bounds, row-major (l_c)
  std::vector<double> ls;           // position -> in-cluster sum lower bound (l_s)
  std::vector<int64_t> count;       // cluster -> size (v)
  std::vector<int64_t> cum;         // K + 1 cumulative sizes (V), cum[0] = 0
  std::vector<double> sum_to_medoid;  // cluster -> in-cluster sum at medoid (s)
  std::vector<double> moved;        // cluster -> distance its medoid just moved (p)
  std::vector<int64_t> medoid_pos;  // cluster -> position of medoid (m)

  double& lc_at(int64_t pos, int64_t k) { return lc[pos * k_clusters + k]; }
  double lc_at(int64_t pos, int64_t k) const { return lc[pos * k_clusters + k]; }
  int64_t medoid_id(int64_t k) const { return order[medoid_pos[k]]; }
};

// Per-cluster element flux of one reassignment pass: counts and medoid
// distances of arrivals and departures, consumed by update_sum_bounds.
struct ClusterFlux {
  std::vector<int64_t> arrivals;
  std::vector<int64_t> departures;
  std::vector<double> arrival_dist;
  std::vector<double> departure_dist;
};

struct KMedoidsResult {
  std::vector<int64_t> medoids;      // element ids, by cluster
  std::vector<int64_t> assignments;  // element id -> cluster
  double objective = 0.0;  // exact sum of distances to nearest returned medoid
  int64_t iterations = 0;
  uint64_t distance_evals = 0;
};

// K distinct ids drawn uniformly without replacement.
std::vector<int64_t> init_uniform(int64_t n, int64_t K, uint64_t seed);

struct ParkInit {
  std::vector<int64_t> ids;  // ascending f, ties by index
  // True when some column sum S(j) was zero (all points identical to j);
  // those terms are treated as zero.
  bool degenerate = false;
};

// Picks the K most central elements by f(i) = sum_j dist(i,j) / S(j) with
// S(j) = sum_i dist(i,j). Two passes over all pairs, O(n) memory.
ParkInit init_park(DistanceOracle& oracle, int64_t K);

// Voronoi iteration on a precomputed distance matrix. One iteration assigns
// every element to its nearest medoid and then recomputes each cluster's
// medoid exactly; convergence = the medoid id set is unchanged by the
// recompute step. Assignment ties go to the lowest cluster index (medoids
// pinned to their own clusters); the medoid recompute keeps the incumbent on
// exact ties and otherwise takes the lowest-id strict improver, the same
// rule the accelerated variant applies.
KMedoidsResult kmeds(DistanceOracle& oracle, int64_t K, std::span<const int64_t> init,
                     int64_t max_iters = 10000);

enum class TrikmedsPhase { initialise, update_medoids, assign, update_sum_bounds };

struct TrikmedsHooks {
  // Runs after every phase; the state satisfies the invariants that phase
  // claims (see ClusterState).
  std::function<void(const ClusterState&, TrikmedsPhase)> after_phase;
};

// Bound-accelerated kmeds: identical decisions, fewer distance evaluations.
// epsilon relaxes the two compute-skip tests (a candidate row or distance is
// computed only while bound * (1 + epsilon) < incumbent); acceptance tests
// stay exact, so epsilon = 0 reproduces kmeds decision-for-decision.
KMedoidsResult trikmeds(DistanceOracle& oracle, int64_t K, double epsilon,
                        std::span<const int64_t> init, int64_t max_iters = 10000,
                        const TrikmedsHooks* hooks = nullptr);

// Phase functions, exposed for verification. trikmeds composes them as:
// initialise; loop { update_medoids; stop if no medoid changed;
// assign_to_clusters; update_sum_bounds }.
ClusterState trikmeds_initialise(DistanceOracle& oracle, int64_t K,
                                 std::span<const int64_t> init);
void update_medoids(ClusterState& state, DistanceOracle& oracle, double epsilon);
ClusterFlux assign_to_clusters(ClusterState& state, DistanceOracle& oracle,
                               double epsilon);
void update_sum_bounds(ClusterState& state, const ClusterFlux& flux);
// Restores the contiguous-by-cluster, medoid-first layout; stable within a
// cluster. cum/count must already describe the target layout.
void contiguate(ClusterState& state);

}  // namespace medoid
