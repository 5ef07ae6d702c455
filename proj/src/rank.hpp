#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oracle.hpp"

namespace medoid {

// Anchor-based energy estimates. estimates[j] is the mean distance from the
// anchors to j; delta_hat = 2 * min over anchors of the anchor's largest
// distance, an upper bound on the set diameter. Exact anchor energies and
// per-anchor row maxima are kept so later passes never recompute anchor rows.
struct EnergyEstimates {
  std::vector<int64_t> anchors;
  std::vector<double> estimates;
  double delta_hat = 0.0;
  std::vector<double> anchor_energies;
  std::vector<double> anchor_row_max;
};

// Estimates all n energies from n_anchors anchors drawn uniformly without
// replacement. Costs exactly n_anchors rows.
EnergyEstimates rand_estimate(DistanceOracle& oracle, int64_t n_anchors, uint64_t seed);

// Same estimate from a fixed anchor set (no randomness).
EnergyEstimates estimate_with_anchors(DistanceOracle& oracle,
                                      std::span<const int64_t> anchors);

struct TopRankParams {
  int64_t k = 1;
  double alpha_prime = 1.0;  // threshold width multiplier
  double anchor_q = 1.0;     // multiplier on n^(2/3) * (ln n)^(1/3) anchors
  int64_t l0 = 0;            // initial anchors for toprank2; 0 = ceil(sqrt(n))
  int64_t q_incr = 0;        // anchors added per round in toprank2; 0 = ceil(ln n)
};

struct RankResult {
  std::vector<int64_t> ids;      // k ids by ascending exact energy, ties by index
  std::vector<double> energies;  // exact energies of ids
  int64_t n_anchors = 0;         // final |I|
  int64_t n_candidates = 0;      // final |Q|
  int64_t n_computed = 0;        // rows computed: |I| + |Q \ I|
  uint64_t distance_evals = 0;
};

// Anchor count for the single-pass algorithm: ceil(q * n^(2/3) * (ln n)^(1/3))
// clamped to [1, n].
int64_t toprank_anchor_count(int64_t n, double anchor_q);

// Single pass: estimate with toprank_anchor_count anchors, keep candidates
// whose estimate is at most Ehat[k] + 2 * alpha' * delta_hat * sqrt(ln n / l)
// where Ehat[k] is the k-th smallest estimate, then rank candidates by exact
// energy.
RankResult toprank(DistanceOracle& oracle, const TopRankParams& params, uint64_t seed);

// Incremental variant: starts with l0 anchors and adds q_incr per round,
// recomputing estimates, delta_hat and the candidate set, until a round
// shrinks the candidate set by fewer than ln n elements (or anchors are
// exhausted). Then ranks the final candidates by exact energy.
RankResult toprank2(DistanceOracle& oracle, const TopRankParams& params, uint64_t seed);

}  // namespace medoid
