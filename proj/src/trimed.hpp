#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "oracle.hpp"

namespace medoid {

// Running lower bounds on every element's energy plus the best candidate
// found so far. Invariant: lower[j] <= E(j) for all j at all times.
struct BoundState {
  std::vector<double> lower;
  double best_energy = std::numeric_limits<double>::infinity();
  int64_t best_index = -1;
};

struct TrimedConfig {
  uint64_t seed = 0;
  // 0 returns the exact medoid; e > 0 may return any element whose energy is
  // within (1 + e) of the minimum, skipping more rows.
  double epsilon = 0.0;
};

// Test and inspection hooks; every field is optional.
struct TrimedHooks {
  const std::vector<int64_t>* forced_order = nullptr;   // replaces the seeded shuffle
  std::vector<int64_t>* computed_order = nullptr;       // receives computed ids in order
  std::function<void(const BoundState&)> after_update;  // runs after each bound update
};

// Fold the computed row of element i into the bounds: lower[j] becomes
// max(lower[j], |energy_i - row[j]|), which is a valid energy bound because
// |E(i) - dist(i, j)| <= E(j) in any metric; lower[i] lands exactly on
// energy_i. Does not touch the best candidate.
void update_bounds(BoundState& state, int64_t i, double energy_i,
                   std::span<const double> row);

// Visits elements in seeded random order and computes a row only while the
// element's lower bound, inflated by (1 + epsilon), still beats the best
// energy seen. n_computed is the number of rows computed.
MedoidResult trimed(DistanceOracle& oracle, const TrimedConfig& config = {},
                    const TrimedHooks* hooks = nullptr);

}  // namespace medoid
