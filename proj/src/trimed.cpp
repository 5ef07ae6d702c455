#include "trimed.hpp"

#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace medoid {

void update_bounds(BoundState& state, int64_t i, double energy_i,
                   std::span<const double> row) {
  const int64_t n = static_cast<int64_t>(state.lower.size());
  std::vector<double>& lower = state.lower;
  lower[i] = energy_i;  // row[i] = 0, so the bound is tight for i itself
  for (int64_t j = 0; j < n; ++j) {
    const double bound = std::fabs(energy_i - row[j]);
    if (bound > lower[j]) lower[j] = bound;
  }
}

MedoidResult trimed(DistanceOracle& oracle, const TrimedConfig& config,
                    const TrimedHooks* hooks) {
  const int64_t n = oracle.size();
  if (n <= 0) throw std::invalid_argument("trimed: empty oracle");
  if (config.epsilon < 0) throw std::invalid_argument("trimed: epsilon must be >= 0");
  const uint64_t evals_before = oracle.evals();

  std::vector<int64_t> order;
  if (hooks && hooks->forced_order) {
    order = *hooks->forced_order;
    if (static_cast<int64_t>(order.size()) != n) {
      throw std::invalid_argument("trimed: forced_order size mismatch");
    }
  } else {
    order = Rng(config.seed).permutation(n);
  }

  BoundState state;
  state.lower.assign(n, 0.0);
  const double relax = 1.0 + config.epsilon;
  std::vector<double> row(n);
  int64_t computed = 0;

  for (const int64_t i : order) {
    if (!(state.lower[i] * relax < state.best_energy)) continue;
    oracle.row(i, row);
    ++computed;
    if (hooks && hooks->computed_order) hooks->computed_order->push_back(i);
    double sum = 0.0;
    for (int64_t j = 0; j < n; ++j) sum += row[j];
    const double e = sum / static_cast<double>(n);
    // The incumbent test stays exact regardless of epsilon; only the
    // decision to compute a row is relaxed.
    if (e < state.best_energy) {
      state.best_energy = e;
      state.best_index = i;
    }
    update_bounds(state, i, e, row);
    if (hooks && hooks->after_update) hooks->after_update(state);
  }

  MedoidResult result;
  result.index = state.best_index;
  result.energy = state.best_energy;
  result.n_computed = computed;
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

}  // namespace medoid
