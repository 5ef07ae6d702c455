#include "rank.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rng.hpp"

namespace medoid {

namespace {

// Incrementally grown anchor set. pool holds {0..n-1}; the first `taken`
// entries are the anchors, extended by partial Fisher-Yates steps so that any
// prefix is a uniform sample without replacement.
struct Estimator {
  Estimator(DistanceOracle& oracle_, uint64_t seed)
      : oracle(oracle_), rng(seed), n(oracle_.size()) {
    pool.resize(n);
    for (int64_t i = 0; i < n; ++i) pool[i] = i;
    sums.assign(n, 0.0);
    anchor_slot.assign(n, -1);
  }

  void grow(int64_t add) {
    std::vector<double> row(n);
    for (int64_t t = 0; t < add; ++t) {
      const int64_t j = taken + rng.below(n - taken);
      std::swap(pool[taken], pool[j]);
      const int64_t a = pool[taken];
      oracle.row(a, row);
      double sum = 0.0;
      double mx = 0.0;
      for (int64_t i = 0; i < n; ++i) {
        sums[i] += row[i];
        sum += row[i];
        if (row[i] > mx) mx = row[i];
      }
      anchor_slot[a] = taken;
      anchor_energies.push_back(sum / static_cast<double>(n));
      anchor_max.push_back(mx);
      ++taken;
    }
  }

  double estimate(int64_t i) const { return sums[i] / static_cast<double>(taken); }

  double delta_hat() const {
    double mn = std::numeric_limits<double>::infinity();
    for (double m : anchor_max) mn = std::min(mn, m);
    return 2.0 * mn;
  }

  DistanceOracle& oracle;
  Rng rng;
  int64_t n;
  int64_t taken = 0;
  std::vector<int64_t> pool;
  std::vector<double> sums;
  std::vector<int64_t> anchor_slot;  // element id -> anchor slot or -1
  std::vector<double> anchor_energies;
  std::vector<double> anchor_max;
};

// k-th smallest estimate (1-based k).
double kth_estimate(const Estimator& est, int64_t k) {
  std::vector<double> all(est.n);
  for (int64_t i = 0; i < est.n; ++i) all[i] = est.estimate(i);
  std::nth_element(all.begin(), all.begin() + (k - 1), all.end());
  return all[k - 1];
}

double threshold(const Estimator& est, const TopRankParams& params) {
  const double width =
      2.0 * params.alpha_prime * est.delta_hat() *
      std::sqrt(std::log(static_cast<double>(est.n)) / static_cast<double>(est.taken));
  return kth_estimate(est, params.k) + width;
}

std::vector<int64_t> candidates(const Estimator& est, double tau) {
  std::vector<int64_t> q;
  for (int64_t i = 0; i < est.n; ++i) {
    if (est.estimate(i) <= tau) q.push_back(i);
  }
  return q;
}

void check_params(const DistanceOracle& oracle, const TopRankParams& params) {
  if (params.k < 1 || params.k > oracle.size()) {
    throw std::invalid_argument("toprank: need 1 <= k <= n");
  }
  if (!(params.alpha_prime > 0)) {
    throw std::invalid_argument("toprank: alpha_prime must be > 0");
  }
}

// Exact energies over the candidate set; anchors are free (their energies
// were computed during estimation). Returns the k best (energy, id) pairs.
RankResult finalize(DistanceOracle& oracle, const Estimator& est,
                    const std::vector<int64_t>& q, int64_t k) {
  const int64_t n = est.n;
  std::vector<std::pair<double, int64_t>> ranked;
  ranked.reserve(q.size());
  std::vector<double> row(n);
  int64_t fresh_rows = 0;
  for (const int64_t i : q) {
    double e;
    if (est.anchor_slot[i] >= 0) {
      e = est.anchor_energies[est.anchor_slot[i]];
    } else {
      oracle.row(i, row);
      ++fresh_rows;
      double sum = 0.0;
      for (int64_t j = 0; j < n; ++j) sum += row[j];
      e = sum / static_cast<double>(n);
    }
    ranked.emplace_back(e, i);
  }
  std::sort(ranked.begin(), ranked.end());
  RankResult result;
  result.n_anchors = est.taken;
  result.n_candidates = static_cast<int64_t>(q.size());
  result.n_computed = est.taken + fresh_rows;
  for (int64_t t = 0; t < k && t < static_cast<int64_t>(ranked.size()); ++t) {
    result.energies.push_back(ranked[t].first);
    result.ids.push_back(ranked[t].second);
  }
  return result;
}

EnergyEstimates package(const Estimator& est) {
  EnergyEstimates out;
  out.anchors.assign(est.pool.begin(), est.pool.begin() + est.taken);
  out.estimates.resize(est.n);
  for (int64_t i = 0; i < est.n; ++i) out.estimates[i] = est.estimate(i);
  out.delta_hat = est.delta_hat();
  out.anchor_energies = est.anchor_energies;
  out.anchor_row_max = est.anchor_max;
  return out;
}

}  // namespace

EnergyEstimates rand_estimate(DistanceOracle& oracle, int64_t n_anchors, uint64_t seed) {
  if (n_anchors < 1 || n_anchors > oracle.size()) {
    throw std::invalid_argument("rand_estimate: need 1 <= n_anchors <= n");
  }
  Estimator est(oracle, seed);
  est.grow(n_anchors);
  return package(est);
}

EnergyEstimates estimate_with_anchors(DistanceOracle& oracle,
                                      std::span<const int64_t> anchors) {
  if (anchors.empty()) throw std::invalid_argument("estimate_with_anchors: no anchors");
  Estimator est(oracle, 0);
  // Place the requested ids at the front of the pool, then account for them
  // through the same accumulation path as random growth.
  est.taken = 0;
  std::vector<double> row(oracle.size());
  for (const int64_t a : anchors) {
    if (a < 0 || a >= oracle.size() || est.anchor_slot[a] >= 0) {
      throw std::invalid_argument("estimate_with_anchors: bad anchor set");
    }
    oracle.row(a, row);
    double sum = 0.0;
    double mx = 0.0;
    for (int64_t i = 0; i < oracle.size(); ++i) {
      est.sums[i] += row[i];
      sum += row[i];
      if (row[i] > mx) mx = row[i];
    }
    est.anchor_slot[a] = est.taken;
    est.anchor_energies.push_back(sum / static_cast<double>(oracle.size()));
    est.anchor_max.push_back(mx);
    est.pool[est.taken] = a;
    ++est.taken;
  }
  return package(est);
}

int64_t toprank_anchor_count(int64_t n, double anchor_q) {
  const double nn = static_cast<double>(n);
  const double raw = anchor_q * std::pow(nn, 2.0 / 3.0) * std::cbrt(std::log(nn));
  int64_t l = static_cast<int64_t>(std::ceil(raw));
  return std::clamp<int64_t>(l, 1, n);
}

RankResult toprank(DistanceOracle& oracle, const TopRankParams& params, uint64_t seed) {
  check_params(oracle, params);
  const uint64_t evals_before = oracle.evals();
  Estimator est(oracle, seed);
  est.grow(toprank_anchor_count(oracle.size(), params.anchor_q));
  const std::vector<int64_t> q = candidates(est, threshold(est, params));
  RankResult result = finalize(oracle, est, q, params.k);
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

RankResult toprank2(DistanceOracle& oracle, const TopRankParams& params, uint64_t seed) {
  check_params(oracle, params);
  const int64_t n = oracle.size();
  const uint64_t evals_before = oracle.evals();
  const int64_t l0 = params.l0 > 0
                         ? std::min(params.l0, n)
                         : std::clamp<int64_t>(
                               static_cast<int64_t>(std::ceil(std::sqrt(
                                   static_cast<double>(n)))), 1, n);
  const int64_t q_incr =
      params.q_incr > 0
          ? params.q_incr
          : std::max<int64_t>(1, static_cast<int64_t>(
                                     std::ceil(std::log(static_cast<double>(n)))));
  const double log_n = std::log(static_cast<double>(n));

  Estimator est(oracle, seed);
  est.grow(l0);
  std::vector<int64_t> q = candidates(est, threshold(est, params));
  while (est.taken < n) {
    const int64_t p = static_cast<int64_t>(q.size());
    est.grow(std::min(q_incr, n - est.taken));
    q = candidates(est, threshold(est, params));
    const int64_t p_new = static_cast<int64_t>(q.size());
    if (static_cast<double>(p - p_new) < log_n) break;
  }
  RankResult result = finalize(oracle, est, q, params.k);
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

}  // namespace medoid
