#include "kmedoids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace medoid {

namespace {

void check_init(int64_t n, int64_t K, std::span<const int64_t> init) {
  if (K < 1 || K > n) throw std::invalid_argument("kmedoids: need 1 <= K <= n");
  if (static_cast<int64_t>(init.size()) != K) {
    throw std::invalid_argument("kmedoids: init must hold exactly K ids");
  }
  std::vector<char> seen(n, 0);
  for (const int64_t id : init) {
    if (id < 0 || id >= n || seen[id]) {
      throw std::invalid_argument("kmedoids: init ids must be distinct and in [0, n)");
    }
    seen[id] = 1;
  }
}

// Exact objective of a medoid set, uncounted: sum over elements of the
// distance to the nearest medoid.
double exact_objective(const DistanceOracle& oracle, std::span<const int64_t> medoids) {
  const int64_t n = oracle.size();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<double> row(n);
  for (const int64_t m : medoids) {
    oracle.raw_row(m, row);
    for (int64_t j = 0; j < n; ++j) best[j] = std::min(best[j], row[j]);
  }
  double sum = 0.0;
  for (const double d : best) sum += d;
  return sum;
}

template <class T>
void gather(std::vector<T>& v, const std::vector<int64_t>& newpos) {
  std::vector<T> out(v.size());
  for (size_t pos = 0; pos < v.size(); ++pos) out[newpos[pos]] = v[pos];
  v.swap(out);
}

}  // namespace

std::vector<int64_t> init_uniform(int64_t n, int64_t K, uint64_t seed) {
  if (K < 1 || K > n) throw std::invalid_argument("init_uniform: need 1 <= K <= n");
  return Rng(seed).sample_without_replacement(n, K);
}

ParkInit init_park(DistanceOracle& oracle, int64_t K) {
  const int64_t n = oracle.size();
  if (K < 1 || K > n) throw std::invalid_argument("init_park: need 1 <= K <= n");
  // Two passes, O(n) memory: column sums S(j) first, then the centrality
  // scores f(i) = sum_j dist(i,j) / S(j). Zero column sums (every point
  // identical to j) contribute zero terms and set the degenerate flag.
  std::vector<double> col_sum(n, 0.0);
  std::vector<double> f(n, 0.0);
  if (oracle.row_based()) {
    std::vector<double> row(n);
    for (int64_t i = 0; i < n; ++i) {
      oracle.row(i, row);
      for (int64_t j = 0; j < n; ++j) col_sum[j] += row[j];
    }
    for (int64_t i = 0; i < n; ++i) {
      oracle.row(i, row);
      for (int64_t j = 0; j < n; ++j) {
        if (col_sum[j] > 0.0) f[i] += row[j] / col_sum[j];
      }
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      for (int64_t j = i + 1; j < n; ++j) {
        const double d = oracle.dist(i, j);
        col_sum[i] += d;
        col_sum[j] += d;
      }
    }
    for (int64_t i = 0; i < n; ++i) {
      for (int64_t j = i + 1; j < n; ++j) {
        const double d = oracle.dist(i, j);
        if (col_sum[j] > 0.0) f[i] += d / col_sum[j];
        if (col_sum[i] > 0.0) f[j] += d / col_sum[i];
      }
    }
  }
  ParkInit out;
  if (n > 1) {
    for (const double s : col_sum) {
      if (s == 0.0) {
        out.degenerate = true;
        break;
      }
    }
  }
  std::vector<int64_t> idx(n);
  for (int64_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int64_t a, int64_t b) { return f[a] < f[b]; });
  out.ids.assign(idx.begin(), idx.begin() + K);
  return out;
}

KMedoidsResult kmeds(DistanceOracle& oracle, int64_t K, std::span<const int64_t> init,
                     int64_t max_iters) {
  const int64_t n = oracle.size();
  check_init(n, K, init);
  if (max_iters < 1) throw std::invalid_argument("kmeds: max_iters must be >= 1");
  const uint64_t evals_before = oracle.evals();

  // Full matrix upfront: one evaluation per unordered pair for vector
  // metrics, one row per element for graph metrics.
  std::vector<double> D(static_cast<size_t>(n) * n);
  if (oracle.row_based()) {
    for (int64_t i = 0; i < n; ++i) {
      oracle.row(i, std::span<double>(D.data() + i * n, n));
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      D[i * n + i] = 0.0;
      for (int64_t j = i + 1; j < n; ++j) {
        const double d = oracle.dist(i, j);
        D[i * n + j] = d;
        D[j * n + i] = d;
      }
    }
  }
  auto dm = [&](int64_t i, int64_t j) { return D[i * n + j]; };

  std::vector<int64_t> medoids(init.begin(), init.end());
  std::vector<int64_t> pinned(n, -1);  // element id -> its cluster if a medoid
  for (int64_t k = 0; k < K; ++k) pinned[medoids[k]] = k;
  std::vector<int64_t> assign(n);
  // Nearest medoid, lowest cluster index on ties; medoids stay in their own
  // clusters (their distance is 0, the pin only matters for duplicates).
  auto assign_all = [&]() {
    for (int64_t i = 0; i < n; ++i) {
      if (pinned[i] >= 0) {
        assign[i] = pinned[i];
        continue;
      }
      int64_t best = 0;
      double bd = dm(i, medoids[0]);
      for (int64_t k = 1; k < K; ++k) {
        const double d = dm(i, medoids[k]);
        if (d < bd) {
          bd = d;
          best = k;
        }
      }
      assign[i] = best;
    }
  };
  assign_all();

  int64_t iterations = 0;
  std::vector<std::vector<int64_t>> members(K);
  for (int64_t t = 1; t <= max_iters; ++t) {
    iterations = t;
    for (auto& m : members) m.clear();
    for (int64_t i = 0; i < n; ++i) members[assign[i]].push_back(i);
    bool changed = false;
    for (int64_t k = 0; k < K; ++k) {
      if (members[k].empty()) continue;  // keep previous medoid
      // Strictly-better candidates displace the incumbent; exact ties keep
      // it (size-2 clusters always tie), matching the accelerated variant.
      int64_t best_id = medoids[k];
      double best_sum = 0.0;
      for (const int64_t j : members[k]) best_sum += dm(best_id, j);
      for (const int64_t i : members[k]) {  // ascending id among improvers
        double sum = 0.0;
        for (const int64_t j : members[k]) sum += dm(i, j);
        if (sum < best_sum) {
          best_sum = sum;
          best_id = i;
        }
      }
      if (best_id != medoids[k]) {
        changed = true;
        pinned[medoids[k]] = -1;
        medoids[k] = best_id;
        pinned[best_id] = k;
      }
    }
    if (!changed) break;
    assign_all();
  }

  KMedoidsResult result;
  result.medoids = medoids;
  result.assignments = assign;
  result.iterations = iterations;
  result.objective = exact_objective(oracle, medoids);
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

ClusterState trikmeds_initialise(DistanceOracle& oracle, int64_t K,
                                 std::span<const int64_t> init) {
  const int64_t n = oracle.size();
  check_init(n, K, init);
  if (!oracle.symmetric()) {
    throw std::invalid_argument(
        "trikmeds: metric must be symmetric (use a symmetrized view for "
        "directed graphs)");
  }
  ClusterState st;
  st.n = n;
  st.k_clusters = K;
  st.order.resize(n);
  for (int64_t i = 0; i < n; ++i) st.order[i] = i;
  st.assign.assign(n, 0);
  st.med_dist.assign(n, 0.0);
  st.lc.assign(static_cast<size_t>(n) * K, 0.0);
  st.ls.assign(n, 0.0);
  st.count.assign(K, 0);
  st.cum.assign(K + 1, 0);
  st.sum_to_medoid.assign(K, 0.0);
  st.moved.assign(K, 0.0);
  st.medoid_pos.assign(K, 0);

  // Tight bounds to every initial medoid. Row metrics fill one column per
  // medoid row (symmetry); vector metrics pay one evaluation per pair.
  if (oracle.row_based()) {
    std::vector<double> row(n);
    for (int64_t k = 0; k < K; ++k) {
      oracle.row(init[k], row);
      for (int64_t i = 0; i < n; ++i) st.lc_at(i, k) = row[i];
    }
  } else {
    for (int64_t i = 0; i < n; ++i) {
      for (int64_t k = 0; k < K; ++k) st.lc_at(i, k) = oracle.dist(i, init[k]);
    }
  }

  std::vector<int64_t> pin(n, -1);
  for (int64_t k = 0; k < K; ++k) pin[init[k]] = k;
  for (int64_t i = 0; i < n; ++i) {
    int64_t a;
    if (pin[i] >= 0) {
      a = pin[i];  // medoids stay in their own clusters
    } else {
      a = 0;
      for (int64_t k = 1; k < K; ++k) {
        if (st.lc_at(i, k) < st.lc_at(i, a)) a = k;
      }
    }
    st.assign[i] = a;
    st.med_dist[i] = st.lc_at(i, a);
    st.count[a] += 1;
    st.sum_to_medoid[a] += st.med_dist[i];
  }
  for (int64_t k = 0; k < K; ++k) st.cum[k + 1] = st.cum[k] + st.count[k];
  for (int64_t k = 0; k < K; ++k) {
    st.medoid_pos[k] = init[k];              // order is still the identity
    st.ls[init[k]] = st.sum_to_medoid[k];    // tight at medoids
  }
  contiguate(st);
  return st;
}

void update_medoids(ClusterState& st, DistanceOracle& oracle, double epsilon) {
  const int64_t K = st.k_clusters;
  const double relax = 1.0 + epsilon;
  std::vector<double> dtil;
  for (int64_t k = 0; k < K; ++k) {
    st.moved[k] = 0.0;
    const int64_t begin = st.cum[k];
    const int64_t end = st.cum[k + 1];
    const int64_t old_medoid_id = st.medoid_id(k);
    dtil.resize(end - begin);
    for (int64_t i = begin; i < end; ++i) {
      // The relaxed test only gates the computation; acceptance is exact.
      if (!(st.ls[i] * relax < st.sum_to_medoid[k])) continue;
      const int64_t id_i = st.order[i];
      double sum = 0.0;
      for (int64_t j = begin; j < end; ++j) {
        const double d = oracle.dist(id_i, st.order[j]);
        dtil[j - begin] = d;
        sum += d;
      }
      st.ls[i] = sum;  // tight
      if (sum < st.sum_to_medoid[k]) {
        st.sum_to_medoid[k] = sum;
        st.medoid_pos[k] = i;
        // Distances to the new medoid were just computed; reuse them.
        for (int64_t j = begin; j < end; ++j) st.med_dist[j] = dtil[j - begin];
      }
      // |d~(j) * v(k) - sum| lower-bounds j's in-cluster sum: summing the
      // triangle inequality over the cluster in both directions.
      const double vk = static_cast<double>(st.count[k]);
      for (int64_t j = begin; j < end; ++j) {
        const double b = std::fabs(dtil[j - begin] * vk - sum);
        if (b > st.ls[j]) st.ls[j] = b;
      }
    }
    if (st.medoid_pos[k] != begin) {
      st.moved[k] = oracle.dist(old_medoid_id, st.medoid_id(k));
    }
  }
}

ClusterFlux assign_to_clusters(ClusterState& st, DistanceOracle& oracle,
                               double epsilon) {
  const int64_t n = st.n;
  const int64_t K = st.k_clusters;
  const double relax = 1.0 + epsilon;
  ClusterFlux flux;
  flux.arrivals.assign(K, 0);
  flux.departures.assign(K, 0);
  flux.arrival_dist.assign(K, 0.0);
  flux.departure_dist.assign(K, 0.0);

  for (int64_t i = 0; i < n; ++i) {
    // Medoids moved by p(k) since the bounds were set; d(i) is exact for the
    // (possibly new) medoid of i's own cluster.
    for (int64_t k = 0; k < K; ++k) st.lc_at(i, k) -= st.moved[k];
    st.lc_at(i, st.assign[i]) = st.med_dist[i];
    const int64_t a_old = st.assign[i];
    const double d_old = st.med_dist[i];
    const int64_t id = st.order[i];
    for (int64_t k = 0; k < K; ++k) {
      if (!(st.lc_at(i, k) * relax < st.med_dist[i])) continue;
      const double d = oracle.dist(id, st.order[st.medoid_pos[k]]);
      st.lc_at(i, k) = d;
      if (d < st.med_dist[i]) {
        st.assign[i] = k;
        st.med_dist[i] = d;
      }
    }
    if (st.assign[i] != a_old) {
      const int64_t a_new = st.assign[i];
      st.count[a_old] -= 1;
      st.count[a_new] += 1;
      st.ls[i] = 0.0;
      flux.arrivals[a_new] += 1;
      flux.departures[a_old] += 1;
      flux.arrival_dist[a_new] += st.med_dist[i];
      flux.departure_dist[a_old] += d_old;
    }
  }

  // Net flux restores s(k) = sum of in-cluster distances to medoid k:
  // arrivals carry their new d(i), departures remove their old one.
  for (int64_t k = 0; k < K; ++k) {
    st.sum_to_medoid[k] += flux.arrival_dist[k] - flux.departure_dist[k];
    st.cum[k + 1] = st.cum[k] + st.count[k];
  }
  contiguate(st);
  return flux;
}

void update_sum_bounds(ClusterState& st, const ClusterFlux& flux) {
  const int64_t K = st.k_clusters;
  for (int64_t k = 0; k < K; ++k) {
    const double jabs_s = flux.arrival_dist[k] + flux.departure_dist[k];
    const double jnet_s = flux.arrival_dist[k] - flux.departure_dist[k];
    const double jabs_n = static_cast<double>(flux.arrivals[k] + flux.departures[k]);
    const double jnet_n = static_cast<double>(flux.arrivals[k] - flux.departures[k]);
    for (int64_t i = st.cum[k]; i < st.cum[k + 1]; ++i) {
      const double cut = std::min(jabs_s - jnet_n * st.med_dist[i],
                                  jabs_n * st.med_dist[i] - jnet_s);
      st.ls[i] = std::max(0.0, st.ls[i] - cut);
    }
  }
}

void contiguate(ClusterState& st) {
  const int64_t n = st.n;
  const int64_t K = st.k_clusters;
  std::vector<int64_t> newpos(n);
  std::vector<int64_t> fill(K);
  for (int64_t k = 0; k < K; ++k) fill[k] = st.cum[k] + 1;
  for (int64_t pos = 0; pos < n; ++pos) {
    const int64_t k = st.assign[pos];
    newpos[pos] = (st.medoid_pos[k] == pos) ? st.cum[k] : fill[k]++;
  }
  gather(st.order, newpos);
  gather(st.assign, newpos);
  gather(st.med_dist, newpos);
  gather(st.ls, newpos);
  std::vector<double> lc(st.lc.size());
  for (int64_t pos = 0; pos < n; ++pos) {
    std::copy_n(st.lc.begin() + pos * K, K, lc.begin() + newpos[pos] * K);
  }
  st.lc.swap(lc);
  for (int64_t k = 0; k < K; ++k) st.medoid_pos[k] = st.cum[k];
}

KMedoidsResult trikmeds(DistanceOracle& oracle, int64_t K, double epsilon,
                        std::span<const int64_t> init, int64_t max_iters,
                        const TrikmedsHooks* hooks) {
  if (epsilon < 0) throw std::invalid_argument("trikmeds: epsilon must be >= 0");
  if (max_iters < 1) throw std::invalid_argument("trikmeds: max_iters must be >= 1");
  const uint64_t evals_before = oracle.evals();

  ClusterState st = trikmeds_initialise(oracle, K, init);
  if (hooks && hooks->after_phase) hooks->after_phase(st, TrikmedsPhase::initialise);

  int64_t iterations = 0;
  std::vector<int64_t> before(K);
  for (int64_t t = 1; t <= max_iters; ++t) {
    for (int64_t k = 0; k < K; ++k) before[k] = st.medoid_id(k);
    update_medoids(st, oracle, epsilon);
    if (hooks && hooks->after_phase) {
      hooks->after_phase(st, TrikmedsPhase::update_medoids);
    }
    iterations = t;
    bool changed = false;
    for (int64_t k = 0; k < K; ++k) {
      if (st.medoid_id(k) != before[k]) {
        changed = true;
        break;
      }
    }
    if (!changed) break;
    const ClusterFlux flux = assign_to_clusters(st, oracle, epsilon);
    if (hooks && hooks->after_phase) hooks->after_phase(st, TrikmedsPhase::assign);
    update_sum_bounds(st, flux);
    if (hooks && hooks->after_phase) {
      hooks->after_phase(st, TrikmedsPhase::update_sum_bounds);
    }
  }

  KMedoidsResult result;
  result.medoids.resize(K);
  for (int64_t k = 0; k < K; ++k) result.medoids[k] = st.medoid_id(k);
  result.assignments.resize(st.n);
  for (int64_t pos = 0; pos < st.n; ++pos) {
    result.assignments[st.order[pos]] = st.assign[pos];
  }
  result.iterations = iterations;
  result.objective = exact_objective(oracle, result.medoids);
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

}  // namespace medoid
