#include "oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace medoid {

void DistanceOracle::check_index(int64_t i) const {
  if (i < 0 || i >= n_) {
    throw std::invalid_argument("element index " + std::to_string(i) +
                                " out of range [0, " + std::to_string(n_) + ")");
  }
}

void DistanceOracle::row(int64_t i, std::span<double> out) {
  check_index(i);
  if (static_cast<int64_t>(out.size()) != n_) {
    throw std::invalid_argument("row buffer size mismatch");
  }
  compute_row(i, out);
  count_evals(static_cast<uint64_t>(n_));
  count_row();
}

EuclideanOracle::EuclideanOracle(std::shared_ptr<const VectorDataset> data)
    : DistanceOracle(data ? data->n : 0), data_(std::move(data)) {
  if (!data_ || data_->n <= 0 || data_->dim <= 0) {
    throw std::invalid_argument("EuclideanOracle: empty dataset");
  }
}

double EuclideanOracle::dist(int64_t i, int64_t j) {
  check_index(i);
  check_index(j);
  count_evals(1);
  return raw_dist(i, j);
}

double EuclideanOracle::raw_dist(int64_t i, int64_t j) const {
  const double* a = data_->point(i);
  const double* b = data_->point(j);
  double sq = 0.0;
  for (int64_t d = 0; d < data_->dim; ++d) {
    const double diff = a[d] - b[d];
    sq += diff * diff;
  }
  return std::sqrt(sq);
}

void EuclideanOracle::raw_row(int64_t i, std::span<double> out) const {
  compute_row(i, out);
}

void EuclideanOracle::compute_row(int64_t i, std::span<double> out) const {
  const double* a = data_->point(i);
  const int64_t dim = data_->dim;
  for (int64_t j = 0; j < n_; ++j) {
    const double* b = data_->point(j);
    double sq = 0.0;
    for (int64_t d = 0; d < dim; ++d) {
      const double diff = a[d] - b[d];
      sq += diff * diff;
    }
    out[j] = std::sqrt(sq);
  }
}

GraphOracle::GraphOracle(std::shared_ptr<const WeightedGraph> graph)
    : DistanceOracle(graph ? graph->n_nodes : 0), graph_(std::move(graph)) {
  if (!graph_ || graph_->n_nodes <= 0) {
    throw std::invalid_argument("GraphOracle: empty graph");
  }
  csr_ = build_csr(*graph_, /*transpose=*/false);
}

double GraphOracle::dist(int64_t i, int64_t j) {
  check_index(i);
  check_index(j);
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (cache_src_ != i) {
    cache_row_.resize(n_);
    dijkstra_row(csr_, i, cache_row_);
    cache_src_ = i;
    count_evals(static_cast<uint64_t>(n_));
    count_row();
  }
  return cache_row_[j];
}

double GraphOracle::raw_dist(int64_t i, int64_t j) const {
  std::vector<double> row(n_);
  dijkstra_row(csr_, i, row);
  return row[j];
}

void GraphOracle::raw_row(int64_t i, std::span<double> out) const {
  compute_row(i, out);
}

void GraphOracle::compute_row(int64_t i, std::span<double> out) const {
  dijkstra_row(csr_, i, out);
}

SymmetrizedGraphOracle::SymmetrizedGraphOracle(std::shared_ptr<const WeightedGraph> graph)
    : DistanceOracle(graph ? graph->n_nodes : 0), graph_(std::move(graph)) {
  if (!graph_ || graph_->n_nodes <= 0) {
    throw std::invalid_argument("SymmetrizedGraphOracle: empty graph");
  }
  fwd_ = build_csr(*graph_, /*transpose=*/false);
  rev_ = build_csr(*graph_, /*transpose=*/true);
}

double SymmetrizedGraphOracle::dist(int64_t i, int64_t j) {
  check_index(i);
  check_index(j);
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (cache_src_ != i) {
    cache_row_.resize(n_);
    compute_row(i, cache_row_);
    cache_src_ = i;
    count_evals(static_cast<uint64_t>(n_));
    count_row();
  }
  return cache_row_[j];
}

double SymmetrizedGraphOracle::raw_dist(int64_t i, int64_t j) const {
  std::vector<double> out(n_);
  compute_row(i, out);
  return out[j];
}

void SymmetrizedGraphOracle::raw_row(int64_t i, std::span<double> out) const {
  compute_row(i, out);
}

void SymmetrizedGraphOracle::compute_row(int64_t i, std::span<double> out) const {
  std::vector<double> back(n_);
  dijkstra_row(fwd_, i, out);
  dijkstra_row(rev_, i, back);  // rev row = distances j -> i
  for (int64_t j = 0; j < n_; ++j) out[j] = 0.5 * (out[j] + back[j]);
}

double energy(DistanceOracle& oracle, int64_t i) {
  std::vector<double> row(oracle.size());
  oracle.row(i, row);
  double sum = 0.0;
  for (double d : row) sum += d;
  return sum / static_cast<double>(oracle.size());
}

MedoidResult brute_force_medoid(DistanceOracle& oracle) {
  const int64_t n = oracle.size();
  const uint64_t evals_before = oracle.evals();
  std::vector<double> row(n);
  MedoidResult result;
  result.energy = std::numeric_limits<double>::infinity();
  for (int64_t i = 0; i < n; ++i) {
    oracle.row(i, row);
    double sum = 0.0;
    for (double d : row) sum += d;
    const double e = sum / static_cast<double>(n);
    if (e < result.energy) {
      result.energy = e;
      result.index = i;
    }
  }
  result.n_computed = n;
  result.distance_evals = oracle.evals() - evals_before;
  return result;
}

}  // namespace medoid
