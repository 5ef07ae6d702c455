#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "dataset.hpp"
#include "graph_algo.hpp"

namespace medoid {

// Metric access with cost accounting. `evals` counts scalar distance
// evaluations and `rows` counts full-row computations; one row costs n evals
// by convention (one Dijkstra sweep for graph metrics). dist() and row() are
// counted; raw_dist()/raw_row() are uncounted and reserved for reporting and
// verification. Oracles are immutable after construction apart from counters
// and internal caches, so concurrent counted queries are safe; counter reads
// are meaningful at quiescent points.
class DistanceOracle {
 public:
  virtual ~DistanceOracle() = default;

  int64_t size() const { return n_; }
  virtual bool symmetric() const = 0;
  // True when a single-pair query is served by computing a full source row
  // (graph metrics); false when a pair costs one evaluation (vectors).
  virtual bool row_based() const = 0;

  virtual double dist(int64_t i, int64_t j) = 0;
  void row(int64_t i, std::span<double> out);

  virtual double raw_dist(int64_t i, int64_t j) const = 0;
  virtual void raw_row(int64_t i, std::span<double> out) const = 0;

  uint64_t evals() const { return evals_.load(std::memory_order_relaxed); }
  uint64_t rows() const { return rows_.load(std::memory_order_relaxed); }
  void reset_counters() {
    evals_.store(0, std::memory_order_relaxed);
    rows_.store(0, std::memory_order_relaxed);
  }

 protected:
  explicit DistanceOracle(int64_t n) : n_(n) {}
  void check_index(int64_t i) const;
  void count_evals(uint64_t k) { evals_.fetch_add(k, std::memory_order_relaxed); }
  void count_row() { rows_.fetch_add(1, std::memory_order_relaxed); }
  virtual void compute_row(int64_t i, std::span<double> out) const = 0;

  int64_t n_;
  std::atomic<uint64_t> evals_{0};
  std::atomic<uint64_t> rows_{0};
};

class EuclideanOracle final : public DistanceOracle {
 public:
  explicit EuclideanOracle(std::shared_ptr<const VectorDataset> data);

  bool symmetric() const override { return true; }
  bool row_based() const override { return false; }
  double dist(int64_t i, int64_t j) override;
  double raw_dist(int64_t i, int64_t j) const override;
  void raw_row(int64_t i, std::span<double> out) const override;
  const VectorDataset& data() const { return *data_; }

 private:
  void compute_row(int64_t i, std::span<double> out) const override;
  std::shared_ptr<const VectorDataset> data_;
};

// Shortest-path metric of a non-negatively weighted graph; honors edge
// direction. Pair queries compute and cache one source row, so scanning
// dist(i, 0..n-1) costs a single counted row.
class GraphOracle final : public DistanceOracle {
 public:
  explicit GraphOracle(std::shared_ptr<const WeightedGraph> graph);

  bool symmetric() const override { return !graph_->directed; }
  bool row_based() const override { return true; }
  double dist(int64_t i, int64_t j) override;
  double raw_dist(int64_t i, int64_t j) const override;
  void raw_row(int64_t i, std::span<double> out) const override;
  const WeightedGraph& graph() const { return *graph_; }

 private:
  void compute_row(int64_t i, std::span<double> out) const override;
  std::shared_ptr<const WeightedGraph> graph_;
  Csr csr_;
  mutable std::mutex cache_mu_;
  mutable int64_t cache_src_ = -1;
  mutable std::vector<double> cache_row_;
};

// Symmetric view of a directed graph: d(i, j) = (fwd(i, j) + fwd(j, i)) / 2.
// One row costs one forward sweep plus one sweep of the transpose, counted as
// a single row of n evaluations.
class SymmetrizedGraphOracle final : public DistanceOracle {
 public:
  explicit SymmetrizedGraphOracle(std::shared_ptr<const WeightedGraph> graph);

  bool symmetric() const override { return true; }
  bool row_based() const override { return true; }
  double dist(int64_t i, int64_t j) override;
  double raw_dist(int64_t i, int64_t j) const override;
  void raw_row(int64_t i, std::span<double> out) const override;

 private:
  void compute_row(int64_t i, std::span<double> out) const override;
  std::shared_ptr<const WeightedGraph> graph_;
  Csr fwd_;
  Csr rev_;
  mutable std::mutex cache_mu_;
  mutable int64_t cache_src_ = -1;
  mutable std::vector<double> cache_row_;
};

// Mean distance from element i to all n elements, self included. One row.
double energy(DistanceOracle& oracle, int64_t i);

struct MedoidResult {
  int64_t index = -1;
  double energy = 0.0;
  int64_t n_computed = 0;       // full rows computed
  uint64_t distance_evals = 0;  // scalar evaluations spent by the call
};

// Reference algorithm: computes every row. Lowest index wins energy ties.
MedoidResult brute_force_medoid(DistanceOracle& oracle);

}  // namespace medoid
