#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "oracle.hpp"

namespace testutil {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix) {
    std::random_device rd;
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::filesystem::path candidate =
          std::filesystem::temp_directory_path() /
          (prefix + "_" + std::to_string(rd()));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

// Reference all-pairs shortest paths; infinity marks unreachable pairs.
inline std::vector<std::vector<double>> floyd_warshall(const medoid::WeightedGraph& g) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(g.n_nodes, std::vector<double>(g.n_nodes, inf));
  for (int64_t i = 0; i < g.n_nodes; ++i) d[i][i] = 0.0;
  for (const medoid::Edge& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
    if (!g.directed) d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
  }
  for (int64_t k = 0; k < g.n_nodes; ++k) {
    for (int64_t i = 0; i < g.n_nodes; ++i) {
      if (d[i][k] == inf) continue;
      for (int64_t j = 0; j < g.n_nodes; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Uncounted full distance matrix.
inline std::vector<std::vector<double>> full_matrix(const medoid::DistanceOracle& oracle) {
  const int64_t n = oracle.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (int64_t i = 0; i < n; ++i) oracle.raw_row(i, m[i]);
  return m;
}

// Exact energies from a full matrix.
inline std::vector<double> energies_of(const std::vector<std::vector<double>>& m) {
  std::vector<double> e(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    double sum = 0.0;
    for (double v : m[i]) sum += v;
    e[i] = sum / static_cast<double>(m.size());
  }
  return e;
}

// 1-D points as a dataset, one coordinate per element.
inline medoid::VectorDataset line_points(std::vector<double> xs) {
  medoid::VectorDataset data;
  data.n = static_cast<int64_t>(xs.size());
  data.dim = 1;
  data.values = std::move(xs);
  return data;
}

}  // namespace testutil
