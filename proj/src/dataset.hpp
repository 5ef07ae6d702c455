#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace medoid {

enum class Delimiter { whitespace, comma };

// Dense row-major point set: n rows of dim finite coordinates.
struct VectorDataset {
  int64_t n = 0;
  int64_t dim = 0;
  std::vector<double> values;  // n * dim, row-major

  const double* point(int64_t i) const { return values.data() + i * dim; }
  double* point(int64_t i) { return values.data() + i * dim; }
};

// One row per point; '#' comment lines and blank lines are skipped. Every
// data row must have the same number of fields and all fields must parse as
// finite doubles. Errors carry path:line positions.
VectorDataset load_vectors(const std::string& path, Delimiter delim);
void save_vectors(const VectorDataset& data, const std::string& path, Delimiter delim);

struct Edge {
  int64_t u = 0;
  int64_t v = 0;
  double w = 1.0;
};

// Edge list with non-negative finite weights. Node count is 1 + max id seen.
struct WeightedGraph {
  int64_t n_nodes = 0;
  bool directed = false;
  std::vector<Edge> edges;
};

// "u v [w]" per line, weight defaulting to 1. Same comment/blank/error rules
// as load_vectors.
WeightedGraph load_graph(const std::string& path, bool directed);
void save_graph(const WeightedGraph& graph, const std::string& path);

// Throws disconnected_error naming a witness pair unless the graph is
// connected (strongly connected when directed).
void validate_connectivity(const WeightedGraph& graph);

}  // namespace medoid
