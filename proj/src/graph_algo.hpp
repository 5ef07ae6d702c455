#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dataset.hpp"

namespace medoid {

// Compressed sparse rows over node ids. Undirected graphs store each edge in
// both directions; `transpose` reverses directed edges.
struct Csr {
  int64_t n = 0;
  std::vector<int64_t> offsets;  // n + 1
  std::vector<int64_t> targets;
  std::vector<double> weights;
};

Csr build_csr(const WeightedGraph& graph, bool transpose);

// Single-source shortest path distances into out (size n). Throws
// disconnected_error if any node is unreachable from src.
void dijkstra_row(const Csr& graph, int64_t src, std::span<double> out);

// BFS reachability from src.
std::vector<char> reachable_from(const Csr& graph, int64_t src);

}  // namespace medoid
