#include "graph_algo.hpp"

#include <limits>
#include <queue>
#include <string>
#include <utility>

namespace medoid {

Csr build_csr(const WeightedGraph& graph, bool transpose) {
  Csr csr;
  csr.n = graph.n_nodes;
  csr.offsets.assign(csr.n + 1, 0);
  const bool both_ways = !graph.directed;
  auto count = [&](int64_t from) { ++csr.offsets[from + 1]; };
  for (const Edge& e : graph.edges) {
    count(transpose && graph.directed ? e.v : e.u);
    if (both_ways) count(e.v);
  }
  for (int64_t i = 0; i < csr.n; ++i) csr.offsets[i + 1] += csr.offsets[i];
  csr.targets.resize(csr.offsets[csr.n]);
  csr.weights.resize(csr.offsets[csr.n]);
  std::vector<int64_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  auto put = [&](int64_t from, int64_t to, double w) {
    const int64_t slot = fill[from]++;
    csr.targets[slot] = to;
    csr.weights[slot] = w;
  };
  for (const Edge& e : graph.edges) {
    if (transpose && graph.directed) {
      put(e.v, e.u, e.w);
    } else {
      put(e.u, e.v, e.w);
    }
    if (both_ways) put(e.v, e.u, e.w);
  }
  return csr;
}

void dijkstra_row(const Csr& graph, int64_t src, std::span<double> out) {
  const double inf = std::numeric_limits<double>::infinity();
  for (int64_t i = 0; i < graph.n; ++i) out[i] = inf;
  out[src] = 0.0;
  using Item = std::pair<double, int64_t>;  // (distance, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > out[u]) continue;  // stale entry
    for (int64_t s = graph.offsets[u]; s < graph.offsets[u + 1]; ++s) {
      const int64_t v = graph.targets[s];
      const double nd = d + graph.weights[s];
      if (nd < out[v]) {
        out[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  for (int64_t i = 0; i < graph.n; ++i) {
    if (out[i] == inf) {
      throw disconnected_error("no path from " + std::to_string(src) + " to " +
                                   std::to_string(i), src, i);
    }
  }
}

std::vector<char> reachable_from(const Csr& graph, int64_t src) {
  std::vector<char> seen(graph.n, 0);
  std::vector<int64_t> stack = {src};
  seen[src] = 1;
  while (!stack.empty()) {
    const int64_t u = stack.back();
    stack.pop_back();
    for (int64_t s = graph.offsets[u]; s < graph.offsets[u + 1]; ++s) {
      const int64_t v = graph.targets[s];
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace medoid
