#include "dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "graph_algo.hpp"

namespace medoid {

namespace {

std::string at(const std::string& path, int64_t line) {
  return path + ":" + std::to_string(line) + ": ";
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> split_fields(const std::string& line, Delimiter delim,
                                      const std::string& path, int64_t lineno) {
  std::vector<std::string> fields;
  if (delim == Delimiter::whitespace) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
  } else {
    size_t start = 0;
    for (;;) {
      const size_t comma = line.find(',', start);
      std::string field = line.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start);
      const size_t b = field.find_first_not_of(" \t\r");
      const size_t e = field.find_last_not_of(" \t\r");
      field = (b == std::string::npos) ? std::string() : field.substr(b, e - b + 1);
      if (field.empty()) {
        throw parse_error(at(path, lineno) + "empty field");
      }
      fields.push_back(field);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return fields;
}

double parse_double(const std::string& tok, const std::string& path, int64_t lineno) {
  double value = 0.0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  const auto [ptr, ec] = std::from_chars(b, e, value);
  if (ec != std::errc() || ptr != e) {
    throw parse_error(at(path, lineno) + "not a number: '" + tok + "'");
  }
  if (!std::isfinite(value)) {
    throw parse_error(at(path, lineno) + "non-finite value: '" + tok + "'");
  }
  return value;
}

int64_t parse_id(const std::string& tok, const std::string& path, int64_t lineno) {
  int64_t value = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  const auto [ptr, ec] = std::from_chars(b, e, value);
  if (ec != std::errc() || ptr != e || value < 0) {
    throw parse_error(at(path, lineno) + "not a node id: '" + tok + "'");
  }
  return value;
}

}  // namespace

VectorDataset load_vectors(const std::string& path, Delimiter delim) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  VectorDataset data;
  std::string line;
  int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    const std::vector<std::string> fields = split_fields(line, delim, path, lineno);
    if (fields.empty()) continue;
    if (data.n == 0) {
      data.dim = static_cast<int64_t>(fields.size());
    } else if (static_cast<int64_t>(fields.size()) != data.dim) {
      throw parse_error(at(path, lineno) + "expected " + std::to_string(data.dim) +
                        " fields, got " + std::to_string(fields.size()));
    }
    for (const std::string& tok : fields) {
      data.values.push_back(parse_double(tok, path, lineno));
    }
    ++data.n;
  }
  if (data.n == 0) throw parse_error(path + ": no data rows");
  return data;
}

void save_vectors(const VectorDataset& data, const std::string& path, Delimiter delim) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  const char sep = delim == Delimiter::comma ? ',' : ' ';
  char buf[64];
  for (int64_t i = 0; i < data.n; ++i) {
    const double* p = data.point(i);
    for (int64_t j = 0; j < data.dim; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", p[j]);
      if (j) out << sep;
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw io_error("write failed for " + path);
}

WeightedGraph load_graph(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  WeightedGraph graph;
  graph.directed = directed;
  std::string line;
  int64_t lineno = 0;
  int64_t max_id = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    const std::vector<std::string> fields =
        split_fields(line, Delimiter::whitespace, path, lineno);
    if (fields.empty()) continue;
    if (fields.size() != 2 && fields.size() != 3) {
      throw parse_error(at(path, lineno) + "expected 'u v [w]', got " +
                        std::to_string(fields.size()) + " fields");
    }
    Edge edge;
    edge.u = parse_id(fields[0], path, lineno);
    edge.v = parse_id(fields[1], path, lineno);
    edge.w = fields.size() == 3 ? parse_double(fields[2], path, lineno) : 1.0;
    if (edge.w < 0) {
      throw parse_error(at(path, lineno) + "negative weight");
    }
    max_id = std::max({max_id, edge.u, edge.v});
    graph.edges.push_back(edge);
  }
  if (graph.edges.empty()) throw parse_error(path + ": no edges");
  graph.n_nodes = max_id + 1;
  return graph;
}

void save_graph(const WeightedGraph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write " + path);
  char buf[64];
  for (const Edge& e : graph.edges) {
    std::snprintf(buf, sizeof buf, "%.17g", e.w);
    out << e.u << ' ' << e.v << ' ' << buf << '\n';
  }
  if (!out) throw io_error("write failed for " + path);
}

void validate_connectivity(const WeightedGraph& graph) {
  if (graph.n_nodes <= 1) return;
  // Reachability from node 0 in the graph and, for directed graphs, in the
  // transpose: both passing is equivalent to (strong) connectivity.
  const Csr fwd = build_csr(graph, /*transpose=*/false);
  std::vector<char> seen = reachable_from(fwd, 0);
  for (int64_t i = 0; i < graph.n_nodes; ++i) {
    if (!seen[i]) {
      throw disconnected_error("graph not connected: no path from 0 to " +
                                   std::to_string(i), 0, i);
    }
  }
  if (!graph.directed) return;
  const Csr rev = build_csr(graph, /*transpose=*/true);
  seen = reachable_from(rev, 0);
  for (int64_t i = 0; i < graph.n_nodes; ++i) {
    if (!seen[i]) {
      throw disconnected_error("graph not strongly connected: no path from " +
                                   std::to_string(i) + " to 0", i, 0);
    }
  }
}

}  // namespace medoid
