#include "datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace medoid {

namespace {

void check_vector_args(int64_t n, int64_t d) {
  if (n < 1) throw std::invalid_argument("datagen: n must be >= 1");
  if (d < 1) throw std::invalid_argument("datagen: dim must be >= 1");
}

// Gaussian direction scaled to the given radius, written to out[0..d).
void ball_point(Rng& rng, int64_t d, double radius, double* out) {
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (int64_t c = 0; c < d; ++c) {
      out[c] = rng.normal();
      norm_sq += out[c] * out[c];
    }
  } while (norm_sq == 0.0);
  const double scale = radius / std::sqrt(norm_sq);
  for (int64_t c = 0; c < d; ++c) out[c] *= scale;
}

}  // namespace

VectorDataset sample_uniform_cube(int64_t n, int64_t d, uint64_t seed) {
  check_vector_args(n, d);
  VectorDataset data;
  data.n = n;
  data.dim = d;
  data.values.resize(static_cast<size_t>(n) * d);
  Rng rng(seed);
  for (double& v : data.values) v = rng.uniform();
  return data;
}

VectorDataset sample_ball_uniform(int64_t n, int64_t d, uint64_t seed) {
  check_vector_args(n, d);
  VectorDataset data;
  data.n = n;
  data.dim = d;
  data.values.resize(static_cast<size_t>(n) * d);
  Rng rng(seed);
  for (int64_t i = 0; i < n; ++i) {
    // Radius U^(1/d) makes the radial mass uniform over the ball's volume.
    const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
    ball_point(rng, d, radius, data.point(i));
  }
  return data;
}

VectorDataset sample_ball_skewed(int64_t n, int64_t d, double p_keep, uint64_t seed) {
  check_vector_args(n, d);
  if (!(p_keep > 0.0) || p_keep > 1.0) {
    throw std::invalid_argument("datagen: p_keep must be in (0, 1]");
  }
  VectorDataset data;
  data.n = n;
  data.dim = d;
  data.values.resize(static_cast<size_t>(n) * d);
  Rng rng(seed);
  const double inner_radius = std::pow(0.5, 1.0 / static_cast<double>(d));
  for (int64_t i = 0; i < n; ++i) {
    const double radius = std::pow(rng.uniform(), 1.0 / static_cast<double>(d));
    double* p = data.point(i);
    ball_point(rng, d, radius, p);
    if (radius > inner_radius || rng.uniform() < p_keep) continue;
    // Redraw in the outer shell: radius^d uniform in [1/2, 1).
    const double shell_radius =
        std::pow(0.5 + 0.5 * rng.uniform(), 1.0 / static_cast<double>(d));
    ball_point(rng, d, shell_radius, p);
  }
  return data;
}

SensorGraph sensor_graph_attempt(int64_t n, double radius_const, bool directed,
                                 uint64_t seed) {
  if (n < 1) throw std::invalid_argument("datagen: n must be >= 1");
  if (!(radius_const > 0)) {
    throw std::invalid_argument("datagen: radius_const must be > 0");
  }
  const double radius = radius_const / std::sqrt(static_cast<double>(n));

  {
    Rng rng(seed);
    SensorGraph out;
    out.coords.n = n;
    out.coords.dim = 2;
    out.coords.values.resize(static_cast<size_t>(n) * 2);
    for (double& v : out.coords.values) v = rng.uniform();

    // Uniform grid of cell size >= radius: all pairs within radius live in
    // adjacent cells. Scan order (i ascending, then neighbor cells in fixed
    // order) fixes the edge order and hence the direction draws. More cells
    // than ~n buys nothing, so the count is capped near sqrt(n).
    const int64_t cells = std::clamp<int64_t>(
        static_cast<int64_t>(std::floor(1.0 / std::max(radius, 1e-12))), 1,
        static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
    std::vector<std::vector<int64_t>> grid(cells * cells);
    auto cell_of = [&](double x) {
      return std::min<int64_t>(cells - 1, static_cast<int64_t>(x * cells));
    };
    for (int64_t i = 0; i < n; ++i) {
      grid[cell_of(out.coords.point(i)[0]) * cells + cell_of(out.coords.point(i)[1])]
          .push_back(i);
    }

    WeightedGraph& graph = out.graph;
    graph.n_nodes = n;
    graph.directed = directed;
    for (int64_t i = 0; i < n; ++i) {
      const double xi = out.coords.point(i)[0];
      const double yi = out.coords.point(i)[1];
      const int64_t cx = cell_of(xi);
      const int64_t cy = cell_of(yi);
      for (int64_t dx = -1; dx <= 1; ++dx) {
        for (int64_t dy = -1; dy <= 1; ++dy) {
          const int64_t nx = cx + dx;
          const int64_t ny = cy + dy;
          if (nx < 0 || nx >= cells || ny < 0 || ny >= cells) continue;
          for (const int64_t j : grid[nx * cells + ny]) {
            if (j <= i) continue;  // each unordered pair once
            const double ddx = xi - out.coords.point(j)[0];
            const double ddy = yi - out.coords.point(j)[1];
            const double dist = std::sqrt(ddx * ddx + ddy * ddy);
            if (!(dist < radius)) continue;
            Edge e;
            e.w = dist;
            if (directed && rng.uniform() < 0.5) {
              e.u = j;
              e.v = i;
            } else {
              e.u = i;
              e.v = j;
            }
            graph.edges.push_back(e);
          }
        }
      }
    }

    return out;
  }
}

SensorGraph gen_sensor_graph(int64_t n, double radius_const, bool directed,
                             uint64_t seed, int64_t max_retries) {
  if (max_retries < 1) throw std::invalid_argument("datagen: max_retries must be >= 1");
  for (int64_t attempt = 0; attempt < max_retries; ++attempt) {
    SensorGraph out =
        sensor_graph_attempt(n, radius_const, directed, seed + static_cast<uint64_t>(attempt));
    out.retries = attempt;
    try {
      validate_connectivity(out.graph);
      return out;
    } catch (const disconnected_error&) {
      // resample with the next seed
    }
  }
  throw generation_error(
      "sensor graph not connected after " + std::to_string(max_retries) +
      " attempts (n=" + std::to_string(n) + ", radius_const=" +
      std::to_string(radius_const) + "); try a larger radius_const");
}

}  // namespace medoid
