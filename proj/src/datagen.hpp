#pragma once

#include <cstdint>

#include "dataset.hpp"

namespace medoid {

// i.i.d. uniform coordinates in [0, 1).
VectorDataset sample_uniform_cube(int64_t n, int64_t d, uint64_t seed);

// Uniform in the unit ball: gaussian direction scaled to radius U^(1/d).
VectorDataset sample_ball_uniform(int64_t n, int64_t d, uint64_t seed);

// Unit ball with mass pushed outward: draw uniformly; points landing inside
// radius (1/2)^(1/d) (the half-volume shell) are kept with probability p_keep
// and otherwise redrawn uniformly from the outer shell. The expected inner
// fraction is p_keep / 2, so p_keep = 1 reproduces sample_ball_uniform and
// small p_keep concentrates density near the surface.
VectorDataset sample_ball_skewed(int64_t n, int64_t d, double p_keep, uint64_t seed);

struct SensorGraph {
  WeightedGraph graph;
  VectorDataset coords;  // the sampled points, retained for inspection
  int64_t retries = 0;   // regeneration attempts consumed (0 = first try)
};

// One sampling attempt of the random geometric graph: n points uniform in
// the unit square, an edge with weight = Euclidean distance whenever the
// distance is below radius_const / sqrt(n). Directed graphs orient each
// qualifying pair uniformly at random. No connectivity guarantee; useful for
// inspecting raw degree statistics.
SensorGraph sensor_graph_attempt(int64_t n, double radius_const, bool directed,
                                 uint64_t seed);

// Same construction, resampling with seed+1, seed+2, ... until connected
// (strongly connected when directed), up to max_retries attempts, then
// throws generation_error.
SensorGraph gen_sensor_graph(int64_t n, double radius_const, bool directed,
                             uint64_t seed, int64_t max_retries = 20);

}  // namespace medoid
