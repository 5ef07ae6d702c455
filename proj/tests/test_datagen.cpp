#include <cmath>
#include <vector>

#include "doctest.h"
#include "datagen.hpp"
#include "test_util.hpp"

using medoid::VectorDataset;

namespace {

double norm_of(const VectorDataset& data, int64_t i) {
  double sum = 0.0;
  for (int64_t c = 0; c < data.dim; ++c) {
    sum += data.point(i)[c] * data.point(i)[c];
  }
  return std::sqrt(sum);
}

double inner_fraction(const VectorDataset& data) {
  const double inner_radius = std::pow(0.5, 1.0 / static_cast<double>(data.dim));
  int64_t inner = 0;
  for (int64_t i = 0; i < data.n; ++i) {
    if (norm_of(data, i) <= inner_radius) ++inner;
  }
  return static_cast<double>(inner) / static_cast<double>(data.n);
}

}  // namespace

TEST_CASE("uniform cube covers [0,1) with the right mean") {
  VectorDataset data = medoid::sample_uniform_cube(100000, 2, 1);
  double sum = 0.0;
  for (double v : data.values) {
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
    sum += v;
  }
  CHECK(std::abs(sum / static_cast<double>(data.values.size()) - 0.5) < 0.01);

  VectorDataset again = medoid::sample_uniform_cube(100, 2, 7);
  VectorDataset same = medoid::sample_uniform_cube(100, 2, 7);
  CHECK(again.values == same.values);
  CHECK_THROWS_AS(medoid::sample_uniform_cube(0, 2, 0), std::invalid_argument);
}

TEST_CASE("ball_uniform stays in the ball and splits mass at the half-volume radius") {
  for (int64_t d : {2, 3}) {
    VectorDataset data = medoid::sample_ball_uniform(100000, d, 3);
    for (int64_t i = 0; i < data.n; ++i) REQUIRE(norm_of(data, i) <= 1.0);
    CHECK(std::abs(inner_fraction(data) - 0.5) < 0.01);
  }
}

TEST_CASE("ball_uniform in one dimension is symmetric on [-1, 1]") {
  VectorDataset data = medoid::sample_ball_uniform(100000, 1, 5);
  double sum = 0.0;
  for (double v : data.values) {
    REQUIRE(std::abs(v) <= 1.0);
    sum += v;
  }
  CHECK(std::abs(sum / static_cast<double>(data.n)) < 0.01);
}

TEST_CASE("ball_skewed thins the inner ball to p_keep/2") {
  VectorDataset keep_all = medoid::sample_ball_skewed(100000, 2, 1.0, 11);
  CHECK(std::abs(inner_fraction(keep_all) - 0.5) < 0.01);

  VectorDataset skewed = medoid::sample_ball_skewed(100000, 2, 0.1, 11);
  CHECK(std::abs(inner_fraction(skewed) - 0.05) < 0.01);
  for (int64_t i = 0; i < skewed.n; ++i) REQUIRE(norm_of(skewed, i) <= 1.0);

  CHECK_THROWS_AS(medoid::sample_ball_skewed(10, 2, 0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(medoid::sample_ball_skewed(10, 2, 1.5, 0), std::invalid_argument);
}

TEST_CASE("two sensors with a huge radius form one weighted edge") {
  medoid::SensorGraph sg = medoid::gen_sensor_graph(2, 100.0, false, 4, 50);
  REQUIRE(sg.graph.edges.size() == 1);
  const double dx = sg.coords.point(0)[0] - sg.coords.point(1)[0];
  const double dy = sg.coords.point(0)[1] - sg.coords.point(1)[1];
  CHECK(sg.graph.edges[0].w == doctest::Approx(std::hypot(dx, dy)).epsilon(1e-12));
}

TEST_CASE("vanishing radius exhausts the retry budget") {
  CHECK_THROWS_AS(medoid::gen_sensor_graph(50, 1e-6, false, 0, 3),
                  medoid::generation_error);
}

TEST_CASE("edge weights equal coordinate distances and respect the radius") {
  medoid::SensorGraph sg = medoid::gen_sensor_graph(200, 2.5, false, 9, 50);
  const double radius = 2.5 / std::sqrt(200.0);
  for (const medoid::Edge& e : sg.graph.edges) {
    const double dx = sg.coords.point(e.u)[0] - sg.coords.point(e.v)[0];
    const double dy = sg.coords.point(e.u)[1] - sg.coords.point(e.v)[1];
    CHECK(e.w == doctest::Approx(std::hypot(dx, dy)).epsilon(1e-12));
    CHECK(e.w < radius);
  }
  CHECK_NOTHROW(medoid::validate_connectivity(sg.graph));
}

TEST_CASE("sensor mean degree tracks pi r^2 n") {
  // Unvalidated attempt: at this size a connected sample essentially never
  // occurs, but the degree statistic is about the raw construction.
  medoid::SensorGraph sg = medoid::sensor_graph_attempt(10000, 1.25, false, 13);
  const double mean_degree = 2.0 * static_cast<double>(sg.graph.edges.size()) / 10000.0;
  const double expected = 3.14159265358979 * 1.25 * 1.25;
  CHECK(mean_degree > expected / 2.0);
  CHECK(mean_degree < expected * 2.0);
}

TEST_CASE("directed sensors store one orientation per pair") {
  medoid::SensorGraph sg = medoid::gen_sensor_graph(150, 3.5, true, 21, 50);
  CHECK(sg.graph.directed);
  int forward = 0, backward = 0;
  for (const medoid::Edge& e : sg.graph.edges) {
    REQUIRE(e.u != e.v);
    (e.u < e.v ? forward : backward) += 1;
  }
  // Orientation is a fair coin per pair; both directions must appear.
  CHECK(forward > 0);
  CHECK(backward > 0);
  CHECK_NOTHROW(medoid::validate_connectivity(sg.graph));
}

TEST_CASE("sensor generation is deterministic per seed") {
  medoid::SensorGraph a = medoid::gen_sensor_graph(100, 3.0, true, 6, 50);
  medoid::SensorGraph b = medoid::gen_sensor_graph(100, 3.0, true, 6, 50);
  CHECK(a.retries == b.retries);
  CHECK(a.coords.values == b.coords.values);
  REQUIRE(a.graph.edges.size() == b.graph.edges.size());
  for (size_t i = 0; i < a.graph.edges.size(); ++i) {
    CHECK(a.graph.edges[i].u == b.graph.edges[i].u);
    CHECK(a.graph.edges[i].v == b.graph.edges[i].v);
  }
}
