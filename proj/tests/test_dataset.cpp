#include <string>
#include <vector>

#include "doctest.h"
#include "dataset.hpp"
#include "test_util.hpp"

using medoid::Delimiter;
using medoid::VectorDataset;
using medoid::WeightedGraph;
using testutil::TempDir;
using testutil::write_file;

TEST_CASE("load_vectors parses rows, comments and blanks") {
  TempDir dir("dataset");
  const std::string path = dir.file("points.txt");
  write_file(path,
             "# header comment\n"
             "0.5 1.25\n"
             "\n"
             "  -3 4e-2\n");
  VectorDataset data = medoid::load_vectors(path, Delimiter::whitespace);
  REQUIRE(data.n == 2);
  REQUIRE(data.dim == 2);
  CHECK(data.point(0)[0] == 0.5);
  CHECK(data.point(0)[1] == 1.25);
  CHECK(data.point(1)[0] == -3.0);
  CHECK(data.point(1)[1] == 0.04);
}

TEST_CASE("load_vectors comma delimiter") {
  TempDir dir("dataset");
  const std::string path = dir.file("points.csv");
  write_file(path, "1,2,3\n4,5,6\n");
  VectorDataset data = medoid::load_vectors(path, Delimiter::comma);
  REQUIRE(data.n == 2);
  REQUIRE(data.dim == 3);
  CHECK(data.point(1)[2] == 6.0);
}

TEST_CASE("load_vectors error positions") {
  TempDir dir("dataset");
  const std::string ragged = dir.file("ragged.txt");
  write_file(ragged, "1 2\n3\n");
  CHECK_THROWS_WITH_AS(medoid::load_vectors(ragged, Delimiter::whitespace),
                       doctest::Contains(":2:"), medoid::parse_error);

  const std::string bad = dir.file("bad.txt");
  write_file(bad, "1 2\n3 x\n");
  CHECK_THROWS_AS(medoid::load_vectors(bad, Delimiter::whitespace),
                  medoid::parse_error);

  const std::string inf_path = dir.file("inf.txt");
  write_file(inf_path, "1 inf\n");
  CHECK_THROWS_AS(medoid::load_vectors(inf_path, Delimiter::whitespace),
                  medoid::parse_error);

  const std::string empty = dir.file("empty.txt");
  write_file(empty, "# only a comment\n");
  CHECK_THROWS_WITH_AS(medoid::load_vectors(empty, Delimiter::whitespace),
                       doctest::Contains("no data rows"), medoid::parse_error);

  CHECK_THROWS_AS(medoid::load_vectors(dir.file("missing.txt"), Delimiter::whitespace),
                  medoid::io_error);
}

TEST_CASE("vector save/load round-trips exactly") {
  TempDir dir("dataset");
  VectorDataset data;
  data.n = 2;
  data.dim = 3;
  data.values = {1.0 / 3.0, 1e-300, -0.0, 6.02e23, 0.1, -7.25};
  for (Delimiter delim : {Delimiter::whitespace, Delimiter::comma}) {
    const std::string path = dir.file("round.txt");
    medoid::save_vectors(data, path, delim);
    VectorDataset back = medoid::load_vectors(path, delim);
    REQUIRE(back.n == data.n);
    REQUIRE(back.dim == data.dim);
    for (size_t i = 0; i < data.values.size(); ++i) {
      CHECK(back.values[i] == data.values[i]);
    }
  }
}

TEST_CASE("load_graph parses edges and defaults weights") {
  TempDir dir("graph");
  const std::string path = dir.file("g.txt");
  write_file(path,
             "# u v [w]\n"
             "0 1 2.5\n"
             "1 2\n");
  WeightedGraph g = medoid::load_graph(path, false);
  CHECK(g.n_nodes == 3);
  CHECK_FALSE(g.directed);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].w == 2.5);
  CHECK(g.edges[1].w == 1.0);
}

TEST_CASE("load_graph rejects bad input") {
  TempDir dir("graph");
  const std::string neg = dir.file("neg.txt");
  write_file(neg, "0 1 -2\n");
  CHECK_THROWS_AS(medoid::load_graph(neg, false), medoid::parse_error);

  const std::string bad_id = dir.file("badid.txt");
  write_file(bad_id, "0 -1\n");
  CHECK_THROWS_AS(medoid::load_graph(bad_id, false), medoid::parse_error);

  const std::string empty = dir.file("empty.txt");
  write_file(empty, "\n");
  CHECK_THROWS_WITH_AS(medoid::load_graph(empty, false),
                       doctest::Contains("no edges"), medoid::parse_error);
}

TEST_CASE("graph save/load round-trips") {
  TempDir dir("graph");
  WeightedGraph g;
  g.n_nodes = 3;
  g.directed = true;
  g.edges = {{0, 1, 0.125}, {1, 2, 3.0}, {2, 0, 1.0}};
  const std::string path = dir.file("g.txt");
  medoid::save_graph(g, path);
  WeightedGraph back = medoid::load_graph(path, true);
  REQUIRE(back.edges.size() == g.edges.size());
  CHECK(back.n_nodes == 3);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(back.edges[i].u == g.edges[i].u);
    CHECK(back.edges[i].v == g.edges[i].v);
    CHECK(back.edges[i].w == g.edges[i].w);
  }
}

TEST_CASE("validate_connectivity accepts connected graphs") {
  WeightedGraph path;
  path.n_nodes = 4;
  path.edges = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
  CHECK_NOTHROW(medoid::validate_connectivity(path));

  WeightedGraph cycle;
  cycle.n_nodes = 3;
  cycle.directed = true;
  cycle.edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  CHECK_NOTHROW(medoid::validate_connectivity(cycle));
}

TEST_CASE("validate_connectivity reports a witness pair") {
  WeightedGraph split;
  split.n_nodes = 4;
  split.edges = {{0, 1, 1}, {2, 3, 1}};
  try {
    medoid::validate_connectivity(split);
    FAIL("expected disconnected_error");
  } catch (const medoid::disconnected_error& e) {
    CHECK(e.from != e.to);
    CHECK((e.to == 2 || e.to == 3));
  }

  // One-way chain: reachable forward from 0 but not backward.
  WeightedGraph chain;
  chain.n_nodes = 3;
  chain.directed = true;
  chain.edges = {{0, 1, 1}, {1, 2, 1}};
  CHECK_THROWS_AS(medoid::validate_connectivity(chain), medoid::disconnected_error);
}
