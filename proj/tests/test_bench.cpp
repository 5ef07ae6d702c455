#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bench.hpp"

using bench::GenSpec;
using bench::RunRecord;

namespace {

struct temp_dir {
  std::filesystem::path path;

  temp_dir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("medoid_bench_" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("format_double round-trips exactly") {
  for (double v : {0.0, -0.0, 1.0 / 3.0, 1e-300, 6.02e23, -17.25, 0.1}) {
    CHECK(std::stod(bench::format_double(v)) == v);
  }
  CHECK(bench::format_double(2.0) == "2");
}

TEST_CASE("gen spec strings parse and print canonically") {
  GenSpec spec = GenSpec::parse("ball_skewed(seed=3, n=4096, p_keep=0.1, d=2)");
  CHECK(spec.kind == "ball_skewed");
  CHECK(spec.n == 4096);
  CHECK(spec.dim == 2);
  CHECK(spec.p_keep == 0.1);
  CHECK(spec.seed == 3);
  CHECK(spec.to_string() == "ball_skewed(n=4096,d=2,p_keep=0.1,seed=3)");
  CHECK(GenSpec::parse(spec.to_string()).to_string() == spec.to_string());

  GenSpec sensor = GenSpec::parse("sensor(n=500,radius_const=2.5,directed=1,seed=9)");
  CHECK(sensor.directed);
  CHECK(sensor.to_string() == "sensor(n=500,radius_const=2.5,directed=1,seed=9)");

  GenSpec partial = GenSpec::parse("uniform_cube(d=3)");
  CHECK(partial.n == 0);
  CHECK(partial.dim == 3);

  CHECK_THROWS_AS(GenSpec::parse("torus(n=5)"), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec::parse("uniform_cube(n=5"), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec::parse("uniform_cube(n)"), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec::parse("uniform_cube(n=abc)"), std::invalid_argument);
  CHECK_THROWS_AS(GenSpec::parse("uniform_cube(m=5)"), std::invalid_argument);
}

TEST_CASE("records survive the CSV round trip") {
  temp_dir dir;
  RunRecord record;
  record.algorithm = "trimed";
  record.dataset = "uniform_cube(n=100,d=2,seed=1)";
  record.kind = "vectors";
  record.n = 100;
  record.dim = 2;
  record.seed = 1;
  record.epsilon = 0.1;
  record.n_computed = 17;
  record.distance_evals = 1700;
  record.result = "42";
  record.objective = 1.0 / 3.0;
  record.iterations = 0;
  record.wall_time_s = 0.0125;
  record.evals_ratio = 0.17;
  record.note = "quote \" and, comma\nand newline";

  RunRecord cluster;
  cluster.algorithm = "trikmeds";
  cluster.dataset = "vec:/tmp/points.txt";
  cluster.kind = "vectors";
  cluster.n = 50;
  cluster.k = 3;
  cluster.init = "park";
  cluster.max_iters = 100;
  cluster.result = "4;17;32";
  cluster.objective = 2.5;
  cluster.iterations = 6;
  cluster.phi_c = 0.75;
  cluster.phi_e = 1.01;

  const std::string path = dir.file("runs.csv");
  bench::write_csv(path, std::vector<RunRecord>{record, cluster});
  std::vector<RunRecord> back = bench::read_csv(path);
  REQUIRE(back.size() == 2);

  const RunRecord& r = back[0];
  CHECK(r.schema_version == record.schema_version);
  CHECK(r.algorithm == record.algorithm);
  CHECK(r.dataset == record.dataset);
  CHECK(r.kind == record.kind);
  CHECK(r.n == record.n);
  CHECK(r.dim == record.dim);
  CHECK(r.seed == record.seed);
  CHECK(r.epsilon == record.epsilon);
  CHECK(r.n_computed == record.n_computed);
  CHECK(r.distance_evals == record.distance_evals);
  CHECK(r.result == record.result);
  CHECK(r.objective == record.objective);
  CHECK(r.wall_time_s == record.wall_time_s);
  CHECK(r.evals_ratio == record.evals_ratio);
  CHECK(r.note == record.note);
  CHECK(back[1].result == "4;17;32");
  CHECK(back[1].init == "park");
  CHECK(back[1].phi_c == 0.75);
}

TEST_CASE("read_csv tolerates unknown columns and missing ones") {
  temp_dir dir;
  const std::string path = dir.file("extra.csv");
  std::ofstream out(path);
  out << "algorithm,n,extra_column,objective\n";
  out << "brute,10,whatever,1.5\n";
  out.close();

  std::vector<RunRecord> records = bench::read_csv(path);
  REQUIRE(records.size() == 1);
  CHECK(records[0].algorithm == "brute");
  CHECK(records[0].n == 10);
  CHECK(records[0].objective == 1.5);
  CHECK(records[0].k == 1);        // default kept
  CHECK(records[0].status == "ok");  // default kept
}

TEST_CASE("append_csv writes the header exactly once") {
  temp_dir dir;
  const std::string path = dir.file("append.csv");
  RunRecord record;
  record.algorithm = "brute";
  record.dataset = "uniform_cube(n=5,d=1,seed=0)";
  bench::append_csv(path, record);
  bench::append_csv(path, record);

  std::ifstream in(path);
  std::string line;
  int headers = 0, rows = 0;
  while (std::getline(in, line)) {
    if (line.rfind("schema_version,", 0) == 0) ++headers;
    else if (!line.empty()) ++rows;
  }
  CHECK(headers == 1);
  CHECK(rows == 2);
  CHECK(bench::read_csv(path).size() == 2);
}

TEST_CASE("run_medoid_algo fills the record from a generated dataset") {
  bench::MedoidParams params;
  params.seed = 3;
  RunRecord record =
      bench::run_medoid_algo("brute", "uniform_cube(n=60,d=2,seed=3)", params);
  CHECK(record.algorithm == "brute");
  CHECK(record.kind == "vectors");
  CHECK(record.n == 60);
  CHECK(record.dim == 2);
  CHECK(record.n_computed == 60);
  CHECK(record.distance_evals == 3600);
  CHECK(record.evals_ratio == doctest::Approx(1.0));
  CHECK(record.status == "ok");
  CHECK(!record.result.empty());
  CHECK(record.objective > 0.0);
  CHECK(record.wall_time_s >= 0.0);

  RunRecord fast = bench::run_medoid_algo("trimed", "uniform_cube(n=60,d=2,seed=3)",
                                          params);
  CHECK(fast.result == record.result);
  CHECK(fast.n_computed < 60);

  CHECK_THROWS_AS(bench::run_medoid_algo("dijkstra", "uniform_cube(n=60,d=2,seed=3)",
                                         params),
                  std::invalid_argument);
}

TEST_CASE("load_data understands file references") {
  temp_dir dir;
  const std::string vec_path = dir.file("points.txt");
  std::ofstream(vec_path) << "0 0\n1 0\n0 1\n";
  bench::LoadedData vectors = bench::load_data("vec:" + vec_path);
  CHECK(vectors.kind == "vectors");
  CHECK(vectors.n == 3);
  CHECK(vectors.dim == 2);

  const std::string graph_path = dir.file("edges.txt");
  std::ofstream(graph_path) << "0 1 2.0\n1 2 3.0\n";
  bench::LoadedData graph = bench::load_data("graph:" + graph_path);
  CHECK(graph.kind == "graph");
  CHECK(graph.n == 3);
  CHECK(graph.edges == 2);
  CHECK(!graph.directed);

  CHECK_THROWS_AS(bench::load_data("blob:" + vec_path), std::invalid_argument);
}

TEST_CASE("apply_baseline against itself gives unit ratios") {
  bench::MedoidParams params;
  RunRecord record =
      bench::run_medoid_algo("brute", "uniform_cube(n=40,d=2,seed=1)", params);
  RunRecord baseline = record;
  bench::apply_baseline(record, baseline);
  CHECK(record.phi_c == doctest::Approx(1.0));
  CHECK(record.phi_e == doctest::Approx(1.0));
}

TEST_CASE("fit_loglog_slope recovers exact power laws") {
  const std::vector<double> xs = {2.0, 4.0, 8.0};
  const std::vector<double> squares = {4.0, 16.0, 64.0};
  CHECK(bench::fit_loglog_slope(xs, squares) == doctest::Approx(2.0).epsilon(1e-12));

  const std::vector<double> linear = {2.0, 4.0, 8.0};
  CHECK(bench::fit_loglog_slope(xs, linear) == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> short_xs = {2.0};
  const std::vector<double> short_ys = {4.0};
  CHECK_THROWS_AS(bench::fit_loglog_slope(short_xs, short_ys), std::invalid_argument);
  const std::vector<double> negative = {2.0, -4.0, 8.0};
  CHECK_THROWS_AS(bench::fit_loglog_slope(xs, negative), std::invalid_argument);
}

TEST_CASE("sweep keeps going past failing algorithms") {
  bench::SweepSpec spec;
  spec.generator = "uniform_cube(d=2)";
  spec.algorithms = {"trimed", "nope"};
  spec.n_grid = {32, 64, 128};
  spec.seeds = 2;
  spec.base_seed = 5;

  std::vector<RunRecord> records;
  bench::SweepSummary summary = bench::sweep(spec, records);
  REQUIRE(records.size() == 12);

  int ok = 0, failed = 0;
  for (const RunRecord& r : records) {
    if (r.status == "ok") {
      CHECK(r.algorithm == "trimed");
      ++ok;
    } else {
      CHECK(r.algorithm == "nope");
      CHECK(r.status == "error");
      CHECK(!r.note.empty());
      ++failed;
    }
  }
  CHECK(ok == 6);
  CHECK(failed == 6);

  REQUIRE(summary.per_algo.size() == 2);
  const auto& trimed = summary.per_algo[0];
  CHECK(trimed.algorithm == "trimed");
  REQUIRE(trimed.mean_n_computed.size() == 3);
  for (double m : trimed.mean_n_computed) CHECK(std::isfinite(m));
  CHECK(std::isfinite(trimed.slope));
  CHECK(std::isnan(summary.per_algo[1].slope));

  const std::string text = bench::format_summary(spec, summary);
  CHECK(text.find("slope(trimed)") != std::string::npos);
}

TEST_CASE("replay reproduces recorded runs and flags tampering") {
  bench::MedoidParams params;
  params.seed = 11;
  params.epsilon = 0.1;
  RunRecord record =
      bench::run_medoid_algo("trimed", "ball_uniform(n=80,d=2,seed=4)", params);

  bench::ReplayOutcome outcome = bench::replay(record);
  CHECK(outcome.matches);
  CHECK(outcome.diff.empty());

  RunRecord tampered = record;
  tampered.objective += 0.5;
  bench::ReplayOutcome bad = bench::replay(tampered);
  CHECK(!bad.matches);
  CHECK(bad.diff.find("objective") != std::string::npos);

  bench::KMedoidsParams kparams;
  kparams.seed = 2;
  kparams.K = 3;
  RunRecord cluster =
      bench::run_kmedoids_algo("kmeds", "uniform_cube(n=70,d=2,seed=6)", kparams);
  bench::ReplayOutcome again = bench::replay(cluster);
  CHECK(again.matches);
}
