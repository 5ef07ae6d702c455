#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef MEDOID_CLI_PATH
#error "MEDOID_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct temp_dir {
  std::filesystem::path path;

  temp_dir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("medoid_cli_" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~temp_dir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct cli_run {
  int exit_code = -1;
  std::string out;
  std::string err;
};

cli_run run_cli(const temp_dir& dir, const std::string& args) {
  const std::string out_path = dir.file("stdout.txt");
  const std::string err_path = dir.file("stderr.txt");
  const std::string command = std::string(MEDOID_CLI_PATH) + " " + args + " >" +
                              out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  cli_run run;
  run.exit_code = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  run.out = slurp(out_path);
  run.err = slurp(err_path);
  return run;
}

}  // namespace

TEST_CASE("--help exits cleanly") {
  temp_dir dir;
  cli_run run = run_cli(dir, "--help");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("medoid") != std::string::npos);
}

TEST_CASE("gen writes the dataset and a metadata sidecar") {
  temp_dir dir;
  const std::string data = dir.file("points.txt");
  cli_run run = run_cli(dir, "gen --spec 'uniform_cube(n=20,d=2,seed=1)' --data-out " +
                                 data);
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("wrote 20 points") != std::string::npos);
  CHECK(std::filesystem::exists(data));
  const std::string meta = slurp(data + ".meta.json");
  CHECK(meta.find("\"kind\": \"vectors\"") != std::string::npos);
  CHECK(meta.find("\"n\": 20") != std::string::npos);

  const std::string graph = dir.file("net.txt");
  const std::string coords = dir.file("net_coords.txt");
  cli_run gen_graph = run_cli(dir, "gen --spec 'sensor(n=50,radius_const=3.0,seed=2)' "
                                   "--data-out " + graph + " --coords-out " + coords);
  CHECK(gen_graph.exit_code == 0);
  CHECK(std::filesystem::exists(graph));
  CHECK(std::filesystem::exists(coords));
  CHECK(slurp(graph + ".meta.json").find("\"edges\"") != std::string::npos);
}

TEST_CASE("coords-out is rejected for vector specs") {
  temp_dir dir;
  cli_run run = run_cli(dir, "gen --spec 'uniform_cube(n=5,d=1,seed=0)' --data-out " +
                                 dir.file("p.txt") + " --coords-out " +
                                 dir.file("c.txt"));
  CHECK(run.exit_code == 1);
  CHECK(run.err.find("error:") != std::string::npos);
}

TEST_CASE("medoid runs a file input and appends CSV records") {
  temp_dir dir;
  const std::string data = dir.file("points.txt");
  std::ofstream(data) << "0 0\n1 0\n0 1\n0.4 0.4\n";
  const std::string csv = dir.file("runs.csv");

  cli_run run = run_cli(dir, "--out " + csv +
                                 " medoid --algo brute --input " + data);
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("result=3") != std::string::npos);
  CHECK(run.out.find("n_computed=4") != std::string::npos);

  const std::string contents = slurp(csv);
  CHECK(contents.rfind("schema_version,", 0) == 0);
  CHECK(contents.find(",brute,") != std::string::npos);
}

TEST_CASE("generated and explicit inputs are mutually exclusive") {
  temp_dir dir;
  const std::string data = dir.file("points.txt");
  std::ofstream(data) << "0\n1\n";
  cli_run run = run_cli(dir, "medoid --algo brute --gen 'uniform_cube(n=5,d=1,seed=0)'"
                             " --input " + data);
  CHECK(run.exit_code == 1);
  CHECK(run.err.find("error:") != std::string::npos);

  cli_run neither = run_cli(dir, "medoid --algo brute");
  CHECK(neither.exit_code == 1);
  CHECK(neither.err.find("error:") != std::string::npos);
}

TEST_CASE("kmedoids reports clusters and the epsilon-zero baseline") {
  temp_dir dir;
  cli_run run = run_cli(dir, "--seed 3 kmedoids --algo trikmeds --K 3 "
                             "--trikmeds-epsilon 0.05 --with-baseline "
                             "--gen 'uniform_cube(n=120,d=2,seed=5)'");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("phi_c=1 phi_e=1") != std::string::npos);  // the baseline line
  CHECK(run.out.find("iterations=") != std::string::npos);
  // two emitted records: baseline then the requested run
  CHECK(std::count(run.out.begin(), run.out.end(), '\n') == 2);
}

TEST_CASE("sweep prints per-algorithm slopes") {
  temp_dir dir;
  const std::string csv = dir.file("sweep.csv");
  cli_run run = run_cli(dir, "--out " + csv +
                                 " sweep --gen-template 'uniform_cube(d=2)' "
                                 "--algos brute,trimed --N 32,64,128 --seeds 2");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("slope(brute)") != std::string::npos);
  CHECK(run.out.find("slope(trimed)") != std::string::npos);
  const std::string contents = slurp(csv);
  CHECK(std::count(contents.begin(), contents.end(), '\n') == 13);  // header + 12 runs
}

TEST_CASE("--quiet silences stdout") {
  temp_dir dir;
  cli_run run = run_cli(dir, "--quiet medoid --algo brute "
                             "--gen 'uniform_cube(n=10,d=1,seed=0)'");
  CHECK(run.exit_code == 0);
  CHECK(run.out.empty());
}
