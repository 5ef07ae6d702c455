#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bench.hpp"
#include "medoid/medoid.h"

namespace {

std::string resolve_dataset(const std::string& gen_spec, const std::string& input,
                            const std::string& format) {
  if (!gen_spec.empty() && !input.empty()) {
    throw std::invalid_argument("use either --gen or --input, not both");
  }
  if (gen_spec.empty() && input.empty()) {
    throw std::invalid_argument("one of --gen or --input is required");
  }
  return gen_spec.empty() ? format + ":" + input : gen_spec;
}

void emit(const bench::RunRecord& record, const std::string& out_csv, bool quiet) {
  if (!out_csv.empty()) bench::append_csv(out_csv, record);
  if (quiet) return;
  std::cout << record.algorithm << ' ' << record.dataset << ": result="
            << record.result << " objective=" << bench::format_double(record.objective)
            << " n_computed=" << record.n_computed
            << " distance_evals=" << record.distance_evals;
  if (record.iterations > 0) std::cout << " iterations=" << record.iterations;
  if (record.phi_c > 0) {
    std::cout << " phi_c=" << bench::format_double(record.phi_c)
              << " phi_e=" << bench::format_double(record.phi_e);
  }
  if (!record.note.empty()) std::cout << " note=" << record.note;
  std::cout << " wall=" << bench::format_double(record.wall_time_s) << "s\n";
}

int run_gen(const std::string& spec, const std::string& data_out,
            const std::string& coords_out, bool comma, bool quiet) {
  bench::LoadedData data = bench::load_data(spec);
  if (data.vectors) {
    bench::check(medoid_vectors_save(data.vectors.get(), data_out.c_str(),
                                     comma ? 1 : 0));
  } else {
    bench::check(medoid_graph_save(data.graph.get(), data_out.c_str()));
  }
  if (!coords_out.empty()) {
    if (!data.coords) {
      throw std::invalid_argument("--coords-out requires a sensor spec");
    }
    bench::check(medoid_vectors_save(data.coords.get(), coords_out.c_str(), 0));
  }
  nlohmann::json meta;
  meta["spec"] = spec;
  meta["kind"] = data.kind;
  meta["n"] = data.n;
  if (data.kind == "vectors") {
    meta["dim"] = data.dim;
  } else {
    meta["edges"] = data.edges;
    meta["directed"] = data.directed;
    meta["retries"] = data.retries;
  }
  const std::string meta_path = data_out + ".meta.json";
  std::ofstream meta_file(meta_path);
  if (!meta_file) throw std::runtime_error(meta_path + ": cannot open for writing");
  meta_file << meta.dump(2) << '\n';
  if (!quiet) {
    if (data.kind == "vectors") {
      std::cout << "wrote " << data.n << " points (d=" << data.dim << ") to "
                << data_out << '\n';
    } else {
      std::cout << "wrote graph (n=" << data.n << ", edges=" << data.edges
                << ", retries=" << data.retries << ") to " << data_out << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"medoid search and k-medoids clustering benchmark driver"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  std::string out_csv;
  bool quiet = false;
  app.add_option("--seed", seed,
                 "algorithm seed (the dataset seed is part of the generator string)")
      ->capture_default_str();
  app.add_option("--out", out_csv, "append run records to this CSV file");
  app.add_flag("--quiet", quiet, "suppress human-readable output");

  auto* gen = app.add_subcommand("gen", "generate a dataset and write it to disk");
  gen->fallthrough();
  std::string gen_spec, gen_data_out, gen_coords_out;
  bool gen_comma = false;
  gen->add_option("--spec", gen_spec,
                  "generator spec, e.g. uniform_cube(n=1000,d=2,seed=7)")
      ->required();
  gen->add_option("--data-out", gen_data_out, "output data file")->required();
  gen->add_option("--coords-out", gen_coords_out,
                  "also write sensor node coordinates to this file");
  gen->add_flag("--comma", gen_comma, "write vectors comma-delimited");

  auto* med = app.add_subcommand("medoid", "run a medoid-finding algorithm");
  med->fallthrough();
  std::string med_algo = "trimed", med_gen, med_input, med_format = "vec";
  bench::MedoidParams med_params;
  med->add_option("--algo", med_algo, "brute | trimed | rand | toprank | toprank2")
      ->check(CLI::IsMember({"brute", "trimed", "rand", "toprank", "toprank2"}))
      ->capture_default_str();
  med->add_option("--gen", med_gen, "generator spec for the input");
  med->add_option("--input", med_input, "input data file");
  med->add_option("--format", med_format, "input file format")
      ->check(CLI::IsMember({"vec", "csv", "graph", "digraph"}))
      ->capture_default_str();
  med->add_option("--trimed-epsilon", med_params.epsilon,
                  "relaxation factor for trimed")
      ->capture_default_str();
  med->add_option("--toprank-k", med_params.k, "how many top elements to return")
      ->capture_default_str();
  med->add_option("--toprank-alpha-prime", med_params.alpha_prime,
                  "threshold width multiplier")
      ->capture_default_str();
  med->add_option("--toprank-anchor-q", med_params.anchor_q,
                  "multiplier on the default anchor count")
      ->capture_default_str();
  med->add_option("--toprank2-l0", med_params.l0,
                  "initial anchors for toprank2 (0 = sqrt(n))")
      ->capture_default_str();
  med->add_option("--toprank2-q-incr", med_params.q_incr,
                  "anchors added per toprank2 round (0 = ln n)")
      ->capture_default_str();
  med->add_option("--rand-anchors", med_params.n_anchors,
                  "anchor count for rand (0 = toprank default)")
      ->capture_default_str();

  auto* kmed = app.add_subcommand("kmedoids", "run a k-medoids clustering algorithm");
  kmed->fallthrough();
  std::string kmed_algo = "trikmeds", kmed_gen, kmed_input, kmed_format = "vec";
  bench::KMedoidsParams kmed_params;
  bool with_baseline = false;
  kmed->add_option("--algo", kmed_algo, "kmeds | trikmeds")
      ->check(CLI::IsMember({"kmeds", "trikmeds"}))
      ->capture_default_str();
  kmed->add_option("--gen", kmed_gen, "generator spec for the input");
  kmed->add_option("--input", kmed_input, "input data file");
  kmed->add_option("--format", kmed_format, "input file format")
      ->check(CLI::IsMember({"vec", "csv", "graph", "digraph"}))
      ->capture_default_str();
  kmed->add_option("--K", kmed_params.K, "number of clusters")->required();
  kmed->add_option("--trikmeds-epsilon", kmed_params.epsilon,
                   "relaxation factor for trikmeds")
      ->capture_default_str();
  kmed->add_option("--init", kmed_params.init, "uniform | park")
      ->check(CLI::IsMember({"uniform", "park"}))
      ->capture_default_str();
  kmed->add_option("--max-iters", kmed_params.max_iters, "iteration cap")
      ->capture_default_str();
  kmed->add_flag("--with-baseline", with_baseline,
                 "also run the epsilon=0 baseline and report phi_c/phi_e");

  auto* swp = app.add_subcommand("sweep", "run an (algorithm, N, seed) grid");
  swp->fallthrough();
  bench::SweepSpec sweep_spec;
  swp->add_option("--gen-template", sweep_spec.generator,
                  "generator spec template; n and seed are filled per cell, e.g. "
                  "uniform_cube(d=2)")
      ->required();
  swp->add_option("--algos", sweep_spec.algorithms, "comma-separated algorithm list")
      ->required()
      ->delimiter(',');
  swp->add_option("--N", sweep_spec.n_grid, "comma-separated strictly increasing N grid")
      ->required()
      ->delimiter(',');
  swp->add_option("--seeds", sweep_spec.seeds, "seeds per (algorithm, N) cell")
      ->capture_default_str();
  swp->add_option("--trimed-epsilon", sweep_spec.params.epsilon,
                  "relaxation factor for trimed cells")
      ->capture_default_str();
  swp->add_option("--toprank-alpha-prime", sweep_spec.params.alpha_prime,
                  "threshold width multiplier for rank cells")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return run_gen(gen_spec, gen_data_out, gen_coords_out, gen_comma, quiet);
    }
    if (med->parsed()) {
      med_params.seed = seed;
      const std::string dataset = resolve_dataset(med_gen, med_input, med_format);
      emit(bench::run_medoid_algo(med_algo, dataset, med_params), out_csv, quiet);
      return 0;
    }
    if (kmed->parsed()) {
      kmed_params.seed = seed;
      const std::string dataset = resolve_dataset(kmed_gen, kmed_input, kmed_format);
      bench::RunRecord record = bench::run_kmedoids_algo(kmed_algo, dataset, kmed_params);
      if (with_baseline) {
        bench::KMedoidsParams base_params = kmed_params;
        base_params.epsilon = 0.0;
        bench::RunRecord base =
            bench::run_kmedoids_algo("trikmeds", dataset, base_params);
        bench::apply_baseline(base, base);
        bench::apply_baseline(record, base);
        emit(base, out_csv, quiet);
      }
      emit(record, out_csv, quiet);
      return 0;
    }
    // sweep
    sweep_spec.base_seed = seed;
    std::vector<bench::RunRecord> records;
    const bench::SweepSummary summary = bench::sweep(sweep_spec, records);
    for (const bench::RunRecord& record : records) {
      if (!out_csv.empty()) bench::append_csv(out_csv, record);
    }
    if (!quiet) std::cout << bench::format_summary(sweep_spec, summary);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
