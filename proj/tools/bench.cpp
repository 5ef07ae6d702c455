#include "bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bench {

namespace {

constexpr int64_t kSensorMaxRetries = 100;

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

int64_t parse_i64(const std::string& s) {
  int64_t value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("not an integer: '" + s + "'");
  }
  return value;
}

uint64_t parse_u64(const std::string& s) {
  uint64_t value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("not an unsigned integer: '" + s + "'");
  }
  return value;
}

double parse_f64(const std::string& s) {
  double value = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("not a number: '" + s + "'");
  }
  return value;
}

std::string join_ids(const int64_t* ids, int64_t count) {
  std::string out;
  for (int64_t i = 0; i < count; ++i) {
    if (i) out += ';';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string sanitize_note(std::string note) {
  for (char& c : note) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return note;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

void check(medoid_status status) {
  if (status != MEDOID_OK) {
    throw std::runtime_error(std::string(medoid_status_name(status)) + ": " +
                             medoid_last_error());
  }
}

/* ---- GenSpec ------------------------------------------------------------- */

std::string GenSpec::to_string() const {
  std::string out = kind + "(n=" + std::to_string(n);
  if (kind == "sensor") {
    out += ",radius_const=" + format_double(radius_const);
    out += ",directed=" + std::string(directed ? "1" : "0");
  } else {
    out += ",d=" + std::to_string(dim);
    if (kind == "ball_skewed") out += ",p_keep=" + format_double(p_keep);
  }
  out += ",seed=" + std::to_string(seed) + ")";
  return out;
}

GenSpec GenSpec::parse(const std::string& text) {
  const size_t open = text.find('(');
  if (open == std::string::npos || text.empty() || text.back() != ')') {
    throw std::invalid_argument("generator spec must look like kind(key=value,...): '" +
                                text + "'");
  }
  GenSpec spec;
  spec.kind = trim(text.substr(0, open));
  if (spec.kind != "uniform_cube" && spec.kind != "ball_uniform" &&
      spec.kind != "ball_skewed" && spec.kind != "sensor") {
    throw std::invalid_argument("unknown generator kind: '" + spec.kind + "'");
  }
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    if (comma == std::string::npos) comma = inner.size();
    const std::string part = trim(inner.substr(pos, comma - pos));
    pos = comma + 1;
    if (part.empty()) continue;
    const size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("generator spec entry has no '=': '" + part + "'");
    }
    const std::string key = trim(part.substr(0, eq));
    const std::string value = trim(part.substr(eq + 1));
    try {
      if (key == "n") spec.n = parse_i64(value);
      else if (key == "d") spec.dim = parse_i64(value);
      else if (key == "p_keep") spec.p_keep = parse_f64(value);
      else if (key == "radius_const") spec.radius_const = parse_f64(value);
      else if (key == "directed") spec.directed = parse_i64(value) != 0;
      else if (key == "seed") spec.seed = parse_u64(value);
      else throw std::invalid_argument("unknown generator key: '" + key + "'");
    } catch (const std::runtime_error& e) {
      throw std::invalid_argument("generator spec value for '" + key + "': " + e.what());
    }
  }
  return spec;
}

/* ---- datasets ------------------------------------------------------------ */

LoadedData load_data(const std::string& dataset) {
  LoadedData out;
  if (dataset.find('(') != std::string::npos) {
    const GenSpec spec = GenSpec::parse(dataset);
    if (spec.kind == "sensor") {
      medoid_graph* graph = nullptr;
      medoid_vectors* coords = nullptr;
      check(medoid_gen_sensor_graph(spec.n, spec.radius_const, spec.directed ? 1 : 0,
                                    spec.seed, kSensorMaxRetries, &graph, &coords,
                                    &out.retries));
      out.graph.reset(graph);
      out.coords.reset(coords);
    } else {
      medoid_vectors* vectors = nullptr;
      if (spec.kind == "uniform_cube") {
        check(medoid_gen_uniform_cube(spec.n, spec.dim, spec.seed, &vectors));
      } else if (spec.kind == "ball_uniform") {
        check(medoid_gen_ball_uniform(spec.n, spec.dim, spec.seed, &vectors));
      } else {
        check(medoid_gen_ball_skewed(spec.n, spec.dim, spec.p_keep, spec.seed, &vectors));
      }
      out.vectors.reset(vectors);
    }
  } else if (dataset.rfind("vec:", 0) == 0 || dataset.rfind("csv:", 0) == 0) {
    medoid_vectors* vectors = nullptr;
    check(medoid_vectors_load(dataset.c_str() + 4, dataset[0] == 'c' ? 1 : 0, &vectors));
    out.vectors.reset(vectors);
  } else if (dataset.rfind("graph:", 0) == 0) {
    medoid_graph* graph = nullptr;
    check(medoid_graph_load(dataset.c_str() + 6, 0, &graph));
    out.graph.reset(graph);
  } else if (dataset.rfind("digraph:", 0) == 0) {
    medoid_graph* graph = nullptr;
    check(medoid_graph_load(dataset.c_str() + 8, 1, &graph));
    out.graph.reset(graph);
  } else {
    throw std::invalid_argument(
        "dataset must be a generator spec or a vec:/csv:/graph:/digraph: path: '" +
        dataset + "'");
  }
  if (out.vectors) {
    out.kind = "vectors";
    out.n = medoid_vectors_n(out.vectors.get());
    out.dim = medoid_vectors_dim(out.vectors.get());
  } else {
    out.kind = "graph";
    out.n = medoid_graph_n_nodes(out.graph.get());
    out.edges = medoid_graph_n_edges(out.graph.get());
    out.directed = medoid_graph_directed(out.graph.get()) != 0;
  }
  return out;
}

/* ---- CSV ------------------------------------------------------------------ */

std::string format_double(double value) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, value);
    const double back = std::strtod(buf, nullptr);
    if (back == value || (std::isnan(back) && std::isnan(value))) return buf;
  }
  return buf;
}

namespace {

bool needs_quotes(const std::string& field) {
  return field.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quote(const std::string& field) {
  if (!needs_quotes(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}


const char* const kColumns[] = {
    "schema_version", "algorithm", "dataset", "kind", "n", "dim", "edges",
    "directed", "seed", "k", "epsilon", "alpha_prime", "anchor_q", "n_anchors",
    "l0", "q_incr", "init", "max_iters", "n_computed", "distance_evals", "result",
    "objective", "iterations", "wall_time_s", "evals_ratio", "phi_c", "phi_e",
    "status", "note"};

void set_field(RunRecord& r, const std::string& name, const std::string& value) {
  if (name == "schema_version") r.schema_version = parse_i64(value);
  else if (name == "algorithm") r.algorithm = value;
  else if (name == "dataset") r.dataset = value;
  else if (name == "kind") r.kind = value;
  else if (name == "n") r.n = parse_i64(value);
  else if (name == "dim") r.dim = parse_i64(value);
  else if (name == "edges") r.edges = parse_i64(value);
  else if (name == "directed") r.directed = parse_i64(value);
  else if (name == "seed") r.seed = parse_u64(value);
  else if (name == "k") r.k = parse_i64(value);
  else if (name == "epsilon") r.epsilon = parse_f64(value);
  else if (name == "alpha_prime") r.alpha_prime = parse_f64(value);
  else if (name == "anchor_q") r.anchor_q = parse_f64(value);
  else if (name == "n_anchors") r.n_anchors = parse_i64(value);
  else if (name == "l0") r.l0 = parse_i64(value);
  else if (name == "q_incr") r.q_incr = parse_i64(value);
  else if (name == "init") r.init = value;
  else if (name == "max_iters") r.max_iters = parse_i64(value);
  else if (name == "n_computed") r.n_computed = parse_i64(value);
  else if (name == "distance_evals") r.distance_evals = parse_u64(value);
  else if (name == "result") r.result = value;
  else if (name == "objective") r.objective = parse_f64(value);
  else if (name == "iterations") r.iterations = parse_i64(value);
  else if (name == "wall_time_s") r.wall_time_s = parse_f64(value);
  else if (name == "evals_ratio") r.evals_ratio = parse_f64(value);
  else if (name == "phi_c") r.phi_c = parse_f64(value);
  else if (name == "phi_e") r.phi_e = parse_f64(value);
  else if (name == "status") r.status = value;
  else if (name == "note") r.note = value;
  // unknown columns are tolerated
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (const char* col : kColumns) {
    if (!out.empty()) out += ',';
    out += col;
  }
  return out;
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.schema_version << ',' << quote(r.algorithm) << ',' << quote(r.dataset)
      << ',' << quote(r.kind) << ',' << r.n << ',' << r.dim << ',' << r.edges << ','
      << r.directed << ',' << r.seed << ',' << r.k << ',' << format_double(r.epsilon)
      << ',' << format_double(r.alpha_prime) << ',' << format_double(r.anchor_q)
      << ',' << r.n_anchors << ',' << r.l0 << ',' << r.q_incr << ',' << quote(r.init)
      << ',' << r.max_iters << ',' << r.n_computed << ',' << r.distance_evals << ','
      << quote(r.result) << ',' << format_double(r.objective) << ',' << r.iterations
      << ',' << format_double(r.wall_time_s) << ',' << format_double(r.evals_ratio)
      << ',' << format_double(r.phi_c) << ',' << format_double(r.phi_e) << ','
      << quote(r.status) << ',' << quote(r.note);
  return out.str();
}

std::vector<RunRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // One pass over the whole file: quoted fields may hold commas, doubled
  // quotes, and line breaks, so records cannot be split on raw newlines.
  std::vector<RunRecord> records;
  std::vector<std::string> header;
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  bool any_quoted = false;  // some field of the current record was quoted
  int line_no = 1;
  int record_line = 1;

  auto flush_record = [&]() {
    fields.push_back(cur);
    cur.clear();
    const bool blank_line = fields.size() == 1 && fields[0].empty() && !any_quoted;
    if (!blank_line) {
      if (header.empty()) {
        header = fields;
      } else {
        RunRecord record;
        const size_t count = std::min(header.size(), fields.size());
        try {
          for (size_t i = 0; i < count; ++i) set_field(record, header[i], fields[i]);
        } catch (const std::runtime_error& e) {
          throw std::runtime_error(path + ":" + std::to_string(record_line) + ": " +
                                   e.what());
        }
        records.push_back(std::move(record));
      }
    }
    fields.clear();
    any_quoted = false;
    record_line = line_no;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_no;
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      in_quotes = true;
      any_quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++line_no;
      flush_record();
    } else {
      cur += c;
    }
  }
  if (in_quotes) {
    throw std::runtime_error(path + ":" + std::to_string(record_line) +
                             ": unterminated quote");
  }
  if (!cur.empty() || !fields.empty() || any_quoted) flush_record();
  return records;
}

void write_csv(const std::string& path, std::span<const RunRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << csv_header() << '\n';
  for (const RunRecord& record : records) out << to_csv_row(record) << '\n';
  if (!out) throw std::runtime_error(path + ": write failed");
}

void append_csv(const std::string& path, const RunRecord& record) {
  const bool fresh = !std::filesystem::exists(path) ||
                     std::filesystem::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error(path + ": cannot open for append");
  if (fresh) out << csv_header() << '\n';
  out << to_csv_row(record) << '\n';
  if (!out) throw std::runtime_error(path + ": write failed");
}

/* ---- runs ------------------------------------------------------------------ */

namespace {

oracle_ptr make_oracle(const LoadedData& data, bool symmetrize_directed) {
  medoid_oracle* oracle = nullptr;
  if (data.vectors) {
    check(medoid_oracle_euclidean(data.vectors.get(), &oracle));
  } else if (data.directed && symmetrize_directed) {
    check(medoid_oracle_graph_symmetrized(data.graph.get(), &oracle));
  } else {
    check(medoid_oracle_graph(data.graph.get(), &oracle));
  }
  return oracle_ptr(oracle);
}

void fill_dataset_fields(RunRecord& record, const std::string& dataset,
                         const LoadedData& data) {
  record.dataset = dataset;
  record.kind = data.kind;
  record.n = data.n;
  record.dim = data.dim;
  record.edges = data.edges;
  record.directed = data.directed ? 1 : 0;
}

void finish_record(RunRecord& record, const oracle_ptr& oracle, double t0) {
  record.wall_time_s = now_seconds() - t0;
  record.distance_evals = medoid_oracle_evals(oracle.get());
  record.evals_ratio = static_cast<double>(record.distance_evals) /
                       (static_cast<double>(record.n) * static_cast<double>(record.n));
}

}  // namespace

RunRecord run_medoid_algo(const std::string& algorithm, const std::string& dataset,
                          const MedoidParams& params) {
  const bool rank_algo = algorithm == "toprank" || algorithm == "toprank2";
  if (!rank_algo && algorithm != "brute" && algorithm != "trimed" &&
      algorithm != "rand") {
    throw std::invalid_argument("unknown medoid algorithm: '" + algorithm + "'");
  }
  const LoadedData data = load_data(dataset);
  oracle_ptr oracle = make_oracle(data, /*symmetrize_directed=*/!rank_algo &&
                                            algorithm != "rand");

  RunRecord record;
  record.algorithm = algorithm;
  fill_dataset_fields(record, dataset, data);
  record.seed = params.seed;

  const double t0 = now_seconds();
  if (algorithm == "brute") {
    medoid_result res;
    check(medoid_brute_force(oracle.get(), &res));
    record.result = std::to_string(res.index);
    record.objective = res.energy;
    record.n_computed = res.n_computed;
  } else if (algorithm == "trimed") {
    record.epsilon = params.epsilon;
    medoid_result res;
    check(medoid_trimed(oracle.get(), params.seed, params.epsilon, &res));
    record.result = std::to_string(res.index);
    record.objective = res.energy;
    record.n_computed = res.n_computed;
  } else if (algorithm == "rand") {
    record.n_anchors = params.n_anchors;
    medoid_result res;
    check(medoid_rand_select(oracle.get(), params.n_anchors, params.seed, &res));
    record.result = std::to_string(res.index);
    record.objective = res.energy;
    record.n_computed = res.n_computed;
  } else {
    record.k = params.k;
    record.alpha_prime = params.alpha_prime;
    record.anchor_q = params.anchor_q;
    record.l0 = params.l0;
    record.q_incr = params.q_incr;
    medoid_rank_params rank_params;
    medoid_rank_params_init(&rank_params);
    rank_params.k = params.k;
    rank_params.alpha_prime = params.alpha_prime;
    rank_params.anchor_q = params.anchor_q;
    rank_params.l0 = params.l0;
    rank_params.q_incr = params.q_incr;
    std::vector<int64_t> ids(params.k);
    std::vector<double> energies(params.k);
    medoid_rank_stats stats;
    if (algorithm == "toprank") {
      check(medoid_toprank(oracle.get(), &rank_params, params.seed, ids.data(),
                           energies.data(), &stats));
    } else {
      check(medoid_toprank2(oracle.get(), &rank_params, params.seed, ids.data(),
                            energies.data(), &stats));
    }
    record.result = join_ids(ids.data(), params.k);
    record.objective = energies[0];
    record.n_computed = stats.n_computed;
  }
  finish_record(record, oracle, t0);
  return record;
}

RunRecord run_kmedoids_algo(const std::string& algorithm, const std::string& dataset,
                            const KMedoidsParams& params) {
  if (algorithm != "kmeds" && algorithm != "trikmeds") {
    throw std::invalid_argument("unknown clustering algorithm: '" + algorithm + "'");
  }
  if (params.init != "uniform" && params.init != "park") {
    throw std::invalid_argument("init must be uniform or park, got '" + params.init +
                                "'");
  }
  const LoadedData data = load_data(dataset);
  oracle_ptr oracle = make_oracle(data, /*symmetrize_directed=*/true);

  RunRecord record;
  record.algorithm = algorithm;
  fill_dataset_fields(record, dataset, data);
  record.seed = params.seed;
  record.k = params.K;
  record.epsilon = algorithm == "trikmeds" ? params.epsilon : 0.0;
  record.init = params.init;
  record.max_iters = params.max_iters;

  const double t0 = now_seconds();
  std::vector<int64_t> init_ids(params.K);
  if (params.init == "uniform") {
    check(medoid_init_uniform(data.n, params.K, params.seed, init_ids.data()));
  } else {
    int degenerate = 0;
    check(medoid_init_park(oracle.get(), params.K, init_ids.data(), &degenerate));
    if (degenerate) record.note = "degenerate park init";
  }
  medoid_clustering* clustering = nullptr;
  if (algorithm == "kmeds") {
    check(medoid_kmeds(oracle.get(), params.K, init_ids.data(), params.max_iters,
                       &clustering));
  } else {
    check(medoid_trikmeds(oracle.get(), params.K, params.epsilon, init_ids.data(),
                          params.max_iters, &clustering));
  }
  clustering_ptr owned(clustering);
  record.result = join_ids(medoid_clustering_medoids(clustering), params.K);
  record.objective = medoid_clustering_objective(clustering);
  record.iterations = medoid_clustering_iterations(clustering);
  finish_record(record, oracle, t0);
  return record;
}

void apply_baseline(RunRecord& record, const RunRecord& baseline) {
  if (baseline.distance_evals > 0) {
    record.phi_c = static_cast<double>(record.distance_evals) /
                   static_cast<double>(baseline.distance_evals);
  }
  if (baseline.objective > 0) {
    record.phi_e = record.objective / baseline.objective;
  }
}

/* ---- sweeps ----------------------------------------------------------------- */

double fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two (x, y) pairs");
  }
  const size_t m = xs.size();
  std::vector<double> lx(m), ly(m);
  for (size_t i = 0; i < m; ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) {
      throw std::invalid_argument("slope fit needs positive values");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double num = 0, den = 0;
  for (size_t i = 0; i < m; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  if (den == 0) throw std::invalid_argument("slope fit needs distinct x values");
  return num / den;
}

SweepSummary sweep(const SweepSpec& spec, std::vector<RunRecord>& out_records) {
  if (spec.n_grid.empty()) throw std::invalid_argument("sweep: empty N grid");
  for (size_t i = 1; i < spec.n_grid.size(); ++i) {
    if (spec.n_grid[i] <= spec.n_grid[i - 1]) {
      throw std::invalid_argument("sweep: N grid must be strictly increasing");
    }
  }
  if (spec.seeds < 1) throw std::invalid_argument("sweep: seeds must be >= 1");
  if (spec.algorithms.empty()) throw std::invalid_argument("sweep: no algorithms");
  GenSpec base = GenSpec::parse(spec.generator);

  SweepSummary summary;
  for (const std::string& algorithm : spec.algorithms) {
    SweepSummary::PerAlgo per;
    per.algorithm = algorithm;
    per.mean_n_computed.assign(spec.n_grid.size(),
                               std::numeric_limits<double>::quiet_NaN());
    for (size_t ni = 0; ni < spec.n_grid.size(); ++ni) {
      double total = 0;
      int64_t ok_runs = 0;
      for (int64_t s = 0; s < spec.seeds; ++s) {
        GenSpec cell = base;
        cell.n = spec.n_grid[ni];
        cell.seed = spec.base_seed + static_cast<uint64_t>(s);
        MedoidParams params = spec.params;
        params.seed = cell.seed;
        const std::string dataset = cell.to_string();
        try {
          out_records.push_back(run_medoid_algo(algorithm, dataset, params));
          total += static_cast<double>(out_records.back().n_computed);
          ++ok_runs;
        } catch (const std::exception& e) {
          RunRecord failed;
          failed.algorithm = algorithm;
          failed.dataset = dataset;
          failed.n = cell.n;
          failed.seed = cell.seed;
          failed.status = "error";
          failed.note = sanitize_note(e.what());
          out_records.push_back(std::move(failed));
        }
      }
      if (ok_runs > 0) per.mean_n_computed[ni] = total / static_cast<double>(ok_runs);
    }
    std::vector<double> xs, ys;
    for (size_t ni = 0; ni < spec.n_grid.size(); ++ni) {
      const double mean = per.mean_n_computed[ni];
      if (std::isfinite(mean) && mean > 0) {
        xs.push_back(static_cast<double>(spec.n_grid[ni]));
        ys.push_back(mean);
      }
    }
    per.slope = xs.size() >= 2 ? fit_loglog_slope(xs, ys)
                               : std::numeric_limits<double>::quiet_NaN();
    summary.per_algo.push_back(std::move(per));
  }
  return summary;
}

std::string format_summary(const SweepSpec& spec, const SweepSummary& summary) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(10)
      << "N" << std::setw(20) << "mean_n_computed" << '\n';
  for (const auto& per : summary.per_algo) {
    for (size_t ni = 0; ni < spec.n_grid.size(); ++ni) {
      out << std::left << std::setw(12) << per.algorithm << std::right
          << std::setw(10) << spec.n_grid[ni] << std::setw(20) << std::fixed
          << std::setprecision(2) << per.mean_n_computed[ni] << '\n';
      out.unsetf(std::ios::fixed);
    }
  }
  for (const auto& per : summary.per_algo) {
    out << "slope(" << per.algorithm << ") = " << std::setprecision(4)
        << per.slope << '\n';
  }
  return out.str();
}

/* ---- replay ------------------------------------------------------------------ */

ReplayOutcome replay(const RunRecord& record) {
  ReplayOutcome outcome;
  if (record.algorithm == "kmeds" || record.algorithm == "trikmeds") {
    KMedoidsParams params;
    params.seed = record.seed;
    params.K = record.k;
    params.epsilon = record.epsilon;
    params.init = record.init;
    params.max_iters = record.max_iters;
    outcome.fresh = run_kmedoids_algo(record.algorithm, record.dataset, params);
  } else {
    MedoidParams params;
    params.seed = record.seed;
    params.epsilon = record.epsilon;
    params.k = record.k;
    params.alpha_prime = record.alpha_prime;
    params.anchor_q = record.anchor_q;
    params.n_anchors = record.n_anchors;
    params.l0 = record.l0;
    params.q_incr = record.q_incr;
    outcome.fresh = run_medoid_algo(record.algorithm, record.dataset, params);
  }
  std::string diff;
  auto mismatch = [&diff](const std::string& field, const std::string& was,
                          const std::string& now) {
    if (was == now) return;
    if (!diff.empty()) diff += "; ";
    diff += field + ": " + was + " -> " + now;
  };
  mismatch("n_computed", std::to_string(record.n_computed),
           std::to_string(outcome.fresh.n_computed));
  mismatch("distance_evals", std::to_string(record.distance_evals),
           std::to_string(outcome.fresh.distance_evals));
  mismatch("result", record.result, outcome.fresh.result);
  mismatch("objective", format_double(record.objective),
           format_double(outcome.fresh.objective));
  outcome.matches = diff.empty();
  outcome.diff = std::move(diff);
  return outcome;
}

}  // namespace bench
