#include "medoid/medoid.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <string>

#include "datagen.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "kmedoids.hpp"
#include "oracle.hpp"
#include "rank.hpp"
#include "trimed.hpp"

struct medoid_vectors {
  std::shared_ptr<const medoid::VectorDataset> data;
};

struct medoid_graph {
  std::shared_ptr<const medoid::WeightedGraph> graph;
};

struct medoid_oracle {
  std::unique_ptr<medoid::DistanceOracle> oracle;
};

struct medoid_clustering {
  medoid::KMedoidsResult result;
};

namespace {

thread_local std::string tl_error;

medoid_status fail(medoid_status status, const std::string& message) {
  tl_error = message;
  return status;
}

// Runs the body and maps exceptions onto status codes.
template <class F>
medoid_status guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return fail(MEDOID_ERR_INVALID_ARGUMENT, e.what());
  } catch (const medoid::parse_error& e) {
    return fail(MEDOID_ERR_PARSE, e.what());
  } catch (const medoid::io_error& e) {
    return fail(MEDOID_ERR_IO, e.what());
  } catch (const medoid::disconnected_error& e) {
    return fail(MEDOID_ERR_DISCONNECTED, e.what());
  } catch (const medoid::generation_error& e) {
    return fail(MEDOID_ERR_GENERATION, e.what());
  } catch (const std::exception& e) {
    return fail(MEDOID_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MEDOID_ERR_INTERNAL, "unknown error");
  }
}

medoid_status require(bool ok, const char* message) {
  if (ok) return MEDOID_OK;
  throw std::invalid_argument(message);
}

medoid::MedoidResult to_core(const medoid_result&) = delete;

void from_core(const medoid::MedoidResult& in, medoid_result* out) {
  out->index = in.index;
  out->energy = in.energy;
  out->n_computed = in.n_computed;
  out->distance_evals = in.distance_evals;
}

medoid::TopRankParams to_core_params(const medoid_rank_params& p) {
  medoid::TopRankParams params;
  params.k = p.k;
  params.alpha_prime = p.alpha_prime;
  params.anchor_q = p.anchor_q;
  params.l0 = p.l0 > 0 ? p.l0 : 0;
  params.q_incr = p.q_incr > 0 ? p.q_incr : 0;
  return params;
}

void write_rank_result(const medoid::RankResult& result, int64_t k,
                       int64_t* out_ids, double* out_energies,
                       medoid_rank_stats* out_stats) {
  for (int64_t t = 0; t < k; ++t) {
    out_ids[t] = result.ids[t];
    out_energies[t] = result.energies[t];
  }
  if (out_stats) {
    out_stats->n_anchors = result.n_anchors;
    out_stats->n_candidates = result.n_candidates;
    out_stats->n_computed = result.n_computed;
    out_stats->distance_evals = result.distance_evals;
  }
}

}  // namespace

extern "C" {

const char* medoid_status_name(medoid_status status) {
  switch (status) {
    case MEDOID_OK: return "ok";
    case MEDOID_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case MEDOID_ERR_PARSE: return "parse_error";
    case MEDOID_ERR_IO: return "io_error";
    case MEDOID_ERR_DISCONNECTED: return "disconnected";
    case MEDOID_ERR_GENERATION: return "generation_error";
    case MEDOID_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* medoid_last_error(void) { return tl_error.c_str(); }

const char* medoid_version(void) { return "1.0.0"; }

/* ---- datasets ---------------------------------------------------------- */

medoid_status medoid_vectors_create(int64_t n, int64_t dim, const double* values,
                                    medoid_vectors** out) {
  return guarded([&] {
    require(out != nullptr, "medoid_vectors_create: out is null");
    require(values != nullptr, "medoid_vectors_create: values is null");
    require(n >= 1 && dim >= 1, "medoid_vectors_create: need n >= 1 and dim >= 1");
    auto data = std::make_shared<medoid::VectorDataset>();
    data->n = n;
    data->dim = dim;
    data->values.assign(values, values + n * dim);
    *out = new medoid_vectors{std::move(data)};
    return MEDOID_OK;
  });
}

medoid_status medoid_vectors_load(const char* path, int comma_delimited,
                                  medoid_vectors** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "medoid_vectors_load: null argument");
    auto data = std::make_shared<medoid::VectorDataset>(medoid::load_vectors(
        path, comma_delimited ? medoid::Delimiter::comma
                              : medoid::Delimiter::whitespace));
    *out = new medoid_vectors{std::move(data)};
    return MEDOID_OK;
  });
}

medoid_status medoid_vectors_save(const medoid_vectors* vectors, const char* path,
                                  int comma_delimited) {
  return guarded([&] {
    require(vectors != nullptr && path != nullptr, "medoid_vectors_save: null argument");
    medoid::save_vectors(*vectors->data, path,
                         comma_delimited ? medoid::Delimiter::comma
                                         : medoid::Delimiter::whitespace);
    return MEDOID_OK;
  });
}

int64_t medoid_vectors_n(const medoid_vectors* vectors) {
  return vectors ? vectors->data->n : 0;
}

int64_t medoid_vectors_dim(const medoid_vectors* vectors) {
  return vectors ? vectors->data->dim : 0;
}

const double* medoid_vectors_values(const medoid_vectors* vectors) {
  return vectors ? vectors->data->values.data() : nullptr;
}

void medoid_vectors_free(medoid_vectors* vectors) { delete vectors; }

medoid_status medoid_graph_create(int64_t n_nodes, int64_t n_edges,
                                  const int64_t* endpoints, const double* weights,
                                  int directed, medoid_graph** out) {
  return guarded([&] {
    require(out != nullptr, "medoid_graph_create: out is null");
    require(n_nodes >= 1, "medoid_graph_create: need n_nodes >= 1");
    require(n_edges >= 0, "medoid_graph_create: need n_edges >= 0");
    require(n_edges == 0 || endpoints != nullptr,
            "medoid_graph_create: endpoints is null");
    auto graph = std::make_shared<medoid::WeightedGraph>();
    graph->n_nodes = n_nodes;
    graph->directed = directed != 0;
    graph->edges.resize(n_edges);
    for (int64_t e = 0; e < n_edges; ++e) {
      medoid::Edge& edge = graph->edges[e];
      edge.u = endpoints[2 * e];
      edge.v = endpoints[2 * e + 1];
      edge.w = weights ? weights[e] : 1.0;
      require(edge.u >= 0 && edge.u < n_nodes && edge.v >= 0 && edge.v < n_nodes,
              "medoid_graph_create: edge endpoint out of range");
      require(edge.w >= 0.0, "medoid_graph_create: negative weight");
    }
    *out = new medoid_graph{std::move(graph)};
    return MEDOID_OK;
  });
}

medoid_status medoid_graph_load(const char* path, int directed, medoid_graph** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "medoid_graph_load: null argument");
    auto graph = std::make_shared<medoid::WeightedGraph>(
        medoid::load_graph(path, directed != 0));
    *out = new medoid_graph{std::move(graph)};
    return MEDOID_OK;
  });
}

medoid_status medoid_graph_save(const medoid_graph* graph, const char* path) {
  return guarded([&] {
    require(graph != nullptr && path != nullptr, "medoid_graph_save: null argument");
    medoid::save_graph(*graph->graph, path);
    return MEDOID_OK;
  });
}

int64_t medoid_graph_n_nodes(const medoid_graph* graph) {
  return graph ? graph->graph->n_nodes : 0;
}

int64_t medoid_graph_n_edges(const medoid_graph* graph) {
  return graph ? static_cast<int64_t>(graph->graph->edges.size()) : 0;
}

int medoid_graph_directed(const medoid_graph* graph) {
  return graph && graph->graph->directed ? 1 : 0;
}

medoid_status medoid_graph_validate(const medoid_graph* graph) {
  return guarded([&] {
    require(graph != nullptr, "medoid_graph_validate: graph is null");
    medoid::validate_connectivity(*graph->graph);
    return MEDOID_OK;
  });
}

void medoid_graph_free(medoid_graph* graph) { delete graph; }

/* ---- generators --------------------------------------------------------- */

medoid_status medoid_gen_uniform_cube(int64_t n, int64_t dim, uint64_t seed,
                                      medoid_vectors** out) {
  return guarded([&] {
    require(out != nullptr, "medoid_gen_uniform_cube: out is null");
    *out = new medoid_vectors{std::make_shared<const medoid::VectorDataset>(
        medoid::sample_uniform_cube(n, dim, seed))};
    return MEDOID_OK;
  });
}

medoid_status medoid_gen_ball_uniform(int64_t n, int64_t dim, uint64_t seed,
                                      medoid_vectors** out) {
  return guarded([&] {
    require(out != nullptr, "medoid_gen_ball_uniform: out is null");
    *out = new medoid_vectors{std::make_shared<const medoid::VectorDataset>(
        medoid::sample_ball_uniform(n, dim, seed))};
    return MEDOID_OK;
  });
}

medoid_status medoid_gen_ball_skewed(int64_t n, int64_t dim, double p_keep,
                                     uint64_t seed, medoid_vectors** out) {
  return guarded([&] {
    require(out != nullptr, "medoid_gen_ball_skewed: out is null");
    *out = new medoid_vectors{std::make_shared<const medoid::VectorDataset>(
        medoid::sample_ball_skewed(n, dim, p_keep, seed))};
    return MEDOID_OK;
  });
}

medoid_status medoid_gen_sensor_graph(int64_t n, double radius_const, int directed,
                                      uint64_t seed, int64_t max_retries,
                                      medoid_graph** out,
                                      medoid_vectors** out_coords,
                                      int64_t* out_retries) {
  return guarded([&] {
    require(out != nullptr, "medoid_gen_sensor_graph: out is null");
    medoid::SensorGraph gen =
        medoid::gen_sensor_graph(n, radius_const, directed != 0, seed, max_retries);
    *out = new medoid_graph{
        std::make_shared<const medoid::WeightedGraph>(std::move(gen.graph))};
    if (out_coords) {
      *out_coords = new medoid_vectors{
          std::make_shared<const medoid::VectorDataset>(std::move(gen.coords))};
    }
    if (out_retries) *out_retries = gen.retries;
    return MEDOID_OK;
  });
}

/* ---- metric oracles ----------------------------------------------------- */

medoid_status medoid_oracle_euclidean(const medoid_vectors* vectors,
                                      medoid_oracle** out) {
  return guarded([&] {
    require(vectors != nullptr && out != nullptr,
            "medoid_oracle_euclidean: null argument");
    *out = new medoid_oracle{
        std::make_unique<medoid::EuclideanOracle>(vectors->data)};
    return MEDOID_OK;
  });
}

medoid_status medoid_oracle_graph(const medoid_graph* graph, medoid_oracle** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "medoid_oracle_graph: null argument");
    medoid::validate_connectivity(*graph->graph);
    *out = new medoid_oracle{std::make_unique<medoid::GraphOracle>(graph->graph)};
    return MEDOID_OK;
  });
}

medoid_status medoid_oracle_graph_symmetrized(const medoid_graph* graph,
                                              medoid_oracle** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr,
            "medoid_oracle_graph_symmetrized: null argument");
    medoid::validate_connectivity(*graph->graph);
    *out = new medoid_oracle{
        std::make_unique<medoid::SymmetrizedGraphOracle>(graph->graph)};
    return MEDOID_OK;
  });
}

int64_t medoid_oracle_n(const medoid_oracle* oracle) {
  return oracle ? oracle->oracle->size() : 0;
}

int medoid_oracle_symmetric(const medoid_oracle* oracle) {
  return oracle && oracle->oracle->symmetric() ? 1 : 0;
}

medoid_status medoid_oracle_dist(medoid_oracle* oracle, int64_t i, int64_t j,
                                 double* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_oracle_dist: null argument");
    *out = oracle->oracle->dist(i, j);
    return MEDOID_OK;
  });
}

medoid_status medoid_oracle_row(medoid_oracle* oracle, int64_t i, double* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_oracle_row: null argument");
    oracle->oracle->row(i, std::span<double>(out, oracle->oracle->size()));
    return MEDOID_OK;
  });
}

medoid_status medoid_oracle_energy(medoid_oracle* oracle, int64_t i, double* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_oracle_energy: null argument");
    *out = medoid::energy(*oracle->oracle, i);
    return MEDOID_OK;
  });
}

uint64_t medoid_oracle_evals(const medoid_oracle* oracle) {
  return oracle ? oracle->oracle->evals() : 0;
}

uint64_t medoid_oracle_rows(const medoid_oracle* oracle) {
  return oracle ? oracle->oracle->rows() : 0;
}

void medoid_oracle_reset_counters(medoid_oracle* oracle) {
  if (oracle) oracle->oracle->reset_counters();
}

void medoid_oracle_free(medoid_oracle* oracle) { delete oracle; }

/* ---- medoid search ------------------------------------------------------ */

medoid_status medoid_brute_force(medoid_oracle* oracle, medoid_result* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_brute_force: null argument");
    from_core(medoid::brute_force_medoid(*oracle->oracle), out);
    return MEDOID_OK;
  });
}

medoid_status medoid_trimed(medoid_oracle* oracle, uint64_t seed, double epsilon,
                            medoid_result* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_trimed: null argument");
    medoid::TrimedConfig config;
    config.seed = seed;
    config.epsilon = epsilon;
    from_core(medoid::trimed(*oracle->oracle, config), out);
    return MEDOID_OK;
  });
}

medoid_status medoid_rand_select(medoid_oracle* oracle, int64_t n_anchors,
                                 uint64_t seed, medoid_result* out) {
  return guarded([&] {
    require(oracle != nullptr && out != nullptr, "medoid_rand_select: null argument");
    medoid::DistanceOracle& orc = *oracle->oracle;
    const int64_t n = orc.size();
    const int64_t l =
        n_anchors > 0 ? n_anchors : medoid::toprank_anchor_count(n, 1.0);
    const uint64_t evals_before = orc.evals();
    const medoid::EnergyEstimates est = medoid::rand_estimate(orc, l, seed);
    int64_t best = 0;
    for (int64_t i = 1; i < n; ++i) {
      if (est.estimates[i] < est.estimates[best]) best = i;
    }
    out->index = best;
    out->n_computed = l;
    // Report the winner's exact energy; an anchor's is already known.
    const auto slot = std::find(est.anchors.begin(), est.anchors.end(), best);
    if (slot != est.anchors.end()) {
      out->energy = est.anchor_energies[slot - est.anchors.begin()];
    } else {
      out->energy = medoid::energy(orc, best);
      out->n_computed += 1;
    }
    out->distance_evals = orc.evals() - evals_before;
    return MEDOID_OK;
  });
}

void medoid_rank_params_init(medoid_rank_params* params) {
  if (!params) return;
  params->k = 1;
  params->alpha_prime = 1.0;
  params->anchor_q = 1.0;
  params->l0 = 0;
  params->q_incr = 0;
}

medoid_status medoid_toprank(medoid_oracle* oracle, const medoid_rank_params* params,
                             uint64_t seed, int64_t* out_ids, double* out_energies,
                             medoid_rank_stats* out_stats) {
  return guarded([&] {
    require(oracle != nullptr && params != nullptr && out_ids != nullptr &&
                out_energies != nullptr,
            "medoid_toprank: null argument");
    const medoid::RankResult result =
        medoid::toprank(*oracle->oracle, to_core_params(*params), seed);
    write_rank_result(result, params->k, out_ids, out_energies, out_stats);
    return MEDOID_OK;
  });
}

medoid_status medoid_toprank2(medoid_oracle* oracle, const medoid_rank_params* params,
                              uint64_t seed, int64_t* out_ids, double* out_energies,
                              medoid_rank_stats* out_stats) {
  return guarded([&] {
    require(oracle != nullptr && params != nullptr && out_ids != nullptr &&
                out_energies != nullptr,
            "medoid_toprank2: null argument");
    const medoid::RankResult result =
        medoid::toprank2(*oracle->oracle, to_core_params(*params), seed);
    write_rank_result(result, params->k, out_ids, out_energies, out_stats);
    return MEDOID_OK;
  });
}

/* ---- K-medoids ---------------------------------------------------------- */

medoid_status medoid_init_uniform(int64_t n, int64_t K, uint64_t seed,
                                  int64_t* out_ids) {
  return guarded([&] {
    require(out_ids != nullptr, "medoid_init_uniform: out_ids is null");
    const std::vector<int64_t> ids = medoid::init_uniform(n, K, seed);
    std::copy(ids.begin(), ids.end(), out_ids);
    return MEDOID_OK;
  });
}

medoid_status medoid_init_park(medoid_oracle* oracle, int64_t K, int64_t* out_ids,
                               int* out_degenerate) {
  return guarded([&] {
    require(oracle != nullptr && out_ids != nullptr,
            "medoid_init_park: null argument");
    const medoid::ParkInit init = medoid::init_park(*oracle->oracle, K);
    std::copy(init.ids.begin(), init.ids.end(), out_ids);
    if (out_degenerate) *out_degenerate = init.degenerate ? 1 : 0;
    return MEDOID_OK;
  });
}

medoid_status medoid_kmeds(medoid_oracle* oracle, int64_t K, const int64_t* init_ids,
                           int64_t max_iters, medoid_clustering** out) {
  return guarded([&] {
    require(oracle != nullptr && init_ids != nullptr && out != nullptr,
            "medoid_kmeds: null argument");
    *out = new medoid_clustering{medoid::kmeds(
        *oracle->oracle, K, std::span<const int64_t>(init_ids, K), max_iters)};
    return MEDOID_OK;
  });
}

medoid_status medoid_trikmeds(medoid_oracle* oracle, int64_t K, double epsilon,
                              const int64_t* init_ids, int64_t max_iters,
                              medoid_clustering** out) {
  return guarded([&] {
    require(oracle != nullptr && init_ids != nullptr && out != nullptr,
            "medoid_trikmeds: null argument");
    *out = new medoid_clustering{
        medoid::trikmeds(*oracle->oracle, K, epsilon,
                         std::span<const int64_t>(init_ids, K), max_iters)};
    return MEDOID_OK;
  });
}

int64_t medoid_clustering_k(const medoid_clustering* clustering) {
  return clustering ? static_cast<int64_t>(clustering->result.medoids.size()) : 0;
}

const int64_t* medoid_clustering_medoids(const medoid_clustering* clustering) {
  return clustering ? clustering->result.medoids.data() : nullptr;
}

const int64_t* medoid_clustering_assignments(const medoid_clustering* clustering) {
  return clustering ? clustering->result.assignments.data() : nullptr;
}

double medoid_clustering_objective(const medoid_clustering* clustering) {
  return clustering ? clustering->result.objective : 0.0;
}

int64_t medoid_clustering_iterations(const medoid_clustering* clustering) {
  return clustering ? clustering->result.iterations : 0;
}

uint64_t medoid_clustering_distance_evals(const medoid_clustering* clustering) {
  return clustering ? clustering->result.distance_evals : 0;
}

void medoid_clustering_free(medoid_clustering* clustering) { delete clustering; }

} /* extern "C" */
