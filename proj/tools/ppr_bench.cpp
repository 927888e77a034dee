#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppr/exact.hpp"
#include "ppr/experiment.hpp"
#include "ppr/graph.hpp"
#include "ppr/synth.hpp"
#include "ppr/unbalance.hpp"

namespace {

std::vector<double> decade_grid(double from, double to) {
  // e.g. 1e-1 .. 1e-4 with x0.1 decay steps
  std::vector<double> grid;
  for (double p = from; p >= to * (1.0 - 1e-12); p *= 0.1) grid.push_back(p);
  return grid;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write: " + path);
  return file;
}

int cmd_run(const std::string& graph_path, ppr::ExperimentConfig cfg,
            const std::string& grid_spec, double grid_from, double grid_to,
            const std::vector<std::uint32_t>& sources, const std::string& out_path) {
  if (!grid_spec.empty()) {
    std::stringstream ss(grid_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) cfg.grid.push_back(std::stod(tok));
  } else if (grid_from > 0.0) {
    cfg.grid = decade_grid(grid_from, grid_to > 0.0 ? grid_to : grid_from);
  }
  cfg.explicit_sources.assign(sources.begin(), sources.end());
  if (const char* env = std::getenv("PPR_SEED")) cfg.seed = std::stoull(env);
  if (const char* env = std::getenv("PPR_THREADS")) cfg.threads = std::stoul(env);

  ppr::WeightedGraph g = ppr::WeightedGraph::load_edge_list(graph_path);
  if (g.directed_edge_count() > cfg.truth_cap_edges)
    std::cerr << "warning: graph above truth cap, emitting bound-only rows\n";
  std::ofstream file;
  ppr::run_experiment(g, cfg, open_output(file, out_path));
  return 0;
}

int cmd_report(const std::string& graph_path, const std::string& out_path) {
  ppr::WeightedGraph g = ppr::WeightedGraph::load_edge_list(graph_path);
  std::ofstream file;
  open_output(file, out_path) << ppr::build_unbalance_report(g).to_json() << "\n";
  return 0;
}

int cmd_truth(const std::string& graph_path, std::uint32_t source, double alpha,
              int iters, const std::string& out_path) {
  ppr::WeightedGraph g = ppr::WeightedGraph::load_edge_list(graph_path);
  ppr::PprVector pi = ppr::ground_truth(g, source, alpha, iters);
  std::ofstream file;
  auto& out = open_output(file, out_path);
  for (std::size_t u = 0; u < pi.values.size(); ++u)
    if (pi.values[u] != 0.0)
      out << u << ' ' << ppr::format_double(pi.values[u]) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SSPPR benchmark harness for weighted graphs"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "parameter sweep over SSPPR queries, CSV output");
  std::string graph_path, algo = "localpush", mode = "l1", grid_spec, out_path;
  double grid_from = 0.0, grid_to = 0.0;
  std::vector<std::uint32_t> sources;
  ppr::ExperimentConfig cfg;
  run->add_option("--graph", graph_path, "edge list file")->required();
  run->add_option("--algo", algo,
                  "localpush|edgepush|edgepush-scan|power|montecarlo|fora");
  run->add_option("--error-mode", mode, "l1|additive");
  run->add_option("--alpha", cfg.alpha, "teleport probability");
  run->add_option("--grid", grid_spec, "comma-separated parameter values");
  run->add_option("--grid-from", grid_from, "decade sweep start");
  run->add_option("--grid-to", grid_to, "decade sweep end (inclusive)");
  run->add_option("--queries", cfg.query_count, "number of query sources");
  run->add_option("--sources", sources, "explicit source nodes (skip sampling)");
  std::string dist = "degree";
  run->add_option("--source-dist", dist, "degree|uniform");
  run->add_option("--k", cfg.k, "precision@k cutoff");
  run->add_option("--seed", cfg.seed, "RNG seed");
  run->add_option("--fora-theta", cfg.fora_push_theta, "push threshold for fora");
  run->add_option("--scan-fraction", cfg.scan_fraction,
                  "active-edge fraction triggering the sequential-scan switch");
  run->add_option("--truth-iters", cfg.truth_iterations, "power iterations for ground truth");
  run->add_option("--truth-cap-edges", cfg.truth_cap_edges,
                  "skip ground truth above this directed edge count");
  run->add_option("--out", out_path, "CSV path (default stdout)");

  // report
  auto* report = app.add_subcommand("report", "unbalancedness report as JSON");
  std::string rep_graph, rep_out;
  report->add_option("--graph", rep_graph, "edge list file")->required();
  report->add_option("--out", rep_out, "output path (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "write a synthetic graph as an edge list");
  std::string kind, gen_out, gen_input;
  std::size_t gen_n = 1000, gen_dim = 1;
  double gen_b = 0.5, gen_coord_var = 50.0, gen_c = 1.0, gen_d = -1.0;
  std::string gen_bandwidth = "scaled";
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", kind, "star|affinity|motif")->required();
  gen->add_option("--out", gen_out, "output edge list")->required();
  gen->add_option("--n", gen_n, "node/point count");
  gen->add_option("--heavy-fraction", gen_b, "star: weight of the heavy edge");
  gen->add_option("--dim", gen_dim, "affinity: point dimension");
  gen->add_option("--coord-var", gen_coord_var, "affinity: per-coordinate variance");
  gen->add_option("--c", gen_c, "affinity: bandwidth constant");
  gen->add_option("--distance-scale", gen_d, "affinity: d in sigma^2 = c*d^2*var");
  gen->add_option("--bandwidth", gen_bandwidth, "scaled|empirical");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--input", gen_input, "motif: unweighted edge list to reweight");

  // truth
  auto* truth = app.add_subcommand("truth", "ground-truth SSPPR vector via power iteration");
  std::string truth_graph, truth_out;
  std::uint32_t truth_source = 0;
  double truth_alpha = 0.2;
  int truth_iters = 100;
  truth->add_option("--graph", truth_graph, "edge list file")->required();
  truth->add_option("--source", truth_source, "source node")->required();
  truth->add_option("--alpha", truth_alpha, "teleport probability");
  truth->add_option("--iters", truth_iters, "iteration count");
  truth->add_option("--out", truth_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      cfg.algorithm = ppr::parse_algorithm(algo);
      if (mode == "l1") cfg.error_mode = ppr::ErrorMode::l1;
      else if (mode == "additive") cfg.error_mode = ppr::ErrorMode::additive;
      else throw std::invalid_argument("unknown error mode: " + mode);
      if (dist == "degree") cfg.source_mode = ppr::SourceMode::degree_proportional;
      else if (dist == "uniform") cfg.source_mode = ppr::SourceMode::uniform;
      else throw std::invalid_argument("unknown source distribution: " + dist);
      return cmd_run(graph_path, cfg, grid_spec, grid_from, grid_to, sources, out_path);
    }
    if (report->parsed()) return cmd_report(rep_graph, rep_out);
    if (gen->parsed()) {
      ppr::WeightedGraph g = [&] {
        if (kind == "star") return ppr::unbalanced_star_graph(gen_n, gen_b);
        if (kind == "affinity") {
          ppr::AffinityConfig acfg;
          acfg.n_points = gen_n;
          acfg.dim = gen_dim;
          acfg.coord_stddev = std::sqrt(gen_coord_var);
          acfg.bandwidth_mode = gen_bandwidth == "empirical"
              ? ppr::BandwidthMode::empirical_variance
              : ppr::BandwidthMode::scaled;
          acfg.c = gen_c;
          acfg.distance_scale = gen_d;
          acfg.rng_seed = gen_seed;
          return ppr::affinity_graph(acfg);
        }
        if (kind == "motif")
          return ppr::motif_weight(ppr::WeightedGraph::load_edge_list(gen_input));
        throw std::invalid_argument("unknown generator kind: " + kind);
      }();
      g.save_canonical(gen_out);
      return 0;
    }
    if (truth->parsed())
      return cmd_truth(truth_graph, truth_source, truth_alpha, truth_iters, truth_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
