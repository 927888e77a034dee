#include "ppr/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

#include "ppr/baselines.hpp"
#include "ppr/edge_push.hpp"
#include "ppr/eval.hpp"
#include "ppr/exact.hpp"
#include "ppr/local_push.hpp"
#include "ppr/rng.hpp"

namespace ppr {

const char* const kCsvHeader =
    "algorithm,param,query_id,source,l1_error,max_add_err,norm_max_add_err,"
    "precision_at_k,norm_precision_at_k,best_conductance,node_pushes,"
    "edge_pushes,edges_touched,wall_time_s";

Algorithm parse_algorithm(const std::string& name) {
  if (name == "localpush") return Algorithm::localpush;
  if (name == "edgepush") return Algorithm::edgepush;
  if (name == "edgepush-scan") return Algorithm::edgepush_scan;
  if (name == "power") return Algorithm::power;
  if (name == "montecarlo") return Algorithm::montecarlo;
  if (name == "fora") return Algorithm::fora;
  throw std::invalid_argument("unknown algorithm: " + name);
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::localpush: return "localpush";
    case Algorithm::edgepush: return "edgepush";
    case Algorithm::edgepush_scan: return "edgepush-scan";
    case Algorithm::power: return "power";
    case Algorithm::montecarlo: return "montecarlo";
    case Algorithm::fora: return "fora";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

namespace {

struct QueryRow {
  double l1 = std::nan("");
  double max_add = std::nan("");
  double norm_max_add = std::nan("");
  double prec = std::nan("");
  double norm_prec = std::nan("");
  double conductance = std::nan("");
  double node_pushes = 0;
  double edge_pushes = 0;
  double edges_touched = 0;
  double wall_time = 0;
};

QueryRow run_single(const WeightedGraph& g, const ExperimentConfig& cfg,
                    double param, std::size_t grid_idx, std::size_t query_idx,
                    NodeId source, const std::vector<double>* truth) {
  QueryRow row;
  std::vector<double> est;
  const auto t0 = std::chrono::steady_clock::now();
  switch (cfg.algorithm) {
    case Algorithm::localpush: {
      LocalPushResult r = cfg.error_mode == ErrorMode::l1
          ? local_push_l1(g, source, cfg.alpha, param)
          : local_push_additive(g, source, cfg.alpha, param);
      row.wall_time = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();
      est = r.estimate.to_dense();
      row.node_pushes = static_cast<double>(r.accounting.node_pushes);
      row.edges_touched = static_cast<double>(r.accounting.edge_touches);
      break;
    }
    case Algorithm::edgepush:
    case Algorithm::edgepush_scan: {
      EdgeThresholds th = cfg.error_mode == ErrorMode::l1
          ? EdgeThresholds::l1(param)
          : EdgeThresholds::additive(param);
      EdgePushResult r = cfg.algorithm == Algorithm::edgepush
          ? edge_push(g, source, cfg.alpha, th)
          : edge_push_with_scan_switch(g, source, cfg.alpha, th, cfg.scan_fraction);
      row.wall_time = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();
      est = r.estimate.to_dense();
      row.edge_pushes = static_cast<double>(r.accounting.edge_pushes);
      row.edges_touched = static_cast<double>(r.accounting.edge_pushes);
      break;
    }
    case Algorithm::power: {
      const int iters = static_cast<int>(param);
      if (iters < 1) throw std::invalid_argument("power iterations must be >= 1");
      PprVector r = power_method(g, source, cfg.alpha, iters);
      row.wall_time = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();
      est = std::move(r.values);
      row.edges_touched =
          static_cast<double>(g.directed_edge_count()) * iters;
      break;
    }
    case Algorithm::montecarlo:
    case Algorithm::fora: {
      const double p_f = 1.0 / static_cast<double>(g.node_count());
      WalkBudget budget;
      budget.total_walks = walks_for_relative_error(param, cfg.eps_r, p_f);
      budget.rng_seed = Rng::mix(cfg.seed ^ Rng::mix(grid_idx * 1000003 + query_idx));
      PprVector r = cfg.algorithm == Algorithm::montecarlo
          ? monte_carlo(g, source, cfg.alpha, budget)
          : fora_hybrid(g, source, cfg.alpha, cfg.fora_push_theta, budget);
      row.wall_time = std::chrono::duration<double>(
          std::chrono::steady_clock::now() - t0).count();
      est = std::move(r.values);
      break;
    }
  }

  if (truth != nullptr) {
    EvalReport rep = evaluate(g, est, *truth, cfg.k);
    row.l1 = rep.l1_error;
    row.max_add = rep.max_add_err;
    row.norm_max_add = rep.normalized_max_add_err;
    row.prec = rep.precision_at_k;
    row.norm_prec = rep.normalized_precision_at_k;
    row.conductance = rep.best_conductance;
  }
  return row;
}

void emit_row(std::ostream& out, const ExperimentConfig& cfg, double param,
              const std::string& query_id, const std::string& source,
              const QueryRow& row) {
  out << algorithm_name(cfg.algorithm) << ',' << format_double(param) << ','
      << query_id << ',' << source << ',' << format_double(row.l1) << ','
      << format_double(row.max_add) << ',' << format_double(row.norm_max_add)
      << ',' << format_double(row.prec) << ',' << format_double(row.norm_prec)
      << ',' << format_double(row.conductance) << ','
      << format_double(row.node_pushes) << ',' << format_double(row.edge_pushes)
      << ',' << format_double(row.edges_touched) << ','
      << format_double(row.wall_time) << '\n';
}

}  // namespace

void run_experiment(const WeightedGraph& g, const ExperimentConfig& cfg,
                    std::ostream& out) {
  if (cfg.grid.empty()) throw std::invalid_argument("empty parameter grid");
  for (double p : cfg.grid)
    if (!(p > 0.0)) throw std::invalid_argument("grid values must be positive");

  std::vector<NodeId> sources = cfg.explicit_sources;
  if (sources.empty()) {
    SourceDistribution dist{cfg.source_mode, cfg.seed};
    sources = g.sample_sources(dist, cfg.query_count);
  }

  // Ground truth once per distinct source.
  const bool truth_feasible = g.directed_edge_count() <= cfg.truth_cap_edges;
  std::vector<std::vector<double>> truths(sources.size());
  std::vector<const std::vector<double>*> truth_ptr(sources.size(), nullptr);
  if (truth_feasible) {
    for (std::size_t i = 0; i < sources.size(); ++i) {
      bool seen = false;
      for (std::size_t j = 0; j < i; ++j) {
        if (sources[j] == sources[i]) {
          truth_ptr[i] = truth_ptr[j];
          seen = true;
          break;
        }
      }
      if (!seen) {
        truths[i] = ground_truth(g, sources[i], cfg.alpha, cfg.truth_iterations).values;
        truth_ptr[i] = &truths[i];
      }
    }
  }

  out << kCsvHeader << '\n';
  for (std::size_t gi = 0; gi < cfg.grid.size(); ++gi) {
    const double param = cfg.grid[gi];
    std::vector<QueryRow> rows(sources.size());
    if (cfg.threads > 1) {
      std::vector<std::future<QueryRow>> futs;
      futs.reserve(sources.size());
      for (std::size_t qi = 0; qi < sources.size(); ++qi)
        futs.push_back(std::async(std::launch::async, run_single, std::cref(g),
                                  std::cref(cfg), param, gi, qi, sources[qi],
                                  truth_ptr[qi]));
      for (std::size_t qi = 0; qi < sources.size(); ++qi) rows[qi] = futs[qi].get();
    } else {
      for (std::size_t qi = 0; qi < sources.size(); ++qi)
        rows[qi] = run_single(g, cfg, param, gi, qi, sources[qi], truth_ptr[qi]);
    }

    QueryRow avg;
    avg.l1 = avg.max_add = avg.norm_max_add = avg.prec = avg.norm_prec =
        avg.conductance = 0.0;
    for (std::size_t qi = 0; qi < rows.size(); ++qi) {
      emit_row(out, cfg, param, std::to_string(qi),
               std::to_string(sources[qi]), rows[qi]);
      avg.l1 += rows[qi].l1;
      avg.max_add += rows[qi].max_add;
      avg.norm_max_add += rows[qi].norm_max_add;
      avg.prec += rows[qi].prec;
      avg.norm_prec += rows[qi].norm_prec;
      avg.conductance += rows[qi].conductance;
      avg.node_pushes += rows[qi].node_pushes;
      avg.edge_pushes += rows[qi].edge_pushes;
      avg.edges_touched += rows[qi].edges_touched;
      avg.wall_time += rows[qi].wall_time;
    }
    const auto cnt = static_cast<double>(rows.size());
    avg.l1 /= cnt;
    avg.max_add /= cnt;
    avg.norm_max_add /= cnt;
    avg.prec /= cnt;
    avg.norm_prec /= cnt;
    avg.conductance /= cnt;
    avg.node_pushes /= cnt;
    avg.edge_pushes /= cnt;
    avg.edges_touched /= cnt;
    avg.wall_time /= cnt;
    emit_row(out, cfg, param, "avg", "-1", avg);
  }
}

}  // namespace ppr
