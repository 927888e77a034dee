#pragma once

#include <cstddef>
#include <vector>

#include "ppr/estimate.hpp"
#include "ppr/graph.hpp"

namespace ppr {

double l1_error(const std::vector<double>& est, const std::vector<double>& truth);
double max_add_err(const std::vector<double>& est, const std::vector<double>& truth);
// max_u |est(u)-truth(u)|/d(u); degree-0 nodes are skipped.
double normalized_max_add_err(const WeightedGraph& g, const std::vector<double>& est,
                              const std::vector<double>& truth);

struct PrecisionResult {
  double value = 0.0;
  bool k_clamped = false;
};

// |V_k(est) ∩ V_k(truth)|/k with ranking by value (or value/d(u) when
// normalize_by_degree), ties broken by ascending node id on both sides.
// k > n is clamped to n and flagged.
PrecisionResult precision_at_k(const WeightedGraph& g, const std::vector<double>& est,
                               const std::vector<double>& truth, std::size_t k,
                               bool normalize_by_degree);

struct SweepResult {
  std::vector<NodeId> order;          // nodes with est(u)/d(u) > 0, ranked
  std::vector<double> conductance;    // Φ of each prefix (nan where undefined)
  double best_conductance = 1.0;
  std::size_t best_prefix_size = 0;   // number of nodes in the best prefix
};

// Sweep process: rank by est(u)/d(u) descending (ties ascending id), compute
// the conductance Φ(S)=cut(S)/min{vol(S),vol(V∖S)} of every prefix
// incrementally, and keep the minimum. Prefixes whose smaller side has zero
// volume are skipped. Throws on an all-zero estimate.
SweepResult sweep_cut(const WeightedGraph& g, const std::vector<double>& est);
SweepResult sweep_cut(const WeightedGraph& g, const PprEstimate& est);

// Conductance of an arbitrary node set, recomputed from scratch.
double conductance(const WeightedGraph& g, const std::vector<NodeId>& set);

struct EvalReport {
  double l1_error = 0.0;
  double max_add_err = 0.0;
  double normalized_max_add_err = 0.0;
  double precision_at_k = 0.0;
  double normalized_precision_at_k = 0.0;
  double best_conductance = 1.0;
  std::size_t best_sweep_set_size = 0;
  double query_time_seconds = 0.0;
};

EvalReport evaluate(const WeightedGraph& g, const std::vector<double>& est,
                    const std::vector<double>& truth, std::size_t k);

}  // namespace ppr
