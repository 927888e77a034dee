#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ppr/estimate.hpp"
#include "ppr/exact.hpp"
#include "ppr/graph.hpp"
#include "ppr/mass_map.hpp"

namespace ppr {

enum class ThresholdPolicy { l1, additive, explicit_per_edge };

// Per-directed-edge termination thresholds θ(u,v), materialized on demand
// from per-node aggregates instead of stored per edge.
//   l1:        θ(u,v) = ε·√A_uv / Σ_Ē √A_xy            (Σθ = ε)
//   additive:  θ(u,v) = r_max·d(v)·√A_uv / Σ_{x∈N(v)}√A_xv
//                                           (Σ_{u∈N(v)} θ(u,v) = r_max·d(v))
class EdgeThresholds {
 public:
  static EdgeThresholds l1(double epsilon);
  static EdgeThresholds additive(double r_max);
  static EdgeThresholds explicit_per_edge(std::vector<double> theta);

  double at(const WeightedGraph& g, EdgeIndex e) const;
  double sum(const WeightedGraph& g) const;
  ThresholdPolicy policy() const { return policy_; }
  double parameter() const { return param_; }

  // Throws if any directed edge would get a nonpositive threshold.
  void validate(const WeightedGraph& g) const;

 private:
  ThresholdPolicy policy_ = ThresholdPolicy::l1;
  double param_ = 0.0;
  std::vector<double> explicit_;
};

struct EdgePushAccounting {
  std::uint64_t edge_pushes = 0;
  std::uint64_t queue_ops = 0;
  std::uint64_t scan_switches = 0;
  double wall_time = 0.0;
  std::vector<std::uint32_t> per_edge_pushes;  // filled when requested
};

struct EdgePushView {
  const NodeMassMap& income;   // q
  const EdgeMassMap& expense;  // Q, CSR-aligned
};

struct EdgePushOptions {
  // Per-push full recomputation of residues, active-list membership and key
  // monotonicity (test-only, quadratic).
  bool instrumented = false;
  bool count_per_edge = false;
  std::function<void(const EdgePushView&)> on_push;
};

struct EdgePushResult {
  PprEstimate estimate;  // α·q
  EdgePushAccounting accounting;
  // Final solver state: nonzero incomes by node id and nonzero expenses by
  // CSR edge index, both sorted. The implicit residues
  // R_uv = (1-α)q(u)A_uv/d(u) - Q_uv are all strictly below θ(u,v) here.
  std::vector<std::pair<NodeId, double>> income;
  std::vector<std::pair<EdgeIndex, double>> expense;

  std::vector<double> income_dense(std::size_t n) const;
  std::vector<double> expense_dense(std::size_t directed_edges) const;
};

// Edge-granular push: maintains node income q and per-edge expense Q with
// the implicit residue R_uv = (1-α)q(u)A_uv/d(u) - Q_uv, and repeatedly
// pushes candidate edges (R_uv ≥ θ(u,v)) found through a two-level
// structure: per-node priority queues keyed by k_u(v) = (Q_uv+θ(u,v))/A_uv
// under a list of nodes whose key K_u = -(1-α)q(u)/d(u) + top ≤ 0. The head
// node is drained in increasing key order until K_u turns positive; newly
// activated nodes append at the tail.
EdgePushResult edge_push(const WeightedGraph& g, NodeId s, double alpha,
                         const EdgeThresholds& thresholds,
                         const EdgePushOptions& opt = {});

EdgePushResult edge_push_l1(const WeightedGraph& g, NodeId s, double alpha,
                            double epsilon, const EdgePushOptions& opt = {});

EdgePushResult edge_push_additive(const WeightedGraph& g, NodeId s, double alpha,
                                  double r_max, const EdgePushOptions& opt = {});

// Same termination condition, but once the active-edge estimate exceeds
// scan_threshold_fraction·2m the two-level structure is abandoned for
// round-based sequential scans over all directed edges.
EdgePushResult edge_push_with_scan_switch(const WeightedGraph& g, NodeId s,
                                          double alpha,
                                          const EdgeThresholds& thresholds,
                                          double scan_threshold_fraction,
                                          const EdgePushOptions& opt = {});

// Per-edge bound (1-α)·π(u)·A_uv/(α·d(u)·θ(u,v)) on the number of pushes
// along each directed edge, CSR-aligned.
std::vector<double> predicted_push_bound(const WeightedGraph& g, double alpha,
                                         const EdgeThresholds& thresholds,
                                         const PprVector& ppr);

}  // namespace ppr
