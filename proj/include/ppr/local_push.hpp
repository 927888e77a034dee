#pragma once

#include <cstdint>
#include <functional>

#include "ppr/estimate.hpp"
#include "ppr/graph.hpp"
#include "ppr/mass_map.hpp"

namespace ppr {

struct PushAccounting {
  std::uint64_t node_pushes = 0;
  std::uint64_t edge_touches = 0;  // Σ n(u) over performed pushes
  double wall_time = 0.0;
  std::vector<std::uint32_t> per_node_pushes;  // filled when requested
};

struct LocalPushView {
  const NodeMassMap& residue;
  const NodeMassMap& reserve;
};

struct LocalPushOptions {
  // Full-scan frontier and conservation checks after every push (test-only,
  // quadratic).
  bool instrumented = false;
  bool count_per_node = false;
  std::function<void(const LocalPushView&)> on_push;
};

struct LocalPushResult {
  PprEstimate estimate;
  PushAccounting accounting;
  // Nonzero residues at termination, sorted by node id; every entry is
  // strictly below d(u)·θ.
  std::vector<std::pair<NodeId, double>> final_residue;
};

// Node-granular forward push with global threshold θ: repeatedly pick the
// FIFO-first node with r(u) ≥ d(u)·θ, settle α·r(u) into the reserve and
// spread the rest to the neighbors proportionally to edge weight. The
// returned estimate is the final reserve (an entrywise underestimate of π).
LocalPushResult local_push(const WeightedGraph& g, NodeId s, double alpha,
                           double theta, const LocalPushOptions& opt = {});

// θ = ε/‖A‖₁ gives ℓ1 error at most ε.
LocalPushResult local_push_l1(const WeightedGraph& g, NodeId s, double alpha,
                              double epsilon, const LocalPushOptions& opt = {});

// θ = r_max gives normalized additive error at most r_max.
LocalPushResult local_push_additive(const WeightedGraph& g, NodeId s, double alpha,
                                    double r_max, const LocalPushOptions& opt = {});

}  // namespace ppr
