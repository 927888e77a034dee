#pragma once

#include <cstddef>
#include <vector>

#include "ppr/graph.hpp"

namespace ppr {

struct PprVector {
  NodeId source = 0;
  double alpha = 0.0;
  std::vector<double> values;
};

// Dense matrix of exact PPR values for every source, for small graphs only.
// Backs the per-push invariant checkers.
class PprMatrix {
 public:
  PprMatrix(const WeightedGraph& g, double alpha, std::size_t dense_limit = 2048);

  // π_source(target)
  double value(NodeId source, NodeId target) const {
    return values_[static_cast<std::size_t>(target) * n_ + source];
  }
  std::size_t size() const { return n_; }
  double alpha() const { return alpha_; }

 private:
  std::size_t n_;
  double alpha_;
  std::vector<double> values_;  // values_[t*n + u] = π_u(t)
};

// Exact SSPPR vector via a dense LU solve of (I - (1-α)P)π = α e_s.
// Isolated nodes are treated as self-absorbing, so an isolated source yields
// the indicator vector. Throws when n exceeds dense_limit.
PprVector exact_ppr(const WeightedGraph& g, NodeId s, double alpha,
                    std::size_t dense_limit = 2048);

// Power-iteration ground truth: L applications of
// π ← (1-α)Pπ + α e_s starting from zero. Any graph size.
PprVector ground_truth(const WeightedGraph& g, NodeId s, double alpha,
                       int iterations = 100);

// Max absolute violation of π(t) = π̂(t) + Σ_u r(u)·π_u(t) over targets t.
double check_localpush_invariant(const WeightedGraph& g, NodeId s,
                                 const std::vector<double>& reserve,
                                 const std::vector<double>& residue,
                                 const PprMatrix& ppr);

// Max absolute violation of π(t) = α q(t) + Σ_{<u,v>} R_uv·π_v(t), where
// R_uv = (1-α)q(u)A_uv/d(u) - Q_uv is recomputed from q and the CSR-aligned
// expense vector Q (size 2m).
double check_edgepush_invariant(const WeightedGraph& g, NodeId s, double alpha,
                                const std::vector<double>& q,
                                const std::vector<double>& expense,
                                const PprMatrix& ppr);

}  // namespace ppr
