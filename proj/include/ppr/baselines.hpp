#pragma once

#include <cstdint>
#include <memory>

#include "ppr/exact.hpp"
#include "ppr/graph.hpp"
#include "ppr/rng.hpp"

namespace ppr {

struct WalkBudget {
  std::uint64_t total_walks = 1;
  std::uint64_t rng_seed = 0;
};

// Weighted neighbor sampling with per-node alias tables built lazily; one
// instance per query, O(1) per step. Also runs whole α-walks (a walk stuck
// on an isolated node stops there once the α-coin says stop).
class NeighborSampler {
 public:
  explicit NeighborSampler(const WeightedGraph& g);
  ~NeighborSampler();
  NeighborSampler(NeighborSampler&&) noexcept;

  // One transition from u, proportional to edge weight.
  NodeId step(NodeId u, Rng& rng);
  // Endpoint of an α-walk started at u.
  NodeId walk(NodeId u, double alpha, Rng& rng);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// π ← (1-α)Pπ + αe_s applied `iterations` times from zero; ℓ1 distance to
// the exact vector is (1-α)^L.
PprVector power_method(const WeightedGraph& g, NodeId s, double alpha,
                       int iterations);

// Endpoint frequencies of α-random walks from s. Walk i draws from an
// independent substream of the seed, so results do not depend on batching.
PprVector monte_carlo(const WeightedGraph& g, NodeId s, double alpha,
                      const WalkBudget& budget);

// Push with θ = push_theta, then ⌈r(u)·W⌉ walks from every node with
// leftover residue, each carrying r(u)/⌈r(u)·W⌉ mass to its endpoint.
PprVector fora_hybrid(const WeightedGraph& g, NodeId s, double alpha,
                      double push_theta, const WalkBudget& budget);

// Chernoff-style walk count for relative error eps_r at threshold delta with
// failure probability p_f (convention borrowed from the push+walk line of
// work).
std::uint64_t walks_for_relative_error(double delta, double eps_r, double p_f);

}  // namespace ppr
