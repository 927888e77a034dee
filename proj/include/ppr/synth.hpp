#pragma once

#include <cstdint>

#include "ppr/graph.hpp"

namespace ppr {

enum class BandwidthMode {
  empirical_variance,  // σ² = (1/n)Σ‖x_i - x̄‖²
  scaled,              // σ² = c·d²·σ_N² with a configurable distance scale d
};

struct AffinityConfig {
  std::size_t n_points = 0;
  std::size_t dim = 1;              // κ
  double coord_stddev = 1.0;        // σ_N
  BandwidthMode bandwidth_mode = BandwidthMode::scaled;
  double c = 1.0;
  double distance_scale = -1.0;     // d; negative means the default d = κ
  std::uint64_t rng_seed = 0;
  std::size_t dense_cap = 20000;    // max n_points for dense generation
};

// Fully-connected affinity graph: points sampled coordinatewise from
// N(0, σ_N²), edge weight exp(-‖x_i-x_j‖²/2σ²). Deterministic per-point RNG
// substreams, weights in (0,1].
WeightedGraph affinity_graph(const AffinityConfig& cfg);

// Same construction from given coordinates (row-major n×dim) and an explicit
// bandwidth σ².
WeightedGraph affinity_graph_from_points(const std::vector<double>& points,
                                         std::size_t dim, double sigma2);

// Triangle-motif weighting ("clique3"): weight of {u,v} is the number of
// triangles containing the edge; zero-weight edges drop out, so the result
// can be disconnected or, on triangle-free graphs, empty (throws).
WeightedGraph motif_weight(const WeightedGraph& unweighted);

// Hub with n spoke edges: one carries weight b, the other n-1 share 1-b
// equally (hub degree exactly 1), plus a chain edge of weight b from the
// heavy neighbor to one extra node. cos²φ = O(1/n) as b → 1-1/n.
WeightedGraph unbalanced_star_graph(std::size_t n, double heavy_fraction);

}  // namespace ppr
