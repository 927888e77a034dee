#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/rng.hpp"

namespace ppr::testing {

inline WeightedGraph make_graph(const std::vector<InputEdge>& edges) {
  return WeightedGraph::from_edges(edges);
}

// Single undirected edge of weight 1 between nodes 0 and 1.
inline WeightedGraph two_node_graph() { return make_graph({{0, 1, 1.0}}); }

// Connected random graph: spanning tree plus extra edges, weights
// log-uniform in [0.1, 100].
inline WeightedGraph random_graph(Rng& rng, std::size_t min_n, std::size_t max_n,
                                  double extra_edge_factor = 1.0) {
  const std::size_t n = min_n + rng.next_below(max_n - min_n + 1);
  auto weight = [&] {
    const double lo = std::log(0.1), hi = std::log(100.0);
    return std::exp(lo + (hi - lo) * rng.next_double());
  };
  std::vector<InputEdge> edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.push_back({rng.next_below(v), v, weight()});
  const auto extra =
      static_cast<std::size_t>(extra_edge_factor * static_cast<double>(n));
  for (std::size_t i = 0; i < extra; ++i) {
    const std::uint64_t u = rng.next_below(n), v = rng.next_below(n);
    if (u != v) edges.push_back({u, v, weight()});
  }
  return WeightedGraph::from_edges(edges);
}

inline double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

}  // namespace ppr::testing
