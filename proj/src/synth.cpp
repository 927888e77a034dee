#include "ppr/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ppr/rng.hpp"

namespace ppr {

WeightedGraph affinity_graph(const AffinityConfig& cfg) {
  if (cfg.n_points < 2) throw std::invalid_argument("need at least two points");
  if (cfg.dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!(cfg.coord_stddev > 0.0)) throw std::invalid_argument("coord_stddev must be positive");
  if (!(cfg.c > 0.0)) throw std::invalid_argument("c must be positive");
  if (cfg.n_points > cfg.dense_cap)
    throw std::runtime_error("n_points exceeds dense generation cap");

  const std::size_t n = cfg.n_points;
  const std::size_t k = cfg.dim;
  std::vector<double> pts(n * k);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = Rng::substream(cfg.rng_seed, i);
    for (std::size_t j = 0; j < k; ++j)
      pts[i * k + j] = cfg.coord_stddev * rng.next_normal();
  }

  double sigma2;
  if (cfg.bandwidth_mode == BandwidthMode::empirical_variance) {
    std::vector<double> mean(k, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) mean[j] += pts[i * k + j];
    for (double& m : mean) m /= static_cast<double>(n);
    sigma2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const double dxy = pts[i * k + j] - mean[j];
        sigma2 += dxy * dxy;
      }
    sigma2 /= static_cast<double>(n);
  } else {
    const double d = cfg.distance_scale > 0.0 ? cfg.distance_scale
                                              : static_cast<double>(k);
    sigma2 = cfg.c * d * d * cfg.coord_stddev * cfg.coord_stddev;
  }
  return affinity_graph_from_points(pts, k, sigma2);
}

WeightedGraph affinity_graph_from_points(const std::vector<double>& pts,
                                         std::size_t dim, double sigma2) {
  if (dim == 0 || pts.size() % dim != 0)
    throw std::invalid_argument("points array does not match dimension");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  const std::size_t n = pts.size() / dim;
  if (n < 2) throw std::invalid_argument("need at least two points");

  // Complete graph, CSR built directly: row i holds all j != i in id order;
  // from_csr re-sorts rows by weight and computes the aggregates.
  std::vector<std::uint64_t> offsets(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    offsets[i] = static_cast<std::uint64_t>(i) * (n - 1);
  std::vector<NodeId> neighbors(n * (n - 1));
  std::vector<double> weights(n * (n - 1));
  const double inv = 1.0 / (2.0 * sigma2);
  // exp underflows for far pairs; clamp at the smallest normal so the graph
  // stays complete with strictly positive weights
  const double floor = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pos = offsets[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double dist2 = 0.0;
      for (std::size_t t = 0; t < dim; ++t) {
        const double dxy = pts[i * dim + t] - pts[j * dim + t];
        dist2 += dxy * dxy;
      }
      neighbors[pos] = static_cast<NodeId>(j);
      weights[pos] = std::max(std::exp(-dist2 * inv), floor);
      ++pos;
    }
  }
  return WeightedGraph::from_csr(std::move(offsets), std::move(neighbors),
                                 std::move(weights));
}

WeightedGraph motif_weight(const WeightedGraph& g) {
  // Intersect id-sorted adjacency lists; φ(u,v) = |N(u) ∩ N(v)|.
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    auto nbrs = g.neighbors_of(u);
    adj[u].assign(nbrs.begin(), nbrs.end());
    std::sort(adj[u].begin(), adj[u].end());
  }
  std::vector<InputEdge> out;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (v <= u) continue;
      std::size_t i = 0, j = 0, common = 0;
      const auto& a = adj[u];
      const auto& b = adj[v];
      while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++common; ++i; ++j; }
      }
      if (common > 0)
        out.push_back({g.original_label(u), g.original_label(v),
                       static_cast<double>(common)});
    }
  }
  if (out.empty()) throw std::runtime_error("motif weighting left no edges");
  return WeightedGraph::from_edges(out);
}

WeightedGraph unbalanced_star_graph(std::size_t n, double heavy_fraction) {
  if (n < 3) throw std::invalid_argument("need at least three spokes");
  if (!(heavy_fraction > 0.0 && heavy_fraction < 1.0))
    throw std::invalid_argument("heavy fraction must lie in (0,1)");
  // hub = 0, spokes = 1..n, chain node = n+1
  std::vector<InputEdge> edges;
  edges.reserve(n + 1);
  edges.push_back({0, 1, heavy_fraction});
  const double light = (1.0 - heavy_fraction) / static_cast<double>(n - 1);
  for (std::size_t i = 2; i <= n; ++i) edges.push_back({0, i, light});
  edges.push_back({1, n + 1, heavy_fraction});
  return WeightedGraph::from_edges(edges);
}

}  // namespace ppr
