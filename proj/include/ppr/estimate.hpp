#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "ppr/graph.hpp"
#include "ppr/mass_map.hpp"

namespace ppr {

// Sparse SSPPR estimate: nonzero entries sorted by node id.
struct PprEstimate {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, double>> entries;
  bool isolated_source = false;

  static PprEstimate from_mass(const NodeMassMap& mass, double scale = 1.0) {
    PprEstimate est;
    est.n = mass.domain();
    mass.for_each([&](NodeId u, double x) {
      if (x != 0.0) est.entries.emplace_back(u, scale * x);
    });
    std::sort(est.entries.begin(), est.entries.end());
    return est;
  }

  static PprEstimate indicator(std::size_t n, NodeId s) {
    PprEstimate est;
    est.n = n;
    est.entries.emplace_back(s, 1.0);
    return est;
  }

  double value(NodeId u) const {
    auto it = std::lower_bound(entries.begin(), entries.end(),
                               std::make_pair(u, -1.0));
    return (it != entries.end() && it->first == u) ? it->second : 0.0;
  }

  std::vector<double> to_dense() const {
    std::vector<double> out(n, 0.0);
    for (const auto& [u, x] : entries) out[u] = x;
    return out;
  }

  double sum() const {
    double s = 0.0;
    for (const auto& [u, x] : entries) s += x;
    return s;
  }
};

}  // namespace ppr
