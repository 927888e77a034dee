#include "ppr/unbalance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace ppr {

double cos2_phi(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw std::runtime_error("empty graph");
  const double s = g.sqrt_weight_sum();
  return s * s / (static_cast<double>(g.directed_edge_count()) * g.total_weight());
}

double cos2_phi_node(const WeightedGraph& g, NodeId v) {
  const std::size_t nv = g.neighbor_count(v);
  if (nv == 0) throw std::runtime_error("isolated node has no cos2 phi");
  const double s = g.node_sqrt_sum(v);
  return s * s / (static_cast<double>(nv) * g.degree(v));
}

double mean_superiority_factor(const WeightedGraph& g, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  double acc = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.neighbor_count(v) == 0) continue;
    acc += static_cast<double>(g.neighbor_count(v)) * cos2_phi_node(g, v);
  }
  return (1.0 - alpha) * acc / static_cast<double>(g.directed_edge_count());
}

double ab_gamma(double a, double b) {
  const double x = std::sqrt(a * b) + std::sqrt((1.0 - a) * (1.0 - b));
  return x * x;
}

AbUnbalance ab_unbalance(const WeightedGraph& g, double a_fraction) {
  if (!(a_fraction > 0.0 && a_fraction <= 1.0))
    throw std::invalid_argument("a must lie in (0,1]");
  AbUnbalance out;
  out.b.assign(g.node_count(), 1.0);
  out.effective_a.assign(g.node_count(), 1.0);
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::size_t nv = g.neighbor_count(v);
    if (nv == 0) continue;
    auto k = static_cast<std::size_t>(
        std::ceil(a_fraction * static_cast<double>(nv)));
    k = std::min(k, nv);
    const double av = static_cast<double>(k) / static_cast<double>(nv);
    auto ws = g.weights_of(v);  // already sorted by descending weight
    double heavy = 0.0;
    for (std::size_t i = 0; i < k; ++i) heavy += ws[i];
    const double b = std::min(heavy / g.degree(v), 1.0);
    out.b[v] = b;
    out.effective_a[v] = av;
    const double allowance =
        (std::sqrt(av * b) + std::sqrt((1.0 - av) * (1.0 - b))) *
        std::sqrt(static_cast<double>(nv) * g.degree(v));
    out.max_violation = std::max(out.max_violation, g.node_sqrt_sum(v) - allowance);
  }
  return out;
}

UnbalanceReport build_unbalance_report(const WeightedGraph& g,
                                       const std::vector<double>& a_sweep) {
  UnbalanceReport rep;
  rep.cos2_phi = cos2_phi(g);
  rep.per_node_cos2.assign(g.node_count(), 1.0);
  double acc = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.neighbor_count(v) == 0) continue;
    rep.per_node_cos2[v] = cos2_phi_node(g, v);
    acc += static_cast<double>(g.neighbor_count(v)) * rep.per_node_cos2[v];
  }
  rep.mean_factor = acc / static_cast<double>(g.directed_edge_count());
  for (double a : a_sweep) {
    AbUnbalance ab = ab_unbalance(g, a);
    AbProfileEntry entry;
    entry.a = a;
    entry.b_min = 1.0;
    entry.b_max = 0.0;
    entry.gamma_max = 0.0;
    entry.max_violation = ab.max_violation;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (g.neighbor_count(v) == 0) continue;
      entry.b_min = std::min(entry.b_min, ab.b[v]);
      entry.b_max = std::max(entry.b_max, ab.b[v]);
      entry.gamma_max =
          std::max(entry.gamma_max, ab_gamma(ab.effective_a[v], ab.b[v]));
    }
    rep.ab_profile.push_back(entry);
  }
  return rep;
}

std::string UnbalanceReport::to_json() const {
  nlohmann::json j;
  j["cos2_phi"] = cos2_phi;
  j["mean_factor"] = mean_factor;
  j["per_node_cos2"] = per_node_cos2;
  j["ab_profile"] = nlohmann::json::array();
  for (const auto& e : ab_profile) {
    j["ab_profile"].push_back({{"a", e.a},
                               {"b_min", e.b_min},
                               {"b_max", e.b_max},
                               {"gamma_max", e.gamma_max},
                               {"max_violation", e.max_violation}});
  }
  return j.dump(2);
}

}  // namespace ppr
