#include "ppr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace ppr {

namespace {

void check_dims(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

std::vector<NodeId> top_k(const WeightedGraph& g, const std::vector<double>& v,
                          std::size_t k, bool normalize_by_degree) {
  std::vector<NodeId> ids(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) ids[i] = static_cast<NodeId>(i);
  auto score = [&](NodeId u) {
    if (!normalize_by_degree) return v[u];
    const double d = g.degree(u);
    return d > 0.0 ? v[u] / d : 0.0;
  };
  std::partial_sort(ids.begin(), ids.begin() + k, ids.end(),
                    [&](NodeId a, NodeId b) {
                      const double sa = score(a), sb = score(b);
                      return sa != sb ? sa > sb : a < b;
                    });
  ids.resize(k);
  return ids;
}

}  // namespace

double l1_error(const std::vector<double>& est, const std::vector<double>& truth) {
  check_dims(est, truth);
  double s = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) s += std::abs(est[i] - truth[i]);
  return s;
}

double max_add_err(const std::vector<double>& est, const std::vector<double>& truth) {
  check_dims(est, truth);
  double m = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i)
    m = std::max(m, std::abs(est[i] - truth[i]));
  return m;
}

double normalized_max_add_err(const WeightedGraph& g, const std::vector<double>& est,
                              const std::vector<double>& truth) {
  check_dims(est, truth);
  if (est.size() != g.node_count()) throw std::invalid_argument("dimension mismatch");
  double m = 0.0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const double d = g.degree(u);
    if (d == 0.0) continue;
    m = std::max(m, std::abs(est[u] - truth[u]) / d);
  }
  return m;
}

PrecisionResult precision_at_k(const WeightedGraph& g, const std::vector<double>& est,
                               const std::vector<double>& truth, std::size_t k,
                               bool normalize_by_degree) {
  check_dims(est, truth);
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  PrecisionResult out;
  if (k > est.size()) {
    k = est.size();
    out.k_clamped = true;
  }
  auto a = top_k(g, est, k, normalize_by_degree);
  auto b = top_k(g, truth, k, normalize_by_degree);
  std::unordered_set<NodeId> bs(b.begin(), b.end());
  std::size_t hits = 0;
  for (NodeId u : a) hits += bs.count(u);
  out.value = static_cast<double>(hits) / static_cast<double>(k);
  return out;
}

SweepResult sweep_cut(const WeightedGraph& g, const std::vector<double>& est) {
  if (est.size() != g.node_count()) throw std::invalid_argument("dimension mismatch");
  SweepResult out;
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (g.degree(u) > 0.0 && est[u] / g.degree(u) > 0.0) out.order.push_back(u);
  if (out.order.empty()) throw std::runtime_error("all-zero estimate");
  std::sort(out.order.begin(), out.order.end(), [&](NodeId a, NodeId b) {
    const double sa = est[a] / g.degree(a), sb = est[b] / g.degree(b);
    return sa != sb ? sa > sb : a < b;
  });

  const double total_vol = g.total_weight();
  std::size_t support = 0;  // nodes with positive degree
  for (NodeId u = 0; u < g.node_count(); ++u) support += g.degree(u) > 0.0;

  std::vector<std::uint8_t> in_set(g.node_count(), 0);
  double vol = 0.0, cut = 0.0;
  out.best_conductance = std::numeric_limits<double>::infinity();
  out.conductance.reserve(out.order.size());
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    const NodeId v = out.order[i];
    double into_set = 0.0;
    auto nbrs = g.neighbors_of(v);
    auto ws = g.weights_of(v);
    for (std::size_t j = 0; j < nbrs.size(); ++j)
      if (in_set[nbrs[j]]) into_set += ws[j];
    vol += g.degree(v);
    cut = std::max(cut + g.degree(v) - 2.0 * into_set, 0.0);
    in_set[v] = 1;
    // A prefix covering every positive-degree node has an empty complement
    // side regardless of float residue in total_vol - vol.
    if (i + 1 == support) {
      out.conductance.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double denom = std::min(vol, total_vol - vol);
    if (denom <= 0.0) {
      out.conductance.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    const double phi = cut / denom;
    out.conductance.push_back(phi);
    if (phi < out.best_conductance) {
      out.best_conductance = phi;
      out.best_prefix_size = i + 1;
    }
  }
  if (!std::isfinite(out.best_conductance))
    throw std::runtime_error("no prefix with positive two-sided volume");
  return out;
}

SweepResult sweep_cut(const WeightedGraph& g, const PprEstimate& est) {
  return sweep_cut(g, est.to_dense());
}

double conductance(const WeightedGraph& g, const std::vector<NodeId>& set) {
  std::vector<std::uint8_t> in_set(g.node_count(), 0);
  for (NodeId u : set) in_set[u] = 1;
  double vol = 0.0, cut = 0.0;
  std::size_t covered = 0, support = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) > 0.0) {
      ++support;
      covered += in_set[u];
    }
  }
  for (NodeId u : set) {
    vol += g.degree(u);
    auto nbrs = g.neighbors_of(u);
    auto ws = g.weights_of(u);
    for (std::size_t j = 0; j < nbrs.size(); ++j)
      if (!in_set[nbrs[j]]) cut += ws[j];
  }
  if (covered == support || covered == 0)
    return std::numeric_limits<double>::quiet_NaN();
  const double denom = std::min(vol, g.total_weight() - vol);
  if (denom <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return cut / denom;
}

EvalReport evaluate(const WeightedGraph& g, const std::vector<double>& est,
                    const std::vector<double>& truth, std::size_t k) {
  EvalReport rep;
  rep.l1_error = l1_error(est, truth);
  rep.max_add_err = max_add_err(est, truth);
  rep.normalized_max_add_err = normalized_max_add_err(g, est, truth);
  rep.precision_at_k = precision_at_k(g, est, truth, k, false).value;
  rep.normalized_precision_at_k = precision_at_k(g, est, truth, k, true).value;
  bool any_positive = false;
  for (NodeId u = 0; u < g.node_count() && !any_positive; ++u)
    any_positive = g.degree(u) > 0.0 && est[u] > 0.0;
  if (any_positive) {
    SweepResult sweep = sweep_cut(g, est);
    rep.best_conductance = sweep.best_conductance;
    rep.best_sweep_set_size = sweep.best_prefix_size;
  } else {
    rep.best_conductance = 1.0;
    rep.best_sweep_set_size = 0;
  }
  return rep;
}

}  // namespace ppr
