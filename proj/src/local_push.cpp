#include "ppr/local_push.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ppr {

namespace {

void check_instrumented_state(const WeightedGraph& g, double theta,
                              const NodeMassMap& residue,
                              const NodeMassMap& reserve,
                              const std::deque<NodeId>& fifo,
                              const std::unordered_set<NodeId>& queued) {
  const double mass = residue.sum() + reserve.sum();
  if (std::abs(mass - 1.0) > 1e-10)
    throw std::logic_error("conservation violated: reserve+residue != 1");
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (g.degree(u) == 0.0) continue;  // unreachable, never eligible
    const bool eligible = residue.get(u) >= g.degree(u) * theta;
    if (eligible != (queued.count(u) > 0))
      throw std::logic_error("frontier does not match eligible set");
  }
  if (fifo.size() != queued.size())
    throw std::logic_error("frontier bookkeeping out of sync");
}

}  // namespace

LocalPushResult local_push(const WeightedGraph& g, NodeId s, double alpha,
                           double theta, const LocalPushOptions& opt) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
  if (s >= g.node_count()) throw std::out_of_range("source out of range");

  LocalPushResult out;
  if (g.degree(s) == 0.0) {
    out.estimate = PprEstimate::indicator(g.node_count(), s);
    out.estimate.isolated_source = true;
    return out;
  }

  const auto t0 = std::chrono::steady_clock::now();
  NodeMassMap residue(g.node_count());
  NodeMassMap reserve(g.node_count());
  residue.set(s, 1.0);

  std::deque<NodeId> fifo;
  std::unordered_set<NodeId> queued;
  if (residue.get(s) >= g.degree(s) * theta) {
    fifo.push_back(s);
    queued.insert(s);
  }
  if (opt.count_per_node)
    out.accounting.per_node_pushes.assign(g.node_count(), 0);

  while (!fifo.empty()) {
    const NodeId u = fifo.front();
    fifo.pop_front();
    queued.erase(u);
    const double ru = residue.get(u);
    const double du = g.degree(u);
    // Residues only grow while queued, so u is still eligible here.
    reserve.add(u, alpha * ru);
    auto nbrs = g.neighbors_of(u);
    auto ws = g.weights_of(u);
    const double spread = (1.0 - alpha) * ru / du;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeId v = nbrs[i];
      residue.add(v, spread * ws[i]);
      if (!queued.count(v) && residue.get(v) >= g.degree(v) * theta) {
        fifo.push_back(v);
        queued.insert(v);
      }
    }
    residue.set(u, 0.0);

    ++out.accounting.node_pushes;
    out.accounting.edge_touches += nbrs.size();
    if (opt.count_per_node) ++out.accounting.per_node_pushes[u];
    if (opt.instrumented)
      check_instrumented_state(g, theta, residue, reserve, fifo, queued);
    if (opt.on_push) opt.on_push(LocalPushView{residue, reserve});
  }

  out.accounting.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.estimate = PprEstimate::from_mass(reserve);
  residue.for_each([&](NodeId u, double x) {
    if (x != 0.0) out.final_residue.emplace_back(u, x);
  });
  std::sort(out.final_residue.begin(), out.final_residue.end());
  return out;
}

LocalPushResult local_push_l1(const WeightedGraph& g, NodeId s, double alpha,
                              double epsilon, const LocalPushOptions& opt) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  return local_push(g, s, alpha, epsilon / g.total_weight(), opt);
}

LocalPushResult local_push_additive(const WeightedGraph& g, NodeId s, double alpha,
                                    double r_max, const LocalPushOptions& opt) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("r_max must lie in (0,1)");
  return local_push(g, s, alpha, r_max, opt);
}

}  // namespace ppr
