#include "ppr/edge_push.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace ppr {

EdgeThresholds EdgeThresholds::l1(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0,1)");
  EdgeThresholds t;
  t.policy_ = ThresholdPolicy::l1;
  t.param_ = epsilon;
  return t;
}

EdgeThresholds EdgeThresholds::additive(double r_max) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("r_max must lie in (0,1)");
  EdgeThresholds t;
  t.policy_ = ThresholdPolicy::additive;
  t.param_ = r_max;
  return t;
}

EdgeThresholds EdgeThresholds::explicit_per_edge(std::vector<double> theta) {
  EdgeThresholds t;
  t.policy_ = ThresholdPolicy::explicit_per_edge;
  t.explicit_ = std::move(theta);
  return t;
}

double EdgeThresholds::at(const WeightedGraph& g, EdgeIndex e) const {
  switch (policy_) {
    case ThresholdPolicy::l1:
      return param_ * std::sqrt(g.edge_weight(e)) / g.sqrt_weight_sum();
    case ThresholdPolicy::additive: {
      const NodeId v = g.edge_target(e);
      return param_ * g.degree(v) * std::sqrt(g.edge_weight(e)) / g.node_sqrt_sum(v);
    }
    case ThresholdPolicy::explicit_per_edge:
      return explicit_[e];
  }
  return 0.0;
}

double EdgeThresholds::sum(const WeightedGraph& g) const {
  double s = 0.0;
  for (EdgeIndex e = 0; e < g.directed_edge_count(); ++e) s += at(g, e);
  return s;
}

void EdgeThresholds::validate(const WeightedGraph& g) const {
  if (policy_ == ThresholdPolicy::explicit_per_edge) {
    if (explicit_.size() != g.directed_edge_count())
      throw std::invalid_argument("explicit thresholds must cover all directed edges");
    for (double t : explicit_)
      if (!(t > 0.0)) throw std::invalid_argument("nonpositive edge threshold");
  }
}

namespace {

struct HeapEntry {
  double key;
  EdgeIndex edge;
  bool operator>(const HeapEntry& o) const {
    return key != o.key ? key > o.key : edge > o.edge;
  }
};

// Per-node neighbor queue. Untouched edges live in an implicit sorted-by-
// initial-key "virgin" sequence; once pushed, an edge moves into a binary
// heap with its increased key (pop-reinsert increase-key, keys monotone).
// Under the l1 policy the initial key (Q=0) is θ(u,v)/A_uv ∝ 1/√A_uv, so the
// weight-sorted CSR row already is the virgin order and no per-edge arrays
// are materialized until an edge is actually pushed.
struct NodeQueue {
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> heap;
  std::vector<EdgeIndex> virgin_order;  // empty = CSR row order
  std::size_t virgin_pos = 0;
  std::size_t row_size = 0;
  EdgeIndex row_begin = 0;

  EdgeIndex virgin_edge(std::size_t i) const {
    return virgin_order.empty() ? row_begin + i : virgin_order[i];
  }
};

class Engine {
 public:
  Engine(const WeightedGraph& g, NodeId s, double alpha,
         const EdgeThresholds& th, const EdgePushOptions& opt)
      : g_(g), s_(s), alpha_(alpha), th_(th), opt_(opt),
        q_(g.node_count()), expense_(g.directed_edge_count()),
        in_list_(g.node_count(), 0) {
    if (opt_.count_per_edge || opt_.instrumented)
      acct_.per_edge_pushes.assign(g.directed_edge_count(), 0);
    if (opt_.instrumented)
      last_key_.assign(g.directed_edge_count(), -1.0);
  }

  EdgePushResult run(std::optional<double> scan_fraction) {
    const auto t0 = std::chrono::steady_clock::now();
    q_.set(s_, 1.0);
    if (node_key(s_) <= 0.0) {
      active_.push_back(s_);
      in_list_[s_] = 1;
      active_edge_estimate_ = g_.neighbor_count(s_);
    }

    const double scan_limit =
        scan_fraction ? *scan_fraction * static_cast<double>(g_.directed_edge_count())
                      : std::numeric_limits<double>::infinity();
    while (!active_.empty()) {
      if (static_cast<double>(active_edge_estimate_) > scan_limit) {
        ++acct_.scan_switches;
        run_sequential_scans();
        break;
      }
      step();
    }

    EdgePushResult out;
    acct_.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.accounting = std::move(acct_);
    out.estimate = PprEstimate::from_mass(q_, alpha_);
    q_.for_each([&](NodeId u, double x) {
      if (x != 0.0) out.income.emplace_back(u, x);
    });
    std::sort(out.income.begin(), out.income.end());
    expense_.for_each([&](EdgeIndex e, double x) {
      if (x != 0.0) out.expense.emplace_back(e, x);
    });
    std::sort(out.expense.begin(), out.expense.end());
    return out;
  }

 private:
  double theta(EdgeIndex e) const { return th_.at(g_, e); }

  double key_of(EdgeIndex e) const {
    return (expense_.get(e) + theta(e)) / g_.edge_weight(e);
  }

  NodeQueue& queue_of(NodeId u) {
    auto it = queues_.find(u);
    if (it != queues_.end()) return it->second;
    NodeQueue& nq = queues_[u];
    nq.row_begin = g_.row_begin(u);
    nq.row_size = g_.neighbor_count(u);
    if (th_.policy() != ThresholdPolicy::l1) {
      // Initial keys are not monotone in the CSR weight order for these
      // policies; fix the virgin order once on first activation.
      nq.virgin_order.resize(nq.row_size);
      std::iota(nq.virgin_order.begin(), nq.virgin_order.end(), nq.row_begin);
      std::sort(nq.virgin_order.begin(), nq.virgin_order.end(),
                [&](EdgeIndex a, EdgeIndex b) {
                  const double ka = key_of(a), kb = key_of(b);
                  return ka != kb ? ka < kb : a < b;
                });
    }
    return nq;
  }

  // (key, edge) at the top of Q(u); virgin wins ties.
  std::pair<double, EdgeIndex> queue_top(NodeId u) {
    NodeQueue& nq = queue_of(u);
    ++acct_.queue_ops;
    if (nq.virgin_pos < nq.row_size) {
      const EdgeIndex ve = nq.virgin_edge(nq.virgin_pos);
      const double vk = key_of(ve);
      if (nq.heap.empty() || vk <= nq.heap.top().key) return {vk, ve};
    }
    return {nq.heap.top().key, nq.heap.top().edge};
  }

  double node_key(NodeId u) {
    return -(1.0 - alpha_) * q_.get(u) / g_.degree(u) + queue_top(u).first;
  }

  void increase_key(NodeId u, EdgeIndex e) {
    NodeQueue& nq = queue_of(u);
    if (nq.virgin_pos < nq.row_size && nq.virgin_edge(nq.virgin_pos) == e) {
      ++nq.virgin_pos;
    } else {
      nq.heap.pop();
    }
    nq.heap.push({key_of(e), e});
    ++acct_.queue_ops;
  }

  void step() {
    const NodeId u = active_.front();
    const auto [top_key, e] = queue_top(u);
    const NodeId v = g_.edge_target(e);
    const double w = g_.edge_weight(e);
    const double du = g_.degree(u);

    double y = (1.0 - alpha_) * q_.get(u) * w / du - expense_.get(e);
    if (y < 0.0 && y >= -1e-12) y = 0.0;  // float cancellation in R_uv
    expense_.add(e, y);
    q_.add(v, y);
    ++acct_.edge_pushes;
    if (!acct_.per_edge_pushes.empty()) ++acct_.per_edge_pushes[e];

    increase_key(u, e);

    if (-(1.0 - alpha_) * q_.get(u) / du + queue_top(u).first > 0.0) {
      active_.pop_front();
      in_list_[u] = 0;
      active_edge_estimate_ -= g_.neighbor_count(u);
    }
    if (!in_list_[v] && g_.degree(v) > 0.0 && node_key(v) <= 0.0) {
      active_.push_back(v);
      in_list_[v] = 1;
      active_edge_estimate_ += g_.neighbor_count(v);
    }

    if (opt_.instrumented) full_check();
    if (opt_.on_push) opt_.on_push(EdgePushView{q_, expense_});
  }

  // Round-based fallback: scan all directed edges in CSR order and push any
  // residue at or above threshold until a full round pushes nothing.
  void run_sequential_scans() {
    bool pushed = true;
    while (pushed) {
      pushed = false;
      for (NodeId u = 0; u < g_.node_count(); ++u) {
        const double du = g_.degree(u);
        if (du == 0.0) continue;
        for (EdgeIndex e = g_.row_begin(u); e < g_.row_end(u); ++e) {
          double y = (1.0 - alpha_) * q_.get(u) * g_.edge_weight(e) / du - expense_.get(e);
          if (y < theta(e)) continue;
          expense_.add(e, y);
          q_.add(g_.edge_target(e), y);
          ++acct_.edge_pushes;
          if (!acct_.per_edge_pushes.empty()) ++acct_.per_edge_pushes[e];
          pushed = true;
          if (opt_.on_push) opt_.on_push(EdgePushView{q_, expense_});
        }
      }
    }
  }

  void full_check() {
    // Residue nonnegativity, income/expense consistency, active-list
    // membership and key monotonicity, all recomputed from scratch.
    std::vector<double> incoming(g_.node_count(), 0.0);
    for (NodeId u = 0; u < g_.node_count(); ++u) {
      const double du = g_.degree(u);
      for (EdgeIndex e = g_.row_begin(u); e < g_.row_end(u); ++e) {
        const double r = du > 0.0
            ? (1.0 - alpha_) * q_.get(u) * g_.edge_weight(e) / du - expense_.get(e)
            : 0.0;
        if (r < -1e-12) throw std::logic_error("negative edge residue");
        incoming[g_.edge_target(e)] += expense_.get(e);
        const double k = key_of(e);
        if (last_key_[e] >= 0.0 && k < last_key_[e] - 1e-12)
          throw std::logic_error("queue key decreased");
        last_key_[e] = k;
      }
    }
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      const double expect = incoming[v] + (v == s_ ? 1.0 : 0.0);
      if (std::abs(q_.get(v) - expect) > 1e-10)
        throw std::logic_error("income does not match summed expenses");
      if (g_.degree(v) == 0.0) continue;
      double best = std::numeric_limits<double>::infinity();
      for (EdgeIndex e = g_.row_begin(v); e < g_.row_end(v); ++e)
        best = std::min(best, key_of(e));
      const bool should_be_active =
          -(1.0 - alpha_) * q_.get(v) / g_.degree(v) + best <= 0.0;
      if (should_be_active != (in_list_[v] != 0))
        throw std::logic_error("active list does not match {K_u <= 0}");
    }
  }

  const WeightedGraph& g_;
  NodeId s_;
  double alpha_;
  const EdgeThresholds& th_;
  const EdgePushOptions& opt_;

  NodeMassMap q_;
  EdgeMassMap expense_;
  std::unordered_map<NodeId, NodeQueue> queues_;
  std::deque<NodeId> active_;
  std::vector<std::uint8_t> in_list_;
  std::uint64_t active_edge_estimate_ = 0;
  std::vector<double> last_key_;
  EdgePushAccounting acct_;
};

EdgePushResult run_engine(const WeightedGraph& g, NodeId s, double alpha,
                          const EdgeThresholds& th,
                          std::optional<double> scan_fraction,
                          const EdgePushOptions& opt) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  if (s >= g.node_count()) throw std::out_of_range("source out of range");
  th.validate(g);

  if (g.degree(s) == 0.0) {
    EdgePushResult out;
    out.estimate = PprEstimate::indicator(g.node_count(), s);
    out.estimate.isolated_source = true;
    out.income.emplace_back(s, 1.0);
    return out;
  }
  Engine engine(g, s, alpha, th, opt);
  return engine.run(scan_fraction);
}

}  // namespace

std::vector<double> EdgePushResult::income_dense(std::size_t n) const {
  std::vector<double> out(n, 0.0);
  for (const auto& [u, x] : income) out[u] = x;
  return out;
}

std::vector<double> EdgePushResult::expense_dense(std::size_t directed_edges) const {
  std::vector<double> out(directed_edges, 0.0);
  for (const auto& [e, x] : expense) out[e] = x;
  return out;
}

EdgePushResult edge_push(const WeightedGraph& g, NodeId s, double alpha,
                         const EdgeThresholds& thresholds,
                         const EdgePushOptions& opt) {
  return run_engine(g, s, alpha, thresholds, std::nullopt, opt);
}

EdgePushResult edge_push_l1(const WeightedGraph& g, NodeId s, double alpha,
                            double epsilon, const EdgePushOptions& opt) {
  return run_engine(g, s, alpha, EdgeThresholds::l1(epsilon), std::nullopt, opt);
}

EdgePushResult edge_push_additive(const WeightedGraph& g, NodeId s, double alpha,
                                  double r_max, const EdgePushOptions& opt) {
  return run_engine(g, s, alpha, EdgeThresholds::additive(r_max), std::nullopt, opt);
}

EdgePushResult edge_push_with_scan_switch(const WeightedGraph& g, NodeId s,
                                          double alpha,
                                          const EdgeThresholds& thresholds,
                                          double scan_threshold_fraction,
                                          const EdgePushOptions& opt) {
  if (!(scan_threshold_fraction > 0.0 && scan_threshold_fraction <= 1.0))
    throw std::invalid_argument("scan_threshold_fraction must lie in (0,1]");
  return run_engine(g, s, alpha, thresholds, scan_threshold_fraction, opt);
}

std::vector<double> predicted_push_bound(const WeightedGraph& g, double alpha,
                                         const EdgeThresholds& thresholds,
                                         const PprVector& ppr) {
  if (ppr.values.size() != g.node_count())
    throw std::invalid_argument("ppr vector dimension mismatch");
  std::vector<double> bound(g.directed_edge_count(), 0.0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const double du = g.degree(u);
    if (du == 0.0) continue;
    for (EdgeIndex e = g.row_begin(u); e < g.row_end(u); ++e)
      bound[e] = (1.0 - alpha) * ppr.values[u] * g.edge_weight(e) /
                 (alpha * du * thresholds.at(g, e));
  }
  return bound;
}

}  // namespace ppr
