#include "ppr/exact.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace ppr {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
}

// M = I - (1-α)P with P = A D⁻¹ column-stochastic; isolated nodes get an
// implicit self-loop so every column sums to one.
Eigen::MatrixXd system_matrix(const WeightedGraph& g, double alpha) {
  const std::size_t n = g.node_count();
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
  for (NodeId v = 0; v < n; ++v) {
    const double d = g.degree(v);
    if (d == 0.0) {
      M(v, v) -= (1.0 - alpha);
      continue;
    }
    auto nbrs = g.neighbors_of(v);
    auto ws = g.weights_of(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      M(nbrs[i], v) -= (1.0 - alpha) * ws[i] / d;
  }
  return M;
}

}  // namespace

PprVector exact_ppr(const WeightedGraph& g, NodeId s, double alpha,
                    std::size_t dense_limit) {
  check_alpha(alpha);
  const std::size_t n = g.node_count();
  if (s >= n) throw std::out_of_range("source out of range");
  if (n > dense_limit)
    throw std::runtime_error("graph too large for dense exact solve");

  Eigen::MatrixXd M = system_matrix(g, alpha);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(s) = alpha;
  Eigen::VectorXd pi = M.partialPivLu().solve(rhs);
  const double resid = (M * pi - rhs).lpNorm<Eigen::Infinity>();
  if (resid > 1e-10) throw std::runtime_error("exact solve residual too large");

  PprVector out;
  out.source = s;
  out.alpha = alpha;
  out.values.assign(pi.data(), pi.data() + n);
  return out;
}

PprVector ground_truth(const WeightedGraph& g, NodeId s, double alpha,
                       int iterations) {
  check_alpha(alpha);
  const std::size_t n = g.node_count();
  if (s >= n) throw std::out_of_range("source out of range");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");

  std::vector<double> cur(n, 0.0), next(n, 0.0);
  for (int l = 0; l < iterations; ++l) {
    for (NodeId v = 0; v < n; ++v) {
      const double d = g.degree(v);
      if (d == 0.0) {
        next[v] = (1.0 - alpha) * cur[v];
        continue;
      }
      auto nbrs = g.neighbors_of(v);
      auto ws = g.weights_of(v);
      double acc = 0.0;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        acc += ws[i] * cur[nbrs[i]] / g.degree(nbrs[i]);
      next[v] = (1.0 - alpha) * acc;
    }
    next[s] += alpha;
    cur.swap(next);
  }

  PprVector out;
  out.source = s;
  out.alpha = alpha;
  out.values = std::move(cur);
  return out;
}

PprMatrix::PprMatrix(const WeightedGraph& g, double alpha, std::size_t dense_limit)
    : n_(g.node_count()), alpha_(alpha) {
  check_alpha(alpha);
  if (n_ > dense_limit)
    throw std::runtime_error("graph too large for dense PPR matrix");
  Eigen::MatrixXd M = system_matrix(g, alpha);
  Eigen::MatrixXd inv = M.partialPivLu().solve(
      Eigen::MatrixXd::Identity(n_, n_));
  values_.resize(n_ * n_);
  for (std::size_t t = 0; t < n_; ++t)
    for (std::size_t u = 0; u < n_; ++u)
      values_[t * n_ + u] = alpha * inv(t, u);  // π_u(t)
}

double check_localpush_invariant(const WeightedGraph& g, NodeId s,
                                 const std::vector<double>& reserve,
                                 const std::vector<double>& residue,
                                 const PprMatrix& ppr) {
  const std::size_t n = g.node_count();
  if (reserve.size() != n || residue.size() != n || ppr.size() != n)
    throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (NodeId t = 0; t < n; ++t) {
    double rhs = reserve[t];
    for (NodeId u = 0; u < n; ++u)
      if (residue[u] != 0.0) rhs += residue[u] * ppr.value(u, t);
    worst = std::max(worst, std::abs(ppr.value(s, t) - rhs));
  }
  return worst;
}

double check_edgepush_invariant(const WeightedGraph& g, NodeId s, double alpha,
                                const std::vector<double>& q,
                                const std::vector<double>& expense,
                                const PprMatrix& ppr) {
  const std::size_t n = g.node_count();
  if (q.size() != n || expense.size() != g.directed_edge_count() || ppr.size() != n)
    throw std::invalid_argument("dimension mismatch");
  // Group Σ_{<u,v>} R_uv·π_v(t) by receiving node v.
  std::vector<double> incoming(n, 0.0);
  for (NodeId u = 0; u < n; ++u) {
    const double d = g.degree(u);
    for (EdgeIndex e = g.row_begin(u); e < g.row_end(u); ++e) {
      const double r = (1.0 - alpha) * q[u] * g.edge_weight(e) / d - expense[e];
      incoming[g.edge_target(e)] += r;
    }
  }
  double worst = 0.0;
  for (NodeId t = 0; t < n; ++t) {
    double rhs = alpha * q[t];
    for (NodeId v = 0; v < n; ++v)
      if (incoming[v] != 0.0) rhs += incoming[v] * ppr.value(v, t);
    worst = std::max(worst, std::abs(ppr.value(s, t) - rhs));
  }
  return worst;
}

}  // namespace ppr
