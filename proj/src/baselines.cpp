#include "ppr/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ppr/local_push.hpp"
#include "ppr/rng.hpp"

namespace ppr {

namespace {

// Vose alias table over one adjacency row.
struct AliasTable {
  std::vector<double> prob;
  std::vector<std::uint32_t> alias;

  explicit AliasTable(std::span<const double> w, double total) {
    const std::size_t k = w.size();
    prob.resize(k);
    alias.resize(k);
    std::vector<double> scaled(k);
    for (std::size_t i = 0; i < k; ++i) scaled[i] = w[i] * k / total;
    std::vector<std::uint32_t> small, large;
    for (std::size_t i = 0; i < k; ++i)
      (scaled[i] < 1.0 ? small : large).push_back(i);
    while (!small.empty() && !large.empty()) {
      const std::uint32_t s = small.back(); small.pop_back();
      const std::uint32_t l = large.back(); large.pop_back();
      prob[s] = scaled[s];
      alias[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      (scaled[l] < 1.0 ? small : large).push_back(l);
    }
    while (!large.empty()) { prob[large.back()] = 1.0; alias[large.back()] = large.back(); large.pop_back(); }
    while (!small.empty()) { prob[small.back()] = 1.0; alias[small.back()] = small.back(); small.pop_back(); }
  }

  std::size_t sample(Rng& rng) const {
    const std::size_t i = rng.next_below(prob.size());
    return rng.next_double() < prob[i] ? i : alias[i];
  }
};

}  // namespace

struct NeighborSampler::Impl {
  const WeightedGraph& g;
  std::unordered_map<NodeId, AliasTable> tables;  // built lazily
  explicit Impl(const WeightedGraph& graph) : g(graph) {}
};

NeighborSampler::NeighborSampler(const WeightedGraph& g)
    : impl_(std::make_unique<Impl>(g)) {}
NeighborSampler::~NeighborSampler() = default;
NeighborSampler::NeighborSampler(NeighborSampler&&) noexcept = default;

NodeId NeighborSampler::step(NodeId u, Rng& rng) {
  auto it = impl_->tables.find(u);
  if (it == impl_->tables.end())
    it = impl_->tables
             .emplace(u, AliasTable(impl_->g.weights_of(u), impl_->g.degree(u)))
             .first;
  return impl_->g.neighbors_of(u)[it->second.sample(rng)];
}

NodeId NeighborSampler::walk(NodeId u, double alpha, Rng& rng) {
  NodeId cur = u;
  while (rng.next_double() >= alpha) {
    if (impl_->g.degree(cur) == 0.0) continue;  // self-absorbing
    cur = step(cur, rng);
  }
  return cur;
}

PprVector power_method(const WeightedGraph& g, NodeId s, double alpha,
                       int iterations) {
  return ground_truth(g, s, alpha, iterations);
}

PprVector monte_carlo(const WeightedGraph& g, NodeId s, double alpha,
                      const WalkBudget& budget) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  if (s >= g.node_count()) throw std::out_of_range("source out of range");
  if (budget.total_walks < 1) throw std::invalid_argument("need at least one walk");

  NeighborSampler sampler(g);
  std::vector<std::uint64_t> hits(g.node_count(), 0);
  for (std::uint64_t i = 0; i < budget.total_walks; ++i) {
    Rng rng = Rng::substream(budget.rng_seed, i);
    ++hits[sampler.walk(s, alpha, rng)];
  }
  PprVector out;
  out.source = s;
  out.alpha = alpha;
  out.values.resize(g.node_count());
  const double inv = 1.0 / static_cast<double>(budget.total_walks);
  for (std::size_t u = 0; u < hits.size(); ++u)
    out.values[u] = static_cast<double>(hits[u]) * inv;
  return out;
}

PprVector fora_hybrid(const WeightedGraph& g, NodeId s, double alpha,
                      double push_theta, const WalkBudget& budget) {
  if (budget.total_walks < 1) throw std::invalid_argument("need at least one walk");
  LocalPushResult pushed = local_push(g, s, alpha, push_theta);

  PprVector out;
  out.source = s;
  out.alpha = alpha;
  out.values = pushed.estimate.to_dense();
  if (pushed.estimate.isolated_source) return out;

  NeighborSampler sampler(g);
  const double w_total = static_cast<double>(budget.total_walks);
  std::uint64_t walk_index = 0;
  for (const auto& [u, r] : pushed.final_residue) {
    if (r <= 0.0) continue;
    const auto count = static_cast<std::uint64_t>(std::ceil(r * w_total));
    const double mass = r / static_cast<double>(count);
    for (std::uint64_t j = 0; j < count; ++j) {
      Rng rng = Rng::substream(budget.rng_seed, walk_index++);
      out.values[sampler.walk(u, alpha, rng)] += mass;
    }
  }
  return out;
}

std::uint64_t walks_for_relative_error(double delta, double eps_r, double p_f) {
  if (!(delta > 0.0) || !(eps_r > 0.0) || !(p_f > 0.0 && p_f < 1.0))
    throw std::invalid_argument("bad walk budget parameters");
  const double w =
      (2.0 * eps_r / 3.0 + 2.0) * std::log(2.0 / p_f) / (eps_r * eps_r * delta);
  return static_cast<std::uint64_t>(std::ceil(w));
}

}  // namespace ppr
