#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ppr {

using NodeId = std::uint32_t;
using EdgeIndex = std::uint64_t;

struct LoadOptions {
  bool dedup = true;      // merge duplicate undirected edges by summing weights
  bool drop_zero = true;  // silently drop zero-weight edges (error otherwise)
};

struct InputEdge {
  std::uint64_t u;
  std::uint64_t v;
  double w;
};

enum class SourceMode { uniform, degree_proportional };

struct SourceDistribution {
  SourceMode mode = SourceMode::degree_proportional;
  std::uint64_t seed = 0;
};

// Immutable undirected weighted graph in CSR form over the bidirectional
// edge set: every undirected edge {u,v} appears as two directed entries
// <u,v> and <v,u> with the same weight. Each adjacency row is sorted by
// descending weight, ties by ascending node id. Safe to share across
// threads once built.
class WeightedGraph {
 public:
  // Parses whitespace-separated "u v w" lines; '#' lines are comments.
  // Original labels are arbitrary non-negative integers, remapped densely in
  // ascending label order. Self-loops are always dropped. Nodes seen only in
  // dropped edges are kept as isolated (degree zero) nodes.
  static WeightedGraph load_edge_list(const std::string& path, LoadOptions opt = {});
  static WeightedGraph from_edges(const std::vector<InputEdge>& edges, LoadOptions opt = {});

  // Builds directly from prevalidated CSR arrays (generator fast path).
  // Rows are sorted and aggregates computed here; symmetry is the caller's
  // responsibility.
  static WeightedGraph from_csr(std::vector<std::uint64_t> offsets,
                                std::vector<NodeId> neighbors,
                                std::vector<double> weights);

  // Canonical edge list: undirected edges sorted by (min id, max id), one
  // "label label weight" line each, weights printed with round-trip
  // precision. Reloading reproduces the CSR bit for bit (isolated nodes are
  // not representable and are omitted).
  void save_canonical(const std::string& path) const;

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return m_; }                // undirected
  std::size_t directed_edge_count() const { return 2 * m_; }   // |Ē|

  double degree(NodeId u) const;                  // weighted degree d(u)
  std::size_t neighbor_count(NodeId u) const;     // n(u)

  std::span<const NodeId> neighbors_of(NodeId u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::span<const double> weights_of(NodeId u) const {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }

  EdgeIndex row_begin(NodeId u) const { return offsets_[u]; }
  EdgeIndex row_end(NodeId u) const { return offsets_[u + 1]; }
  NodeId edge_target(EdgeIndex e) const { return neighbors_[e]; }
  double edge_weight(EdgeIndex e) const { return weights_[e]; }

  double total_weight() const { return total_weight_; }        // ‖A‖₁
  double sqrt_weight_sum() const { return sqrt_weight_sum_; }  // Σ_Ē √A_uv
  double node_sqrt_sum(NodeId v) const { return node_sqrt_sum_[v]; }
  const std::vector<double>& degrees() const { return degrees_; }

  std::uint64_t original_label(NodeId u) const { return labels_[u]; }

  // Reproducible source sampling; degree-proportional draws node u with
  // probability d(u)/‖A‖₁. Isolated nodes are never sampled.
  std::vector<NodeId> sample_sources(const SourceDistribution& dist, std::size_t count) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
  std::vector<double> degrees_;
  std::vector<double> node_sqrt_sum_;
  std::vector<std::uint64_t> labels_;
  double total_weight_ = 0.0;
  double sqrt_weight_sum_ = 0.0;

  void finalize_rows_and_aggregates();
};

}  // namespace ppr
