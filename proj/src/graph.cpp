#include "ppr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ppr/rng.hpp"

namespace ppr {

namespace {

struct ParsedLine {
  std::uint64_t u, v;
  double w;
};

bool parse_line(const std::string& line, ParsedLine& out) {
  // returns false for blank/comment lines, throws on malformed content
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i == line.size() || line[i] == '#') return false;
  std::istringstream ss(line);
  std::string a, b, c, extra;
  if (!(ss >> a >> b >> c)) throw std::runtime_error("expected 'u v w'");
  if (ss >> extra) throw std::runtime_error("trailing tokens");
  auto parse_u64 = [](const std::string& tok) {
    std::uint64_t val = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw std::runtime_error("bad node id '" + tok + "'");
    return val;
  };
  out.u = parse_u64(a);
  out.v = parse_u64(b);
  char* end = nullptr;
  out.w = std::strtod(c.c_str(), &end);
  if (end != c.c_str() + c.size() || !std::isfinite(out.w))
    throw std::runtime_error("bad weight '" + c + "'");
  return true;
}

}  // namespace

WeightedGraph WeightedGraph::load_edge_list(const std::string& path, LoadOptions opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  std::vector<InputEdge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    ParsedLine p;
    bool has;
    try {
      has = parse_line(line, p);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!has) continue;
    if (p.w < 0.0)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": negative weight");
    edges.push_back({p.u, p.v, p.w});
  }
  return from_edges(edges, opt);
}

WeightedGraph WeightedGraph::from_edges(const std::vector<InputEdge>& edges, LoadOptions opt) {
  // Dense remap in ascending label order; every label mentioned in the input
  // becomes a node even if all its edges are dropped.
  std::vector<std::uint64_t> labels;
  labels.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    if (e.w < 0.0) throw std::runtime_error("negative weight");
    labels.push_back(e.u);
    labels.push_back(e.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw std::runtime_error("empty graph");
  std::unordered_map<std::uint64_t, NodeId> remap;
  remap.reserve(labels.size());
  for (NodeId i = 0; i < labels.size(); ++i) remap[labels[i]] = i;

  struct UEdge {
    NodeId a, b;
    double w;
  };
  std::vector<UEdge> merged;
  merged.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v) continue;  // self-loop
    if (e.w == 0.0) {
      if (!opt.drop_zero) throw std::runtime_error("zero-weight edge with drop_zero=false");
      continue;
    }
    NodeId a = remap[e.u], b = remap[e.v];
    if (a > b) std::swap(a, b);
    merged.push_back({a, b, e.w});
  }
  // Stable sort keeps input order within each undirected edge so duplicate
  // merging accumulates in encounter order (deterministic CSR bytes).
  std::stable_sort(merged.begin(), merged.end(),
                   [](const UEdge& x, const UEdge& y) {
                     return x.a != y.a ? x.a < y.a : x.b < y.b;
                   });
  std::vector<UEdge> unique_edges;
  unique_edges.reserve(merged.size());
  for (const auto& e : merged) {
    if (!unique_edges.empty() && unique_edges.back().a == e.a && unique_edges.back().b == e.b) {
      if (!opt.dedup) throw std::runtime_error("duplicate edge with dedup=false");
      unique_edges.back().w += e.w;
    } else {
      unique_edges.push_back(e);
    }
  }
  if (unique_edges.empty()) throw std::runtime_error("empty graph");

  WeightedGraph g;
  g.n_ = labels.size();
  g.m_ = unique_edges.size();
  g.labels_ = std::move(labels);
  g.offsets_.assign(g.n_ + 1, 0);
  for (const auto& e : unique_edges) {
    ++g.offsets_[e.a + 1];
    ++g.offsets_[e.b + 1];
  }
  for (std::size_t i = 0; i < g.n_; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.resize(2 * g.m_);
  g.weights_.resize(2 * g.m_);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : unique_edges) {
    g.neighbors_[cursor[e.a]] = e.b;
    g.weights_[cursor[e.a]++] = e.w;
    g.neighbors_[cursor[e.b]] = e.a;
    g.weights_[cursor[e.b]++] = e.w;
  }
  g.finalize_rows_and_aggregates();
  return g;
}

WeightedGraph WeightedGraph::from_csr(std::vector<std::uint64_t> offsets,
                                      std::vector<NodeId> neighbors,
                                      std::vector<double> weights) {
  if (offsets.empty() || neighbors.size() != weights.size() ||
      offsets.back() != neighbors.size() || neighbors.size() % 2 != 0)
    throw std::invalid_argument("inconsistent CSR arrays");
  WeightedGraph g;
  g.n_ = offsets.size() - 1;
  g.m_ = neighbors.size() / 2;
  if (g.m_ == 0) throw std::runtime_error("empty graph");
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  g.weights_ = std::move(weights);
  g.labels_.resize(g.n_);
  std::iota(g.labels_.begin(), g.labels_.end(), 0);
  g.finalize_rows_and_aggregates();
  return g;
}

void WeightedGraph::finalize_rows_and_aggregates() {
  std::vector<std::pair<double, NodeId>> row;
  for (std::size_t u = 0; u < n_; ++u) {
    const std::size_t lo = offsets_[u], hi = offsets_[u + 1];
    row.clear();
    row.reserve(hi - lo);
    for (std::size_t e = lo; e < hi; ++e) {
      if (weights_[e] <= 0.0) throw std::runtime_error("nonpositive weight in CSR row");
      row.emplace_back(weights_[e], neighbors_[e]);
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
      return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      if (row[i].second == row[i + 1].second)
        throw std::runtime_error("duplicate neighbor in CSR row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      weights_[lo + i] = row[i].first;
      neighbors_[lo + i] = row[i].second;
    }
  }
  degrees_.assign(n_, 0.0);
  node_sqrt_sum_.assign(n_, 0.0);
  total_weight_ = 0.0;
  sqrt_weight_sum_ = 0.0;
  for (std::size_t u = 0; u < n_; ++u) {
    double d = 0.0, sq = 0.0;
    for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
      d += weights_[e];
      sq += std::sqrt(weights_[e]);
    }
    degrees_[u] = d;
    node_sqrt_sum_[u] = sq;
    total_weight_ += d;
    sqrt_weight_sum_ += sq;
  }
}

double WeightedGraph::degree(NodeId u) const {
  if (u >= n_) throw std::out_of_range("node id out of range");
  return degrees_[u];
}

std::size_t WeightedGraph::neighbor_count(NodeId u) const {
  if (u >= n_) throw std::out_of_range("node id out of range");
  return offsets_[u + 1] - offsets_[u];
}

void WeightedGraph::save_canonical(const std::string& path) const {
  struct UEdge {
    NodeId a, b;
    double w;
  };
  std::vector<UEdge> edges;
  edges.reserve(m_);
  for (NodeId u = 0; u < n_; ++u)
    for (std::size_t e = offsets_[u]; e < offsets_[u + 1]; ++e)
      if (u < neighbors_[e]) edges.push_back({u, neighbors_[e], weights_[e]});
  std::sort(edges.begin(), edges.end(), [](const UEdge& x, const UEdge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  char buf[64];
  for (const auto& e : edges) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.w);
    out << labels_[e.a] << ' ' << labels_[e.b] << ' ' << buf << '\n';
  }
}

std::vector<NodeId> WeightedGraph::sample_sources(const SourceDistribution& dist,
                                                  std::size_t count) const {
  if (count == 0) throw std::invalid_argument("count must be positive");
  std::vector<NodeId> support;
  support.reserve(n_);
  for (NodeId u = 0; u < n_; ++u)
    if (degrees_[u] > 0.0) support.push_back(u);
  if (support.empty()) throw std::runtime_error("no node with positive degree");

  Rng rng(dist.seed);
  std::vector<NodeId> out;
  out.reserve(count);
  if (dist.mode == SourceMode::uniform) {
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(support[rng.next_below(support.size())]);
    return out;
  }
  std::vector<double> cum(support.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    acc += degrees_[support[i]];
    cum[i] = acc;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const double x = rng.next_double() * acc;
    auto it = std::upper_bound(cum.begin(), cum.end(), x);
    if (it == cum.end()) --it;
    out.push_back(support[it - cum.begin()]);
  }
  return out;
}

}  // namespace ppr
