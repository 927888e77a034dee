#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"
#include "ppr/graph.hpp"
#include "ppr/mass_map.hpp"

using namespace ppr;
using ppr::testing::make_graph;
using ppr::testing::random_graph;

TEST_SUITE_BEGIN("graph");

TEST_CASE("single edge aggregates") {
  WeightedGraph g = make_graph({{0, 1, 1.0}});
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.total_weight() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.degree(0) == doctest::Approx(1.0));
  CHECK(g.degree(1) == doctest::Approx(1.0));
}

TEST_CASE("two-edge aggregates") {
  // d(1) = 10, sqrt sum over directed edges = 2*(3+1) = 8
  WeightedGraph g = make_graph({{0, 1, 9.0}, {1, 2, 1.0}});
  CHECK(g.degree(1) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(g.sqrt_weight_sum() == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(g.node_sqrt_sum(1) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("duplicate edges merge by weight sum") {
  WeightedGraph g = make_graph({{0, 1, 2.0}, {1, 0, 3.0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.weights_of(0)[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(g.total_weight() == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("duplicate edges rejected when dedup off") {
  LoadOptions opt;
  opt.dedup = false;
  CHECK_THROWS(WeightedGraph::from_edges({{0, 1, 2.0}, {1, 0, 3.0}}, opt));
}

TEST_CASE("self loops dropped, zero weights dropped or rejected") {
  WeightedGraph g = make_graph({{0, 0, 5.0}, {0, 1, 1.0}, {1, 2, 0.0}});
  CHECK(g.node_count() == 3);  // node 2 kept as isolated
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(2) == 0.0);

  LoadOptions opt;
  opt.drop_zero = false;
  CHECK_THROWS(WeightedGraph::from_edges({{0, 1, 0.0}, {1, 2, 1.0}}, opt));
}

TEST_CASE("empty graph rejected") {
  CHECK_THROWS(WeightedGraph::from_edges({}));
  CHECK_THROWS(WeightedGraph::from_edges({{3, 3, 1.0}}));  // only a self-loop
}

TEST_CASE("adjacency sorted by descending weight") {
  WeightedGraph g = make_graph({{1, 0, 3.0}, {1, 2, 1.0}});
  auto nbrs = g.neighbors_of(1);
  auto ws = g.weights_of(1);
  REQUIRE(nbrs.size() == 2);
  CHECK(nbrs[0] == 0);
  CHECK(ws[0] == doctest::Approx(3.0));
  CHECK(nbrs[1] == 2);
  CHECK(ws[1] == doctest::Approx(1.0));

  // star with one heavy edge: heavy neighbor first
  WeightedGraph star = make_graph({{0, 1, 0.9}, {0, 2, 0.05}, {0, 3, 0.05}});
  CHECK(star.neighbors_of(0)[0] == 1);
  CHECK(star.neighbors_of(0)[1] == 2);  // tie broken by ascending id
  CHECK(star.neighbors_of(0)[2] == 3);
}

TEST_CASE("degree out of range throws") {
  WeightedGraph g = ppr::testing::two_node_graph();
  CHECK_THROWS(g.degree(2));
  CHECK_THROWS(g.neighbor_count(7));
}

TEST_CASE("edge list parsing with comments and errors") {
  auto write_file = [](const char* path, const char* text) {
    std::ofstream out(path);
    out << text;
  };
  write_file("parse_ok.txt", "# comment\n0 1 1.5\n\n 2 0 2.5\n");
  WeightedGraph g = WeightedGraph::load_edge_list("parse_ok.txt");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);

  write_file("parse_bad.txt", "0 1 1.0\n0 x 2.0\n");
  try {
    WeightedGraph::load_edge_list("parse_bad.txt");
    FAIL("expected malformed-line error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }

  write_file("parse_neg.txt", "0 1 -1.0\n");
  CHECK_THROWS(WeightedGraph::load_edge_list("parse_neg.txt"));
  std::remove("parse_ok.txt");
  std::remove("parse_bad.txt");
  std::remove("parse_neg.txt");
}

TEST_CASE("labels remapped densely and kept") {
  WeightedGraph g = make_graph({{100, 7, 1.0}, {7, 55, 2.0}});
  CHECK(g.node_count() == 3);
  CHECK(g.original_label(0) == 7);
  CHECK(g.original_label(1) == 55);
  CHECK(g.original_label(2) == 100);
}

TEST_CASE("canonical round trip reproduces CSR bit for bit") {
  Rng rng(12345);
  for (int rep = 0; rep < 20; ++rep) {
    WeightedGraph g = random_graph(rng, 2, 40);
    g.save_canonical("roundtrip.txt");
    WeightedGraph h = WeightedGraph::load_edge_list("roundtrip.txt");
    REQUIRE(h.node_count() == g.node_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto gn = g.neighbors_of(u), hn = h.neighbors_of(u);
      auto gw = g.weights_of(u), hw = h.weights_of(u);
      REQUIRE(gn.size() == hn.size());
      for (std::size_t i = 0; i < gn.size(); ++i) {
        CHECK(gn[i] == hn[i]);
        CHECK(gw[i] == hw[i]);  // bit-equal
      }
    }
  }
  std::remove("roundtrip.txt");
}

TEST_CASE("aggregate invariants on random graphs") {
  Rng rng(999);
  for (int rep = 0; rep < 20; ++rep) {
    WeightedGraph g = random_graph(rng, 2, 60);
    double total = 0.0;
    std::size_t directed = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto ws = g.weights_of(u);
      double d = 0.0;
      for (double w : ws) d += w;
      CHECK(d == doctest::Approx(g.degree(u)).epsilon(1e-12));
      total += d;
      directed += ws.size();
    }
    CHECK(total == doctest::Approx(g.total_weight()).epsilon(1e-12));
    CHECK(directed == g.directed_edge_count());
  }
}

TEST_CASE("source sampling frequencies and determinism") {
  SourceDistribution dist;
  dist.seed = 7;

  WeightedGraph pair = ppr::testing::two_node_graph();
  auto samples = pair.sample_sources(dist, 1000000);
  std::size_t zero = 0;
  for (NodeId s : samples) zero += s == 0;
  CHECK(std::abs(static_cast<double>(zero) / 1e6 - 0.5) < 0.01);

  // path a-b(3), b-c(1): P(b) = d(b)/‖A‖₁ = 4/8
  WeightedGraph path = make_graph({{0, 1, 3.0}, {1, 2, 1.0}});
  auto s2 = path.sample_sources(dist, 1000000);
  std::size_t mid = 0;
  for (NodeId s : s2) mid += s == 1;
  CHECK(std::abs(static_cast<double>(mid) / 1e6 - 0.5) < 0.01);

  auto a = path.sample_sources(dist, 1000);
  auto b = path.sample_sources(dist, 1000);
  CHECK(a == b);

  CHECK_THROWS(path.sample_sources(dist, 0));
}

TEST_CASE("isolated nodes excluded from sampling") {
  WeightedGraph g = make_graph({{0, 1, 1.0}, {2, 3, 0.0}});
  SourceDistribution dist;
  dist.seed = 3;
  for (NodeId s : g.sample_sources(dist, 1000)) CHECK(s <= 1);
}

TEST_CASE("mass map stays sparse then falls back to dense") {
  ppr::NodeMassMap m(100);
  for (NodeId u = 0; u < 20; ++u) m.add(u, 0.5);
  CHECK(!m.is_dense());
  CHECK(m.touched() == 20);
  CHECK(m.get(5) == 0.5);
  CHECK(m.get(99) == 0.0);
  for (NodeId u = 20; u < 40; ++u) m.add(u, 1.0);
  CHECK(m.is_dense());  // > 1/4 of the domain touched
  CHECK(m.get(5) == 0.5);
  CHECK(m.get(25) == 1.0);
  m.set(5, 0.0);
  CHECK(m.sum() == doctest::Approx(9.5 + 20.0));
  auto dense = m.to_dense();
  CHECK(dense.size() == 100);
  CHECK(dense[25] == 1.0);
  CHECK(dense[5] == 0.0);
}

TEST_SUITE_END();
