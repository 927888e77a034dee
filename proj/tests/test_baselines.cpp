#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ppr/baselines.hpp"
#include "ppr/exact.hpp"

using namespace ppr;
using ppr::testing::l1_distance;
using ppr::testing::make_graph;
using ppr::testing::random_graph;
using ppr::testing::two_node_graph;

TEST_SUITE_BEGIN("baselines");

TEST_CASE("power method first iterates and convergence") {
  WeightedGraph g = two_node_graph();
  PprVector l1 = power_method(g, 0, 0.2, 1);
  CHECK(l1.values[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(l1.values[1] == 0.0);

  PprVector l2 = power_method(g, 0, 0.2, 2);
  CHECK(l2.values[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(l2.values[1] == doctest::Approx(0.16).epsilon(1e-15));

  PprVector pi = exact_ppr(g, 0, 0.2);
  CHECK(l1_distance(power_method(g, 0, 0.2, 100).values, pi.values) < 1e-9);
}

TEST_CASE("power method mass and monotonicity") {
  Rng rng(51);
  for (int rep = 0; rep < 5; ++rep) {
    WeightedGraph g = random_graph(rng, 3, 25);
    PprVector pi = exact_ppr(g, 0, 0.2);
    std::vector<double> prev(g.node_count(), 0.0);
    for (int L = 1; L <= 20; ++L) {
      PprVector it = power_method(g, 0, 0.2, L);
      double mass = 0.0;
      for (NodeId u = 0; u < g.node_count(); ++u) {
        CHECK(it.values[u] >= prev[u] - 1e-15);  // entrywise non-decreasing
        mass += it.values[u];
      }
      CHECK(mass == doctest::Approx(1.0 - std::pow(0.8, L)).epsilon(1e-12));
      CHECK(l1_distance(it.values, pi.values) <= std::pow(0.8, L) + 1e-9);
      prev = it.values;
    }
  }
}

TEST_CASE("monte carlo: one walk gives an indicator") {
  WeightedGraph g = two_node_graph();
  PprVector est = monte_carlo(g, 0, 0.2, {1, 9});
  CHECK(est.values[0] + est.values[1] == doctest::Approx(1.0));
  CHECK((est.values[0] == 1.0 || est.values[1] == 1.0));
}

TEST_CASE("monte carlo concentration on the two-node graph") {
  WeightedGraph g = two_node_graph();
  PprVector est = monte_carlo(g, 0, 0.2, {100000, 42});
  // 3σ of Bernoulli(5/9) over 1e5 walks
  CHECK(std::abs(est.values[0] - 5.0 / 9.0) < 0.0075);
  double sum = 0.0;
  for (double x : est.values) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weighted transition frequencies") {
  // node 0 with neighbor weights {9,1}: heavy neighbor frequency 0.9
  WeightedGraph g = make_graph({{0, 1, 9.0}, {0, 2, 1.0}});
  NeighborSampler sampler(g);
  Rng rng(7);
  std::size_t heavy = 0;
  const std::size_t steps = 100000;
  for (std::size_t i = 0; i < steps; ++i) heavy += sampler.step(0, rng) == 1;
  CHECK(std::abs(static_cast<double>(heavy) / steps - 0.9) < 0.005);
}

TEST_CASE("monte carlo runs with different seeds agree") {
  Rng rng(52);
  WeightedGraph g = random_graph(rng, 4, 8, 2.0);
  const std::uint64_t w = 1000000;
  PprVector a = monte_carlo(g, 0, 0.2, {w, 1});
  PprVector b = monte_carlo(g, 0, 0.2, {w, 2});
  for (NodeId u = 0; u < g.node_count(); ++u)
    CHECK(std::abs(a.values[u] - b.values[u]) <= 4.0 / std::sqrt(double(w)));
}

TEST_CASE("monte carlo determinism") {
  WeightedGraph g = two_node_graph();
  PprVector a = monte_carlo(g, 0, 0.2, {5000, 11});
  PprVector b = monte_carlo(g, 0, 0.2, {5000, 11});
  CHECK(a.values == b.values);
}

TEST_CASE("fora with no pushes degenerates to plain sampling") {
  WeightedGraph g = two_node_graph();
  // θ = 2 > r(s)/d(s): no push fires, every walk starts at s with mass 1/W
  PprVector fora = fora_hybrid(g, 0, 0.2, 2.0, {20000, 5});
  PprVector mc = monte_carlo(g, 0, 0.2, {20000, 5});
  for (NodeId u = 0; u < g.node_count(); ++u)
    CHECK(fora.values[u] == doctest::Approx(mc.values[u]).epsilon(1e-12));
}

TEST_CASE("fora mass conservation and accuracy") {
  Rng rng(53);
  for (int rep = 0; rep < 5; ++rep) {
    WeightedGraph g = random_graph(rng, 4, 16);
    PprVector est = fora_hybrid(g, 0, 0.2, 0.05, {100000, 77});
    double sum = 0.0;
    for (double x : est.values) sum += x;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    PprVector pi = exact_ppr(g, 0, 0.2);
    for (NodeId u = 0; u < g.node_count(); ++u)
      CHECK(std::abs(est.values[u] - pi.values[u]) < 0.02);
  }
}

TEST_CASE("walk budget sizing") {
  // (2·0.5/3 + 2)·ln(2n)/(0.25·δ)
  const double delta = 0.01, eps_r = 0.5, p_f = 1.0 / 1000.0;
  const double expect =
      (2.0 * eps_r / 3.0 + 2.0) * std::log(2.0 / p_f) / (eps_r * eps_r * delta);
  CHECK(static_cast<double>(walks_for_relative_error(delta, eps_r, p_f)) ==
        doctest::Approx(std::ceil(expect)));
  CHECK_THROWS(walks_for_relative_error(0.0, 0.5, 0.01));
}

TEST_CASE("validation") {
  WeightedGraph g = two_node_graph();
  CHECK_THROWS(monte_carlo(g, 0, 0.2, {0, 1}));
  CHECK_THROWS(fora_hybrid(g, 0, 0.2, 0.1, {0, 1}));
  CHECK_THROWS(monte_carlo(g, 0, 1.2, {10, 1}));
  CHECK_THROWS(power_method(g, 0, 0.2, 0));
}

TEST_SUITE_END();
