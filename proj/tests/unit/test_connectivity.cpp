#include <doctest.h>

#include <random>

#include "gfactor/connectivity.hpp"
#include "oracle.hpp"

using namespace gfactor;

namespace {

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

MultiGraph cycle(int n) {
  MultiGraph g(n);
  for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

MultiGraph random_graph(std::mt19937_64& rng, int n, int m) {
  MultiGraph g(n);
  std::uniform_int_distribution<int> pick(1, n);
  for (int e = 0; e < m; ++e) g.add_edge(pick(rng), pick(rng));
  return g;
}

}  // namespace

TEST_SUITE("connectivity") {
  TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(complete(4)) == 3);
    CHECK(edge_connectivity(cycle(5)) == 2);
    MultiGraph two(2);
    CHECK(edge_connectivity(two) == 0);
    for (int i = 0; i < 3; ++i) two.add_edge(1, 2);
    two.add_edge(1, 1);
    CHECK(edge_connectivity(two) == 3);
    CHECK(edge_connectivity(MultiGraph(1)) == kInfiniteConnectivity);
  }

  TEST_CASE("tree packing of K4 and a refusal certificate") {
    const MultiGraph k4 = complete(4);
    PackingResult two = spanning_tree_packing(k4, 2);
    REQUIRE(two.ok());
    CHECK(oracle::packing_ok(k4, two.packing->trees, 2));

    PackingResult three = spanning_tree_packing(k4, 3);
    CHECK_FALSE(three.ok());
    REQUIRE(three.refusal);
    CHECK(three.refusal->cross_edges < three.refusal->required);
    CHECK(tree_packing_number(k4) == 2);
  }

  TEST_CASE("packing number agrees with the partition bound on random multigraphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 5;
      const MultiGraph g = random_graph(rng, n, 3 * n);
      const int k = tree_packing_number(g);
      PackingResult ok = spanning_tree_packing(g, k);
      REQUIRE(ok.ok());
      CHECK(oracle::packing_ok(g, ok.packing->trees, k));
      CHECK(is_valid_tree_packing(g, *ok.packing, k));
      PackingResult over = spanning_tree_packing(g, k + 1);
      REQUIRE(over.refusal);
      // The refusal partition really has too few crossing edges.
      std::vector<int> part_of(n, -1);
      for (std::size_t p = 0; p < over.refusal->parts.size(); ++p) {
        for (int v : over.refusal->parts[p]) part_of[v] = static_cast<int>(p);
      }
      int crossing = 0;
      for (const Edge& e : g.edges()) crossing += part_of[e.u] != part_of[e.v];
      CHECK(crossing == over.refusal->cross_edges);
      CHECK(crossing < (k + 1) * (static_cast<int>(over.refusal->parts.size()) - 1));
    }
  }

  TEST_CASE("bipartite index") {
    CHECK(bipartite_index(complete(4)).value == 2);
    CHECK(bipartite_index(cycle(5)).value == 1);
    CHECK(bipartite_index(cycle(6)).value == 0);
    MultiGraph loop(1);
    loop.add_edge(1, 1);
    loop.add_edge(1, 1);
    CHECK(bipartite_index(loop).value == 2);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
      const MultiGraph g = random_graph(rng, 1 + trial % 8, trial % 14);
      const BipartiteIndex bi = bipartite_index(g);
      CHECK(bi.exact);
      CHECK(bi.value == oracle::bipartite_index(g));
      CHECK(intra_edges(g, bi.witness) == bi.value);
      const BipartiteIndex b = bipartite_index_bounds(g, trial);
      CHECK(b.lower <= bi.value);
      CHECK(b.value >= bi.value);
    }
  }

  TEST_CASE("odd cycle packing lower bound") {
    // K_{3,3} doubled plus two edges inside X.
    MultiGraph g(6);
    for (int rep = 0; rep < 2; ++rep) {
      for (int x = 1; x <= 3; ++x) {
        for (int y = 4; y <= 6; ++y) g.add_edge(x, y);
      }
    }
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    const Bipartition p = Bipartition::from_mask(6, 0b000111);
    const OddCyclePacking c = odd_cycle_packing_bound(g, p, 2);
    REQUIRE(c.holds);
    CHECK(c.cycles.size() == 2);
    CHECK(bipartite_index(g).value >= 2);
    CHECK_FALSE(odd_cycle_packing_bound(g, p, 3).holds);
  }

  TEST_CASE("spanning Eulerian subgraph from two trees") {
    MultiGraph g = complete(5);
    EulerianSubgraphResult r = spanning_eulerian_subgraph(g);
    REQUIRE(r.factor);
    const MultiGraph h = g.restrict(*r.factor);
    CHECK(is_eulerian(h));
    CHECK(is_connected(h));
    CHECK_FALSE(spanning_eulerian_subgraph(cycle(5)).factor);
  }

  TEST_CASE("toughness") {
    const Toughness c5 = toughness(cycle(5));
    CHECK_FALSE(c5.infinite);
    CHECK(c5.value == Rational(1));
    MultiGraph star(4);
    for (int v = 2; v <= 4; ++v) star.add_edge(1, v);
    CHECK(toughness(star).value == Rational(1, 3));
    CHECK(toughness(complete(4)).infinite);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const MultiGraph g = random_graph(rng, 3 + trial % 6, 4 + trial % 9);
      const Toughness t = toughness(g);
      const auto expect = oracle::toughness(g);
      CHECK(t.infinite == !expect.has_value());
      if (expect) CHECK(t.value == Rational(expect->first, expect->second));
    }
    CHECK_THROWS_AS(toughness(complete(17)), CapExceeded);
  }

  TEST_CASE("rational ordering") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(4, 2).to_string() == "2");
  }
}
