#include <doctest.h>

#include "gfactor/graph.hpp"
#include "gfactor/graph_io.hpp"

using namespace gfactor;

namespace {

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_SUITE("graph-model") {
  TEST_CASE("degree counts loops twice and parallel edges separately") {
    MultiGraph loop(1);
    loop.add_edge(1, 1);
    CHECK(degree(loop, 1) == 2);

    const MultiGraph k4 = complete(4);
    for (int v = 1; v <= 4; ++v) CHECK(degree(k4, v) == 3);

    MultiGraph par(2);
    par.add_edge(1, 2);
    par.add_edge(1, 2);
    CHECK(degree(par, 1) == 2);
    CHECK_THROWS_AS(degree(par, 7), InputError);
  }

  TEST_CASE("partition statistics") {
    const MultiGraph k4 = complete(4);
    const PartitionStats s = partition_stats(k4, {1, 1, 0, 0}, {0, 0, 1, 1});
    CHECK(s.boundary == 4);
    CHECK(s.inside == 1);
    CHECK(s.cross == 4);

    const PartitionStats all = partition_stats(k4, {1, 1, 1, 1});
    CHECK(all.boundary == 0);
    CHECK(all.inside == 6);
    CHECK(all.cross == -1);

    MultiGraph loop(2);
    loop.add_edge(1, 1);
    loop.add_edge(1, 2);
    const PartitionStats l = partition_stats(loop, {1, 0});
    CHECK(l.boundary == 1);
    CHECK(l.inside == 1);

    CHECK_THROWS_AS(partition_stats(k4, {1, 1, 0, 0}, {1, 0, 1, 1}), InputError);
  }

  TEST_CASE("induced bipartite factor drops loops and intra edges") {
    MultiGraph g(4);
    g.add_edge(1, 3);
    g.add_edge(1, 2);
    g.add_edge(2, 4);
    g.add_edge(4, 4);
    const Bipartition p = Bipartition::from_mask(4, 0b0011);
    CHECK(induced_bipartite_factor(g, p) == Factor({0, 2}));
    CHECK(intra_edges(g, p) == 2);

    MultiGraph c4(4);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(4, 1);
    const Bipartition q = Bipartition::from_mask(4, 0b0101);
    CHECK(induced_bipartite_factor(c4, q) == c4.all_edges());
    CHECK(is_bipartite_with(c4, q));
  }

  TEST_CASE("factors keep edge ids under restriction") {
    MultiGraph g(3);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 1);
    const MultiGraph h = g.restrict(Factor({0, 2}));
    CHECK(h.num_vertices() == 3);
    CHECK(h.num_edges() == 2);
    CHECK(h.has_edge(2));
    CHECK_FALSE(h.has_edge(1));
    CHECK(factor_degrees(g, Factor({0, 2})) == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(validate(g, Factor({5})), InputError);
  }

  TEST_CASE("components and Eulerian test") {
    MultiGraph g(5);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    CHECK(count_components(g) == 3);
    CHECK_FALSE(is_connected(g));
    MultiGraph tri = complete(3);
    CHECK(is_eulerian(tri));
    tri.add_edge(1, 1);
    CHECK(is_eulerian(tri));
    CHECK_FALSE(is_eulerian(complete(4)));
  }

  TEST_CASE("factor set algebra") {
    const Factor a({1, 3, 5});
    const Factor b({3, 4});
    CHECK(factor_union(a, b) == Factor({1, 3, 4, 5}));
    CHECK(factor_difference(a, b) == Factor({1, 5}));
    CHECK(a.contains(5));
    CHECK_FALSE(a.contains(4));
  }

  TEST_CASE("invalid input is rejected") {
    MultiGraph g(2);
    CHECK_THROWS_AS(g.add_edge(1, 3), InputError);
    g.add_edge_with_id(7, 1, 2);
    CHECK_THROWS_AS(g.add_edge_with_id(7, 2, 1), InputError);
    CHECK_THROWS_AS(validate(g, VertexIntMap{1}, "f"), InputError);
    Bipartition bad;
    bad.in_x = {1};
    CHECK_THROWS_AS(validate(g, bad), InputError);
  }
}

TEST_SUITE("graph-io") {
  TEST_CASE("round trip through the text format") {
    const std::string text =
        "# doubled triangle with a loop\n"
        "p multigraph 3 5\n"
        "e 1 2\ne 2 3\ne 3 1\ne 1 2\ne 3 3\n"
        "f 1 1 2\nf 2 0 1\nf 3 2 2\n";
    const GraphFile file = parse_graph(text);
    CHECK(file.graph.num_vertices() == 3);
    CHECK(file.graph.num_edges() == 5);
    CHECK(degree(file.graph, 3) == 4);
    REQUIRE(file.lower);
    CHECK(*file.lower == VertexIntMap{1, 0, 2});
    CHECK(*file.upper == VertexIntMap{2, 1, 2});
    const std::string canonical = serialize_graph(file);
    CHECK(serialize_graph(parse_graph(canonical)) == canonical);
    CHECK(canonical.find("# ") == std::string::npos);
  }

  TEST_CASE("parse errors name the line") {
    auto message = [](const std::string& text) {
      try {
        parse_graph(text);
      } catch (const InputError& e) {
        return std::string(e.what());
      }
      return std::string("no error");
    };
    CHECK(message("e 1 2\n").find("line 1") != std::string::npos);
    CHECK(message("p multigraph 2 1\ne 1 3\n").find("line 2") != std::string::npos);
    CHECK(message("p multigraph 2 2\ne 1 2\n").find("line") != std::string::npos);
    CHECK(message("p multigraph 2 1\ne 1 2\nf 1 0 1\n").find("line") != std::string::npos);
    CHECK(message("p multigraph 2 0\np multigraph 2 0\n").find("line 2") != std::string::npos);
  }
}
