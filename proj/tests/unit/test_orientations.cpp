#include <doctest.h>

#include <random>

#include "gfactor/orientations.hpp"
#include "oracle.hpp"

using namespace gfactor;

namespace {

MultiGraph random_graph(std::mt19937_64& rng, int n, int m) {
  MultiGraph g(n);
  std::uniform_int_distribution<int> pick(1, n);
  for (int e = 0; e < m; ++e) g.add_edge(pick(rng), pick(rng));
  return g;
}

bool two_point_out(const std::vector<int>& out, const VertexIntMap& p, const VertexIntMap& q) {
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] != p[v] && out[v] != q[v]) return false;
  }
  return true;
}

// Brute force over all orientations with a per-vertex acceptance test.
bool exists_orientation(const MultiGraph& g,
                        const std::function<bool(const std::vector<int>&)>& ok) {
  const int n = g.num_vertices();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
    std::vector<int> out(n, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
      ++out[(mask >> e & 1U) ? g.edges()[e].v : g.edges()[e].u];
    }
    if (ok(out)) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("orientations") {
  TEST_CASE("loops add one to the out-degree") {
    MultiGraph g(2);
    g.add_edge(1, 1);
    g.add_edge(1, 2);
    Orientation o = Orientation::as_stored(g);
    CHECK(out_degrees(g, o) == std::vector<int>{2, 0});
    o.reversed[1] = 1;
    CHECK(out_degrees(g, o) == std::vector<int>{1, 1});
    CHECK(o.tail(g, 1) == 1);
    CHECK(o.head(g, 1) == 0);
  }

  TEST_CASE("Eulerian orientation balances every vertex") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
      MultiGraph g = random_graph(rng, 2 + trial % 6, 2 + trial % 9);
      std::vector<int> odd;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree_at(v) % 2) odd.push_back(g.vertex_id(v));
      }
      for (std::size_t i = 0; i + 1 < odd.size(); i += 2) g.add_edge(odd[i], odd[i + 1]);
      const auto out = out_degrees(g, eulerian_orientation(g));
      for (int v = 0; v < g.num_vertices(); ++v) CHECK(2 * out[v] == g.degree_at(v));
    }
    MultiGraph path(2);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(eulerian_orientation(path), InputError);
  }

  TEST_CASE("interval orientation is exact") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      const MultiGraph g = random_graph(rng, 1 + trial % 6, trial % 11);
      VertexIntMap lo(g.num_vertices()), hi(g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) {
        lo[v] = static_cast<int>(rng() % (g.degree_at(v) / 2 + 2));
        hi[v] = lo[v] + static_cast<int>(rng() % 3);
      }
      const auto o = interval_orientation(g, lo, hi);
      CHECK(o.has_value() == oracle::orientation_exists(g, lo, hi));
      if (o) {
        const auto out = out_degrees(g, *o);
        for (int v = 0; v < g.num_vertices(); ++v) CHECK((lo[v] <= out[v] && out[v] <= hi[v]));
      }
    }
  }

  TEST_CASE("two-point orientation is exact under the cap") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 200; ++trial) {
      const MultiGraph g = random_graph(rng, 1 + trial % 6, trial % 10);
      VertexIntMap p(g.num_vertices()), q(g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) {
        p[v] = static_cast<int>(rng() % (g.degree_at(v) / 2 + 2));
        q[v] = p[v] + static_cast<int>(rng() % 3);
      }
      const OrientationSearch s = two_point_orientation(g, p, q);
      const bool exists = exists_orientation(
          g, [&](const std::vector<int>& out) { return two_point_out(out, p, q); });
      CHECK(s.status == (exists ? Status::kFound : Status::kNone));
      if (s.orientation) CHECK(two_point_out(out_degrees(g, *s.orientation), p, q));
    }
  }

  TEST_CASE("bipartite factor-orientation bijection") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 5;
      const Bipartition part = Bipartition::from_mask(n, (std::uint64_t{1} << (n / 2)) - 1);
      MultiGraph g(n);
      const auto xs = part.x_positions(), ys = part.y_positions();
      for (int e = 0; e < 6; ++e) {
        g.add_edge(g.vertex_id(xs[rng() % xs.size()]), g.vertex_id(ys[rng() % ys.size()]));
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
        const Factor f = oracle::mask_factor(g, mask);
        const Orientation o = factor_to_orientation(g, part, f);
        CHECK(orientation_to_factor(g, part, o) == f);
        const auto out = out_degrees(g, o);
        const auto df = factor_degrees(g, f);
        for (int x : xs) CHECK(out[x] == df[x]);
        for (int y : ys) CHECK(out[y] == g.degree_at(y) - df[y]);
      }
    }
    MultiGraph tri(3);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    tri.add_edge(3, 1);
    CHECK_THROWS_AS(factor_to_orientation(tri, Bipartition::from_mask(3, 1), Factor()),
                    InputError);
  }

  TEST_CASE("z-defective window") {
    // d(z) = 6, x = 0, k = 2: 3 <= d+ < 5.
    CHECK(z_defective_window(6, Rational(0), 2) == std::pair<int, int>{3, 4});
    // x = 1/2: 2.5 <= d+ < 4.5.
    CHECK(z_defective_window(6, Rational(1, 2), 2) == std::pair<int, int>{3, 4});
    // x = 1, k = 2, d(z) = 5: 1.5 <= d+ < 3.5.
    CHECK(z_defective_window(5, Rational(1), 2) == std::pair<int, int>{2, 3});
    CHECK(z_defective_tree_count(1) == 0);
    CHECK(z_defective_tree_count(2) == 4);
    CHECK(z_defective_tree_count(3) == 11);
  }

  TEST_CASE("z-defective orientation meets its contract") {
    std::mt19937_64 rng(59);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const int k = 1 + trial % 2;
      const int n = 3 + trial % 3;
      MultiGraph g(n);
      // Enough parallel copies of a spanning cycle to meet the tree count.
      const int copies = std::max(2, z_defective_tree_count(k) + 1);
      for (int c = 0; c < copies; ++c) {
        for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
      }
      VertexIntMap p(n), q(n);
      for (int v = 0; v < n; ++v) {
        const int half = g.degree_at(v) / 2;
        p[v] = half - static_cast<int>(rng() % 2);
        q[v] = std::min(p[v] + k, half + static_cast<int>(rng() % 2));
        if (q[v] < half) q[v] = half;
      }
      const Rational x(static_cast<long long>(rng() % (2 * k)), 2);
      const OrientationSearch s = z_defective_orientation(g, p, q, 0, x, k);
      REQUIRE(s.status == Status::kFound);
      ++found;
      const auto out = out_degrees(g, *s.orientation);
      const auto [lo, hi] = z_defective_window(g.degree_at(0), x, k);
      CHECK((lo <= out[0] && out[0] <= hi));
      for (int v = 1; v < n; ++v) CHECK((out[v] == p[v] || out[v] == q[v]));
    }
    CHECK(found == 40);
  }
}
