#include <doctest.h>

#include <json.hpp>

#include "gfactor/connectivity.hpp"
#include "gfactor/harness.hpp"

using namespace gfactor;

TEST_SUITE("harness") {
  TEST_CASE("trial seeds are stable and distinct") {
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
  }

  TEST_CASE("generator meets its own contract") {
    for (int seed = 0; seed < 30; ++seed) {
      GenSpec spec;
      spec.n = 2 + seed % 7;
      spec.trees = 1 + seed % 4;
      spec.extra_edges = seed % 3;
      spec.intra_edges = seed % 2;
      spec.bipartite = seed % 5 == 0;
      spec.eulerian = seed % 3 == 0;
      spec.seed = static_cast<std::uint64_t>(seed);
      const GeneratedGraph gg = gen_tree_connected(spec);
      const MultiGraph& g = gg.graph;
      CHECK(g.num_vertices() == spec.n);
      CHECK(is_tree_connected(g, spec.trees));
      if (spec.eulerian) CHECK(is_eulerian(g));
      if (spec.bipartite || spec.intra_edges > 0) {
        const MultiGraph cross = g.restrict(induced_bipartite_factor(g, gg.part));
        CHECK(is_tree_connected(cross, spec.trees));
      }
      if (spec.bipartite && spec.intra_edges == 0) CHECK(is_bipartite_with(g, gg.part));
      int xs = 0;
      for (char c : gg.part.in_x) xs += c;
      CHECK(xs == spec.n / 2);

      const GeneratedGraph again = gen_tree_connected(spec);
      CHECK(again.graph.edges().size() == g.edges().size());
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        CHECK(again.graph.edges()[e].u == g.edges()[e].u);
        CHECK(again.graph.edges()[e].v == g.edges()[e].v);
      }
    }
    GenSpec bad;
    bad.n = 1;
    CHECK_THROWS_AS(gen_tree_connected(bad), InputError);
  }

  TEST_CASE("function generator windows") {
    GenSpec spec;
    spec.n = 6;
    spec.trees = 4;
    spec.eulerian = true;
    const MultiGraph g = gen_tree_connected(spec).graph;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const FunctionPair fp = gen_functions(g, 3, 1, 1, seed);
      for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree_at(v);
        CHECK(2 * (fp.lower[v] + 1) <= d);
        CHECK(d <= 2 * (fp.upper[v] - 1));
        CHECK(fp.upper[v] - fp.lower[v] <= 3);
        CHECK(fp.lower[v] >= 0);
      }
    }
    CHECK_THROWS_AS(gen_functions(g, 1, 1, 1, 0), InputError);
  }

  TEST_CASE("campaigns are deterministic across thread counts") {
    CampaignParams one;
    one.k = 1;
    one.t = 1;
    one.threads = 1;
    CampaignParams many = one;
    many.threads = 4;
    for (const char* id : {"eulerian-half", "bipartite-gf", "tutte-equiv"}) {
      const Report a = verify_theorem(id, 12, one, 99);
      const Report b = verify_theorem(id, 12, many, 99);
      CHECK(report_json(a) != "");
      // threads is an execution detail and is not serialized.
      CHECK(report_json(a) == report_json(b));
      CHECK(report_text(a) == report_text(b));
      CHECK(a.hard_errors == 0);
      CHECK(a.rows.size() == 12);
    }
  }

  TEST_CASE("single trials replay from the row seed") {
    CampaignParams params;
    params.k = 1;
    const Report r = verify_theorem("almost-bipartite", 5, params, 7);
    for (const TrialRow& row : r.rows) {
      const TrialRow again = run_trial("almost-bipartite", params, row.trial, row.seed);
      CHECK(again.outcome == row.outcome);
      CHECK(again.detail == row.detail);
      CHECK(row.seed == trial_seed(7, row.trial));
    }
  }

  TEST_CASE("report layout") {
    CampaignParams params;
    const Report r = verify_theorem("bijection", 3, params, 5);
    const auto j = nlohmann::json::parse(report_json(r));
    CHECK(j["theorem"] == "bijection");
    CHECK(j["trials"] == 3);
    CHECK(j["rows"].size() == 3);
    CHECK_FALSE(j.contains("wall_seconds"));
    CHECK(j["successes"].get<int>() + j["none"].get<int>() + j["unknown"].get<int>() +
              j["hard_errors"].get<int>() <= 3);
    CHECK_THROWS_AS(verify_theorem("no-such-theorem", 1, params, 0), InputError);
  }
}
