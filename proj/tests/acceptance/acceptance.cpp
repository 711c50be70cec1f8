// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gfactor/connectivity.hpp"
#include "gfactor/decompositions.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/harness.hpp"
#include "gfactor/orientations.hpp"
#include "gfactor/pipeline.hpp"
#include "oracle.hpp"

using namespace gfactor;

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

MultiGraph random_multigraph(Rng& rng, int n, int edges, bool connected) {
  MultiGraph g(n);
  int placed = 0;
  if (connected) {
    for (int v = 1; v < n && placed < edges; ++v, ++placed) g.add_edge(uniform(rng, 1, v), v + 1);
  }
  for (; placed < edges; ++placed) {
    const int u = uniform(rng, 1, n);
    g.add_edge(u, uniform(rng, 0, 4) == 0 ? u : uniform(rng, 1, n));
  }
  return g;
}

std::vector<int> degrees_of(const MultiGraph& g, const Factor& f) {
  std::vector<int> d(g.num_vertices(), 0);
  for (int id : f.edge_ids) {
    const Edge& e = g.edge(id);
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool subset_of(const Factor& a, const Factor& b) {
  return std::includes(b.edge_ids.begin(), b.edge_ids.end(), a.edge_ids.begin(),
                       a.edge_ids.end());
}

// ---------------------------------------------------------------------------
// Connected multigraphs with at most 6 edges, one per isomorphism class.

using EdgeList = std::vector<std::pair<int, int>>;

struct SmallGraph {
  int n = 1;
  EdgeList edges;
};

std::vector<int> canonical_key(const SmallGraph& s) {
  const int n = s.n;
  std::vector<int> deg(n, 0), loops(n, 0);
  for (auto [u, v] : s.edges) {
    ++deg[u];
    ++deg[v];
    loops[u] += u == v;
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  auto invariant = [&](int v) { return std::make_pair(deg[v], loops[v]); };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return invariant(a) < invariant(b); });
  std::vector<std::pair<int, int>> blocks;  // [begin, end) in order
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && invariant(order[j]) == invariant(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<int> best;
  std::vector<int> label(n);
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (int i = 0; i < n; ++i) label[order[i]] = i;
      std::vector<int> key{n};
      EdgeList mapped;
      for (auto [u, v] : s.edges) {
        const int a = label[u], c = label[v];
        mapped.emplace_back(std::min(a, c), std::max(a, c));
      }
      std::sort(mapped.begin(), mapped.end());
      for (auto [u, v] : mapped) {
        key.push_back(u);
        key.push_back(v);
      }
      if (best.empty() || key < best) best = key;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      walk(b + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  walk(0);
  return best;
}

std::vector<SmallGraph> connected_multigraphs(int max_edges) {
  std::vector<SmallGraph> all{SmallGraph{}};
  std::vector<SmallGraph> level{SmallGraph{}};
  for (int e = 1; e <= max_edges; ++e) {
    std::set<std::vector<int>> seen;
    std::vector<SmallGraph> next;
    auto offer = [&](SmallGraph s) {
      if (seen.insert(canonical_key(s)).second) next.push_back(std::move(s));
    };
    for (const SmallGraph& s : level) {
      for (int u = 0; u < s.n; ++u) {
        for (int v = u; v < s.n; ++v) {
          SmallGraph t = s;
          t.edges.emplace_back(u, v);
          offer(std::move(t));
        }
        SmallGraph t = s;
        t.edges.emplace_back(u, s.n);
        ++t.n;
        offer(std::move(t));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

MultiGraph build(const SmallGraph& s) {
  MultiGraph g(s.n);
  for (auto [u, v] : s.edges) g.add_edge(u + 1, v + 1);
  return g;
}

// Finder, library criterion, independent deficiency and enumeration agree.
bool tutte_agrees(const MultiGraph& g, const VertexIntMap& f) {
  const bool finder = find_f_factor(g, f).has_value();
  const bool criterion = check_tutte_condition(g, f).holds;
  const bool deficiency = oracle::lovasz_holds(g, f, f);
  const bool enumeration = oracle::factor_exists(g, oracle::exactly(f));
  return finder == criterion && finder == deficiency && finder == enumeration;
}

Outcome criterion_tutte() {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  const auto graphs = connected_multigraphs(6);
  long long instances = 0, disagreements = 0;
  for (const SmallGraph& s : graphs) {
    const MultiGraph g = build(s);
    const int n = g.num_vertices();
    long long product = 1;
    for (int v = 0; v < n; ++v) product *= g.degree_at(v) + 1;
    if (product <= 64) {
      VertexIntMap f(n, 0);
      while (true) {
        ++instances;
        disagreements += !tutte_agrees(g, f);
        int v = 0;
        while (v < n && f[v] == g.degree_at(v)) f[v++] = 0;
        if (v == n) break;
        ++f[v];
      }
    } else {
      for (int r = 0; r < 12; ++r) {
        VertexIntMap f(n);
        for (int v = 0; v < n; ++v) f[v] = uniform(rng, 0, g.degree_at(v));
        ++instances;
        disagreements += !tutte_agrees(g, f);
      }
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 6), uniform(rng, 0, 8), false);
    VertexIntMap f(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) f[v] = uniform(rng, 0, g.degree_at(v) + 1);
    ++instances;
    disagreements += !tutte_agrees(g, f);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu graphs, %lld instances, %lld disagreements, %.1f s",
                graphs.size(), instances, disagreements, secs);
  return {disagreements == 0 && secs < 60.0, buf};
}

Outcome criterion_lovasz() {
  Rng rng(1002);
  int disagreements = 0, exists = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 6), uniform(rng, 0, 8), false);
    const int n = g.num_vertices();
    VertexIntMap lo(n), hi(n);
    for (int v = 0; v < n; ++v) {
      lo[v] = uniform(rng, 0, g.degree_at(v));
      hi[v] = uniform(rng, lo[v], g.degree_at(v) + 1);
    }
    const auto found = find_interval_factor(g, lo, hi);
    const bool criterion = check_lovasz_condition(g, lo, hi).holds;
    const bool deficiency = oracle::lovasz_holds(g, lo, hi);
    const bool enumeration = oracle::factor_exists(g, oracle::within(lo, hi));
    bool ok = found.has_value() == criterion && criterion == deficiency &&
              deficiency == enumeration;
    if (found) ok = ok && oracle::within(lo, hi)(degrees_of(g, *found));
    disagreements += !ok;
    exists += enumeration;
  }
  return {disagreements == 0, "500 trials, " + std::to_string(exists) + " feasible, " +
                                  std::to_string(disagreements) + " disagreements"};
}

Outcome criterion_strict_form() {
  Rng rng(1003);
  int trials = 0, disagreements = 0;
  while (trials < 500) {
    const int n = uniform(rng, 1, 6);
    const MultiGraph g = random_multigraph(rng, n, uniform(rng, n - 1, 8), true);
    VertexIntMap f(n);
    int sum = 0;
    for (int v = 0; v < n; ++v) sum += f[v] = uniform(rng, 0, g.degree_at(v));
    if (sum % 2 != 0) continue;
    ++trials;
    const bool strict = check_tutte_strict_condition(g, f).holds;
    const bool independent = oracle::strict_tutte_holds(g, f);
    const bool exists = oracle::factor_exists(g, oracle::exactly(f));
    disagreements += strict != independent || strict != exists || !tutte_agrees(g, f);
  }
  return {disagreements == 0, "500 trials, " + std::to_string(disagreements) + " disagreements"};
}

Outcome criterion_eulerian_half() {
  Rng rng(1004);
  std::string detail;
  bool pass = true;
  for (int t = 0; t <= 2; ++t) {
    int met = 0, attempts = 0, found = 0, hard = 0;
    while (met < 200 && attempts < 2000) {
      ++attempts;
      GenSpec spec;
      spec.n = uniform(rng, 3, 7);
      spec.trees = std::max(1, 2 * t);
      spec.extra_edges = uniform(rng, 0, spec.n);
      spec.intra_edges = t >= 2 ? t : 0;
      spec.eulerian = true;
      spec.seed = rng();
      MultiGraph g = gen_tree_connected(spec).graph;
      const int n = g.num_vertices();
      VertexIntMap i(n, 0);
      for (int j = 0; j < t; ++j) {
        const int v = uniform(rng, 0, n - 1);
        i[v] += (i[v] > 0 || (i[v] == 0 && uniform(rng, 0, 1))) ? 1 : -1;
      }
      int sum = 0;
      for (int x : i) sum += std::abs(x);
      if ((g.num_edges() - sum) % 2 != 0) {
        const int v = uniform(rng, 1, n);
        g.add_edge(v, v);
      }
      const bool hypotheses = is_connected(g) &&
                              (sum == 0 || edge_connectivity(g) >= 2 * sum - 1) &&
                              oracle::bipartite_index(g) >= sum - 1;
      if (!hypotheses) continue;
      ++met;
      try {
        const FactorCertificate c = eulerian_half_factor(g, i);
        if (c.status != Status::kFound) continue;
        const auto d = degrees_of(g, c.factor);
        bool exact = true;
        for (int v = 0; v < n; ++v) exact = exact && d[v] == g.degree_at(v) / 2 + i[v];
        found += exact;
      } catch (const std::logic_error&) {
        ++hard;
      }
    }
    pass = pass && met == 200 && found == met && hard == 0;
    detail += (t ? "; " : "") + std::string("t=") + std::to_string(t) + ": " +
              std::to_string(found) + "/" + std::to_string(met) + " exact, " +
              std::to_string(hard) + " hard errors";
  }
  return {pass, detail};
}

Outcome criterion_bipartite() {
  Rng rng(1005);
  int with_selector = 0, verified = 0, hard = 0, spot = 0, spot_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GenSpec spec;
    spec.n = uniform(rng, 2, 8);
    spec.trees = 4;
    spec.extra_edges = uniform(rng, 0, spec.n);
    spec.bipartite = true;
    spec.seed = rng();
    const GeneratedGraph gen = gen_tree_connected(spec);
    const MultiGraph& g = gen.graph;
    const FunctionPair fp = gen_functions(g, 1, 0, 0, rng());
    const auto h = balanced_selector(g, gen.part, fp.lower, fp.upper);
    if (g.num_edges() <= 20) {
      // Necessity: the degree vector of any {g,f}-factor is a balanced selector.
      ++spot;
      const bool exists = oracle::factor_exists(g, oracle::one_of(fp.lower, fp.upper));
      spot_bad += exists && !h;
    }
    if (!h) continue;
    ++with_selector;
    const int z = uniform(rng, 0, g.num_vertices() - 1);
    try {
      const FactorCertificate c =
          gf_factor_bipartite(g, gen.part, fp.lower, fp.upper, *h, z, {1});
      if (c.status != Status::kFound) continue;
      const auto d = degrees_of(g, c.factor);
      bool ok = verify_certificate(g, c) && d[z] == (*h)[z] &&
                oracle::one_of(fp.lower, fp.upper)(d);
      verified += ok;
    } catch (const std::logic_error&) {
      ++hard;
    }
  }
  return {with_selector > 0 && verified == with_selector && hard == 0 && spot_bad == 0,
          std::to_string(verified) + "/" + std::to_string(with_selector) +
              " verified with d_F(z) = h(z), " + std::to_string(hard) + " hard errors, " +
              std::to_string(spot) + " necessity spot checks, " + std::to_string(spot_bad) +
              " failed"};
}

// Shared by the two theorem checks of criterion 6.
struct Tally {
  int found = 0, parity_none = 0, confirmed = 0, other = 0, hard = 0;
  std::string summary(const std::string& name, int trials) const {
    return name + ": " + std::to_string(found) + "/" + std::to_string(trials) + " found, " +
           std::to_string(parity_none) + " parity-none (" + std::to_string(confirmed) +
           " oracle-confirmed), " + std::to_string(other) + " other, " +
           std::to_string(hard) + " hard errors";
  }
  bool ok() const { return other == 0 && hard == 0; }
};

void tally(Tally& t, const MultiGraph& g, const FunctionPair& fp,
           const std::function<FactorCertificate()>& run,
           const std::function<bool(const FactorCertificate&)>& extra) {
  try {
    const FactorCertificate c = run();
    if (c.status == Status::kFound) {
      const bool ok = oracle::one_of(fp.lower, fp.upper)(degrees_of(g, c.factor)) && extra(c);
      ok ? ++t.found : ++t.other;
    } else if (c.status == Status::kNone) {
      ++t.parity_none;
      if (g.num_edges() <= 20) {
        if (oracle::factor_exists(g, oracle::one_of(fp.lower, fp.upper))) {
          ++t.other;
        } else {
          ++t.confirmed;
        }
      }
    } else {
      ++t.other;
    }
  } catch (const std::logic_error&) {
    ++t.hard;
  }
}

Outcome criterion_tree_connected() {
  Rng rng(1006);
  Tally large, tree;
  for (int trial = 0; trial < 100; ++trial) {
    GenSpec spec;
    spec.n = uniform(rng, 2, 8);
    spec.trees = 3;
    spec.extra_edges = uniform(rng, 0, 2);
    spec.intra_edges = uniform(rng, 0, 2);
    spec.bipartite = true;
    spec.seed = rng();
    const GeneratedGraph gen = gen_tree_connected(spec);
    const FunctionPair fp = gen_functions(gen.graph, 1, 0, 0, rng());
    PipelineOptions opt;
    opt.seed = rng();
    opt.hint = gen.part;
    tally(large, gen.graph, fp,
          [&] { return gf_factor_bi_large(gen.graph, fp.lower, fp.upper, {1}, opt); },
          [&](const FactorCertificate& c) { return verify_certificate(gen.graph, c); });
  }
  for (int trial = 0; trial < 100; ++trial) {
    GenSpec spec;
    spec.n = uniform(rng, 2, 8);
    spec.trees = 8;
    spec.extra_edges = uniform(rng, 0, spec.n);
    spec.intra_edges = uniform(rng, 0, 2);
    spec.eulerian = true;
    spec.seed = rng();
    const MultiGraph g = gen_tree_connected(spec).graph;
    const FunctionPair fp = gen_functions(g, 1, 1, 0, rng());
    PipelineOptions opt;
    opt.seed = rng();
    tally(tree, g, fp,
          [&] { return tree_connected_gf(g, fp.lower, fp.upper, {1, 1, 0, 0}, opt); },
          [&](const FactorCertificate& c) {
            return c.h_packing && oracle::packing_ok(g, c.h_packing->trees, 1) &&
                   std::all_of(c.h_packing->trees.begin(), c.h_packing->trees.end(),
                               [&](const Factor& t) { return subset_of(t, c.factor); }) &&
                   verify_certificate(g, c, 1, 0);
          });
  }
  return {large.ok() && tree.ok(),
          large.summary("bi-large k=1", 100) + "; " + tree.summary("tree-gf (1,1,0)", 100)};
}

Outcome criterion_decompositions() {
  Rng rng(1007);
  int ok = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GenSpec spec;
    spec.n = uniform(rng, 2, 8);
    spec.trees = 3;
    spec.extra_edges = uniform(rng, 0, spec.n);
    spec.intra_edges = uniform(rng, 0, 3);
    spec.bipartite = true;
    spec.seed = rng();
    const GeneratedGraph gen = gen_tree_connected(spec);
    const MultiGraph& g = gen.graph;
    const EulerianDecomposition d = decompose_eulerian(g, gen.part, 1, 1);
    if (d.status != Status::kFound) continue;
    auto crosses = [&](int id) {
      const Edge& e = g.edge(id);
      return gen.part.is_x(e.u) != gen.part.is_x(e.v);
    };
    // Edge partition.
    Factor all = factor_union(d.bipartite_part, d.eulerian_part);
    bool good = all == g.all_edges() &&
                d.bipartite_part.size() + d.eulerian_part.size() == g.all_edges().size();
    // G1 bipartite and 1-tree-connected.
    good = good && std::all_of(d.bipartite_part.edge_ids.begin(),
                               d.bipartite_part.edge_ids.end(), crosses);
    good = good && oracle::packing_ok(g, d.bipartite_trees.trees, 1) &&
           subset_of(d.bipartite_trees.trees[0], d.bipartite_part);
    // G2 Eulerian.
    const auto d2 = degrees_of(g, d.eulerian_part);
    good = good && std::all_of(d2.begin(), d2.end(), [](int x) { return x % 2 == 0; });
    // G2[X,Y] (hence G2) 1-tree-connected.
    good = good && oracle::packing_ok(g, d.eulerian_cross_trees.trees, 1) &&
           subset_of(d.eulerian_cross_trees.trees[0], d.eulerian_part) &&
           std::all_of(d.eulerian_cross_trees.trees[0].edge_ids.begin(),
                       d.eulerian_cross_trees.trees[0].edge_ids.end(), crosses);
    ok += good;
  }
  int forests = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = uniform(rng, 2, 13);
    MultiGraph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(uniform(rng, 1, v - 1), v);
    std::vector<int> target(n);
    int parity = 0;
    for (int v = 0; v < n; ++v) parity ^= target[v] = uniform(rng, 0, 1);
    target[uniform(rng, 0, n - 1)] ^= parity;
    const auto forest = parity_forest(g, g.all_edges(), target);
    int matches = 0;
    bool same = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_edges()); ++mask) {
      const auto d = oracle::mask_degrees(g, mask);
      bool hit = true;
      for (int v = 0; v < n; ++v) hit = hit && d[v] % 2 == target[v];
      if (!hit) continue;
      ++matches;
      same = same && forest && *forest == oracle::mask_factor(g, mask);
    }
    forests += matches == 1 && same;
  }
  return {ok == 200 && forests == 500,
          std::to_string(ok) + "/200 decompositions verified, " + std::to_string(forests) +
              "/500 parity forests unique"};
}

Outcome criterion_orientations() {
  Rng rng(1008);
  int agree = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 6), uniform(rng, 0, 12), false);
    const int n = g.num_vertices();
    VertexIntMap lo(n), hi(n);
    for (int v = 0; v < n; ++v) {
      lo[v] = uniform(rng, 0, g.degree_at(v) / 2 + 1);
      hi[v] = uniform(rng, lo[v], lo[v] + 2);
    }
    const auto o = interval_orientation(g, lo, hi);
    bool ok = o.has_value() == oracle::orientation_exists(g, lo, hi);
    if (o) {
      const auto out = out_degrees(g, *o);
      for (int v = 0; v < n; ++v) ok = ok && lo[v] <= out[v] && out[v] <= hi[v];
    }
    agree += ok;
  }
  int bijections = 0;
  for (int trial = 0; trial < 100; ++trial) {
    GenSpec spec;
    spec.n = uniform(rng, 2, 8);
    spec.trees = uniform(rng, 1, 2);
    spec.extra_edges = uniform(rng, 0, 6);
    spec.bipartite = true;
    spec.seed = rng();
    const GeneratedGraph gen = gen_tree_connected(spec);
    const MultiGraph& g = gen.graph;
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges()) {
      if (uniform(rng, 0, 1)) ids.push_back(e.id);
    }
    const Factor f(ids);
    const Orientation o = factor_to_orientation(g, gen.part, f);
    bool ok = orientation_to_factor(g, gen.part, o) == f;
    const auto df = degrees_of(g, f);
    for (int e = 0; e < g.num_edges(); ++e) {
      // Factor edges leave X, the rest leave Y.
      const int tail = o.tail(g, e);
      ok = ok && gen.part.is_x(tail) == f.contains(g.edges()[e].id);
    }
    std::vector<int> out(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e) ++out[o.tail(g, e)];
    for (int v = 0; v < g.num_vertices(); ++v) {
      ok = ok && out[v] == (gen.part.is_x(v) ? df[v] : g.degree_at(v) - df[v]);
    }
    bijections += ok;
  }
  return {agree == 300 && bijections == 100,
          std::to_string(agree) + "/300 interval orientations agree, " +
              std::to_string(bijections) + "/100 round trips with degree law"};
}

Outcome criterion_connectivity() {
  Rng rng(1009);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 8), uniform(rng, 0, 16), false);
    int best_cut = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.num_vertices()); ++mask) {
      int cut = 0;
      for (const Edge& e : g.edges()) cut += ((mask >> e.u) ^ (mask >> e.v)) & 1U;
      best_cut = std::max(best_cut, cut);
    }
    const BipartiteIndex bi = bipartite_index(g);
    agree += bi.value == g.num_edges() - best_cut && intra_edges(g, bi.witness) == bi.value;
  }
  MultiGraph c5(5), star(4), k4(4);
  for (int v = 1; v <= 5; ++v) c5.add_edge(v, v % 5 + 1);
  for (int v = 2; v <= 4; ++v) star.add_edge(1, v);
  for (int u = 1; u <= 4; ++u) {
    for (int v = u + 1; v <= 4; ++v) k4.add_edge(u, v);
  }
  const Toughness tc = toughness(c5), ts = toughness(star), tk = toughness(k4);
  const bool hand = !tc.infinite && tc.value == Rational(1) && !ts.infinite &&
                    ts.value == Rational(1, 3) && tk.infinite;
  return {agree == 200 && hand,
          std::to_string(agree) + "/200 bi values match max-cut; t(C5) = " +
              tc.value.to_string() + ", t(K_{1,3}) = " + ts.value.to_string() +
              ", t(K4) = " + (tk.infinite ? "inf" : tk.value.to_string())};
}

Outcome criterion_determinism() {
  int identical = 0, hard = 0;
  const auto& ids = campaign_ids();
  for (const std::string& id : ids) {
    CampaignParams serial;
    serial.k = 1;
    serial.t = 1;
    serial.m = id.rfind("tree-gf", 0) == 0 ? 1 : 0;
    serial.threads = 1;
    CampaignParams parallel = serial;
    parallel.threads = 4;
    const Report a = verify_theorem(id, 16, serial, 4242);
    const Report b = verify_theorem(id, 16, parallel, 4242);
    const Report c = verify_theorem(id, 16, parallel, 4242);
    identical += report_json(a) == report_json(b) && report_json(b) == report_json(c);
    hard += a.hard_errors;
  }
  const int total = static_cast<int>(ids.size());
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " campaigns byte-identical across runs and thread counts (" +
                                  std::to_string(hard) + " hard errors)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"tutte-criterion-equivalence", criterion_tutte},
      {"lovasz-criterion-equivalence", criterion_lovasz},
      {"strict-tutte-form", criterion_strict_form},
      {"eulerian-half-factor", criterion_eulerian_half},
      {"bipartite-two-point-factor", criterion_bipartite},
      {"tree-connected-two-point-factor", criterion_tree_connected},
      {"decomposition-lemmas", criterion_decompositions},
      {"orientation-layer", criterion_orientations},
      {"connectivity-layer", criterion_connectivity},
      {"determinism", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu %-34s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
