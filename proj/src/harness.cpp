#include "gfactor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gfactor/connectivity.hpp"
#include "gfactor/decompositions.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/orientations.hpp"
#include "gfactor/pipeline.hpp"

namespace gfactor {
namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Loop-erased random walks; `step` draws a uniform neighbour.
std::vector<std::pair<int, int>> wilson_tree(int n, Rng& rng,
                                             const std::function<int(int)>& step) {
  std::vector<char> in_tree(n, 0);
  std::vector<int> next(n, -1);
  std::vector<std::pair<int, int>> edges;
  in_tree[uniform(rng, 0, n - 1)] = 1;
  for (int i = 0; i < n; ++i) {
    for (int u = i; !in_tree[u]; u = next[u]) next[u] = step(u);
    for (int u = i; !in_tree[u]; u = next[u]) {
      in_tree[u] = 1;
      edges.emplace_back(u, next[u]);
    }
  }
  return edges;
}

// Random multigraph on n vertices with `edges` edges, loops allowed.
MultiGraph random_multigraph(Rng& rng, int n, int edges, bool connected) {
  MultiGraph g(n);
  int placed = 0;
  if (connected) {
    for (int v = 1; v < n && placed < edges; ++v, ++placed) {
      g.add_edge(uniform(rng, 0, v - 1) + 1, v + 1);
    }
  }
  for (; placed < edges; ++placed) {
    const int u = uniform(rng, 1, n);
    const int v = uniform(rng, 0, 4) == 0 ? u : uniform(rng, 1, n);
    g.add_edge(u, v);
  }
  return g;
}

VertexIntMap random_upto_degree(const MultiGraph& g, Rng& rng) {
  VertexIntMap f(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) f[v] = uniform(rng, 0, g.degree_at(v));
  return f;
}

DegreePredicate exact_degrees(const VertexIntMap& f) {
  return [f](std::span<const int> d) {
    return std::equal(d.begin(), d.end(), f.begin());
  };
}

DegreePredicate two_point(const VertexIntMap& lo, const VertexIntMap& hi) {
  return [lo, hi](std::span<const int> d) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (d[v] != lo[v] && d[v] != hi[v]) return false;
    }
    return true;
  };
}

DegreePredicate interval(const VertexIntMap& lo, const VertexIntMap& hi) {
  return [lo, hi](std::span<const int> d) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (d[v] < lo[v] || d[v] > hi[v]) return false;
    }
    return true;
  };
}

constexpr int kOracleEdges = 20;

TrialRow row_from(const FactorCertificate& cert) {
  TrialRow row;
  switch (cert.status) {
    case Status::kFound:
      row.outcome = "success";
      row.detail = "|F| = " + std::to_string(cert.factor.size());
      break;
    case Status::kNone:
      row.outcome = "none";
      row.detail = cert.reason;
      break;
    case Status::kUnknown:
      row.outcome = "unknown";
      row.detail = cert.reason;
      break;
    case Status::kRefused:
      row.outcome = "refused";
      row.detail = cert.reason;
      break;
  }
  return row;
}

TrialRow hard_error(const std::string& what) { return {0, 0, "hard_error", what}; }

// A certificate outcome checked against the oracle on small graphs: a
// factor must exist when the pipeline found one, and none may exist when
// the pipeline proved none.
TrialRow cross_checked(const MultiGraph& g, const FactorCertificate& cert,
                       const DegreePredicate& pred) {
  TrialRow row = row_from(cert);
  if (g.num_edges() > kOracleEdges) return row;
  if (cert.status != Status::kFound && cert.status != Status::kNone) return row;
  const bool exists = first_factor(g, pred).has_value();
  if (exists != (cert.status == Status::kFound)) {
    return hard_error("oracle disagrees with pipeline outcome " +
                      std::string(to_string(cert.status)));
  }
  row.detail += ", oracle agrees";
  return row;
}

PipelineOptions pipeline_options(const CampaignParams& params, std::uint64_t seed) {
  PipelineOptions opt;
  opt.assume_hypotheses = params.assume_hypotheses;
  opt.seed = seed;
  return opt;
}

TrialRow trial_eulerian_half(const CampaignParams& params, Rng& rng) {
  const int t = params.t;
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
    if (i[v] == 0) {
      i[v] = uniform(rng, 0, 1) ? 1 : -1;
    } else {
      i[v] += i[v] > 0 ? 1 : -1;
    }
  }
  if ((g.num_edges() - t) % 2 != 0) {
    const int v = uniform(rng, 1, n);
    g.add_edge(v, v);
  }
  FactorCertificate cert = eulerian_half_factor(g, i, pipeline_options(params, rng()));
  VertexIntMap target(n);
  for (int v = 0; v < n; ++v) target[v] = g.degree_at(v) / 2 + i[v];
  return cross_checked(g, cert, exact_degrees(target));
}

TrialRow trial_bipartite_gf(const CampaignParams& params, Rng& rng) {
  const int k = params.k;
  GenSpec spec;
  spec.n = uniform(rng, 4, 8);
  spec.trees = 4 * k * k;
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.bipartite = true;
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  FunctionPair fp = gen_functions(g, k, 0, 0, rng());
  auto h = balanced_selector(g, gen.part, fp.lower, fp.upper);
  if (!h) {
    FactorCertificate cert;
    cert.status = Status::kNone;
    cert.reason = "no balanced selector";
    return cross_checked(g, cert, two_point(fp.lower, fp.upper));
  }
  const int z = uniform(rng, 0, g.num_vertices() - 1);
  PipelineOptions opt = pipeline_options(params, rng());
  FactorCertificate cert =
      gf_factor_bipartite(g, gen.part, fp.lower, fp.upper, *h, z, {k}, opt);
  TrialRow row = row_from(cert);
  if (cert.status == Status::kFound) {
    const int dz = factor_degrees(g, cert.factor)[z];
    if (dz != (*h)[z]) return hard_error("d_F(z) != h(z)");
    row.detail += ", d_F(z) = h(z) = " + std::to_string(dz);
  }
  return row;
}

TrialRow trial_almost_bipartite(const CampaignParams& params, Rng& rng) {
  const int k = params.k;
  GenSpec spec;
  spec.n = uniform(rng, 4, 8);
  spec.trees = 4 * k * k + 2 * k;
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.intra_edges = uniform(rng, 0, k - 1);
  spec.bipartite = true;
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  FunctionPair fp = gen_functions(g, k, 0, 0, rng());
  const int ex = partition_stats(g, gen.part.in_x).inside;
  auto h = selector_with_difference(gen.part, fp.lower, fp.upper, [ex](int d) {
    return d >= 0 && d <= 2 * ex + 1 && d % 2 == 0;
  });
  if (!h) return {0, 0, "none", "no selector in the near-balance window"};
  PipelineOptions opt = pipeline_options(params, rng());
  opt.hint = gen.part;
  FactorCertificate cert = gf_factor_almost_bipartite(g, fp.lower, fp.upper, *h, {k}, opt);
  TrialRow row = row_from(cert);
  row.detail += ", e(X)+e(Y) = " + std::to_string(intra_edges(g, gen.part));
  return row;
}

TrialRow trial_bi_large(const CampaignParams& params, Rng& rng) {
  const int k = params.k;
  GenSpec spec;
  spec.n = uniform(rng, 3, 7);
  spec.trees = 3 * k * k;
  spec.extra_edges = uniform(rng, 0, 2);
  spec.intra_edges = uniform(rng, k - 1, k + 1);
  spec.bipartite = true;
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  FunctionPair fp = gen_functions(g, k, 0, 0, rng());
  PipelineOptions opt = pipeline_options(params, rng());
  opt.hint = gen.part;
  FactorCertificate cert = gf_factor_bi_large(g, fp.lower, fp.upper, {k}, opt);
  return cross_checked(g, cert, two_point(fp.lower, fp.upper));
}

bool needs_even_degrees(int k, int m, int m0) { return m + m0 + 1 > k; }

TrialRow trial_tree_gf_bipartite(const CampaignParams& params, Rng& rng) {
  const int k = params.k, m = params.m, m0 = params.m0;
  GenSpec spec;
  spec.n = uniform(rng, 4, 8);
  spec.trees = 2 * m + 2 * m0 + 4 * k * k;
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.bipartite = true;
  spec.eulerian = needs_even_degrees(k, m, m0);
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  FunctionPair fp = gen_functions(g, k, m, m0, rng());
  auto h = balanced_selector(g, gen.part, fp.lower, fp.upper);
  if (!h) return {0, 0, "none", "no balanced selector"};
  const int z = uniform(rng, 0, g.num_vertices() - 1);
  PipelineOptions opt = pipeline_options(params, rng());
  FactorCertificate cert = tree_connected_gf_bipartite(g, gen.part, fp.lower, fp.upper,
                                                       *h, {k, m, m0, 0}, z, opt);
  TrialRow row = row_from(cert);
  if (cert.status == Status::kFound) {
    if ((m > 0 && !cert.h_packing) || (m0 > 0 && !cert.complement_packing)) {
      return hard_error("certificate lacks tree packings");
    }
    row.detail += ", packings " + std::to_string(m) + "/" + std::to_string(m0) + " verified";
  }
  return row;
}

TrialRow trial_tree_gf(const CampaignParams& params, Rng& rng) {
  const int k = params.k, m = params.m, m0 = params.m0;
  GenSpec spec;
  spec.n = uniform(rng, 3, 8);
  spec.trees = 2 * m + 2 * m0 + 6 * k * k;
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.intra_edges = uniform(rng, k - 1, k + 1);
  spec.eulerian = needs_even_degrees(k, m, m0);
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  FunctionPair fp = gen_functions(g, k, m, m0, rng());
  PipelineOptions opt = pipeline_options(params, rng());
  FactorCertificate cert = tree_connected_gf(g, fp.lower, fp.upper, {k, m, m0, 0}, opt);
  TrialRow row = cross_checked(g, cert, two_point(fp.lower, fp.upper));
  if (cert.status == Status::kFound &&
      ((m > 0 && !cert.h_packing) || (m0 > 0 && !cert.complement_packing))) {
    return hard_error("certificate lacks tree packings");
  }
  return row;
}

TrialRow trial_tough_check(const CampaignParams& params, Rng& rng) {
  GenSpec spec;
  spec.n = uniform(rng, 3, 10);
  spec.trees = uniform(rng, 1, 3);
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.seed = rng();
  const MultiGraph g = gen_tree_connected(spec).graph;
  const int b = std::max(1, params.b);
  VertexIntMap lower(g.num_vertices()), upper(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    upper[v] = uniform(rng, 1, b);
    lower[v] = uniform(rng, std::max(0, upper[v] - params.k), upper[v]);
  }
  ToughReport report =
      tough_hypothesis_check(g, lower, upper, {params.k, params.m, params.m0, b});
  const auto& t = report.toughness;
  if (!t.infinite && t.witness_components < 2) return hard_error("toughness witness invalid");
  std::string detail = "toughness = " + std::string(t.infinite ? "inf" : t.value.to_string());
  for (const auto& line : report.lines) {
    detail += "; " + line.name + (line.holds ? " holds" : " fails");
  }
  return {0, 0, "success", detail};
}

TrialRow trial_tutte_equiv(const CampaignParams&, Rng& rng) {
  const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 5), uniform(rng, 0, 8), false);
  const VertexIntMap f = random_upto_degree(g, rng);
  const bool finder = find_f_factor(g, f).has_value();
  const bool criterion = check_tutte_condition(g, f).holds;
  const bool oracle = first_factor(g, exact_degrees(f)).has_value();
  if (finder != criterion || finder != oracle) {
    return hard_error("finder/criterion/oracle disagree");
  }
  return {0, 0, "success", finder ? "f-factor exists" : "no f-factor"};
}

TrialRow trial_lovasz_equiv(const CampaignParams&, Rng& rng) {
  const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 5), uniform(rng, 0, 8), false);
  VertexIntMap lo(g.num_vertices()), hi(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    lo[v] = uniform(rng, 0, g.degree_at(v));
    hi[v] = uniform(rng, lo[v], g.degree_at(v));
  }
  const bool finder = find_interval_factor(g, lo, hi).has_value();
  const bool criterion = check_lovasz_condition(g, lo, hi).holds;
  const bool oracle = first_factor(g, interval(lo, hi)).has_value();
  if (finder != criterion || finder != oracle) {
    return hard_error("finder/criterion/oracle disagree");
  }
  return {0, 0, "success", finder ? "(g,f)-factor exists" : "no (g,f)-factor"};
}

TrialRow trial_tutte_lemma(const CampaignParams&, Rng& rng) {
  const int n = uniform(rng, 1, 5);
  const MultiGraph g = random_multigraph(rng, n, uniform(rng, n - 1, 8), true);
  VertexIntMap f = random_upto_degree(g, rng);
  long long sum = 0;
  for (int x : f) sum += x;
  if (sum % 2 != 0) {
    // Flip one unit at some vertex with room.
    for (int v = 0; v < n; ++v) {
      if (f[v] > 0) {
        --f[v];
        break;
      }
      if (f[v] < g.degree_at(v)) {
        ++f[v];
        break;
      }
    }
  }
  sum = 0;
  for (int x : f) sum += x;
  if (sum % 2 != 0) return {0, 0, "refused", "sum f is odd"};
  const bool strict = check_tutte_strict_condition(g, f).holds;
  const bool criterion = check_tutte_condition(g, f).holds;
  const bool finder = find_f_factor(g, f).has_value();
  if (strict != criterion || strict != finder) {
    return hard_error("strict form disagrees with the criterion");
  }
  return {0, 0, "success", finder ? "f-factor exists" : "no f-factor"};
}

TrialRow trial_bijection(const CampaignParams&, Rng& rng) {
  GenSpec spec;
  spec.n = uniform(rng, 2, 8);
  spec.trees = uniform(rng, 1, 2);
  spec.extra_edges = uniform(rng, 0, 6);
  spec.bipartite = true;
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  const MultiGraph& g = gen.graph;
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (uniform(rng, 0, 1)) ids.push_back(e.id);
  }
  const Factor f(ids);
  const Orientation o = factor_to_orientation(g, gen.part, f);
  if (orientation_to_factor(g, gen.part, o) != f) return hard_error("factor round trip");
  const auto out = out_degrees(g, o);
  const auto df = factor_degrees(g, f);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int expect = gen.part.is_x(v) ? df[v] : g.degree_at(v) - df[v];
    if (out[v] != expect) return hard_error("degree law fails");
  }
  Orientation r = Orientation::as_stored(g);
  for (auto& c : r.reversed) c = static_cast<char>(uniform(rng, 0, 1));
  if (factor_to_orientation(g, gen.part, orientation_to_factor(g, gen.part, r)) != r) {
    return hard_error("orientation round trip");
  }
  return {0, 0, "success", "round trips and degree law hold"};
}

TrialRow trial_decompose_eulerian(const CampaignParams& params, Rng& rng) {
  const int m1 = std::max(1, params.m), m2 = std::max(1, params.m0);
  GenSpec spec;
  spec.n = uniform(rng, 2, 8);
  spec.trees = m1 + m2 + 1;
  spec.extra_edges = uniform(rng, 0, spec.n);
  spec.intra_edges = uniform(rng, 0, 3);
  spec.bipartite = true;
  spec.seed = rng();
  GeneratedGraph gen = gen_tree_connected(spec);
  EulerianDecomposition d = decompose_eulerian(gen.graph, gen.part, m1, m2);
  if (d.status != Status::kFound) return hard_error("decomposition refused");
  if (!verify_eulerian_decomposition(gen.graph, gen.part, m1, m2, d)) {
    return hard_error("decomposition postconditions fail");
  }
  return {0, 0, "success",
          "|G1| = " + std::to_string(d.bipartite_part.size()) +
              ", |G2| = " + std::to_string(d.eulerian_part.size())};
}

TrialRow trial_parity_forest(const CampaignParams&, Rng& rng) {
  const int n = uniform(rng, 2, 13);
  MultiGraph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(uniform(rng, 1, v - 1), v);
  VertexIntMap target(n);
  int parity = 0;
  for (int v = 0; v < n; ++v) parity ^= (target[v] = uniform(rng, 0, 1));
  target[uniform(rng, 0, n - 1)] ^= parity;
  auto forest = parity_forest(g, g.all_edges(), target);
  if (!forest) return hard_error("parity forest refused an even target");
  int matches = 0;
  const int m = g.num_edges();
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::vector<int> deg(n, 0);
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1U) {
        ++deg[g.edges()[e].u];
        ++deg[g.edges()[e].v];
      }
    }
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && deg[v] % 2 == target[v];
    if (!ok) continue;
    ++matches;
    std::vector<EdgeId> ids;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1U) ids.push_back(g.edges()[e].id);
    }
    if (Factor(ids) != *forest) return hard_error("parity forest differs from the unique subset");
  }
  if (matches != 1) return hard_error("parity subset is not unique");
  return {0, 0, "success", "unique, |F| = " + std::to_string(forest->size())};
}

TrialRow trial_interval_orientation(const CampaignParams&, Rng& rng) {
  const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 6), uniform(rng, 0, 12), false);
  const int n = g.num_vertices(), m = g.num_edges();
  VertexIntMap lo(n), hi(n);
  for (int v = 0; v < n; ++v) {
    lo[v] = uniform(rng, 0, g.degree_at(v) / 2 + 1);
    hi[v] = uniform(rng, lo[v], lo[v] + 2);
  }
  auto o = interval_orientation(g, lo, hi);
  if (o) {
    const auto out = out_degrees(g, *o);
    for (int v = 0; v < n; ++v) {
      if (out[v] < lo[v] || out[v] > hi[v]) return hard_error("orientation misses bounds");
    }
  }
  bool exists = false;
  for (std::uint32_t mask = 0; mask < (1U << m) && !exists; ++mask) {
    std::vector<int> out(n, 0);
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edges()[e];
      ++out[(mask >> e & 1U) ? ed.v : ed.u];
    }
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && lo[v] <= out[v] && out[v] <= hi[v];
    exists = ok;
  }
  if (exists != o.has_value()) return hard_error("feasibility disagrees with enumeration");
  return {0, 0, "success", exists ? "feasible" : "infeasible"};
}

TrialRow trial_bi_maxcut(const CampaignParams&, Rng& rng) {
  const MultiGraph g = random_multigraph(rng, uniform(rng, 1, 8), uniform(rng, 0, 16), false);
  const BipartiteIndex bi = bipartite_index(g);
  const int n = g.num_vertices();
  int best_cut = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int cut = 0;
    for (const Edge& e : g.edges()) cut += ((mask >> e.u) ^ (mask >> e.v)) & 1U;
    best_cut = std::max(best_cut, cut);
  }
  if (bi.value != g.num_edges() - best_cut) return hard_error("bi differs from max-cut");
  if (intra_edges(g, bi.witness) != bi.value) return hard_error("witness does not attain bi");
  return {0, 0, "success", "bi = " + std::to_string(bi.value)};
}

using TrialFn = TrialRow (*)(const CampaignParams&, Rng&);

const std::vector<std::pair<std::string, TrialFn>>& registry() {
  static const std::vector<std::pair<std::string, TrialFn>> r = {
      {"eulerian-half", trial_eulerian_half},
      {"bipartite-gf", trial_bipartite_gf},
      {"almost-bipartite", trial_almost_bipartite},
      {"bi-large", trial_bi_large},
      {"tree-gf-bipartite", trial_tree_gf_bipartite},
      {"tree-gf", trial_tree_gf},
      {"tough-check", trial_tough_check},
      {"tutte-equiv", trial_tutte_equiv},
      {"lovasz-equiv", trial_lovasz_equiv},
      {"bijection", trial_bijection},
      {"tutte-lemma", trial_tutte_lemma},
      {"decompose-eulerian", trial_decompose_eulerian},
      {"parity-forest", trial_parity_forest},
      {"interval-orientation", trial_interval_orientation},
      {"bi-maxcut", trial_bi_maxcut},
  };
  return r;
}

TrialFn lookup(const std::string& id) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) return fn;
  }
  throw InputError("unknown theorem id: " + id);
}

std::string hex_seed(std::uint64_t seed) {
  std::ostringstream os;
  os << "0x" << std::hex << std::setw(16) << std::setfill('0') << seed;
  return os.str();
}

}  // namespace

GeneratedGraph gen_tree_connected(const GenSpec& spec) {
  if (spec.n < 2) throw InputError("gen: n must be at least 2");
  if (spec.trees < 0 || spec.extra_edges < 0 || spec.intra_edges < 0) {
    throw InputError("gen: counts must be nonnegative");
  }
  Rng rng(spec.seed);
  const int n = spec.n;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  Bipartition part;
  part.in_x.assign(n, 0);
  for (int i = 0; i < n / 2; ++i) part.in_x[perm[i]] = 1;
  const auto xs = part.x_positions();
  const auto ys = part.y_positions();
  const bool cross = spec.bipartite || spec.intra_edges > 0;
  auto other_side = [&](int u) {
    const auto& side = part.is_x(u) ? ys : xs;
    return side[uniform(rng, 0, static_cast<int>(side.size()) - 1)];
  };
  auto any_other = [&](int u) {
    const int w = uniform(rng, 0, n - 2);
    return w >= u ? w + 1 : w;
  };
  GeneratedGraph out{MultiGraph(n), part};
  MultiGraph& g = out.graph;
  auto add = [&](int u, int v) { g.add_edge(u + 1, v + 1); };
  for (int t = 0; t < spec.trees; ++t) {
    for (auto [u, v] : cross ? wilson_tree(n, rng, other_side) : wilson_tree(n, rng, any_other)) {
      add(u, v);
    }
  }
  for (int e = 0; e < spec.extra_edges; ++e) {
    const int u = uniform(rng, 0, n - 1);
    add(u, cross ? other_side(u) : any_other(u));
  }
  for (int e = 0; e < spec.intra_edges; ++e) {
    const int u = uniform(rng, 0, n - 1);
    const auto& side = part.is_x(u) ? xs : ys;
    int v = u;
    if (side.size() > 1 && uniform(rng, 0, 3) != 0) {
      do {
        v = side[uniform(rng, 0, static_cast<int>(side.size()) - 1)];
      } while (v == u);
    }
    add(u, v);
  }
  if (spec.eulerian) {
    std::vector<int> odd;
    for (int v = 0; v < n; ++v) {
      if (g.degree_at(v) % 2) odd.push_back(v);
    }
    std::shuffle(odd.begin(), odd.end(), rng);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
      const int u = odd[i], v = odd[i + 1];
      if (cross && part.is_x(u) == part.is_x(v)) {
        const int w = other_side(u);
        add(u, w);
        add(w, v);
      } else {
        add(u, v);
      }
    }
  }
  return out;
}

FunctionPair gen_functions(const MultiGraph& g, int k, int m, int m0,
                           std::uint64_t seed) {
  if (k < 0 || m < 0 || m0 < 0) throw InputError("gen_functions: negative parameter");
  Rng rng(seed);
  const int n = g.num_vertices();
  FunctionPair fp{VertexIntMap(n), VertexIntMap(n)};
  for (int v = 0; v < n; ++v) {
    const int d = g.degree_at(v);
    const int f_min = (d + 1) / 2 + m;
    const int g_max = d / 2 - m0;
    const int g_min = std::max(0, f_min - k);
    if (g_max < g_min) {
      throw InputError("gen_functions: empty window at vertex " +
                       std::to_string(g.vertex_id(v)));
    }
    fp.lower[v] = uniform(rng, g_min, g_max);
    fp.upper[v] = uniform(rng, std::max(f_min, fp.lower[v]), fp.lower[v] + k);
  }
  return fp;
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial) {
  return splitmix64(splitmix64(master_seed) ^ static_cast<std::uint64_t>(trial));
}

const std::vector<std::string>& campaign_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

TrialRow run_trial(const std::string& id, const CampaignParams& params, int trial,
                   std::uint64_t seed) {
  const TrialFn fn = lookup(id);
  TrialRow row;
  try {
    Rng rng(seed);
    row = fn(params, rng);
  } catch (const TheoremViolation& e) {
    row = hard_error(std::string("theorem violation: ") + e.what());
  } catch (const InputError& e) {
    row = {0, 0, "refused", std::string("generator: ") + e.what()};
  } catch (const std::exception& e) {
    row = hard_error(std::string("exception: ") + e.what());
  }
  row.trial = trial;
  row.seed = seed;
  return row;
}

Report verify_theorem(const std::string& id, int trials, const CampaignParams& params,
                      std::uint64_t master_seed) {
  lookup(id);
  if (trials < 0) throw InputError("trials must be nonnegative");
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.theorem = id;
  report.master_seed = master_seed;
  report.trials = trials;
  report.params = params;
  report.rows.resize(trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) {
      report.rows[i] = run_trial(id, params, i, trial_seed(master_seed, i));
    }
  };
  int threads = params.threads > 0 ? params.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, trials));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const TrialRow& row : report.rows) {
    if (row.outcome == "success") {
      ++report.successes;
    } else if (row.outcome == "none") {
      ++report.none;
    } else if (row.outcome == "unknown") {
      ++report.unknown;
    } else if (row.outcome == "refused") {
      ++report.refusals[row.detail];
    } else {
      ++report.hard_errors;
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["master_seed"] = r.master_seed;
  j["trials"] = r.trials;
  j["params"] = {{"k", r.params.k},   {"m", r.params.m}, {"m0", r.params.m0},
                 {"b", r.params.b},   {"t", r.params.t},
                 {"assume_hypotheses", r.params.assume_hypotheses}};
  j["successes"] = r.successes;
  j["none"] = r.none;
  j["unknown"] = r.unknown;
  j["hard_errors"] = r.hard_errors;
  j["refusals"] = nlohmann::ordered_json::object();
  for (const auto& [name, count] : r.refusals) j["refusals"][name] = count;
  j["rows"] = nlohmann::ordered_json::array();
  for (const TrialRow& row : r.rows) {
    j["rows"].push_back({{"trial", row.trial},
                         {"seed", hex_seed(row.seed)},
                         {"outcome", row.outcome},
                         {"detail", row.detail}});
  }
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  auto field = [&](const std::string& name, const std::string& value) {
    os << std::left << std::setw(18) << name << value << "\n";
  };
  field("theorem", r.theorem);
  field("master_seed", std::to_string(r.master_seed));
  field("trials", std::to_string(r.trials));
  field("params", "k=" + std::to_string(r.params.k) + " m=" + std::to_string(r.params.m) +
                      " m0=" + std::to_string(r.params.m0) + " b=" +
                      std::to_string(r.params.b) + " t=" + std::to_string(r.params.t) +
                      " assume_hypotheses=" + (r.params.assume_hypotheses ? "true" : "false"));
  field("successes", std::to_string(r.successes));
  field("none", std::to_string(r.none));
  field("unknown", std::to_string(r.unknown));
  field("hard_errors", std::to_string(r.hard_errors));
  for (const auto& [name, count] : r.refusals) field("refused", std::to_string(count) + "  " + name);
  for (const TrialRow& row : r.rows) {
    os << std::right << std::setw(6) << row.trial << "  " << hex_seed(row.seed) << "  "
       << std::left << std::setw(10) << row.outcome << "  " << row.detail << "\n";
  }
  return os.str();
}

}  // namespace gfactor
