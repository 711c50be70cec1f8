#include "gfactor/decompositions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "gfactor/factors.hpp"

namespace gfactor {
namespace {

std::vector<int> shuffled_indices(int count, std::mt19937_64& rng, bool shuffle) {
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  if (shuffle) std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// Packing inside the subgraph `sub` of g, with edges offered in random order
// after the first attempt.
PackingResult pack_in(const MultiGraph& g, const Factor& sub, int m,
                      std::mt19937_64& rng, bool shuffle) {
  const MultiGraph h = g.restrict(sub);
  const auto order = shuffled_indices(h.num_edges(), rng, shuffle);
  return spanning_tree_packing(h, m, order);
}

Factor union_of(std::span<const Factor> parts) {
  Factor out;
  for (const Factor& f : parts) out = factor_union(out, f);
  return out;
}

Bipartition local_max_cut(const MultiGraph& g, std::mt19937_64& rng) {
  const int n = g.num_vertices();
  Bipartition p;
  p.in_x.resize(n);
  for (int v = 0; v < n; ++v) p.in_x[v] = rng() & 1U;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      int same = 0, cross = 0;
      for (int ei : g.incidence()[v]) {
        const Edge& e = g.edges()[ei];
        if (e.is_loop()) continue;
        (p.in_x[e.other(v)] == p.in_x[v] ? same : cross) += 1;
      }
      if (same > cross) {
        p.in_x[v] = !p.in_x[v];
        improved = true;
      }
    }
  }
  return p;
}

}  // namespace

std::optional<Factor> parity_forest(const MultiGraph& g, const Factor& forest,
                                    const std::vector<int>& targets) {
  validate(g, targets, "targets");
  validate(g, forest);
  const MultiGraph t = g.restrict(forest);
  const auto comps = components(t);
  if (t.num_edges() != t.num_vertices() - static_cast<int>(comps.size())) {
    throw InputError("parity_forest: input is not a forest");
  }
  const int n = g.num_vertices();
  std::vector<int> need(n);
  for (int v = 0; v < n; ++v) need[v] = ((targets[v] % 2) + 2) % 2;
  std::vector<int> parent_edge(n, -2);
  std::vector<EdgeId> chosen;
  for (const auto& comp : comps) {
    const int root = comp.front();
    std::vector<int> order{root};
    parent_edge[root] = -1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      for (int ei : t.incidence()[v]) {
        const int w = t.edges()[ei].other(v);
        if (parent_edge[w] != -2) continue;
        parent_edge[w] = ei;
        order.push_back(w);
      }
    }
    // Leaves first: the edge above v is forced by v's remaining parity.
    for (std::size_t i = order.size(); i-- > 1;) {
      const int v = order[i];
      if (!need[v]) continue;
      const Edge& e = t.edges()[parent_edge[v]];
      chosen.push_back(e.id);
      need[v] = 0;
      need[e.other(v)] ^= 1;
    }
    if (need[root]) return std::nullopt;
  }
  return Factor(std::move(chosen));
}

Factor eulerian_from_trees(const MultiGraph& g, std::span<const Factor> trees) {
  if (trees.empty()) return Factor{};
  const Factor rest = union_of(trees.subspan(1));
  const auto deg = factor_degrees(g, rest);
  auto fix = parity_forest(g, trees[0], deg);
  if (!fix) throw InputError("eulerian_from_trees: first tree is not spanning");
  return factor_union(rest, *fix);
}

EulerianDecomposition decompose_eulerian(const MultiGraph& g,
                                         const Bipartition& part, int m1,
                                         int m2) {
  validate(g, part);
  if (m1 < 0 || m2 < 0) throw InputError("m1, m2 must be nonnegative");
  EulerianDecomposition out;
  const Factor cross = induced_bipartite_factor(g, part);
  PackingResult packing =
      spanning_tree_packing(g.restrict(cross), m1 + m2 + 1);
  if (!packing.ok()) {
    out.refusal = std::move(packing.refusal);
    return out;
  }
  const auto& trees = packing.packing->trees;
  const Factor& spare = trees[0];
  out.bipartite_trees.trees.assign(trees.begin() + 1, trees.begin() + 1 + m1);
  out.eulerian_cross_trees.trees.assign(trees.begin() + 1 + m1, trees.end());
  const Factor h2 = union_of(out.eulerian_cross_trees.trees);
  const Factor intra = factor_difference(g.all_edges(), cross);
  // The spare tree fixes the parity of H2 plus the intra-part edges.
  const Factor odd_base = factor_union(h2, intra);
  auto fix = parity_forest(g, spare, factor_degrees(g, odd_base));
  if (!fix) {
    throw std::logic_error("decompose_eulerian: parity sum is odd");
  }
  out.eulerian_part = factor_union(odd_base, *fix);
  out.bipartite_part = factor_difference(g.all_edges(), out.eulerian_part);
  out.status = Status::kFound;
  return out;
}

bool verify_eulerian_decomposition(const MultiGraph& g, const Bipartition& part,
                                   int m1, int m2,
                                   const EulerianDecomposition& d) {
  if (d.status != Status::kFound) return false;
  if (factor_union(d.bipartite_part, d.eulerian_part) != g.all_edges()) return false;
  if (factor_difference(d.bipartite_part, d.eulerian_part) != d.bipartite_part) {
    return false;
  }
  const MultiGraph g1 = g.restrict(d.bipartite_part);
  const MultiGraph g2 = g.restrict(d.eulerian_part);
  if (!is_bipartite_with(g1, part)) return false;
  if (!is_tree_connected(g1, m1)) return false;
  if (!is_eulerian(g2)) return false;
  if (!is_tree_connected(g2, m2)) return false;
  return is_tree_connected(g2.restrict(induced_bipartite_factor(g2, part)), m2);
}

KeepBiDecomposition decompose_keep_bi(const MultiGraph& g, int m1, int m2,
                                      int k0,
                                      const DecompositionOptions& options) {
  KeepBiDecomposition out;
  if (m1 < 0 || m2 < k0 || k0 < 0) {
    out.reason = "requires m2 >= k0 >= 0 and m1 >= 0";
    return out;
  }
  if (!is_tree_connected(g, 2 * m1 + 2 * m2)) {
    out.reason = "graph is not (2m1+2m2)-tree-connected";
    return out;
  }
  std::mt19937_64 rng(options.seed);
  const int n = g.num_vertices();
  BipartiteIndex bi = bipartite_index_auto(g, options.seed);
  // Above the exhaustive cap the upper bound is used, which only makes the
  // requirement stronger.
  out.required_intra = std::min(k0, bi.value);
  const Factor all = g.all_edges();

  for (int attempt = 0; attempt < options.budget; ++attempt) {
    Bipartition part;
    if (attempt == 0 && options.hint) {
      part = *options.hint;
      validate(g, part);
    } else if (attempt <= 1 && n > 0) {
      part = bi.witness;
    } else {
      part = local_max_cut(g, rng);
    }
    const bool shuffle = attempt > 1;
    const Factor cross = induced_bipartite_factor(g, part);
    std::vector<EdgeId> intra = factor_difference(all, cross).edge_ids;
    if (static_cast<int>(intra.size()) < out.required_intra) continue;
    if (shuffle) std::shuffle(intra.begin(), intra.end(), rng);
    const Factor reserved(std::vector<EdgeId>(
        intra.begin(), intra.begin() + out.required_intra));

    PackingResult h2 = pack_in(g, cross, m2, rng, shuffle);
    if (!h2.ok()) continue;
    const Factor kept = factor_union(union_of(h2.packing->trees), reserved);
    PackingResult g1_trees =
        pack_in(g, factor_difference(all, kept), 2 * m1, rng, shuffle);
    if (!g1_trees.ok()) continue;

    const Factor g1 = eulerian_from_trees(g, g1_trees.packing->trees);
    const Factor g2 = factor_difference(all, g1);
    const MultiGraph g1_graph = g.restrict(g1);
    const MultiGraph g2_graph = g.restrict(g2);
    if (!is_eulerian(g1_graph)) continue;
    if (m1 > 0 && edge_connectivity(g1_graph) < 2 * m1) continue;
    if (!is_tree_connected(g2_graph.restrict(induced_bipartite_factor(g2_graph, part)),
                           m2)) {
      continue;
    }
    if (intra_edges(g2_graph, part) < out.required_intra) continue;
    out.status = Status::kFound;
    out.eulerian_part = g1;
    out.remainder = g2;
    out.part = std::move(part);
    return out;
  }
  out.status = Status::kUnknown;
  out.reason = "no verified decomposition within the search budget";
  return out;
}

ComplementSplit split_tree_connected_complement(
    const MultiGraph& g, int m, int m0, const DecompositionOptions& options) {
  ComplementSplit out;
  if (m < 0 || m0 < 0 || m + m0 == 0) {
    out.reason = "requires m, m0 >= 0 and m + m0 > 0";
    return out;
  }
  if (g.num_vertices() >= 2 && edge_connectivity(g) < 2 * (m + m0)) {
    out.reason = "graph is not (2m+2m0)-edge-connected";
    return out;
  }
  std::mt19937_64 rng(options.seed);
  const int n = g.num_vertices();
  const Factor all = g.all_edges();
  for (int attempt = 0; attempt < options.budget; ++attempt) {
    PackingResult packing = pack_in(g, all, m + m0, rng, attempt > 0);
    if (!packing.ok()) break;  // cannot happen above; the check is exact
    const auto& trees = packing.packing->trees;
    const Factor h0 = union_of(std::span<const Factor>(trees).first(m));
    const Factor c0 = union_of(std::span<const Factor>(trees).subspan(m));
    const Factor rest = factor_difference(factor_difference(all, h0), c0);
    const MultiGraph rest_graph = g.restrict(rest);
    const auto dh0 = factor_degrees(g, h0);
    VertexIntMap lo(n), hi(n);
    bool empty_window = false;
    for (int v = 0; v < n; ++v) {
      const int d = g.degree_at(v);
      lo[v] = std::max(0, d / 2 - m0 - dh0[v]);
      hi[v] = std::min((d + 1) / 2 + m - dh0[v], rest_graph.degree_at(v));
      if (lo[v] > hi[v]) empty_window = true;
    }
    if (empty_window) continue;
    auto extra = find_interval_factor(rest_graph, lo, hi);
    if (!extra) continue;
    const Factor h = factor_union(h0, *extra);
    const Factor complement = factor_difference(all, h);
    const auto dh = factor_degrees(g, h);
    bool window_ok = true;
    for (int v = 0; v < n; ++v) {
      const int d = g.degree_at(v);
      window_ok = window_ok && d / 2 - m0 <= dh[v] && dh[v] <= (d + 1) / 2 + m;
    }
    if (!window_ok) continue;
    PackingResult hp = spanning_tree_packing(g.restrict(h), m);
    PackingResult cp = spanning_tree_packing(g.restrict(complement), m0);
    if (!hp.ok() || !cp.ok()) continue;
    out.status = Status::kFound;
    out.tree_part = h;
    out.h_trees = std::move(*hp.packing);
    out.complement_trees = std::move(*cp.packing);
    return out;
  }
  out.status = Status::kUnknown;
  out.reason = "no verified split within the search budget";
  return out;
}

MatchingRaise matching_raising_bi(const MultiGraph& g, const Factor& f, int k,
                                  const DecompositionOptions& options) {
  validate(g, f);
  MatchingRaise out;
  const int need = std::max(0, k - 1);
  const MultiGraph fg = g.restrict(f);
  if (need == 0) {
    out.status = Status::kFound;
    return out;
  }
  if (!is_tree_connected(fg, 2 * k - 2)) {
    out.reason = "F is not (2k-2)-tree-connected";
    return out;
  }
  auto bi_of = [&](const Factor& m) {
    const MultiGraph h = g.restrict(factor_union(f, m));
    return bipartite_index_auto(h, options.seed);
  };
  auto accept = [&](const Factor& m) {
    const BipartiteIndex bi = bi_of(m);
    if (bi.lower >= need) {
      out.status = Status::kFound;
      out.matching = m;
      out.achieved_bi = bi.lower;
      return true;
    }
    return false;
  };
  std::vector<int> candidates;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!g.edges()[e].is_loop()) candidates.push_back(e);
  }
  // Greedy over intra-part edges of F's witness bipartition.
  const Bipartition witness = bipartite_index_auto(fg, options.seed).witness;
  {
    std::vector<char> covered(g.num_vertices(), 0);
    std::vector<EdgeId> chosen;
    for (int e : candidates) {
      const Edge& ed = g.edges()[e];
      if (witness.in_x[ed.u] != witness.in_x[ed.v]) continue;
      if (covered[ed.u] || covered[ed.v]) continue;
      covered[ed.u] = covered[ed.v] = 1;
      chosen.push_back(ed.id);
      if (static_cast<int>(chosen.size()) == need) break;
    }
    if (static_cast<int>(chosen.size()) == need && accept(Factor(chosen))) {
      return out;
    }
  }
  // All matchings of size k - 1, up to the budget.
  long long visited = 0;
  const long long limit = static_cast<long long>(options.budget) * 1000;
  bool exhausted = true;
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == need) {
      if (++visited > limit) {
        exhausted = false;
        return true;
      }
      return accept(Factor(chosen));
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Edge& ed = g.edges()[candidates[i]];
      if (covered[ed.u] || covered[ed.v]) continue;
      covered[ed.u] = covered[ed.v] = 1;
      chosen.push_back(ed.id);
      const bool stop = self(self, i + 1);
      chosen.pop_back();
      covered[ed.u] = covered[ed.v] = 0;
      if (stop) return true;
    }
    return false;
  };
  rec(rec, 0);
  if (out.status == Status::kFound) return out;
  out.status = exhausted ? Status::kNone : Status::kUnknown;
  out.reason = exhausted ? "no matching of size k-1 raises bi(F+M) to k-1"
                         : "matching search budget exhausted";
  return out;
}

}  // namespace gfactor
