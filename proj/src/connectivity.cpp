#include "gfactor/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <random>

#include "gfactor/decompositions.hpp"

namespace gfactor {

// ---------------------------------------------------------------------------
// Edge connectivity

int edge_connectivity(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n < 2) return kInfiniteConnectivity;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  // Stoer-Wagner; merged vertices are tracked by `alive`.
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  while (alive.size() > 1) {
    const int count = static_cast<int>(alive.size());
    std::vector<long long> key(count, 0);
    std::vector<char> added(count, 0);
    int prev = -1, last = -1;
    for (int step = 0; step < count; ++step) {
      int sel = -1;
      for (int i = 0; i < count; ++i) {
        if (!added[i] && (sel < 0 || key[i] > key[sel])) sel = i;
      }
      added[sel] = 1;
      prev = last;
      last = sel;
      if (step == count - 1) {
        best = std::min(best, key[sel]);
        break;
      }
      for (int i = 0; i < count; ++i) {
        if (!added[i]) key[i] += w[alive[sel]][alive[i]];
      }
    }
    const int s = alive[prev], t = alive[last];
    for (int i = 0; i < n; ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + last);
  }
  return static_cast<int>(best);
}

// ---------------------------------------------------------------------------
// Spanning tree packing (matroid partition into k forests)

namespace {

class ForestPartition {
 public:
  ForestPartition(const MultiGraph& g, int k)
      : g_(g), k_(k), forest_of_(g.num_edges(), -1),
        adj_(k, std::vector<std::vector<int>>(g.num_vertices())),
        sizes_(k, 0) {}

  // Tries to add edge index e0 to the union; on failure the labeled set is
  // left in `labeled_`.
  bool insert(int e0) { return search({e0}, /*augment=*/true); }

  // Labels everything reachable from the given unplaced edges.
  std::vector<char> closure(const std::vector<int>& sources) {
    search(sources, /*augment=*/false);
    return labeled_;
  }

  int forest_of(int e) const { return forest_of_[e]; }
  int size(int i) const { return sizes_[i]; }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

 private:
  // Edge indices on the forest-i path between a and b; nullopt when a and b
  // lie in different trees of forest i.
  std::optional<std::vector<int>> path(int i, int a, int b) {
    if (a == b) return std::vector<int>{};
    const int n = g_.num_vertices();
    parent_edge_.assign(n, -2);
    parent_edge_[a] = -1;
    bfs_.clear();
    bfs_.push_back(a);
    for (std::size_t head = 0; head < bfs_.size(); ++head) {
      const int v = bfs_[head];
      for (int ei : adj_[i][v]) {
        const int w = g_.edges()[ei].other(v);
        if (parent_edge_[w] != -2) continue;
        parent_edge_[w] = ei;
        if (w == b) {
          std::vector<int> out;
          for (int x = b; x != a;) {
            const int pe = parent_edge_[x];
            out.push_back(pe);
            x = g_.edges()[pe].other(x);
          }
          return out;
        }
        bfs_.push_back(w);
      }
    }
    return std::nullopt;
  }

  void move(int e, int to) {
    const Edge& ed = g_.edges()[e];
    const int from = forest_of_[e];
    if (from >= 0) {
      for (int end : {ed.u, ed.v}) {
        auto& list = adj_[from][end];
        list.erase(std::find(list.begin(), list.end(), e));
      }
      --sizes_[from];
    }
    forest_of_[e] = to;
    adj_[to][ed.u].push_back(e);
    adj_[to][ed.v].push_back(e);
    ++sizes_[to];
  }

  bool search(const std::vector<int>& sources, bool augment) {
    const int m = g_.num_edges();
    labeled_.assign(m, 0);
    parent_.assign(m, -1);
    std::deque<int> queue;
    for (int s : sources) {
      labeled_[s] = 1;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      const Edge& ex = g_.edges()[x];
      for (int i = 0; i < k_; ++i) {
        if (forest_of_[x] == i) continue;
        auto cycle = path(i, ex.u, ex.v);
        if (!cycle) {
          if (!augment) continue;
          int cur = x, target = i;
          while (cur >= 0) {
            const int old = forest_of_[cur];
            move(cur, target);
            cur = parent_[cur];
            target = old;
          }
          return true;
        }
        for (int y : *cycle) {
          if (labeled_[y]) continue;
          labeled_[y] = 1;
          parent_[y] = x;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  const MultiGraph& g_;
  int k_;
  std::vector<int> forest_of_;
  std::vector<std::vector<std::vector<int>>> adj_;
  std::vector<int> sizes_;
  std::vector<char> labeled_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> bfs_;
};

}  // namespace

PackingResult spanning_tree_packing(const MultiGraph& g, int m,
                                    std::span<const int> order) {
  if (m < 0) throw InputError("tree count must be nonnegative");
  const int n = g.num_vertices();
  PackingResult result;
  if (m == 0 || n <= 1) {
    result.packing = TreePacking{std::vector<Factor>(m)};
    return result;
  }
  std::vector<int> seq;
  if (order.empty()) {
    seq.resize(g.num_edges());
    std::iota(seq.begin(), seq.end(), 0);
  } else {
    seq.assign(order.begin(), order.end());
    if (static_cast<int>(seq.size()) != g.num_edges()) {
      throw InputError("edge order must be a permutation of all edges");
    }
  }

  ForestPartition fp(g, m);
  const int goal = m * (n - 1);
  std::vector<int> unplaced;
  if (g.num_edges() >= goal) {
    for (std::size_t idx = 0; idx < seq.size(); ++idx) {
      if (fp.total() == goal) break;
      const int e = seq[idx];
      if (!fp.insert(e)) unplaced.push_back(e);
    }
  }

  if (fp.total() == goal) {
    TreePacking packing;
    packing.trees.resize(m);
    std::vector<std::vector<EdgeId>> ids(m);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (fp.forest_of(e) >= 0) ids[fp.forest_of(e)].push_back(g.edges()[e].id);
    }
    for (int i = 0; i < m; ++i) packing.trees[i] = Factor(std::move(ids[i]));
    result.packing = std::move(packing);
    return result;
  }

  // Every edge not placed is spanned by each forest restricted to the
  // labeled closure, so the components of the closure form a partition whose
  // cross edges are all placed edges outside the closure.
  std::vector<char> in_closure(g.num_edges(), 0);
  if (!unplaced.empty()) in_closure = fp.closure(unplaced);
  MultiGraph closure_graph(g.vertex_ids());
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_closure[e]) {
      const Edge& ed = g.edges()[e];
      closure_graph.add_edge_with_id(ed.id, g.vertex_id(ed.u),
                                     g.vertex_id(ed.v));
    }
  }
  PackingRefusal refusal;
  refusal.parts = components(closure_graph);
  std::vector<int> part_of(n, -1);
  for (int p = 0; p < static_cast<int>(refusal.parts.size()); ++p) {
    for (int v : refusal.parts[p]) part_of[v] = p;
  }
  for (const Edge& e : g.edges()) {
    if (part_of[e.u] != part_of[e.v]) ++refusal.cross_edges;
  }
  refusal.required = m * (static_cast<int>(refusal.parts.size()) - 1);
  if (refusal.cross_edges >= refusal.required) {
    throw std::logic_error("tree packing: refusal certificate is not violated");
  }
  result.refusal = std::move(refusal);
  return result;
}

bool is_tree_connected(const MultiGraph& g, int m) {
  return spanning_tree_packing(g, m).ok();
}

int tree_packing_number(const MultiGraph& g) {
  if (g.num_vertices() <= 1) return kInfiniteConnectivity;
  int hi = g.num_edges() / (g.num_vertices() - 1);
  int lo = 0;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (is_tree_connected(g, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_valid_tree_packing(const MultiGraph& g, const TreePacking& p, int m) {
  if (static_cast<int>(p.trees.size()) != m) return false;
  std::vector<char> used;
  std::vector<EdgeId> all;
  for (const Factor& t : p.trees) {
    for (EdgeId id : t.edge_ids) {
      if (!g.has_edge(id)) return false;
      all.push_back(id);
    }
    const MultiGraph sub = g.restrict(t);
    if (sub.num_edges() != std::max(0, g.num_vertices() - 1)) return false;
    if (!is_connected(sub)) return false;
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// ---------------------------------------------------------------------------
// Bipartite index

BipartiteIndex bipartite_index(const MultiGraph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap) {
    throw CapExceeded("bipartite_index: " + std::to_string(n) +
                      " vertices exceeds the exhaustive cap of " +
                      std::to_string(cap) + "; use bound mode");
  }
  BipartiteIndex out;
  out.exact = true;
  if (n == 0) {
    out.value = out.lower = g.num_edges();
    out.witness = Bipartition{};
    return out;
  }
  std::vector<std::pair<int, int>> ends;
  int loops = 0;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++loops;
    } else {
      ends.emplace_back(e.u, e.v);
    }
  }
  // The last vertex stays in Y; the X/Y labelling is symmetric.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  int best = std::numeric_limits<int>::max();
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    int same = 0;
    for (auto [u, v] : ends) same += !(((mask >> u) ^ (mask >> v)) & 1U);
    if (same < best) {
      best = same;
      best_mask = mask;
    }
  }
  out.value = out.lower = best + loops;
  out.witness = Bipartition::from_mask(n, best_mask);
  return out;
}

BipartiteIndex bipartite_index_bounds(const MultiGraph& g, std::uint64_t seed,
                                      int restarts) {
  const int n = g.num_vertices();
  BipartiteIndex out;
  out.exact = false;
  std::mt19937_64 rng(seed);
  int best = std::numeric_limits<int>::max();
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Bipartition p;
    p.in_x.resize(n);
    for (int v = 0; v < n; ++v) p.in_x[v] = (r == 0) ? (v % 2) : (rng() & 1U);
    // Flip any vertex with more same-side than cross neighbours.
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
    const int value = intra_edges(g, p);
    if (value < best) {
      best = value;
      out.witness = p;
    }
  }
  out.value = best;
  if (n <= 1) {
    out.lower = best;  // only loops remain
  } else {
    const MultiGraph cross = g.restrict(induced_bipartite_factor(g, out.witness));
    const int packs = tree_packing_number(cross);
    out.lower = std::min(packs, best);
  }
  int loops = 0;
  for (const Edge& e : g.edges()) loops += e.is_loop();
  out.lower = std::max(out.lower, loops);
  if (out.lower == out.value) out.exact = true;
  return out;
}

BipartiteIndex bipartite_index_auto(const MultiGraph& g, std::uint64_t seed) {
  if (g.num_vertices() <= kBipartiteIndexCap) return bipartite_index(g);
  return bipartite_index_bounds(g, seed);
}

OddCyclePacking odd_cycle_packing_bound(const MultiGraph& g,
                                        const Bipartition& p, int k) {
  validate(g, p);
  OddCyclePacking out;
  if (k <= 0) {
    out.holds = true;
    return out;
  }
  std::vector<int> intra;
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    if (p.in_x[ed.u] == p.in_x[ed.v]) intra.push_back(e);
  }
  if (static_cast<int>(intra.size()) < k) return out;
  const MultiGraph cross = g.restrict(induced_bipartite_factor(g, p));
  PackingResult packing = spanning_tree_packing(cross, k);
  if (!packing.ok()) return out;
  out.holds = true;
  for (int i = 0; i < k; ++i) {
    const Edge& closing = g.edges()[intra[i]];
    std::vector<EdgeId> cycle{closing.id};
    if (!closing.is_loop()) {
      // Tree path between two same-side vertices has even length.
      const MultiGraph tree = g.restrict(packing.packing->trees[i]);
      std::vector<int> parent_edge(g.num_vertices(), -2);
      std::deque<int> queue{closing.u};
      parent_edge[closing.u] = -1;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int ei : tree.incidence()[v]) {
          const int w = tree.edges()[ei].other(v);
          if (parent_edge[w] == -2) {
            parent_edge[w] = ei;
            queue.push_back(w);
          }
        }
      }
      for (int x = closing.v; x != closing.u;) {
        const Edge& te = tree.edges()[parent_edge[x]];
        cycle.push_back(te.id);
        x = te.other(x);
      }
    }
    out.cycles.emplace_back(std::move(cycle));
  }
  return out;
}

EulerianSubgraphResult spanning_eulerian_subgraph(const MultiGraph& g) {
  EulerianSubgraphResult out;
  PackingResult packing = spanning_tree_packing(g, 2);
  if (!packing.ok()) {
    out.refusal = std::move(packing.refusal);
    return out;
  }
  out.factor = eulerian_from_trees(g, packing.packing->trees);
  return out;
}

// ---------------------------------------------------------------------------
// Toughness

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long gcd = std::gcd(n < 0 ? -n : n, d);
  num = gcd ? n / gcd : n;
  den = gcd ? d / gcd : d;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Toughness toughness(const MultiGraph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap) {
    throw CapExceeded("toughness: " + std::to_string(n) +
                      " vertices exceeds the exhaustive cap of " +
                      std::to_string(cap));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  Toughness out;
  out.infinite = true;
  for (std::uint32_t s = 0; s <= full; ++s) {
    std::uint32_t rest = full & ~s;
    int comps = 0;
    while (rest) {
      std::uint32_t frontier = rest & (~rest + 1);
      std::uint32_t comp = frontier;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = adj[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      rest &= ~comp;
      ++comps;
    }
    if (comps >= 2) {
      const Rational value(std::popcount(s), comps);
      if (out.infinite || value < out.value) {
        out.infinite = false;
        out.value = value;
        out.witness.clear();
        for (int v = 0; v < n; ++v) {
          if ((s >> v) & 1U) out.witness.push_back(v);
        }
        out.witness_components = comps;
      }
    }
    if (s == full) break;
  }
  return out;
}

}  // namespace gfactor
