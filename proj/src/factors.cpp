#include "gfactor/factors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "gfactor/matching.hpp"

namespace gfactor {
namespace {

void check_bounds(const MultiGraph& g, const VertexIntMap& lower,
                  const VertexIntMap& upper) {
  validate(g, lower, "g");
  validate(g, upper, "f");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (lower[v] > upper[v]) {
      throw InputError("g(v) > f(v) at vertex " +
                       std::to_string(g.vertex_id(v)));
    }
  }
}

// Bitmask view of a graph with at most 31 vertices for the 3^n sweeps.
struct MaskGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;           // non-loop neighbours
  std::vector<std::vector<int>> mult;       // non-loop multiplicities
  std::vector<int> deg;

  explicit MaskGraph(const MultiGraph& g)
      : n(g.num_vertices()), adj(n, 0), mult(n, std::vector<int>(n, 0)),
        deg(g.degrees()) {
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
      ++mult[e.u][e.v];
      ++mult[e.v][e.u];
    }
  }

  int edges_between(std::uint32_t a, std::uint32_t b) const {
    int count = 0;
    for (std::uint32_t s = a; s; s &= s - 1) {
      const int u = std::countr_zero(s);
      for (std::uint32_t t = b; t; t &= t - 1) count += mult[u][std::countr_zero(t)];
    }
    return count;
  }

  // RHS - LHS of the Lovasz inequality.
  int deficiency(std::uint32_t a, std::uint32_t b, const VertexIntMap& lower,
                 const VertexIntMap& upper) const {
    int rhs = 0;
    for (std::uint32_t s = a; s; s &= s - 1) rhs += upper[std::countr_zero(s)];
    for (std::uint32_t s = b; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      int d = deg[v];
      for (std::uint32_t t = a; t; t &= t - 1) d -= mult[v][std::countr_zero(t)];
      rhs += d - lower[v];
    }
    const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
    std::uint32_t rest = full & ~(a | b);
    int omega = 0;
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = adj[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      rest &= ~comp;
      bool tight = true;
      int fsum = 0;
      for (std::uint32_t s = comp; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        tight = tight && lower[v] == upper[v];
        fsum += upper[v];
      }
      if (tight && ((edges_between(comp, b) - fsum) % 2 != 0)) ++omega;
    }
    return rhs - omega;
  }
};

DisjointPair pair_from_masks(int n, std::uint32_t a, std::uint32_t b) {
  DisjointPair p = DisjointPair::empty(n);
  for (int v = 0; v < n; ++v) {
    if ((a >> v) & 1U) p.label[v] = 1;
    if ((b >> v) & 1U) p.label[v] = 2;
  }
  return p;
}

// Calls visit(a, b) for every disjoint pair until it returns false.
template <typename Visit>
void for_each_pair(int n, Visit&& visit) {
  std::vector<int> digit(n, 0);
  for (;;) {
    std::uint32_t a = 0, b = 0;
    for (int v = 0; v < n; ++v) {
      if (digit[v] == 1) a |= 1U << v;
      if (digit[v] == 2) b |= 1U << v;
    }
    if (!visit(a, b)) return;
    int i = 0;
    while (i < n && digit[i] == 2) digit[i++] = 0;
    if (i == n) return;
    ++digit[i];
  }
}

void check_cap(const MultiGraph& g, int cap, const char* what) {
  if (g.num_vertices() > cap || g.num_vertices() > 31) {
    throw CapExceeded(std::string(what) + ": " +
                      std::to_string(g.num_vertices()) +
                      " vertices exceeds the exhaustive cap of " +
                      std::to_string(std::min(cap, 31)));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Criteria

int omega_gf(const MultiGraph& g, const DisjointPair& pair,
             const VertexIntMap& lower, const VertexIntMap& upper) {
  check_bounds(g, lower, upper);
  const int n = g.num_vertices();
  if (static_cast<int>(pair.label.size()) != n) {
    throw InputError("disjoint pair does not match the vertex set");
  }
  std::vector<int> comp(n, -1);
  int omega = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (pair.label[s] != 0 || comp[s] >= 0) continue;
    comp[s] = s;
    stack.push_back(s);
    bool tight = true;
    long long fsum = 0;
    long long to_b = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      tight = tight && lower[v] == upper[v];
      fsum += upper[v];
      for (int ei : g.incidence()[v]) {
        const Edge& e = g.edges()[ei];
        const int w = e.other(v);
        if (pair.in_b(w) && !e.is_loop()) ++to_b;
        if (pair.label[w] == 0 && comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
    if (tight && ((to_b - fsum) % 2 != 0)) ++omega;
  }
  return omega;
}

int lovasz_deficiency(const MultiGraph& g, const DisjointPair& pair,
                      const VertexIntMap& lower, const VertexIntMap& upper) {
  const int omega = omega_gf(g, pair, lower, upper);
  long long rhs = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (pair.in_a(v)) rhs += upper[v];
    if (!pair.in_b(v)) continue;
    int d = 0;  // d_{G-A}(v)
    for (int ei : g.incidence()[v]) {
      const Edge& e = g.edges()[ei];
      if (e.is_loop()) {
        d += 2;
      } else if (!pair.in_a(e.other(v))) {
        ++d;
      }
    }
    rhs += d - lower[v];
  }
  return static_cast<int>(rhs - omega);
}

CriterionResult check_lovasz_condition(const MultiGraph& g,
                                       const VertexIntMap& lower,
                                       const VertexIntMap& upper, int cap) {
  check_bounds(g, lower, upper);
  check_cap(g, cap, "check_lovasz_condition");
  const MaskGraph mg(g);
  CriterionResult result;
  for_each_pair(g.num_vertices(), [&](std::uint32_t a, std::uint32_t b) {
    if (mg.deficiency(a, b, lower, upper) < 0) {
      result.holds = false;
      result.violation = pair_from_masks(g.num_vertices(), a, b);
      return false;
    }
    return true;
  });
  return result;
}

CriterionResult check_tutte_condition(const MultiGraph& g,
                                      const VertexIntMap& f, int cap) {
  return check_lovasz_condition(g, f, f, cap);
}

CriterionResult check_tutte_strict_condition(const MultiGraph& g,
                                             const VertexIntMap& f, int cap) {
  validate(g, f, "f");
  check_cap(g, cap, "check_tutte_strict_condition");
  if (!is_connected(g)) throw InputError("strict form requires connected G");
  if (std::accumulate(f.begin(), f.end(), 0LL) % 2 != 0) {
    throw InputError("strict form requires an even sum of f");
  }
  const MaskGraph mg(g);
  CriterionResult result;
  for_each_pair(g.num_vertices(), [&](std::uint32_t a, std::uint32_t b) {
    if ((a | b) == 0) return true;
    // omega < 2 + rhs  <=>  rhs - omega > -2
    if (mg.deficiency(a, b, f, f) <= -2) {
      result.holds = false;
      result.violation = pair_from_masks(g.num_vertices(), a, b);
      return false;
    }
    return true;
  });
  return result;
}

// ---------------------------------------------------------------------------
// Constructive finders

std::optional<Factor> find_f_factor(const MultiGraph& g, const VertexIntMap& f) {
  validate(g, f, "f");
  const int n = g.num_vertices();
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    if (f[v] < 0 || f[v] > g.degree_at(v)) return std::nullopt;
    total += f[v];
  }
  if (total % 2 != 0) return std::nullopt;

  // f(v) copies per vertex; every edge becomes a pair (a, b) joined to each
  // other and to the copies of its own endpoint. a-b matched means the edge
  // is left out.
  std::vector<int> first_copy(n + 1, 0);
  for (int v = 0; v < n; ++v) first_copy[v + 1] = first_copy[v] + f[v];
  const int copies = first_copy[n];
  const int m = g.num_edges();
  const int size = copies + 2 * m;
  std::vector<std::pair<int, int>> links;
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edges()[e];
    const int a = copies + 2 * e, b = a + 1;
    links.emplace_back(a, b);
    for (int c = first_copy[ed.u]; c < first_copy[ed.u + 1]; ++c) {
      links.emplace_back(a, c);
    }
    for (int c = first_copy[ed.v]; c < first_copy[ed.v + 1]; ++c) {
      links.emplace_back(b, c);
    }
  }
  const std::vector<int> mate = maximum_matching(size, links);
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) {
    return std::nullopt;
  }
  std::vector<EdgeId> chosen;
  for (int e = 0; e < m; ++e) {
    const int a = copies + 2 * e;
    if (mate[a] != a + 1) chosen.push_back(g.edges()[e].id);
  }
  return Factor(std::move(chosen));
}

std::optional<Factor> find_interval_factor(const MultiGraph& g,
                                           const VertexIntMap& lower,
                                           const VertexIntMap& upper) {
  check_bounds(g, lower, upper);
  const int n = g.num_vertices();
  VertexIntMap lo(n), hi(n);
  long long slack = 0, hi_sum = 0;
  for (int v = 0; v < n; ++v) {
    lo[v] = std::max(lower[v], 0);
    hi[v] = std::min(upper[v], g.degree_at(v));
    if (lo[v] > hi[v]) return std::nullopt;
    slack += hi[v] - lo[v];
    hi_sum += hi[v];
  }
  if (slack == 0) return find_f_factor(g, hi);

  // Slack hub s: hi(v) - lo(v) parallel edges v-s absorb the unused degree
  // at v; loops at s absorb the rest of d(s) in pairs.
  std::vector<VertexId> ids = g.vertex_ids();
  const VertexId hub = *std::max_element(ids.begin(), ids.end()) + 1;
  ids.push_back(hub);
  MultiGraph aug(ids);
  EdgeId next = 0;
  for (const Edge& e : g.edges()) {
    aug.add_edge_with_id(e.id, g.vertex_id(e.u), g.vertex_id(e.v));
    next = std::max(next, e.id + 1);
  }
  const EdgeId first_extra = next;
  for (int v = 0; v < n; ++v) {
    for (int i = lo[v]; i < hi[v]; ++i) {
      aug.add_edge_with_id(next++, g.vertex_id(v), hub);
    }
  }
  for (long long i = 0; i < slack / 2; ++i) aug.add_edge_with_id(next++, hub, hub);
  VertexIntMap target = hi;
  target.push_back(static_cast<int>((slack % 2 == hi_sum % 2) ? slack : slack - 1));
  auto factor = find_f_factor(aug, target);
  if (!factor) return std::nullopt;
  std::vector<EdgeId> kept;
  for (EdgeId id : factor->edge_ids) {
    if (id < first_extra) kept.push_back(id);
  }
  return Factor(std::move(kept));
}

bool satisfies_two_point(const MultiGraph& g, const Factor& f,
                         const VertexIntMap& lower, const VertexIntMap& upper) {
  const auto deg = factor_degrees(g, f);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (deg[v] != lower[v] && deg[v] != upper[v]) return false;
  }
  return true;
}

FactorSearch find_two_point_factor(const MultiGraph& g,
                                   const VertexIntMap& lower,
                                   const VertexIntMap& upper,
                                   std::optional<Pin> pin,
                                   const SearchOptions& options) {
  check_bounds(g, lower, upper);
  const int n = g.num_vertices();
  VertexIntMap lo = lower, hi = upper;
  if (pin) {
    if (pin->vertex < 0 || pin->vertex >= n) throw InputError("pin vertex out of range");
    if (pin->value != lo[pin->vertex] && pin->value != hi[pin->vertex]) {
      throw InputError("pin value must be g(z) or f(z)");
    }
    lo[pin->vertex] = hi[pin->vertex] = pin->value;
  }
  // Out-of-range values can never be realised.
  std::vector<int> gap;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree_at(v);
    const bool lo_ok = lo[v] >= 0 && lo[v] <= d;
    const bool hi_ok = hi[v] >= 0 && hi[v] <= d;
    if (!lo_ok && !hi_ok) return {Status::kNone, std::nullopt};
    if (!lo_ok) lo[v] = hi[v];
    if (!hi_ok) hi[v] = lo[v];
    if (lo[v] != hi[v]) gap.push_back(v);
  }
  if (gap.empty()) {
    auto f = find_f_factor(g, lo);
    return {f ? Status::kFound : Status::kNone, f};
  }
  // The interval relaxation must be feasible.
  auto relaxed = find_interval_factor(g, lo, hi);
  if (!relaxed) return {Status::kNone, std::nullopt};
  if (satisfies_two_point(g, *relaxed, lo, hi)) {
    return {Status::kFound, relaxed};
  }

  long long base_parity = 0;
  for (int v = 0; v < n; ++v) base_parity += lo[v];
  const int gaps = static_cast<int>(gap.size());

  if (gaps <= options.exhaustive_cap) {
    // Every selector of even total, starting from the rounding of the
    // relaxation.
    const auto rdeg = factor_degrees(g, *relaxed);
    std::uint32_t start = 0;
    for (int i = 0; i < gaps; ++i) {
      const int v = gap[i];
      if (2 * rdeg[v] > lo[v] + hi[v]) start |= 1U << i;
    }
    const std::uint32_t count = 1U << gaps;
    VertexIntMap target = lo;
    for (std::uint32_t step = 0; step < count; ++step) {
      const std::uint32_t sel = start ^ step;
      long long parity = base_parity;
      for (int i = 0; i < gaps; ++i) {
        const int v = gap[i];
        target[v] = ((sel >> i) & 1U) ? hi[v] : lo[v];
        if ((sel >> i) & 1U) parity += hi[v] - lo[v];
      }
      if (parity % 2 != 0) continue;
      if (auto f = find_f_factor(g, target)) return {Status::kFound, f};
    }
    return {Status::kNone, std::nullopt};
  }

  // Above the cap: randomized rounding of the relaxation.
  std::mt19937_64 rng(options.seed);
  const auto rdeg = factor_degrees(g, *relaxed);
  for (int attempt = 0; attempt < options.budget; ++attempt) {
    VertexIntMap target = lo;
    long long parity = base_parity;
    for (int v : gap) {
      bool up;
      if (rdeg[v] == hi[v]) {
        up = true;
      } else if (rdeg[v] == lo[v]) {
        up = false;
      } else {
        up = rng() & 1U;
      }
      if (attempt > 0 && rng() % 4 == 0) up = !up;
      target[v] = up ? hi[v] : lo[v];
      if (up) parity += hi[v] - lo[v];
    }
    if (parity % 2 != 0) {
      std::vector<int> odd;
      for (int v : gap) {
        if ((hi[v] - lo[v]) % 2 != 0) odd.push_back(v);
      }
      if (odd.empty()) return {Status::kNone, std::nullopt};
      const int v = odd[rng() % odd.size()];
      target[v] = target[v] == hi[v] ? lo[v] : hi[v];
    }
    if (auto f = find_f_factor(g, target)) return {Status::kFound, f};
  }
  return {Status::kUnknown, std::nullopt};
}

// ---------------------------------------------------------------------------
// Enumeration oracle

namespace {

template <typename Visit>
void enumerate_subsets(const MultiGraph& g, const DegreePredicate& pred,
                       int cap, Visit&& visit) {
  const int m = g.num_edges();
  if (m > cap) {
    throw CapExceeded("enumerate_factors: " + std::to_string(m) +
                      " edges exceeds the cap of " + std::to_string(cap));
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[a].id < g.edges()[b].id;
  });
  std::vector<int> deg(g.num_vertices(), 0);
  std::vector<EdgeId> chosen;
  bool stop = false;
  // Preorder over increasing index sequences yields lexicographic order of
  // the sorted id lists.
  auto rec = [&](auto&& self, int next) -> void {
    if (pred(deg)) {
      if (!visit(chosen)) {
        stop = true;
        return;
      }
    }
    for (int i = next; i < m && !stop; ++i) {
      const Edge& e = g.edges()[order[i]];
      ++deg[e.u];
      ++deg[e.v];
      chosen.push_back(e.id);
      self(self, i + 1);
      chosen.pop_back();
      --deg[e.u];
      --deg[e.v];
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Factor> enumerate_factors(const MultiGraph& g,
                                      const DegreePredicate& pred, int cap) {
  std::vector<Factor> out;
  enumerate_subsets(g, pred, cap, [&](const std::vector<EdgeId>& ids) {
    out.emplace_back(ids);
    return true;
  });
  return out;
}

std::optional<Factor> first_factor(const MultiGraph& g,
                                   const DegreePredicate& pred, int cap) {
  std::optional<Factor> out;
  enumerate_subsets(g, pred, cap, [&](const std::vector<EdgeId>& ids) {
    out = Factor(ids);
    return false;
  });
  return out;
}

}  // namespace gfactor
