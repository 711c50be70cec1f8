#include "gfactor/orientations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gfactor {

int Orientation::tail(const MultiGraph& g, int edge_index) const {
  const Edge& e = g.edges()[edge_index];
  return reversed[edge_index] ? e.v : e.u;
}

int Orientation::head(const MultiGraph& g, int edge_index) const {
  const Edge& e = g.edges()[edge_index];
  return reversed[edge_index] ? e.u : e.v;
}

std::vector<int> out_degrees(const MultiGraph& g, const Orientation& o) {
  if (static_cast<int>(o.reversed.size()) != g.num_edges()) {
    throw InputError("orientation does not match the edge set");
  }
  std::vector<int> out(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e) ++out[o.tail(g, e)];
  return out;
}

Orientation eulerian_orientation(const MultiGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree_at(v) % 2 != 0) {
      throw InputError("vertex " + std::to_string(g.vertex_id(v)) +
                       " has odd degree " + std::to_string(g.degree_at(v)));
    }
  }
  Orientation o = Orientation::as_stored(g);
  std::vector<char> used(g.num_edges(), 0);
  std::vector<std::size_t> next(g.num_vertices(), 0);
  for (int s = 0; s < g.num_vertices(); ++s) {
    // Closed trails from s until its edges run out; even degrees guarantee
    // every trail returns to s.
    for (;;) {
      int cur = s;
      bool moved = false;
      for (;;) {
        const auto& inc = g.incidence()[cur];
        while (next[cur] < inc.size() && used[inc[next[cur]]]) ++next[cur];
        if (next[cur] == inc.size()) break;
        const int e = inc[next[cur]];
        used[e] = 1;
        moved = true;
        const Edge& ed = g.edges()[e];
        o.reversed[e] = (ed.u != cur);
        cur = ed.other(cur);
      }
      if (!moved) break;
    }
  }
  return o;
}

namespace {

// Reverses a directed path found by BFS from `from` (following arcs forward
// when `forward`, backward otherwise) to any vertex accepted by `goal`.
template <typename Goal>
bool reverse_path(const MultiGraph& g, Orientation& o, int from, bool forward,
                  Goal&& goal) {
  const int n = g.num_vertices();
  std::vector<int> via(n, -2);
  via[from] = -1;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v != from && goal(v)) {
      for (int x = v; x != from;) {
        const int e = via[x];
        o.reversed[e] = !o.reversed[e];
        x = g.edges()[e].other(x);
      }
      return true;
    }
    for (int e : g.incidence()[v]) {
      const Edge& ed = g.edges()[e];
      if (ed.is_loop()) continue;
      const bool leaves = o.tail(g, e) == v;
      if (leaves != forward) continue;
      const int w = ed.other(v);
      if (via[w] != -2) continue;
      via[w] = e;
      queue.push_back(w);
    }
  }
  return false;
}

}  // namespace

std::optional<Orientation> interval_orientation(const MultiGraph& g,
                                                const VertexIntMap& lower,
                                                const VertexIntMap& upper) {
  validate(g, lower, "p");
  validate(g, upper, "q");
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    if (lower[v] > upper[v]) return std::nullopt;
  }
  Orientation o = Orientation::as_stored(g);
  std::vector<int> out = out_degrees(g, o);
  // Excess above `upper` is pushed forward along directed paths; if a
  // vertex cannot reach slack, everything it reaches is already closed
  // under outgoing arcs and the bound is infeasible.
  for (int v = 0; v < n; ++v) {
    while (out[v] > upper[v]) {
      int reached = -1;
      const bool ok = reverse_path(g, o, v, /*forward=*/true, [&](int w) {
        if (out[w] < upper[w]) {
          reached = w;
          return true;
        }
        return false;
      });
      if (!ok) return std::nullopt;
      --out[v];
      ++out[reached];
    }
  }
  // Deficit below `lower` pulls from vertices with out-degree above their
  // lower bound, walking arcs backwards.
  for (int v = 0; v < n; ++v) {
    while (out[v] < lower[v]) {
      int reached = -1;
      const bool ok = reverse_path(g, o, v, /*forward=*/false, [&](int w) {
        if (out[w] > lower[w]) {
          reached = w;
          return true;
        }
        return false;
      });
      if (!ok) return std::nullopt;
      ++out[v];
      --out[reached];
    }
  }
  return o;
}

namespace {

int loop_count(const MultiGraph& g, int v) {
  int loops = 0;
  for (int e : g.incidence()[v]) loops += g.edges()[e].is_loop();
  return loops;
}

// Search over out-degree vectors t with t(v) drawn from `choices[v]` and
// sum t = |E|, each checked exactly by interval_orientation(t, t).
OrientationSearch selector_search(const MultiGraph& g,
                                  std::vector<std::vector<int>> choices,
                                  const SearchOptions& options) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  VertexIntMap lo(n), hi(n);
  double combos = 1;
  for (int v = 0; v < n; ++v) {
    const int min_out = loop_count(g, v);
    const int max_out = g.degree_at(v) - min_out;
    auto& c = choices[v];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    c.erase(std::remove_if(c.begin(), c.end(),
                           [&](int t) { return t < min_out || t > max_out; }),
            c.end());
    if (c.empty()) return {Status::kNone, std::nullopt};
    lo[v] = c.front();
    hi[v] = c.back();
    combos *= static_cast<double>(c.size());
  }
  auto relaxed = interval_orientation(g, lo, hi);
  if (!relaxed) return {Status::kNone, std::nullopt};
  const auto seed = out_degrees(g, *relaxed);
  bool direct = true;
  for (int v = 0; v < n; ++v) {
    if (std::find(choices[v].begin(), choices[v].end(), seed[v]) ==
        choices[v].end()) {
      direct = false;
      break;
    }
  }
  if (direct) return {Status::kFound, relaxed};

  for (int v = 0; v < n; ++v) {
    std::stable_sort(choices[v].begin(), choices[v].end(), [&](int a, int b) {
      return std::abs(a - seed[v]) < std::abs(b - seed[v]);
    });
  }
  // reach[i][s]: some choice for vertices i.. sums to s.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(m + 1, 0));
  reach[n][0] = 1;
  for (int i = n - 1; i >= 0; --i) {
    for (int s = 0; s <= m; ++s) {
      if (!reach[i + 1][s]) continue;
      for (int c : choices[i]) {
        if (s + c <= m) reach[i][s + c] = 1;
      }
    }
  }
  if (!reach[0][m]) return {Status::kNone, std::nullopt};

  const bool complete = combos <= static_cast<double>(1ULL << options.exhaustive_cap);
  long long leaves = 0;
  bool out_of_budget = false;
  VertexIntMap target(n, 0);
  std::optional<Orientation> found;
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (found || out_of_budget) return;
    if (i == n) {
      if (!complete && ++leaves > options.budget) {
        out_of_budget = true;
        return;
      }
      found = interval_orientation(g, target, target);
      return;
    }
    for (int c : choices[i]) {
      const int rest = m - sum - c;
      if (rest < 0 || !reach[i + 1][rest]) continue;
      target[i] = c;
      self(self, i + 1, sum + c);
      if (found || out_of_budget) return;
    }
  };
  rec(rec, 0, 0);
  if (found) return {Status::kFound, found};
  return {out_of_budget ? Status::kUnknown : Status::kNone, std::nullopt};
}

long long ceil_div(long long a, long long b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

OrientationSearch two_point_orientation(const MultiGraph& g,
                                        const VertexIntMap& p,
                                        const VertexIntMap& q,
                                        std::optional<Pin> pin,
                                        const SearchOptions& options) {
  validate(g, p, "p");
  validate(g, q, "q");
  std::vector<std::vector<int>> choices(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (p[v] > q[v]) throw InputError("p(v) > q(v)");
    choices[v] = {p[v], q[v]};
  }
  if (pin) {
    if (pin->vertex < 0 || pin->vertex >= g.num_vertices()) {
      throw InputError("pin vertex out of range");
    }
    if (pin->value != p[pin->vertex] && pin->value != q[pin->vertex]) {
      throw InputError("pin value must be p(z) or q(z)");
    }
    choices[pin->vertex] = {pin->value};
  }
  return selector_search(g, std::move(choices), options);
}

int z_defective_tree_count(int k) {
  // (3k/2 + 1)(k - 1), rounded up
  return static_cast<int>(ceil_div(static_cast<long long>(3 * k + 2) * (k - 1), 2));
}

bool z_defective_hypotheses_hold(const MultiGraph& g, const VertexIntMap& p,
                                 const VertexIntMap& q, int k) {
  if (k < 1) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree_at(v);
    if (2 * p[v] > d || d > 2 * q[v] || std::abs(q[v] - p[v]) > k) return false;
  }
  return is_tree_connected(g, z_defective_tree_count(k));
}

std::pair<int, int> z_defective_window(int degree, const Rational& x, int k) {
  if (x.num < 0 || !(x < Rational(k))) {
    throw InputError("x must lie in [0, k)");
  }
  // d/2 - x = (d * den - 2 * num) / (2 * den)
  const long long den = 2 * x.den;
  const long long lo = ceil_div(degree * x.den - 2 * x.num, den);
  const long long hi =
      ceil_div((degree + 2LL * k) * x.den - 2 * x.num, den) - 1;
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

OrientationSearch z_defective_orientation(const MultiGraph& g,
                                          const VertexIntMap& p,
                                          const VertexIntMap& q, int z,
                                          const Rational& x, int k,
                                          const SearchOptions& options) {
  validate(g, p, "p");
  validate(g, q, "q");
  if (z < 0 || z >= g.num_vertices()) throw InputError("z out of range");
  if (k < 1) throw InputError("k must be positive");
  const auto [lo, hi] = z_defective_window(g.degree_at(z), x, k);
  std::vector<std::vector<int>> choices(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (p[v] > q[v]) throw InputError("p(v) > q(v)");
    choices[v] = {p[v], q[v]};
  }
  choices[z].clear();
  for (int w = lo; w <= hi; ++w) choices[z].push_back(w);
  OrientationSearch result = selector_search(g, std::move(choices), options);
  if (result.status == Status::kNone && z_defective_hypotheses_hold(g, p, q, k)) {
    throw TheoremViolation(
        "z-defective orientation: exhaustive search failed under verified "
        "hypotheses");
  }
  return result;
}

namespace {

void require_bipartite(const MultiGraph& g, const Bipartition& part) {
  validate(g, part);
  if (!is_bipartite_with(g, part)) {
    throw InputError("graph is not bipartite with respect to the bipartition");
  }
}

}  // namespace

Orientation factor_to_orientation(const MultiGraph& g, const Bipartition& part,
                                  const Factor& f) {
  require_bipartite(g, part);
  validate(g, f);
  Orientation o = Orientation::as_stored(g);
  for (int e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges()[e];
    const bool to_y = f.contains(ed.id);
    const int tail = (part.is_x(ed.u) == to_y) ? ed.u : ed.v;
    o.reversed[e] = tail != ed.u;
  }
  return o;
}

Factor orientation_to_factor(const MultiGraph& g, const Bipartition& part,
                             const Orientation& o) {
  require_bipartite(g, part);
  if (static_cast<int>(o.reversed.size()) != g.num_edges()) {
    throw InputError("orientation does not match the edge set");
  }
  std::vector<EdgeId> ids;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (part.is_x(o.tail(g, e))) ids.push_back(g.edges()[e].id);
  }
  return Factor(std::move(ids));
}

}  // namespace gfactor
