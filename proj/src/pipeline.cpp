#include "gfactor/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "gfactor/decompositions.hpp"
#include "gfactor/orientations.hpp"

namespace gfactor {
namespace {

struct Piece {
  Status status = Status::kNone;
  Factor factor;
  std::string reason;
};

int max_gap(const VertexIntMap& lower, const VertexIntMap& upper) {
  int gap = 0;
  for (std::size_t v = 0; v < lower.size(); ++v) {
    gap = std::max(gap, std::abs(upper[v] - lower[v]));
  }
  return gap;
}

int resolve_k(const VertexIntMap& lower, const VertexIntMap& upper,
              const TheoremParams& params) {
  return params.k > 0 ? params.k : std::max(1, max_gap(lower, upper));
}

void check_functions(const MultiGraph& g, const VertexIntMap& lower,
                     const VertexIntMap& upper) {
  validate(g, lower, "g");
  validate(g, upper, "f");
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (lower[v] > upper[v]) {
      throw InputError("g(v) > f(v) at vertex " + std::to_string(g.vertex_id(v)));
    }
  }
}

// Records failed hypotheses; refuses unless they are assumed.
class Gate {
 public:
  Gate(const PipelineOptions& options, FactorCertificate& cert)
      : options_(options), cert_(cert) {}

  bool require(bool ok, const std::string& name) {
    if (ok) return true;
    verified_ = false;
    cert_.derivation.push_back("hypothesis fails: " + name);
    if (options_.assume_hypotheses) return true;
    cert_.status = Status::kRefused;
    cert_.reason = name;
    return false;
  }

  // Preconditions the construction cannot run without.
  bool hard(bool ok, const std::string& name) {
    if (ok) return true;
    verified_ = false;
    cert_.status = Status::kRefused;
    cert_.reason = name;
    return false;
  }

  bool verified() const { return verified_; }

 private:
  const PipelineOptions& options_;
  FactorCertificate& cert_;
  bool verified_ = true;
};

// A proof step that must succeed under verified hypotheses.
void assert_step(bool ok, bool verified, const std::string& what) {
  if (!ok && verified) throw TheoremViolation(what);
}

bool windows_hold(const MultiGraph& g, const VertexIntMap& lower,
                  const VertexIntMap& upper, int m, int m0) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree_at(v);
    if (2 * (lower[v] + m0) > d || d > 2 * (upper[v] - m)) return false;
  }
  return true;
}

bool gaps_within(const VertexIntMap& lower, const VertexIntMap& upper, int k) {
  return max_gap(lower, upper) <= k;
}

bool bi_at_least(const MultiGraph& g, int k, std::uint64_t seed) {
  if (k <= 0) return true;
  return bipartite_index_auto(g, seed).lower >= k;
}

bool is_selector(const VertexIntMap& lower, const VertexIntMap& upper,
                 const VertexIntMap& h) {
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h[v] != lower[v] && h[v] != upper[v]) return false;
  }
  return true;
}

VertexIntMap shifted(const VertexIntMap& a, const std::vector<int>& by,
                     int divisor) {
  VertexIntMap out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = a[v] - by[v] / divisor;
  return out;
}

std::string join_ints(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

void fill_report(const MultiGraph& g, FactorCertificate& cert,
                 const VertexIntMap& lower, const VertexIntMap& upper) {
  const auto deg = factor_degrees(g, cert.factor);
  cert.degree_report.clear();
  for (int v = 0; v < g.num_vertices(); ++v) {
    DegreeEntry e{g.vertex_id(v), deg[v], {lower[v]}};
    if (upper[v] != lower[v]) e.allowed.push_back(upper[v]);
    cert.degree_report.push_back(std::move(e));
  }
}

void finish(const MultiGraph& g, FactorCertificate& cert, const Factor& f,
            const VertexIntMap& lower, const VertexIntMap& upper, int m = 0,
            int m0 = 0) {
  cert.factor = f;
  cert.status = Status::kFound;
  fill_report(g, cert, lower, upper);
  if (m > 0 || m0 > 0) {
    auto hp = spanning_tree_packing(g.restrict(f), m);
    auto cp = spanning_tree_packing(g.restrict(factor_difference(g.all_edges(), f)), m0);
    if (hp.ok()) cert.h_packing = std::move(*hp.packing);
    if (cp.ok()) cert.complement_packing = std::move(*cp.packing);
  }
  if (!verify_certificate(g, cert, m, m0)) {
    throw std::logic_error("certificate failed re-verification");
  }
}

Piece half_core(const MultiGraph& g, const VertexIntMap& i, bool verified,
                FactorCertificate& cert, const std::string& tag) {
  const int n = g.num_vertices();
  VertexIntMap f(n);
  bool in_range = true;
  for (int v = 0; v < n; ++v) {
    f[v] = g.degree_at(v) / 2 + i[v];
    in_range = in_range && 0 <= f[v] && f[v] <= g.degree_at(v);
  }
  std::optional<Factor> found;
  if (in_range) found = find_f_factor(g, f);
  if (!found) {
    assert_step(false, verified, tag + ": no half-degree factor under verified hypotheses");
    return {Status::kNone, {}, tag + ": no factor with d_F = d/2 + i"};
  }
  cert.derivation.push_back(tag + ": f-factor with f = d/2 + i, |F| = " +
                            std::to_string(found->size()));
  return {Status::kFound, std::move(*found), {}};
}

// Bipartite two-point factor via the orientation correspondence. z, when
// given, gets d_F(z) = h(z); the parts are swapped so that z lies in X.
Piece bipartite_core(const MultiGraph& g, Bipartition part,
                     const VertexIntMap& lower, const VertexIntMap& upper,
                     const VertexIntMap& h, std::optional<int> z,
                     const PipelineOptions& options, bool verified,
                     FactorCertificate& cert, const std::string& tag) {
  const int n = g.num_vertices();
  if (z && !part.is_x(*z)) {
    part = part.swapped();
    cert.derivation.push_back(tag + ": swapped parts so that z lies in X");
  }
  VertexIntMap p(n), q(n), t(n);
  for (int v = 0; v < n; ++v) {
    const int d = g.degree_at(v);
    if (part.is_x(v)) {
      p[v] = lower[v];
      q[v] = upper[v];
      t[v] = h[v];
    } else {
      p[v] = d - upper[v];
      q[v] = d - lower[v];
      t[v] = d - h[v];
    }
  }
  std::optional<Pin> pin;
  if (z) pin = Pin{*z, t[*z]};
  SearchOptions search = options.search;
  search.seed = options.seed;
  OrientationSearch res = two_point_orientation(g, p, q, pin, search);
  if (res.status != Status::kFound) {
    assert_step(res.status != Status::kNone, verified,
                tag + ": no {p,q}-orientation under verified hypotheses");
    return {res.status, {}, tag + ": no {p,q}-orientation found"};
  }
  Factor f = orientation_to_factor(g, part, *res.orientation);
  cert.derivation.push_back(tag + ": {p,q}-orientation with p = [" + join_ints(p) +
                            "], q = [" + join_ints(q) + "], mapped X->Y");
  return {Status::kFound, std::move(f), {}};
}

struct Shifted {
  MultiGraph g1, g2;
  std::vector<int> d1, d2;
};

Shifted split_graph(const MultiGraph& g, const Factor& first, const Factor& second) {
  Shifted s{g.restrict(first), g.restrict(second), {}, {}};
  s.d1 = s.g1.degrees();
  s.d2 = s.g2.degrees();
  return s;
}

Piece bi_large_core(const MultiGraph& g, const VertexIntMap& lower,
                    const VertexIntMap& upper, Bipartition part, int k,
                    const PipelineOptions& options, bool verified,
                    FactorCertificate& cert, const std::string& tag) {
  const int n = g.num_vertices();
  const int m1 = z_defective_tree_count(k);
  const int m2 = 2 * k;
  EulerianDecomposition dec = decompose_eulerian(g, part, m1, m2);
  if (dec.status != Status::kFound) {
    assert_step(false, verified, tag + ": decomposition refused under verified hypotheses");
    return {Status::kRefused, {}, "G[X,Y] does not pack m1 + m2 + 1 trees"};
  }
  cert.pieces[tag + ".G1"] = dec.bipartite_part;
  cert.pieces[tag + ".G2"] = dec.eulerian_part;
  cert.derivation.push_back(tag + ": decompose_eulerian m1 = " + std::to_string(m1) +
                            ", m2 = " + std::to_string(m2));
  int z = 0;
  for (int v = 0; v < n; ++v) {
    if ((upper[v] - lower[v]) % 2 != 0) {
      z = v;
      break;
    }
  }
  if (n > 0 && !part.is_x(z)) part = part.swapped();
  const Shifted s = split_graph(g, dec.bipartite_part, dec.eulerian_part);
  const VertexIntMap g1 = shifted(lower, s.d2, 2);
  const VertexIntMap f1 = shifted(upper, s.d2, 2);
  bool window = true;
  for (int v = 0; v < n; ++v) window = window && 2 * g1[v] <= s.d1[v] && s.d1[v] <= 2 * f1[v];
  assert_step(window, verified, tag + ": shifted window g' <= d_G1/2 <= f' fails");

  VertexIntMap p(n), q(n);
  for (int v = 0; v < n; ++v) {
    if (part.is_x(v)) {
      p[v] = g1[v];
      q[v] = f1[v];
    } else {
      p[v] = s.d1[v] - f1[v];
      q[v] = s.d1[v] - g1[v];
    }
  }
  const int dz = n > 0 ? g.degree_at(z) : 0;
  Rational x(std::max(0, dz - upper[z] - lower[z] + k), 2);
  if (x >= Rational(k)) x = Rational(2 * k - 1, 2);
  SearchOptions search = options.search;
  search.seed = options.seed;
  OrientationSearch res = z_defective_orientation(s.g1, p, q, z, x, k, search);
  if (res.status != Status::kFound) {
    assert_step(res.status != Status::kNone, verified,
                tag + ": no z-defective orientation under verified hypotheses");
    return {res.status, {}, tag + ": no z-defective orientation found"};
  }
  const Factor f_one = orientation_to_factor(s.g1, part, *res.orientation);
  const int dz1 = factor_degrees(g, f_one)[z];
  cert.derivation.push_back(tag + ": z-defective orientation at z = " +
                            std::to_string(g.vertex_id(z)) + ", x = " + x.to_string() +
                            ", d_F1(z) = " + std::to_string(dz1));

  const int e2 = s.g2.num_edges();
  std::optional<int> t;
  for (int cand : {lower[z] - dz1 - s.d2[z] / 2, upper[z] - dz1 - s.d2[z] / 2}) {
    if (((cand - e2) % 2 + 2) % 2 != 0) continue;
    if (!t || std::abs(cand) < std::abs(*t)) t = cand;
  }
  if (!t) {
    assert_step(false, verified, tag + ": no t with t = |E(G2)| (mod 2)");
    return {Status::kNone, {}, tag + ": no parity-compatible t"};
  }
  assert_step(std::abs(*t) <= k, verified, tag + ": |t| <= k fails");
  cert.derivation.push_back(tag + ": t = " + std::to_string(*t));
  VertexIntMap i(n, 0);
  i[z] = *t;
  Piece two = half_core(s.g2, i, verified, cert, tag + ".G2");
  if (two.status != Status::kFound) return two;
  return {Status::kFound, factor_union(f_one, two.factor), {}};
}

std::optional<Bipartition> pick_bi_large_part(const MultiGraph& g, int k,
                                              const PipelineOptions& options) {
  auto good = [&](const Bipartition& p) {
    return intra_edges(g, p) >= k - 1 &&
           is_tree_connected(g.restrict(induced_bipartite_factor(g, p)), 3 * k * k);
  };
  if (options.hint) {
    validate(g, *options.hint);
    return good(*options.hint) ? options.hint : std::nullopt;
  }
  std::mt19937_64 rng(options.seed);
  const int n = g.num_vertices();
  for (int attempt = 0; attempt < options.budget; ++attempt) {
    Bipartition p;
    p.in_x.resize(n);
    for (int v = 0; v < n; ++v) p.in_x[v] = rng() & 1U;
    // Local max-cut from a random start keeps G[X,Y] dense.
    for (bool moved = true; moved;) {
      moved = false;
      for (int v = 0; v < n; ++v) {
        int same = 0, cross = 0;
        for (int ei : g.incidence()[v]) {
          const Edge& e = g.edges()[ei];
          if (!e.is_loop()) (p.in_x[e.other(v)] == p.in_x[v] ? same : cross) += 1;
        }
        if (same > cross) {
          p.in_x[v] = !p.in_x[v];
          moved = true;
        }
      }
    }
    if (good(p)) return p;
  }
  return std::nullopt;
}

}  // namespace

int part_difference(const Bipartition& part, const VertexIntMap& h) {
  int diff = 0;
  for (std::size_t v = 0; v < h.size(); ++v) diff += part.in_x[v] ? h[v] : -h[v];
  return diff;
}

std::optional<VertexIntMap> selector_with_difference(
    const Bipartition& part, const VertexIntMap& lower,
    const VertexIntMap& upper, const std::function<bool(int)>& accept) {
  const int n = static_cast<int>(lower.size());
  // Choosing f(v) moves the difference by +gap on X and -gap on Y.
  int lo = part_difference(part, lower), hi = lo;
  std::vector<int> step(n);
  for (int v = 0; v < n; ++v) {
    step[v] = part.in_x[v] ? upper[v] - lower[v] : lower[v] - upper[v];
    (step[v] > 0 ? hi : lo) += step[v];
  }
  const int width = hi - lo + 1;
  const int base = part_difference(part, lower);
  // reach[v][s]: difference lo + s attainable by the first v vertices.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(width, 0));
  reach[0][base - lo] = 1;
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < width; ++s) {
      if (!reach[v][s]) continue;
      reach[v + 1][s] = 1;
      reach[v + 1][s + step[v]] = 1;
    }
  }
  std::optional<int> best;
  for (int s = 0; s < width; ++s) {
    const int d = lo + s;
    if (!reach[n][s] || !accept(d)) continue;
    if (!best || std::abs(d) < std::abs(*best)) best = d;
  }
  if (!best) return std::nullopt;
  VertexIntMap h(n);
  int s = *best - lo;
  for (int v = n; v-- > 0;) {
    // Prefer g(v) when both choices stay reachable.
    if (reach[v][s]) {
      h[v] = lower[v];
    } else {
      h[v] = upper[v];
      s -= step[v];
    }
  }
  return h;
}

std::optional<VertexIntMap> balanced_selector(const MultiGraph& g,
                                              const Bipartition& part,
                                              const VertexIntMap& lower,
                                              const VertexIntMap& upper) {
  validate(g, part);
  check_functions(g, lower, upper);
  return selector_with_difference(part, lower, upper, [](int d) { return d == 0; });
}

bool parity_criterion(const VertexIntMap& lower, const VertexIntMap& upper) {
  long long sum = 0;
  for (std::size_t v = 0; v < lower.size(); ++v) {
    if ((upper[v] - lower[v]) % 2 != 0) return true;
    sum += upper[v];
  }
  return sum % 2 == 0;
}

FactorCertificate eulerian_half_factor(const MultiGraph& g,
                                       const VertexIntMap& i,
                                       const PipelineOptions& options) {
  validate(g, i, "i");
  FactorCertificate cert;
  Gate gate(options, cert);
  int t = 0;
  for (int x : i) t += std::abs(x);
  if (!gate.hard(is_eulerian(g), "G is Eulerian")) return cert;
  if (!gate.require(is_connected(g), "G is connected")) return cert;
  if (!gate.require((g.num_edges() - t) % 2 == 0, "|E(G)| = t (mod 2)")) return cert;
  if (!gate.require(t == 0 || edge_connectivity(g) >= 2 * t - 1,
                    "G is (2t-1)-edge-connected")) {
    return cert;
  }
  if (!gate.require(bi_at_least(g, t - 1, options.seed), "bi(G) >= t-1")) return cert;
  cert.hypotheses_verified = gate.verified();
  Piece piece = half_core(g, i, gate.verified(), cert, "eulerian");
  const int n = g.num_vertices();
  VertexIntMap target(n);
  for (int v = 0; v < n; ++v) target[v] = g.degree_at(v) / 2 + i[v];
  if (piece.status != Status::kFound) {
    cert.status = piece.status;
    cert.reason = piece.reason;
    return cert;
  }
  finish(g, cert, piece.factor, target, target);
  return cert;
}

FactorCertificate eulerian_half_factor_at(const MultiGraph& g, int z, int t,
                                          const PipelineOptions& options) {
  if (z < 0 || z >= g.num_vertices()) throw InputError("z out of range");
  FactorCertificate cert;
  Gate gate(options, cert);
  const int at = std::abs(t);
  if (!gate.hard(is_eulerian(g), "G is Eulerian")) return cert;
  if (!gate.require(is_connected(g), "G is connected")) return cert;
  if (!gate.require(((t - g.num_edges()) % 2 + 2) % 2 == 0, "t = |E(G)| (mod 2)")) {
    return cert;
  }
  if (!gate.require(is_tree_connected(g, 2 * at), "G is 2|t|-tree-connected")) {
    return cert;
  }
  if (!gate.require(bi_at_least(g, at - 1, options.seed), "bi(G) >= |t|-1")) {
    return cert;
  }
  cert.hypotheses_verified = gate.verified();
  VertexIntMap i(g.num_vertices(), 0);
  i[z] = t;
  Piece piece = half_core(g, i, gate.verified(), cert, "eulerian");
  if (piece.status != Status::kFound) {
    cert.status = piece.status;
    cert.reason = piece.reason;
    return cert;
  }
  VertexIntMap target(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) target[v] = g.degree_at(v) / 2 + i[v];
  finish(g, cert, piece.factor, target, target);
  return cert;
}

FactorCertificate gf_factor_bipartite(const MultiGraph& g,
                                      const Bipartition& part,
                                      const VertexIntMap& lower,
                                      const VertexIntMap& upper,
                                      const VertexIntMap& h,
                                      std::optional<int> z,
                                      const TheoremParams& params,
                                      const PipelineOptions& options) {
  validate(g, part);
  check_functions(g, lower, upper);
  validate(g, h, "h");
  if (z && (*z < 0 || *z >= g.num_vertices())) throw InputError("z out of range");
  FactorCertificate cert;
  Gate gate(options, cert);
  const int k = resolve_k(lower, upper, params);
  if (!gate.hard(is_bipartite_with(g, part), "G is bipartite with bipartition (X,Y)")) {
    return cert;
  }
  if (!gate.hard(is_selector(lower, upper, h) && part_difference(part, h) == 0,
                 "h is a balanced selector")) {
    return cert;
  }
  if (!gate.require(gaps_within(lower, upper, k), "|f-g| <= k")) return cert;
  if (!gate.require(windows_hold(g, lower, upper, 0, 0), "g <= d/2 <= f")) return cert;
  if (!gate.require(is_tree_connected(g, 4 * k * k), "G is 4k^2-tree-connected")) {
    return cert;
  }
  cert.hypotheses_verified = gate.verified();
  Piece piece = bipartite_core(g, part, lower, upper, h, z, options, gate.verified(),
                               cert, "bipartite");
  if (piece.status != Status::kFound) {
    cert.status = piece.status;
    cert.reason = piece.reason;
    return cert;
  }
  if (z && factor_degrees(g, piece.factor)[*z] != h[*z]) {
    throw std::logic_error("pinned degree at z not achieved");
  }
  finish(g, cert, piece.factor, lower, upper);
  return cert;
}

FactorCertificate gf_factor_almost_bipartite(const MultiGraph& g,
                                             const VertexIntMap& lower,
                                             const VertexIntMap& upper,
                                             const VertexIntMap& h,
                                             const TheoremParams& params,
                                             const PipelineOptions& options) {
  check_functions(g, lower, upper);
  validate(g, h, "h");
  FactorCertificate cert;
  Gate gate(options, cert);
  const int n = g.num_vertices();
  const int k = resolve_k(lower, upper, params);
  Bipartition part;
  if (options.hint) {
    part = *options.hint;
    validate(g, part);
  } else {
    part = bipartite_index_auto(g, options.seed).witness;
    if (part_difference(part, h) < 0) part = part.swapped();
  }
  const int ex = partition_stats(g, part.in_x).inside;
  const int e = intra_edges(g, part);
  const int diff = part_difference(part, h);
  long long hsum = std::accumulate(h.begin(), h.end(), 0LL);
  if (!gate.hard(is_selector(lower, upper, h), "h(v) in {g(v), f(v)}")) return cert;
  if (!gate.require(gaps_within(lower, upper, k), "|f-g| <= k")) return cert;
  if (!gate.require(windows_hold(g, lower, upper, 0, 0), "g <= d/2 <= f")) return cert;
  if (!gate.require(e <= k - 1, "e(X)+e(Y) <= k-1")) return cert;
  if (!gate.require(hsum % 2 == 0, "sum h is even")) return cert;
  if (!gate.require(0 <= diff && diff <= 2 * ex + 1,
                    "2e(X)+1 >= sum_X h - sum_Y h >= 0")) {
    return cert;
  }
  if (!gate.require(is_tree_connected(g.restrict(induced_bipartite_factor(g, part)),
                                      4 * k * k + 2 * k),
                    "G[X,Y] is (4k^2+2k)-tree-connected")) {
    return cert;
  }
  const bool verified = gate.verified();
  cert.hypotheses_verified = verified;

  if (e == 0) {
    cert.derivation.push_back("almost-bipartite: no intra-part edges, bipartite case");
    Piece piece = bipartite_core(g, part, lower, upper, h, std::nullopt, options,
                                 verified, cert, "bipartite");
    if (piece.status != Status::kFound) {
      cert.status = piece.status;
      cert.reason = piece.reason;
      return cert;
    }
    finish(g, cert, piece.factor, lower, upper);
    return cert;
  }

  EulerianDecomposition dec = decompose_eulerian(g, part, 4 * k * k, 2 * k - 1);
  if (dec.status != Status::kFound) {
    assert_step(false, verified, "almost-bipartite: decomposition refused");
    cert.status = Status::kRefused;
    cert.reason = "G[X,Y] does not pack 4k^2+2k trees";
    return cert;
  }
  cert.pieces["G1"] = dec.bipartite_part;
  cert.pieces["G2"] = dec.eulerian_part;
  const Shifted s = split_graph(g, dec.bipartite_part, dec.eulerian_part);
  cert.derivation.push_back("decompose_eulerian m1 = " + std::to_string(4 * k * k) +
                            ", m2 = " + std::to_string(2 * k - 1));

  // sum_X d_G2/2 - e_G2(X) = sum_Y d_G2/2 - e_G2(Y)
  long long lhs = 0, rhs = 0;
  for (int v = 0; v < n; ++v) (part.is_x(v) ? lhs : rhs) += s.d2[v];
  const int e2x = partition_stats(s.g2, part.in_x).inside;
  const int e2y = e - e2x;
  if (lhs - 2 * e2x != rhs - 2 * e2y) {
    throw std::logic_error("part-sum identity fails on the Eulerian part");
  }

  const int t = diff - ex + (e - ex);
  assert_step(std::abs(t) <= e, verified, "almost-bipartite: |t| <= e(X)+e(Y) fails");
  assert_step(((t - s.g2.num_edges()) % 2 + 2) % 2 == 0, verified,
              "almost-bipartite: t = |E(G2)| (mod 2) fails");
  const auto xs = part.x_positions();
  const int z = xs.empty() ? 0 : xs.front();
  VertexIntMap g1 = shifted(lower, s.d2, 2);
  VertexIntMap f1 = shifted(upper, s.d2, 2);
  VertexIntMap h1 = shifted(h, s.d2, 2);
  g1[z] -= t;
  f1[z] -= t;
  h1[z] -= t;
  // Only the pinned value h'(z) matters at z, so its window is not checked.
  bool window = true;
  for (int v = 0; v < n; ++v) {
    if (v != z) window = window && 2 * g1[v] <= s.d1[v] && s.d1[v] <= 2 * f1[v];
  }
  assert_step(window, verified, "almost-bipartite: shifted window fails off z");
  cert.derivation.push_back("shift by d_G2/2 and t = " + std::to_string(t) + " at z = " +
                            std::to_string(g.vertex_id(z)));
  Piece one = bipartite_core(s.g1, part, g1, f1, h1, z, options, verified, cert, "G1");
  if (one.status != Status::kFound) {
    cert.status = one.status;
    cert.reason = one.reason;
    return cert;
  }
  VertexIntMap i(n, 0);
  i[z] = t;
  Piece two = half_core(s.g2, i, verified, cert, "G2");
  if (two.status != Status::kFound) {
    cert.status = two.status;
    cert.reason = two.reason;
    return cert;
  }
  cert.pieces["F1"] = one.factor;
  cert.pieces["F2"] = two.factor;
  finish(g, cert, factor_union(one.factor, two.factor), lower, upper);
  return cert;
}

FactorCertificate gf_factor_bi_large(const MultiGraph& g,
                                     const VertexIntMap& lower,
                                     const VertexIntMap& upper,
                                     const TheoremParams& params,
                                     const PipelineOptions& options) {
  check_functions(g, lower, upper);
  FactorCertificate cert;
  if (!parity_criterion(lower, upper)) {
    cert.status = Status::kNone;
    cert.reason = "parity: every f-g is even and sum f is odd";
    return cert;
  }
  Gate gate(options, cert);
  const int k = resolve_k(lower, upper, params);
  if (!gate.require(gaps_within(lower, upper, k), "|f-g| <= k")) return cert;
  if (!gate.require(windows_hold(g, lower, upper, 0, 0), "g <= d/2 <= f")) return cert;
  std::optional<Bipartition> part = pick_bi_large_part(g, k, options);
  if (!gate.require(part.has_value(),
                    "G[X,Y] is 3k^2-tree-connected and e(X)+e(Y) >= k-1")) {
    return cert;
  }
  if (!part) part = options.hint ? *options.hint : bipartite_index_auto(g, options.seed).witness;
  cert.hypotheses_verified = gate.verified();
  Piece piece = bi_large_core(g, lower, upper, *part, k, options, gate.verified(), cert,
                              "bi-large");
  if (piece.status != Status::kFound) {
    cert.status = piece.status;
    cert.reason = piece.reason;
    return cert;
  }
  finish(g, cert, piece.factor, lower, upper);
  return cert;
}

FactorCertificate tree_connected_gf_bipartite(
    const MultiGraph& g, const Bipartition& part, const VertexIntMap& lower,
    const VertexIntMap& upper, const VertexIntMap& h, const TheoremParams& params,
    std::optional<int> z, const PipelineOptions& options) {
  if (params.m < 0 || params.m0 < 0) throw InputError("m, m0 must be nonnegative");
  if (params.m == 0 && params.m0 == 0) {
    FactorCertificate cert =
        gf_factor_bipartite(g, part, lower, upper, h, z, params, options);
    cert.derivation.insert(cert.derivation.begin(), "m = m0 = 0: bipartite case");
    return cert;
  }
  validate(g, part);
  check_functions(g, lower, upper);
  validate(g, h, "h");
  if (z && (*z < 0 || *z >= g.num_vertices())) throw InputError("z out of range");
  FactorCertificate cert;
  Gate gate(options, cert);
  const int k = resolve_k(lower, upper, params);
  const int m = params.m, m0 = params.m0;
  if (!gate.hard(is_bipartite_with(g, part), "G is bipartite with bipartition (X,Y)")) {
    return cert;
  }
  if (!gate.hard(is_selector(lower, upper, h) && part_difference(part, h) == 0,
                 "h is a balanced selector")) {
    return cert;
  }
  if (!gate.require(gaps_within(lower, upper, k), "|f-g| <= k")) return cert;
  if (!gate.require(windows_hold(g, lower, upper, m, m0), "g+m0 <= d/2 <= f-m")) {
    return cert;
  }
  const int eulerian_trees = 2 * (m + m0);
  if (!gate.require(is_tree_connected(g, eulerian_trees + 4 * k * k),
                    "G is (2m+2m0+4k^2)-tree-connected")) {
    return cert;
  }
  const bool verified = gate.verified();
  cert.hypotheses_verified = verified;
  const int n = g.num_vertices();
  std::mt19937_64 rng(options.seed);
  std::string last_reason = "no attempt";
  for (int attempt = 0; attempt < std::max(1, options.budget / 8); ++attempt) {
    std::vector<int> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
    PackingResult packing = spanning_tree_packing(g, eulerian_trees + 4 * k * k, order);
    if (!packing.ok()) {
      assert_step(false, verified, "tree packing failed under verified hypotheses");
      cert.status = Status::kRefused;
      cert.reason = "G is (2m+2m0+4k^2)-tree-connected";
      return cert;
    }
    const auto& trees = packing.packing->trees;
    const Factor g1 = eulerian_from_trees(
        g, std::span<const Factor>(trees).first(eulerian_trees));
    const Shifted s = split_graph(g, g1, factor_difference(g.all_edges(), g1));
    DecompositionOptions dopt{options.seed + attempt, options.budget, std::nullopt};
    ComplementSplit split = split_tree_connected_complement(s.g1, m, m0, dopt);
    if (split.status != Status::kFound) {
      last_reason = "complement split: " + split.reason;
      continue;
    }
    const auto dh = factor_degrees(g, split.tree_part);
    VertexIntMap g2(n), f2(n), h2(n);
    bool window = true;
    for (int v = 0; v < n; ++v) {
      g2[v] = lower[v] - dh[v];
      f2[v] = upper[v] - dh[v];
      h2[v] = h[v] - dh[v];
      window = window && 2 * g2[v] <= s.d2[v] && s.d2[v] <= 2 * f2[v];
    }
    assert_step(window, verified, "shifted window g' <= d_G2/2 <= f' fails");
    cert.pieces["G1"] = g1;
    cert.pieces["H'"] = split.tree_part;
    cert.derivation.push_back("spanning Eulerian part from " +
                              std::to_string(eulerian_trees) + " trees, split m = " +
                              std::to_string(m) + ", m0 = " + std::to_string(m0));
    Piece piece = bipartite_core(s.g2, part, g2, f2, h2, z, options, verified, cert, "G2");
    if (piece.status != Status::kFound) {
      cert.status = piece.status;
      cert.reason = piece.reason;
      return cert;
    }
    cert.pieces["F"] = piece.factor;
    finish(g, cert, factor_union(split.tree_part, piece.factor), lower, upper, m, m0);
    if (z && factor_degrees(g, cert.factor)[*z] != h[*z]) {
      throw std::logic_error("pinned degree at z not achieved");
    }
    return cert;
  }
  cert.status = Status::kUnknown;
  cert.reason = last_reason;
  return cert;
}

FactorCertificate tree_connected_gf(const MultiGraph& g,
                                    const VertexIntMap& lower,
                                    const VertexIntMap& upper,
                                    const TheoremParams& params,
                                    const PipelineOptions& options) {
  if (params.m < 0 || params.m0 < 0) throw InputError("m, m0 must be nonnegative");
  check_functions(g, lower, upper);
  if (params.m == 0 && params.m0 == 0) {
    FactorCertificate cert = gf_factor_bi_large(g, lower, upper, params, options);
    cert.derivation.insert(cert.derivation.begin(), "m = m0 = 0: bi-large case");
    return cert;
  }
  FactorCertificate cert;
  if (!parity_criterion(lower, upper)) {
    cert.status = Status::kNone;
    cert.reason = "parity: every f-g is even and sum f is odd";
    return cert;
  }
  Gate gate(options, cert);
  const int k = resolve_k(lower, upper, params);
  const int m = params.m, m0 = params.m0;
  if (!gate.require(gaps_within(lower, upper, k), "|f-g| <= k")) return cert;
  if (!gate.require(windows_hold(g, lower, upper, m, m0), "g+m0 <= d/2 <= f-m")) {
    return cert;
  }
  if (!gate.require(is_tree_connected(g, 2 * m + 2 * m0 + 6 * k * k),
                    "G is (2m+2m0+6k^2)-tree-connected")) {
    return cert;
  }
  if (!gate.require(bi_at_least(g, k - 1, options.seed), "bi(G) >= k-1")) return cert;
  const bool verified = gate.verified();
  cert.hypotheses_verified = verified;
  const int n = g.num_vertices();

  DecompositionOptions dopt{options.seed, options.budget, options.hint};
  KeepBiDecomposition kb = decompose_keep_bi(g, m + m0, 3 * k * k, k - 1, dopt);
  if (kb.status != Status::kFound) {
    assert_step(kb.status != Status::kRefused, verified,
                "bi-preserving decomposition refused under verified hypotheses");
    cert.status = kb.status;
    cert.reason = "bi-preserving decomposition: " + kb.reason;
    return cert;
  }
  cert.pieces["G1"] = kb.eulerian_part;
  cert.pieces["G2"] = kb.remainder;
  cert.derivation.push_back("decompose_keep_bi m1 = " + std::to_string(m + m0) +
                            ", m2 = " + std::to_string(3 * k * k) +
                            ", k0 = " + std::to_string(k - 1));
  const Shifted s = split_graph(g, kb.eulerian_part, kb.remainder);
  dopt.hint.reset();
  ComplementSplit split = split_tree_connected_complement(s.g1, m, m0, dopt);
  if (split.status != Status::kFound) {
    assert_step(split.status != Status::kRefused, verified,
                "complement split refused under verified hypotheses");
    cert.status = split.status;
    cert.reason = "complement split: " + split.reason;
    return cert;
  }
  cert.pieces["H'"] = split.tree_part;
  const auto dh = factor_degrees(g, split.tree_part);
  VertexIntMap g2(n), f2(n);
  bool window = true;
  for (int v = 0; v < n; ++v) {
    g2[v] = lower[v] - dh[v];
    f2[v] = upper[v] - dh[v];
    window = window && 2 * g2[v] <= s.d2[v] && s.d2[v] <= 2 * f2[v];
  }
  assert_step(window, verified, "shifted window g' <= d_G2/2 <= f' fails");
  cert.derivation.push_back("split m = " + std::to_string(m) + ", m0 = " +
                            std::to_string(m0) + ", shift by d_H'");
  Piece piece = bi_large_core(s.g2, g2, f2, kb.part, k, options, verified, cert, "G2");
  if (piece.status != Status::kFound) {
    cert.status = piece.status;
    cert.reason = piece.reason;
    return cert;
  }
  cert.pieces["F"] = piece.factor;
  finish(g, cert, factor_union(split.tree_part, piece.factor), lower, upper, m, m0);
  return cert;
}

ToughReport tough_hypothesis_check(const MultiGraph& g,
                                   const VertexIntMap& lower,
                                   const VertexIntMap& upper,
                                   const TheoremParams& params) {
  check_functions(g, lower, upper);
  ToughReport report;
  report.toughness = toughness(g);
  const long long b2 = 4LL * params.b * params.b;
  const int k = resolve_k(lower, upper, params);
  const int m = params.m, m0 = params.m0;
  const auto& t = report.toughness;
  report.lines.push_back({"G is 4b^2-tough", t.infinite ? "inf" : t.value.to_string(),
                          std::to_string(b2), t.infinite || t.value >= Rational(b2)});
  report.lines.push_back({"|V(G)| >= 4b^2", std::to_string(g.num_vertices()),
                          std::to_string(b2), g.num_vertices() >= b2});
  const int n = g.num_vertices();
  const int floor_f = 3 * m + 2 * m0 + 6 * k * k;
  int fmin = n ? *std::min_element(upper.begin(), upper.end()) : 0;
  int fmax = n ? *std::max_element(upper.begin(), upper.end()) : 0;
  report.lines.push_back({"3m+2m0+6k^2 < f <= b",
                          "f in [" + std::to_string(fmin) + "," + std::to_string(fmax) + "]",
                          "(" + std::to_string(floor_f) + "," + std::to_string(params.b) + "]",
                          n == 0 || (fmin > floor_f && fmax <= params.b)});
  int gmin = 0, gmax = 0;
  for (int v = 0; v < n; ++v) {
    const int gap = upper[v] - lower[v];
    gmin = v ? std::min(gmin, gap) : gap;
    gmax = v ? std::max(gmax, gap) : gap;
  }
  report.lines.push_back({"m+m0 < f-g <= k",
                          "f-g in [" + std::to_string(gmin) + "," + std::to_string(gmax) + "]",
                          "(" + std::to_string(m + m0) + "," + std::to_string(k) + "]",
                          n == 0 || (gmin > m + m0 && gmax <= k)});
  report.lines.push_back({"parity criterion", parity_criterion(lower, upper) ? "holds" : "fails",
                          "holds", parity_criterion(lower, upper)});
  report.all_hold = std::all_of(report.lines.begin(), report.lines.end(),
                                [](const HypothesisLine& l) { return l.holds; });
  return report;
}

bool verify_certificate(const MultiGraph& g, const FactorCertificate& cert, int m,
                        int m0) {
  if (cert.status != Status::kFound) return false;
  validate(g, cert.factor);
  const auto deg = factor_degrees(g, cert.factor);
  if (static_cast<int>(cert.degree_report.size()) != g.num_vertices()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const DegreeEntry& e = cert.degree_report[v];
    if (e.vertex != g.vertex_id(v) || e.degree != deg[v]) return false;
    if (std::find(e.allowed.begin(), e.allowed.end(), deg[v]) == e.allowed.end()) {
      return false;
    }
  }
  if (m > 0) {
    if (!cert.h_packing ||
        !is_valid_tree_packing(g.restrict(cert.factor), *cert.h_packing, m)) {
      return false;
    }
  }
  if (m0 > 0) {
    const MultiGraph rest = g.restrict(factor_difference(g.all_edges(), cert.factor));
    if (!cert.complement_packing ||
        !is_valid_tree_packing(rest, *cert.complement_packing, m0)) {
      return false;
    }
  }
  return true;
}

}  // namespace gfactor
