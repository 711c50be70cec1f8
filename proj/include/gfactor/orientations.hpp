#pragma once

#include <optional>
#include <vector>

#include "gfactor/connectivity.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/graph.hpp"

namespace gfactor {

// Direction per edge (indexed like MultiGraph::edges()): false keeps the
// stored order u -> v, true flips it. A loop adds exactly 1 to the
// out-degree of its vertex.
struct Orientation {
  std::vector<char> reversed;

  static Orientation as_stored(const MultiGraph& g) {
    return {std::vector<char>(g.num_edges(), 0)};
  }
  int tail(const MultiGraph& g, int edge_index) const;
  int head(const MultiGraph& g, int edge_index) const;
  bool operator==(const Orientation&) const = default;
};

std::vector<int> out_degrees(const MultiGraph& g, const Orientation& o);

// d+(v) = d(v)/2 everywhere. Throws InputError naming an odd-degree vertex.
Orientation eulerian_orientation(const MultiGraph& g);

// lower(v) <= d+(v) <= upper(v); exact (nullopt iff infeasible).
std::optional<Orientation> interval_orientation(const MultiGraph& g,
                                                const VertexIntMap& lower,
                                                const VertexIntMap& upper);

struct OrientationSearch {
  Status status = Status::kNone;
  std::optional<Orientation> orientation;
};

// d+(v) in {p(v), q(v)} everywhere and d+(pin.vertex) = pin.value when
// pinned. Complete when the number of two-valued vertices is at most
// options.exhaustive_cap.
OrientationSearch two_point_orientation(const MultiGraph& g,
                                        const VertexIntMap& p,
                                        const VertexIntMap& q,
                                        std::optional<Pin> pin = std::nullopt,
                                        const SearchOptions& options = {});

// True when p <= d/2 <= q and |q - p| <= k hold at every vertex and the
// graph is ceil((3k/2 + 1)(k - 1))-tree-connected.
bool z_defective_hypotheses_hold(const MultiGraph& g, const VertexIntMap& p,
                                 const VertexIntMap& q, int k);

// Tree count required by the z-defective orientation regime.
int z_defective_tree_count(int k);

// d+(v) in {p(v), q(v)} for v != z and
//   d(z)/2 - x <= d+(z) < d(z)/2 + k - x,   x in [0, k).
// Under verified hypotheses a failed complete search throws
// TheoremViolation.
OrientationSearch z_defective_orientation(const MultiGraph& g,
                                          const VertexIntMap& p,
                                          const VertexIntMap& q, int z,
                                          const Rational& x, int k,
                                          const SearchOptions& options = {});

// Integer window [lo, hi] allowed at z by the defective contract.
std::pair<int, int> z_defective_window(int degree, const Rational& x, int k);

// Bipartite correspondence: F's edges point X -> Y, all others Y -> X.
// Throws InputError unless g is bipartite with respect to `part`.
Orientation factor_to_orientation(const MultiGraph& g, const Bipartition& part,
                                  const Factor& f);
Factor orientation_to_factor(const MultiGraph& g, const Bipartition& part,
                             const Orientation& o);

}  // namespace gfactor
