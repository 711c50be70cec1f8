#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"

namespace gfactor {

inline constexpr int kInfiniteConnectivity = std::numeric_limits<int>::max();
inline constexpr int kBipartiteIndexCap = 20;
inline constexpr int kToughnessCap = 16;

// Minimum d_G(X) over proper nonempty X (Stoer-Wagner on multiplicities).
// kInfiniteConnectivity for graphs with fewer than two vertices.
int edge_connectivity(const MultiGraph& g);

// m pairwise edge-disjoint spanning trees.
struct TreePacking {
  std::vector<Factor> trees;
};

// Nash-Williams/Tutte obstruction: a vertex partition with fewer than
// m(|P| - 1) edges between distinct parts.
struct PackingRefusal {
  std::vector<std::vector<int>> parts;  // vertex positions
  int cross_edges = 0;
  int required = 0;  // m(|P| - 1)
};

struct PackingResult {
  std::optional<TreePacking> packing;
  std::optional<PackingRefusal> refusal;
  bool ok() const { return packing.has_value(); }
};

// Matroid-union augmentation over the graphic matroid. `order` optionally
// fixes the sequence (edge indices) in which edges are offered; it changes
// which packing is found, never whether one is.
PackingResult spanning_tree_packing(const MultiGraph& g, int m,
                                    std::span<const int> order = {});

bool is_tree_connected(const MultiGraph& g, int m);

// Largest m with an m-tree packing.
int tree_packing_number(const MultiGraph& g);

// Checks a packing independently: m trees, each spanning, acyclic and
// connected, pairwise edge-disjoint, all edges from g.
bool is_valid_tree_packing(const MultiGraph& g, const TreePacking& p, int m);

struct BipartiteIndex {
  int value = 0;           // exact value when `exact`, else upper bound
  int lower = 0;           // certified lower bound
  bool exact = false;
  Bipartition witness;     // achieves `value`
};

// Exact minimum of e_G(X) + e_G(Y) over bipartitions; throws CapExceeded
// above kBipartiteIndexCap vertices.
BipartiteIndex bipartite_index(const MultiGraph& g,
                               int cap = kBipartiteIndexCap);

// Labeled bounds for any size: local-search upper bound and the odd-cycle
// packing lower bound evaluated on the local-search bipartition.
BipartiteIndex bipartite_index_bounds(const MultiGraph& g, std::uint64_t seed,
                                      int restarts = 16);

// Exact below the cap, bounds above it.
BipartiteIndex bipartite_index_auto(const MultiGraph& g, std::uint64_t seed = 0);

struct OddCyclePacking {
  bool holds = false;
  std::vector<Factor> cycles;  // k edge-disjoint odd cycles when holds
};

// True iff G[X,Y] packs k spanning trees and e_G(X) + e_G(Y) >= k; the
// certificate closes tree i with intra-part edge i.
OddCyclePacking odd_cycle_packing_bound(const MultiGraph& g,
                                        const Bipartition& p, int k);

// Connected spanning factor with all degrees even, built from two
// edge-disjoint spanning trees. Refusal carries the packing obstruction.
struct EulerianSubgraphResult {
  std::optional<Factor> factor;
  std::optional<PackingRefusal> refusal;
};
EulerianSubgraphResult spanning_eulerian_subgraph(const MultiGraph& g);

// Exact nonnegative rational, always reduced.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  std::string to_string() const;
};

struct Toughness {
  bool infinite = false;  // no vertex set disconnects G
  Rational value;
  std::vector<int> witness;  // vertex positions of S
  int witness_components = 0;
};

// min |S| / omega(G - S) over S with omega(G - S) >= 2.
Toughness toughness(const MultiGraph& g, int cap = kToughnessCap);

}  // namespace gfactor
