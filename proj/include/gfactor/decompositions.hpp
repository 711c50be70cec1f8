#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfactor/connectivity.hpp"
#include "gfactor/graph.hpp"

namespace gfactor {

// The unique subforest F of `forest` with d_F(v) = targets(v) mod 2.
// nullopt when some tree of the forest has an odd target sum.
std::optional<Factor> parity_forest(const MultiGraph& g, const Factor& forest,
                                    const std::vector<int>& targets);

// Union of trees[1..] plus the parity forest of trees[0] fixing the parity
// of every degree. With 2j trees the result is a 2j-edge-connected graph with
// all degrees even.
Factor eulerian_from_trees(const MultiGraph& g, std::span<const Factor> trees);

struct EulerianDecomposition {
  Status status = Status::kRefused;
  Factor bipartite_part;  // G1
  Factor eulerian_part;   // G2
  TreePacking bipartite_trees;       // m1 trees inside G1
  TreePacking eulerian_cross_trees;  // m2 trees inside G2[X,Y]
  std::optional<PackingRefusal> refusal;
};

// G = G1 + G2 with G1 bipartite w.r.t. `part` and m1-tree-connected, G2
// with all degrees even and m2-tree-connected. Every intra-part edge goes
// to G2. Refused unless G[X,Y] packs m1 + m2 + 1 trees.
EulerianDecomposition decompose_eulerian(const MultiGraph& g,
                                         const Bipartition& part, int m1,
                                         int m2);

struct DecompositionOptions {
  std::uint64_t seed = 0;
  int budget = 64;
  std::optional<Bipartition> hint;
};

struct KeepBiDecomposition {
  Status status = Status::kRefused;
  Factor eulerian_part;   // G1, 2m1-edge-connected, degrees even
  Factor remainder;       // G2
  Bipartition part;
  int required_intra = 0;  // min(k0, bi(G))
  std::string reason;
};

// G1 + G2 with G2[X,Y] m2-tree-connected and
// e_{G2}(X) + e_{G2}(Y) >= min(k0, bi(G)); randomized verified search.
KeepBiDecomposition decompose_keep_bi(const MultiGraph& g, int m1, int m2,
                                      int k0,
                                      const DecompositionOptions& options = {});

struct ComplementSplit {
  Status status = Status::kRefused;
  Factor tree_part;  // H
  TreePacking h_trees;
  TreePacking complement_trees;
  std::string reason;
};

// H m-tree-connected, G - E(H) m0-tree-connected, and
//   floor(d(v)/2) - m0 <= d_H(v) <= ceil(d(v)/2) + m.
ComplementSplit split_tree_connected_complement(
    const MultiGraph& g, int m, int m0, const DecompositionOptions& options = {});

struct MatchingRaise {
  Status status = Status::kRefused;
  Factor matching;
  int achieved_bi = 0;
  std::string reason;
};

// Matching M of G with |M| = k - 1 and bi(F + M) >= k - 1.
MatchingRaise matching_raising_bi(const MultiGraph& g, const Factor& f, int k,
                                  const DecompositionOptions& options = {});

// Postconditions of decompose_eulerian checked from scratch.
bool verify_eulerian_decomposition(const MultiGraph& g, const Bipartition& part,
                                   int m1, int m2,
                                   const EulerianDecomposition& d);

}  // namespace gfactor
