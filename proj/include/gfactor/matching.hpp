#pragma once

#include <utility>
#include <vector>

namespace gfactor {

// Maximum cardinality matching in a simple undirected graph on vertices
// 0..n-1 (Edmonds' blossom shrinking, O(n^3)). Returns mate[v], or -1 for
// exposed vertices. Self-loops and repeated pairs are ignored.
std::vector<int> maximum_matching(int n,
                                  const std::vector<std::pair<int, int>>& edges);

}  // namespace gfactor
