#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gfactor {

using VertexId = int;
using EdgeId = int;

// Vertex-indexed integer function (f, g, h, i, p, q, t). Indexed by vertex
// position in the host graph, not by vertex id.
using VertexIntMap = std::vector<int>;

// Vertex-indexed list function L(v).
using VertexListMap = std::vector<std::vector<int>>;

// Outcome of a search or construction. kNone is a proof of nonexistence
// (complete search or certificate); kUnknown means a budget ran out;
// kRefused means a precondition or theorem hypothesis does not hold.
enum class Status { kFound, kNone, kUnknown, kRefused };

const char* to_string(Status s);

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an exhaustive routine is asked to run above its size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guaranteed construction failed although its hypotheses were verified.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  EdgeId id;
  int u;  // endpoint positions
  int v;
  bool is_loop() const { return u == v; }
  int other(int w) const { return w == u ? v : u; }
};

// A spanning subgraph, stored as a sorted duplicate-free list of edge ids of
// its host graph.
struct Factor {
  std::vector<EdgeId> edge_ids;

  Factor() = default;
  explicit Factor(std::vector<EdgeId> ids);

  std::size_t size() const { return edge_ids.size(); }
  bool empty() const { return edge_ids.empty(); }
  bool contains(EdgeId id) const;
  bool operator==(const Factor&) const = default;
  auto operator<=>(const Factor&) const = default;
};

Factor factor_union(const Factor& a, const Factor& b);
Factor factor_difference(const Factor& a, const Factor& b);

// Loops and parallel edges are allowed. Vertex ids are opaque positive
// integers kept in insertion order; edge ids are distinct and survive
// restriction to a factor.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Vertices 1..n.
  explicit MultiGraph(int n);
  explicit MultiGraph(std::vector<VertexId> vertex_ids);

  // Adds an edge between two vertex ids; returns the assigned edge id
  // (next unused id, i.e. input order).
  EdgeId add_edge(VertexId u, VertexId v);
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }
  VertexId vertex_id(int pos) const { return vertex_ids_[pos]; }
  int position(VertexId id) const;  // throws InputError
  bool has_vertex(VertexId id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const;  // throws InputError
  bool has_edge(EdgeId id) const;

  // Incident edge indices (into edges()) per vertex position; a loop is
  // listed once.
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  // Position-based degree; loops count twice.
  int degree_at(int pos) const { return degree_[pos]; }
  const std::vector<int>& degrees() const { return degree_; }

  Factor all_edges() const;

  // Same vertex set, only the edges in `f`; ids preserved.
  MultiGraph restrict(const Factor& f) const;

 private:
  std::vector<VertexId> vertex_ids_;
  std::unordered_map<VertexId, int> pos_of_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, int> index_of_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> degree_;
  EdgeId next_id_ = 0;
};

// Ordered pair (X, Y) covering V(G); in_x[pos] tells the side.
struct Bipartition {
  std::vector<char> in_x;

  static Bipartition from_mask(int n, std::uint64_t x_mask);
  static Bipartition from_sets(const MultiGraph& g, std::span<const VertexId> x,
                               std::span<const VertexId> y);
  bool is_x(int pos) const { return in_x[pos] != 0; }
  Bipartition swapped() const;
  std::vector<int> x_positions() const;
  std::vector<int> y_positions() const;
};

// Disjoint vertex sets A, B; label[pos] is 0 (neither), 1 (A) or 2 (B).
struct DisjointPair {
  std::vector<char> label;

  static DisjointPair empty(int n) { return {std::vector<char>(n, 0)}; }
  bool in_a(int pos) const { return label[pos] == 1; }
  bool in_b(int pos) const { return label[pos] == 2; }
};

struct PartitionStats {
  int boundary = 0;  // d_G(X)
  int inside = 0;    // e_G(X)
  int cross = -1;    // d_G(X,Y), -1 when Y was not given
};

int degree(const MultiGraph& g, VertexId v);

// Position-based membership flags.
PartitionStats partition_stats(const MultiGraph& g, const std::vector<char>& x);
PartitionStats partition_stats(const MultiGraph& g, const std::vector<char>& x,
                               const std::vector<char>& y);

// e_G(X) + e_G(Y) for a bipartition, loops included.
int intra_edges(const MultiGraph& g, const Bipartition& p);

// Edges of G[X,Y]; loops never included.
Factor induced_bipartite_factor(const MultiGraph& g, const Bipartition& p);

// Components as lists of vertex positions, in order of smallest member.
std::vector<std::vector<int>> components(const MultiGraph& g);
int count_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Degree vector of a factor in its host graph.
std::vector<int> factor_degrees(const MultiGraph& g, const Factor& f);

bool is_eulerian(const MultiGraph& g);  // every degree even
bool is_bipartite_with(const MultiGraph& g, const Bipartition& p);

void validate(const MultiGraph& g, const Factor& f);
void validate(const MultiGraph& g, const Bipartition& p);
void validate(const MultiGraph& g, const VertexIntMap& m, const char* name);

}  // namespace gfactor
