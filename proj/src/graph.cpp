#include "gfactor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace gfactor {

const char* to_string(Status s) {
  switch (s) {
    case Status::kFound:
      return "found";
    case Status::kNone:
      return "none";
    case Status::kUnknown:
      return "unknown";
    case Status::kRefused:
      return "refused";
  }
  return "?";
}

Factor::Factor(std::vector<EdgeId> ids) : edge_ids(std::move(ids)) {
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
}

bool Factor::contains(EdgeId id) const {
  return std::binary_search(edge_ids.begin(), edge_ids.end(), id);
}

Factor factor_union(const Factor& a, const Factor& b) {
  Factor out;
  std::set_union(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(),
                 b.edge_ids.end(), std::back_inserter(out.edge_ids));
  return out;
}

Factor factor_difference(const Factor& a, const Factor& b) {
  Factor out;
  std::set_difference(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(),
                      b.edge_ids.end(), std::back_inserter(out.edge_ids));
  return out;
}

MultiGraph::MultiGraph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 1);
  *this = MultiGraph(std::move(ids));
}

MultiGraph::MultiGraph(std::vector<VertexId> vertex_ids)
    : vertex_ids_(std::move(vertex_ids)) {
  for (int i = 0; i < num_vertices(); ++i) {
    if (vertex_ids_[i] <= 0) throw InputError("vertex ids must be positive");
    if (!pos_of_.emplace(vertex_ids_[i], i).second) {
      throw InputError("duplicate vertex id " + std::to_string(vertex_ids_[i]));
    }
  }
  incidence_.assign(vertex_ids_.size(), {});
  degree_.assign(vertex_ids_.size(), 0);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  const EdgeId id = next_id_;
  add_edge_with_id(id, u, v);
  return id;
}

void MultiGraph::add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
  if (id < 0) throw InputError("negative edge id");
  if (index_of_.count(id)) {
    throw InputError("duplicate edge id " + std::to_string(id));
  }
  const int pu = position(u);
  const int pv = position(v);
  const int index = num_edges();
  edges_.push_back({id, pu, pv});
  index_of_.emplace(id, index);
  incidence_[pu].push_back(index);
  if (pu != pv) incidence_[pv].push_back(index);
  degree_[pu] += 1;
  degree_[pv] += 1;
  next_id_ = std::max(next_id_, id + 1);
}

int MultiGraph::position(VertexId id) const {
  auto it = pos_of_.find(id);
  if (it == pos_of_.end()) {
    throw InputError("unknown vertex id " + std::to_string(id));
  }
  return it->second;
}

bool MultiGraph::has_vertex(VertexId id) const { return pos_of_.count(id) > 0; }

const Edge& MultiGraph::edge(EdgeId id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) {
    throw InputError("unknown edge id " + std::to_string(id));
  }
  return edges_[it->second];
}

bool MultiGraph::has_edge(EdgeId id) const { return index_of_.count(id) > 0; }

Factor MultiGraph::all_edges() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return Factor(std::move(ids));
}

MultiGraph MultiGraph::restrict(const Factor& f) const {
  MultiGraph out(vertex_ids_);
  for (const Edge& e : edges_) {
    if (f.contains(e.id)) {
      out.add_edge_with_id(e.id, vertex_ids_[e.u], vertex_ids_[e.v]);
    }
  }
  return out;
}

Bipartition Bipartition::from_mask(int n, std::uint64_t x_mask) {
  Bipartition p;
  p.in_x.resize(n);
  for (int i = 0; i < n; ++i) p.in_x[i] = (x_mask >> i) & 1U;
  return p;
}

Bipartition Bipartition::from_sets(const MultiGraph& g,
                                   std::span<const VertexId> x,
                                   std::span<const VertexId> y) {
  std::vector<char> seen(g.num_vertices(), 0);
  Bipartition p;
  p.in_x.assign(g.num_vertices(), 0);
  for (VertexId id : x) {
    const int pos = g.position(id);
    if (seen[pos]++) throw InputError("vertex listed twice in bipartition");
    p.in_x[pos] = 1;
  }
  for (VertexId id : y) {
    const int pos = g.position(id);
    if (seen[pos]++) throw InputError("X and Y overlap");
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError("bipartition does not cover V(G)");
  }
  return p;
}

Bipartition Bipartition::swapped() const {
  Bipartition p = *this;
  for (char& c : p.in_x) c = !c;
  return p;
}

std::vector<int> Bipartition::x_positions() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(in_x.size()); ++i) {
    if (in_x[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> Bipartition::y_positions() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(in_x.size()); ++i) {
    if (!in_x[i]) out.push_back(i);
  }
  return out;
}

int degree(const MultiGraph& g, VertexId v) {
  return g.degree_at(g.position(v));
}

PartitionStats partition_stats(const MultiGraph& g, const std::vector<char>& x) {
  if (static_cast<int>(x.size()) != g.num_vertices()) {
    throw InputError("membership vector size mismatch");
  }
  PartitionStats s;
  for (const Edge& e : g.edges()) {
    const bool a = x[e.u], b = x[e.v];
    if (a && b) {
      ++s.inside;
    } else if (a != b) {
      ++s.boundary;
    }
  }
  return s;
}

PartitionStats partition_stats(const MultiGraph& g, const std::vector<char>& x,
                               const std::vector<char>& y) {
  PartitionStats s = partition_stats(g, x);
  if (static_cast<int>(y.size()) != g.num_vertices()) {
    throw InputError("membership vector size mismatch");
  }
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (x[i] && y[i]) throw InputError("X and Y overlap");
  }
  s.cross = 0;
  for (const Edge& e : g.edges()) {
    if ((x[e.u] && y[e.v]) || (y[e.u] && x[e.v])) ++s.cross;
  }
  return s;
}

int intra_edges(const MultiGraph& g, const Bipartition& p) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (p.in_x[e.u] == p.in_x[e.v]) ++count;
  }
  return count;
}

Factor induced_bipartite_factor(const MultiGraph& g, const Bipartition& p) {
  validate(g, p);
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) {
    if (p.in_x[e.u] != p.in_x[e.v]) ids.push_back(e.id);
  }
  return Factor(std::move(ids));
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (int ei : g.incidence()[v]) {
        const int w = g.edges()[ei].other(v);
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

int count_components(const MultiGraph& g) {
  return static_cast<int>(components(g).size());
}

bool is_connected(const MultiGraph& g) { return count_components(g) <= 1; }

std::vector<int> factor_degrees(const MultiGraph& g, const Factor& f) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (EdgeId id : f.edge_ids) {
    const Edge& e = g.edge(id);
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool is_eulerian(const MultiGraph& g) {
  return std::all_of(g.degrees().begin(), g.degrees().end(),
                     [](int d) { return d % 2 == 0; });
}

bool is_bipartite_with(const MultiGraph& g, const Bipartition& p) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return p.in_x[e.u] != p.in_x[e.v];
  });
}

void validate(const MultiGraph& g, const Factor& f) {
  for (EdgeId id : f.edge_ids) {
    if (!g.has_edge(id)) {
      throw InputError("factor references unknown edge id " +
                       std::to_string(id));
    }
  }
}

void validate(const MultiGraph& g, const Bipartition& p) {
  if (static_cast<int>(p.in_x.size()) != g.num_vertices()) {
    throw InputError("bipartition does not match the vertex set");
  }
}

void validate(const MultiGraph& g, const VertexIntMap& m, const char* name) {
  if (static_cast<int>(m.size()) != g.num_vertices()) {
    throw InputError(std::string("function ") + name +
                     " is not defined on exactly V(G)");
  }
}

}  // namespace gfactor
