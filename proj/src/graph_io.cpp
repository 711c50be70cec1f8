#include "gfactor/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace gfactor {
namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  GraphFile out;
  bool have_header = false;
  int declared_edges = 0;
  int n = 0;
  std::vector<char> has_function;
  int functions_seen = 0;
  int line_no = 0;
  int last_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;

    if (tok[0] == "p") {
      if (have_header) fail(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "multigraph") {
        fail(line_no, "malformed header, expected 'p multigraph <n> <m>'");
      }
      const long long nv = to_int(tok[2], line_no);
      const long long ne = to_int(tok[3], line_no);
      if (nv < 0 || ne < 0 || nv > 1'000'000 || ne > 10'000'000) {
        fail(line_no, "header counts out of range");
      }
      n = static_cast<int>(nv);
      declared_edges = static_cast<int>(ne);
      out.graph = MultiGraph(n);
      has_function.assign(n, 0);
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) fail(line_no, "edge before header");
      if (tok.size() != 3) fail(line_no, "malformed edge line");
      const long long u = to_int(tok[1], line_no);
      const long long v = to_int(tok[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        fail(line_no, "dangling endpoint");
      }
      if (out.graph.num_edges() >= declared_edges) {
        fail(line_no, "more edges than declared in header");
      }
      out.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    } else if (tok[0] == "f") {
      if (!have_header) fail(line_no, "function line before header");
      if (tok.size() != 4) fail(line_no, "malformed function line");
      const long long v = to_int(tok[1], line_no);
      const long long lo = to_int(tok[2], line_no);
      const long long hi = to_int(tok[3], line_no);
      if (v < 1 || v > n) fail(line_no, "function line for unknown vertex");
      if (has_function[v - 1]) fail(line_no, "duplicate function line");
      if (!out.lower) {
        out.lower = VertexIntMap(n, 0);
        out.upper = VertexIntMap(n, 0);
      }
      has_function[v - 1] = 1;
      ++functions_seen;
      (*out.lower)[v - 1] = static_cast<int>(lo);
      (*out.upper)[v - 1] = static_cast<int>(hi);
    } else {
      fail(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) fail(line_no, "missing header");
  if (out.graph.num_edges() != declared_edges) {
    fail(last_line, "header declares " + std::to_string(declared_edges) +
                        " edges, found " +
                        std::to_string(out.graph.num_edges()));
  }
  if (functions_seen != 0 && functions_seen != n) {
    fail(last_line, "function lines must cover every vertex or none");
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const MultiGraph& g, const VertexIntMap* lower,
                            const VertexIntMap* upper) {
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (g.vertex_id(i) != i + 1) {
      throw InputError("text format requires vertex ids 1..n in order");
    }
  }
  std::string out = "p multigraph " + std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.id != i) throw InputError("text format requires edge ids 0..m-1");
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  if ((lower == nullptr) != (upper == nullptr)) {
    throw InputError("both g and f are required for function lines");
  }
  if (lower != nullptr) {
    validate(g, *lower, "g");
    validate(g, *upper, "f");
    for (int v = 0; v < g.num_vertices(); ++v) {
      out += "f " + std::to_string(v + 1) + " " + std::to_string((*lower)[v]) +
             " " + std::to_string((*upper)[v]) + "\n";
    }
  }
  return out;
}

std::string serialize_graph(const GraphFile& file) {
  return serialize_graph(file.graph, file.lower ? &*file.lower : nullptr,
                         file.upper ? &*file.upper : nullptr);
}

}  // namespace gfactor
