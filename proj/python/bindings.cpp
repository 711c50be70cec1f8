#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfactor/connectivity.hpp"
#include "gfactor/decompositions.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/graph.hpp"
#include "gfactor/graph_io.hpp"
#include "gfactor/harness.hpp"
#include "gfactor/orientations.hpp"
#include "gfactor/pipeline.hpp"

namespace py = pybind11;
using namespace gfactor;

namespace {

MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  MultiGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::optional<std::vector<int>> ids(const std::optional<Factor>& f) {
  if (!f) return std::nullopt;
  return f->edge_ids;
}

py::dict certificate(const FactorCertificate& c) {
  py::dict d;
  d["status"] = to_string(c.status);
  d["factor"] = c.factor.edge_ids;
  d["reason"] = c.reason;
  d["hypotheses_verified"] = c.hypotheses_verified;
  py::list report;
  for (const DegreeEntry& e : c.degree_report) {
    report.append(py::make_tuple(e.vertex, e.degree, e.allowed));
  }
  d["degree_report"] = report;
  auto trees = [](const std::optional<TreePacking>& p) -> py::object {
    if (!p) return py::none();
    py::list out;
    for (const Factor& t : p->trees) out.append(t.edge_ids);
    return out;
  };
  d["h_packing"] = trees(c.h_packing);
  d["complement_packing"] = trees(c.complement_packing);
  d["derivation"] = c.derivation;
  return d;
}

PipelineOptions options(bool assume, std::uint64_t seed) {
  PipelineOptions o;
  o.assume_hypotheses = assume;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_gfactor, m) {
  m.doc() = "Degree-constrained factors of multigraphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"))
      .def("add_edge", &MultiGraph::add_edge)
      .def_property_readonly("num_vertices", &MultiGraph::num_vertices)
      .def_property_readonly("num_edges", &MultiGraph::num_edges)
      .def_property_readonly("degrees", &MultiGraph::degrees)
      .def("edges", [](const MultiGraph& g) {
        std::vector<std::tuple<int, int, int>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.id, g.vertex_id(e.u), g.vertex_id(e.v));
        return out;
      })
      .def("restrict", [](const MultiGraph& g, const std::vector<int>& f) {
        return g.restrict(Factor(f));
      })
      .def("__repr__", [](const MultiGraph& g) {
        return "<MultiGraph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) {
    GraphFile f = parse_graph(text);
    return py::make_tuple(f.graph, f.lower, f.upper);
  });
  m.def("serialize_graph", [](const MultiGraph& g, std::optional<VertexIntMap> lower,
                              std::optional<VertexIntMap> upper) {
    return serialize_graph(g, lower ? &*lower : nullptr, upper ? &*upper : nullptr);
  }, py::arg("g"), py::arg("lower") = py::none(), py::arg("upper") = py::none());
  m.def("factor_degrees", [](const MultiGraph& g, const std::vector<int>& f) {
    return factor_degrees(g, Factor(f));
  });

  m.def("edge_connectivity", &edge_connectivity);
  m.def("tree_packing", [](const MultiGraph& g, int k) -> py::object {
    PackingResult r = spanning_tree_packing(g, k);
    if (!r.ok()) return py::none();
    py::list out;
    for (const Factor& t : r.packing->trees) out.append(t.edge_ids);
    return out;
  });
  m.def("tree_packing_number", &tree_packing_number);
  m.def("bipartite_index", [](const MultiGraph& g) {
    BipartiteIndex b = bipartite_index_auto(g);
    return py::make_tuple(b.value, b.lower, b.exact);
  });
  m.def("toughness", [](const MultiGraph& g) -> py::object {
    Toughness t = toughness(g);
    if (t.infinite) return py::none();
    return py::make_tuple(t.value.num, t.value.den);
  });

  m.def("find_f_factor", [](const MultiGraph& g, const VertexIntMap& f) {
    return ids(find_f_factor(g, f));
  });
  m.def("find_interval_factor", [](const MultiGraph& g, const VertexIntMap& lo,
                                   const VertexIntMap& hi) {
    return ids(find_interval_factor(g, lo, hi));
  });
  m.def("find_two_point_factor", [](const MultiGraph& g, const VertexIntMap& lo,
                                    const VertexIntMap& hi) {
    FactorSearch s = find_two_point_factor(g, lo, hi);
    return py::make_tuple(to_string(s.status), ids(s.factor));
  });
  m.def("tutte_condition", [](const MultiGraph& g, const VertexIntMap& f) {
    return check_tutte_condition(g, f).holds;
  });
  m.def("lovasz_condition", [](const MultiGraph& g, const VertexIntMap& lo,
                               const VertexIntMap& hi) {
    return check_lovasz_condition(g, lo, hi).holds;
  });

  m.def("eulerian_orientation", [](const MultiGraph& g) {
    return out_degrees(g, eulerian_orientation(g));
  });
  m.def("interval_orientation", [](const MultiGraph& g, const VertexIntMap& lo,
                                   const VertexIntMap& hi) -> py::object {
    auto o = interval_orientation(g, lo, hi);
    if (!o) return py::none();
    return py::cast(out_degrees(g, *o));
  });

  m.def("eulerian_half_factor",
        [](const MultiGraph& g, const VertexIntMap& i, bool assume, std::uint64_t seed) {
          return certificate(eulerian_half_factor(g, i, options(assume, seed)));
        },
        py::arg("g"), py::arg("i"), py::arg("assume_hypotheses") = false, py::arg("seed") = 0);
  m.def("gf_factor_bi_large",
        [](const MultiGraph& g, const VertexIntMap& lo, const VertexIntMap& hi, int k,
           bool assume, std::uint64_t seed) {
          return certificate(gf_factor_bi_large(g, lo, hi, {k}, options(assume, seed)));
        },
        py::arg("g"), py::arg("lower"), py::arg("upper"), py::arg("k") = 0,
        py::arg("assume_hypotheses") = false, py::arg("seed") = 0);
  m.def("tree_connected_gf",
        [](const MultiGraph& g, const VertexIntMap& lo, const VertexIntMap& hi, int k, int m,
           int m0, bool assume, std::uint64_t seed) {
          return certificate(
              tree_connected_gf(g, lo, hi, {k, m, m0, 0}, options(assume, seed)));
        },
        py::arg("g"), py::arg("lower"), py::arg("upper"), py::arg("k") = 0, py::arg("m") = 0,
        py::arg("m0") = 0, py::arg("assume_hypotheses") = false, py::arg("seed") = 0);

  m.def("gen_tree_connected",
        [](int n, int trees, int extra, int intra, bool bipartite, bool eulerian,
           std::uint64_t seed) {
          GenSpec s{n, trees, extra, intra, bipartite, eulerian, seed};
          GeneratedGraph gg = gen_tree_connected(s);
          return py::make_tuple(gg.graph, gg.part.x_positions());
        },
        py::arg("n"), py::arg("trees") = 1, py::arg("extra") = 0, py::arg("intra") = 0,
        py::arg("bipartite") = false, py::arg("eulerian") = false, py::arg("seed") = 0);
  m.def("gen_functions", [](const MultiGraph& g, int k, int m_, int m0, std::uint64_t seed) {
    FunctionPair fp = gen_functions(g, k, m_, m0, seed);
    return py::make_tuple(fp.lower, fp.upper);
  }, py::arg("g"), py::arg("k"), py::arg("m") = 0, py::arg("m0") = 0, py::arg("seed") = 0);

  m.def("campaign_ids", &campaign_ids);
  m.def("verify_theorem_json",
        [](const std::string& id, int trials, int k, int m_, int m0, int b, int t,
           std::uint64_t seed, int threads) {
          CampaignParams p;
          p.k = k;
          p.m = m_;
          p.m0 = m0;
          p.b = b;
          p.t = t;
          p.threads = threads;
          py::gil_scoped_release release;
          return report_json(verify_theorem(id, trials, p, seed));
        },
        py::arg("id"), py::arg("trials"), py::arg("k") = 1, py::arg("m") = 0,
        py::arg("m0") = 0, py::arg("b") = 1, py::arg("t") = 0, py::arg("seed") = 0,
        py::arg("threads") = 0);
}
