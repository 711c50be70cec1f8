// gfactor: command-line front end for factor construction and verification
// campaigns.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gfactor/connectivity.hpp"
#include "gfactor/decompositions.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/graph.hpp"
#include "gfactor/graph_io.hpp"
#include "gfactor/harness.hpp"
#include "gfactor/orientations.hpp"
#include "gfactor/pipeline.hpp"

using namespace gfactor;
using Json = nlohmann::ordered_json;

namespace {

struct Common {
  std::uint64_t seed = 0;
  int trials = 100;
  std::string format = "json";
  std::string graph_path;
  bool assume = false;
};

struct Params {
  int k = 0, m = 0, m0 = 0, b = 1, t = 0;
  int m1 = 1, m2 = 1, k0 = 0;
  int threads = 0;
  std::string kind;
  std::string theorem;
  std::vector<int> x_ids;
  int z = 0;  // vertex id, 0 = none
};

Json ids_json(const MultiGraph& g, const std::vector<int>& positions) {
  Json a = Json::array();
  for (int p : positions) a.push_back(g.vertex_id(p));
  return a;
}

Json factor_json(const Factor& f) { return f.edge_ids; }

Json packing_json(const TreePacking& p) {
  Json a = Json::array();
  for (const Factor& t : p.trees) a.push_back(factor_json(t));
  return a;
}

Json certificate_json(const FactorCertificate& c) {
  Json j;
  j["status"] = to_string(c.status);
  j["reason"] = c.reason;
  j["hypotheses_verified"] = c.hypotheses_verified;
  j["factor"] = factor_json(c.factor);
  Json report = Json::array();
  for (const DegreeEntry& e : c.degree_report) {
    report.push_back({{"vertex", e.vertex}, {"degree", e.degree}, {"allowed", e.allowed}});
  }
  j["degree_report"] = report;
  if (c.h_packing) j["h_packing"] = packing_json(*c.h_packing);
  if (c.complement_packing) j["complement_packing"] = packing_json(*c.complement_packing);
  Json pieces = Json::object();
  for (const auto& [name, f] : c.pieces) pieces[name] = factor_json(f);
  j["pieces"] = pieces;
  j["derivation"] = c.derivation;
  return j;
}

// Aligned "key  value" lines for any flat or nested JSON document.
void text_lines(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      text_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
    return;
  }
  os << std::left << std::setw(28) << prefix << (j.is_string() ? j.get<std::string>() : j.dump())
     << "\n";
}

void emit(const Json& j, const Common& common) {
  if (common.format == "text") {
    text_lines(j, "", std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

GraphFile load(const Common& common) {
  if (common.graph_path.empty()) throw InputError("--graph is required");
  return read_graph_file(common.graph_path);
}

void require_functions(const GraphFile& file) {
  if (!file.lower || !file.upper) throw InputError("graph file has no 'f' lines");
}

Bipartition bipartition_from(const MultiGraph& g, const Params& p, std::uint64_t seed) {
  if (p.x_ids.empty()) return bipartite_index_auto(g, seed).witness;
  Bipartition part;
  part.in_x.assign(g.num_vertices(), 0);
  for (int id : p.x_ids) part.in_x[g.position(id)] = 1;
  return part;
}

std::optional<int> z_position(const MultiGraph& g, const Params& p) {
  if (p.z == 0) return std::nullopt;
  return g.position(p.z);
}

PipelineOptions options_from(const Common& c) {
  PipelineOptions opt;
  opt.assume_hypotheses = c.assume;
  opt.seed = c.seed;
  return opt;
}

int cmd_gen(const Common& c, const GenSpec& spec_in, bool with_functions, const Params& p) {
  GenSpec spec = spec_in;
  spec.seed = c.seed;
  GeneratedGraph gen = gen_tree_connected(spec);
  if (with_functions) {
    FunctionPair fp = gen_functions(gen.graph, std::max(1, p.k), p.m, p.m0, c.seed + 1);
    std::cout << serialize_graph(gen.graph, &fp.lower, &fp.upper);
  } else {
    std::cout << serialize_graph(gen.graph, nullptr, nullptr);
  }
  return 0;
}

int cmd_factor(const Common& c, const Params& p) {
  const GraphFile file = load(c);
  const MultiGraph& g = file.graph;
  const PipelineOptions opt = options_from(c);
  const TheoremParams tp{p.k, p.m, p.m0, p.b};
  const std::string kind = p.kind.empty() ? "two-point" : p.kind;
  Json out;
  out["kind"] = kind;
  auto simple = [&](const std::optional<Factor>& f) {
    out["status"] = f ? "found" : "none";
    if (f) out["factor"] = factor_json(*f);
  };
  if (kind == "eulerian-half") {
    const int z = z_position(g, p).value_or(0);
    out["certificate"] = certificate_json(eulerian_half_factor_at(g, z, p.t, opt));
    emit(out, c);
    return 0;
  }
  require_functions(file);
  const VertexIntMap& lo = *file.lower;
  const VertexIntMap& hi = *file.upper;
  if (kind == "f") {
    simple(find_f_factor(g, hi));
  } else if (kind == "interval") {
    simple(find_interval_factor(g, lo, hi));
  } else if (kind == "two-point") {
    SearchOptions so;
    so.seed = c.seed;
    FactorSearch r = find_two_point_factor(g, lo, hi, std::nullopt, so);
    out["status"] = to_string(r.status);
    if (r.factor) out["factor"] = factor_json(*r.factor);
  } else if (kind == "bipartite-gf" || kind == "tree-gf-bipartite") {
    const Bipartition part = bipartition_from(g, p, c.seed);
    auto h = balanced_selector(g, part, lo, hi);
    if (!h) {
      out["status"] = "none";
      out["reason"] = "no balanced selector";
    } else {
      out["h"] = *h;
      out["certificate"] = certificate_json(
          kind == "bipartite-gf"
              ? gf_factor_bipartite(g, part, lo, hi, *h, z_position(g, p), tp, opt)
              : tree_connected_gf_bipartite(g, part, lo, hi, *h, tp, z_position(g, p), opt));
    }
  } else if (kind == "almost-bipartite") {
    PipelineOptions o = opt;
    o.hint = bipartition_from(g, p, c.seed);
    const int ex = partition_stats(g, o.hint->in_x).inside;
    auto h = selector_with_difference(*o.hint, lo, hi, [ex](int d) {
      return d >= 0 && d <= 2 * ex + 1 && d % 2 == 0;
    });
    if (!h) {
      out["status"] = "none";
      out["reason"] = "no selector in the near-balance window";
    } else {
      out["h"] = *h;
      out["certificate"] = certificate_json(gf_factor_almost_bipartite(g, lo, hi, *h, tp, o));
    }
  } else if (kind == "bi-large" || kind == "tree-gf") {
    PipelineOptions o = opt;
    if (!p.x_ids.empty()) o.hint = bipartition_from(g, p, c.seed);
    out["certificate"] = certificate_json(kind == "bi-large"
                                              ? gf_factor_bi_large(g, lo, hi, tp, o)
                                              : tree_connected_gf(g, lo, hi, tp, o));
  } else {
    throw InputError("unknown factor kind: " + kind);
  }
  emit(out, c);
  return 0;
}

int cmd_orient(const Common& c, const Params& p) {
  const GraphFile file = load(c);
  const MultiGraph& g = file.graph;
  const std::string kind = p.kind.empty() ? "interval" : p.kind;
  std::optional<Orientation> o;
  Json out;
  out["kind"] = kind;
  if (kind == "eulerian") {
    o = eulerian_orientation(g);
    out["status"] = "found";
  } else {
    require_functions(file);
    if (kind == "interval") {
      o = interval_orientation(g, *file.lower, *file.upper);
      out["status"] = o ? "found" : "none";
    } else if (kind == "two-point") {
      SearchOptions so;
      so.seed = c.seed;
      OrientationSearch r = two_point_orientation(g, *file.lower, *file.upper, std::nullopt, so);
      out["status"] = to_string(r.status);
      o = r.orientation;
    } else {
      throw InputError("unknown orientation kind: " + kind);
    }
  }
  if (o) {
    Json arcs = Json::array();
    for (int e = 0; e < g.num_edges(); ++e) {
      arcs.push_back({{"edge", g.edges()[e].id},
                      {"tail", g.vertex_id(o->tail(g, e))},
                      {"head", g.vertex_id(o->head(g, e))}});
    }
    out["arcs"] = arcs;
    out["out_degrees"] = out_degrees(g, *o);
  }
  emit(out, c);
  return 0;
}

int cmd_decompose(const Common& c, const Params& p) {
  const GraphFile file = load(c);
  const MultiGraph& g = file.graph;
  const std::string kind = p.kind.empty() ? "eulerian" : p.kind;
  Json out;
  out["kind"] = kind;
  DecompositionOptions dopt;
  dopt.seed = c.seed;
  if (kind == "eulerian") {
    const Bipartition part = bipartition_from(g, p, c.seed);
    EulerianDecomposition d = decompose_eulerian(g, part, p.m1, p.m2);
    out["status"] = to_string(d.status);
    out["x"] = ids_json(g, part.x_positions());
    if (d.status == Status::kFound) {
      out["bipartite_part"] = factor_json(d.bipartite_part);
      out["eulerian_part"] = factor_json(d.eulerian_part);
      out["verified"] = verify_eulerian_decomposition(g, part, p.m1, p.m2, d);
    } else if (d.refusal) {
      out["refusal_cross_edges"] = d.refusal->cross_edges;
      out["refusal_required"] = d.refusal->required;
    }
  } else if (kind == "keep-bi") {
    if (!p.x_ids.empty()) dopt.hint = bipartition_from(g, p, c.seed);
    KeepBiDecomposition d = decompose_keep_bi(g, p.m1, p.m2, p.k0, dopt);
    out["status"] = to_string(d.status);
    out["reason"] = d.reason;
    if (d.status == Status::kFound) {
      out["x"] = ids_json(g, d.part.x_positions());
      out["eulerian_part"] = factor_json(d.eulerian_part);
      out["remainder"] = factor_json(d.remainder);
      out["required_intra"] = d.required_intra;
    }
  } else if (kind == "split") {
    ComplementSplit s = split_tree_connected_complement(g, p.m, p.m0, dopt);
    out["status"] = to_string(s.status);
    out["reason"] = s.reason;
    if (s.status == Status::kFound) {
      out["tree_part"] = factor_json(s.tree_part);
      out["h_trees"] = packing_json(s.h_trees);
      out["complement_trees"] = packing_json(s.complement_trees);
    }
  } else {
    throw InputError("unknown decomposition kind: " + kind);
  }
  emit(out, c);
  return 0;
}

int cmd_verify(const Common& c, const Params& p) {
  CampaignParams cp;
  cp.k = p.k > 0 ? p.k : 1;
  cp.m = p.m;
  cp.m0 = p.m0;
  cp.b = p.b;
  cp.t = p.t;
  cp.threads = p.threads;
  cp.assume_hypotheses = c.assume;
  const Report r = verify_theorem(p.theorem, c.trials, cp, c.seed);
  std::cout << (c.format == "text" ? report_text(r) : report_json(r));
  std::cerr << "wall time " << std::fixed << std::setprecision(3) << r.wall_seconds << " s\n";
  return r.hard_errors == 0 ? 0 : 1;
}

int cmd_toughness(const Common& c) {
  const GraphFile file = load(c);
  const Toughness t = toughness(file.graph);
  Json out;
  out["infinite"] = t.infinite;
  out["toughness"] = t.infinite ? "inf" : t.value.to_string();
  if (!t.infinite) {
    out["witness"] = ids_json(file.graph, t.witness);
    out["components"] = t.witness_components;
  }
  emit(out, c);
  return 0;
}

int cmd_bi(const Common& c, bool bounds) {
  const GraphFile file = load(c);
  const BipartiteIndex bi =
      bounds ? bipartite_index_bounds(file.graph, c.seed) : bipartite_index(file.graph);
  Json out;
  out["bi"] = bi.value;
  out["lower"] = bi.lower;
  out["exact"] = bi.exact;
  out["x"] = ids_json(file.graph, bi.witness.x_positions());
  emit(out, c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfactor: {g,f}-factors, orientations and verification campaigns"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  Params params;
  app.add_option("--seed", common.seed, "master seed");
  app.add_option("--trials", common.trials, "trial count for verify")->check(CLI::NonNegativeNumber);
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--graph", common.graph_path, "graph file");
  app.add_flag("--assume-hypotheses", common.assume, "run constructions below thresholds");

  auto add_theorem_params = [&](CLI::App* sub) {
    sub->add_option("--k", params.k, "gap bound k (0: max |f-g|)");
    sub->add_option("--m", params.m, "tree-connectivity of H");
    sub->add_option("--m0", params.m0, "tree-connectivity of the complement");
  };

  GenSpec spec;
  bool with_functions = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a tree-connected multigraph");
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--trees", spec.trees, "number of spanning trees");
  gen->add_option("--extra", spec.extra_edges, "extra random edges");
  gen->add_option("--intra", spec.intra_edges, "edges inside the planted parts");
  gen->add_flag("--bipartite", spec.bipartite, "draw trees on the planted K_{X,Y}");
  gen->add_flag("--eulerian", spec.eulerian, "fix all degrees to be even");
  gen->add_flag("--functions", with_functions, "also emit g, f windows");
  add_theorem_params(gen);

  CLI::App* factor = app.add_subcommand("factor", "construct a factor");
  factor->add_option("--kind", params.kind,
                     "f | interval | two-point | eulerian-half | bipartite-gf | "
                     "almost-bipartite | bi-large | tree-gf-bipartite | tree-gf");
  factor->add_option("--x", params.x_ids, "vertex ids of part X");
  factor->add_option("--z", params.z, "vertex id z");
  factor->add_option("--t", params.t, "offset t at z");
  add_theorem_params(factor);

  CLI::App* orient = app.add_subcommand("orient", "construct an orientation");
  orient->add_option("--kind", params.kind, "eulerian | interval | two-point");

  CLI::App* decompose = app.add_subcommand("decompose", "decomposition lemmas");
  decompose->add_option("--kind", params.kind, "eulerian | keep-bi | split");
  decompose->add_option("--m1", params.m1);
  decompose->add_option("--m2", params.m2);
  decompose->add_option("--k0", params.k0);
  decompose->add_option("--x", params.x_ids, "vertex ids of part X");
  add_theorem_params(decompose);

  CLI::App* verify = app.add_subcommand("verify", "run a verification campaign");
  verify->add_option("theorem", params.theorem, "campaign id")
      ->required()
      ->check(CLI::IsMember(campaign_ids()));
  verify->add_option("--b", params.b);
  verify->add_option("--t", params.t);
  verify->add_option("--threads", params.threads);
  add_theorem_params(verify);

  CLI::App* tough = app.add_subcommand("toughness", "exact toughness");
  bool bounds = false;
  CLI::App* bi = app.add_subcommand("bi", "bipartite index");
  bi->add_flag("--bounds", bounds, "local-search bounds instead of the exact value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(common, spec, with_functions, params);
    if (*factor) return cmd_factor(common, params);
    if (*orient) return cmd_orient(common, params);
    if (*decompose) return cmd_decompose(common, params);
    if (*verify) return cmd_verify(common, params);
    if (*tough) return cmd_toughness(common);
    if (*bi) return cmd_bi(common, bounds);
  } catch (const TheoremViolation& e) {
    std::cerr << "hard error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "hard error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
