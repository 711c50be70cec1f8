#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gfactor/graph.hpp"

namespace gfactor {

struct GenSpec {
  int n = 6;
  int trees = 1;        // union of this many uniform spanning trees
  int extra_edges = 0;
  int intra_edges = 0;  // edges inside the planted parts, loops included
  bool bipartite = false;
  bool eulerian = false;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  MultiGraph graph;
  Bipartition part;  // planted, balanced
};

// Trees are drawn on K_{X,Y} when `bipartite` (or when intra edges are
// requested), otherwise on K_n. Eulerian fix-ups keep the trees intact.
GeneratedGraph gen_tree_connected(const GenSpec& spec);

struct FunctionPair {
  VertexIntMap lower;  // g
  VertexIntMap upper;  // f
};

// Uniform draws with g + m0 <= d/2 <= f - m and 0 <= f - g <= k. Throws
// InputError naming the first vertex whose window is empty.
FunctionPair gen_functions(const MultiGraph& g, int k, int m, int m0,
                           std::uint64_t seed);

std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

struct CampaignParams {
  int k = 1;
  int m = 0;
  int m0 = 0;
  int b = 1;
  int t = 0;
  int threads = 0;  // 0: hardware concurrency
  bool assume_hypotheses = false;
};

struct TrialRow {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string outcome;  // success | none | unknown | refused | hard_error
  std::string detail;
};

struct Report {
  std::string theorem;
  std::uint64_t master_seed = 0;
  int trials = 0;
  CampaignParams params;
  int successes = 0;
  int none = 0;
  int unknown = 0;
  int hard_errors = 0;
  std::map<std::string, int> refusals;
  std::vector<TrialRow> rows;
  double wall_seconds = 0;  // not part of the serialized report
};

const std::vector<std::string>& campaign_ids();

// Throws InputError for an unknown id.
Report verify_theorem(const std::string& id, int trials,
                      const CampaignParams& params, std::uint64_t master_seed);

// Single trial, for replay by seed.
TrialRow run_trial(const std::string& id, const CampaignParams& params,
                   int trial, std::uint64_t seed);

std::string report_json(const Report& report);
std::string report_text(const Report& report);

}  // namespace gfactor
