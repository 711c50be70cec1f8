#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfactor/connectivity.hpp"
#include "gfactor/factors.hpp"
#include "gfactor/graph.hpp"

namespace gfactor {

struct TheoremParams {
  int k = 0;  // 0: use max(1, max |f - g|)
  int m = 0;
  int m0 = 0;
  int b = 0;
};

struct PipelineOptions {
  // Run the construction even when a hypothesis fails. Failures are then
  // reported as kNone/kUnknown instead of theorem violations.
  bool assume_hypotheses = false;
  std::uint64_t seed = 0;
  int budget = 64;
  SearchOptions search;
  std::optional<Bipartition> hint;
};

struct DegreeEntry {
  VertexId vertex = 0;
  int degree = 0;
  std::vector<int> allowed;
};

struct FactorCertificate {
  Status status = Status::kRefused;
  Factor factor;
  std::vector<DegreeEntry> degree_report;
  std::optional<TreePacking> h_packing;
  std::optional<TreePacking> complement_packing;
  // Failed hypothesis for kRefused, otherwise a short explanation.
  std::string reason;
  bool hypotheses_verified = false;
  // Replay record: named intermediate factors and one line per step.
  std::map<std::string, Factor> pieces;
  std::vector<std::string> derivation;
};

// d_F(v) = d_G(v)/2 + i(v). Requires G Eulerian and connected,
// |E| = sum |i| (mod 2), (2t-1)-edge-connectivity and bi(G) >= t - 1.
FactorCertificate eulerian_half_factor(const MultiGraph& g,
                                       const VertexIntMap& i,
                                       const PipelineOptions& options = {});

// d_F(z) = d_G(z)/2 + t and d_F(v) = d_G(v)/2 elsewhere; t = |E| (mod 2).
FactorCertificate eulerian_half_factor_at(const MultiGraph& g, int z, int t,
                                          const PipelineOptions& options = {});

// Sum of a selector h over X minus its sum over Y.
int part_difference(const Bipartition& part, const VertexIntMap& h);

// h(v) in {g(v), f(v)} with part_difference(h) accepted by `accept`,
// decided exactly by subset sums over the gaps. Among accepted differences
// the one of least absolute value wins, then the smaller one.
std::optional<VertexIntMap> selector_with_difference(
    const Bipartition& part, const VertexIntMap& lower,
    const VertexIntMap& upper, const std::function<bool(int)>& accept);

std::optional<VertexIntMap> balanced_selector(const MultiGraph& g,
                                              const Bipartition& part,
                                              const VertexIntMap& lower,
                                              const VertexIntMap& upper);

// Either some gap f - g is odd, or all gaps are even and sum f is even.
bool parity_criterion(const VertexIntMap& lower, const VertexIntMap& upper);

FactorCertificate gf_factor_bipartite(const MultiGraph& g,
                                      const Bipartition& part,
                                      const VertexIntMap& lower,
                                      const VertexIntMap& upper,
                                      const VertexIntMap& h,
                                      std::optional<int> z = std::nullopt,
                                      const TheoremParams& params = {},
                                      const PipelineOptions& options = {});

// The bipartition is options.hint, else a minimum one.
FactorCertificate gf_factor_almost_bipartite(const MultiGraph& g,
                                             const VertexIntMap& lower,
                                             const VertexIntMap& upper,
                                             const VertexIntMap& h,
                                             const TheoremParams& params = {},
                                             const PipelineOptions& options = {});

FactorCertificate gf_factor_bi_large(const MultiGraph& g,
                                     const VertexIntMap& lower,
                                     const VertexIntMap& upper,
                                     const TheoremParams& params = {},
                                     const PipelineOptions& options = {});

FactorCertificate tree_connected_gf_bipartite(
    const MultiGraph& g, const Bipartition& part, const VertexIntMap& lower,
    const VertexIntMap& upper, const VertexIntMap& h, const TheoremParams& params,
    std::optional<int> z = std::nullopt, const PipelineOptions& options = {});

FactorCertificate tree_connected_gf(const MultiGraph& g,
                                    const VertexIntMap& lower,
                                    const VertexIntMap& upper,
                                    const TheoremParams& params,
                                    const PipelineOptions& options = {});

struct HypothesisLine {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

struct ToughReport {
  Toughness toughness;
  std::vector<HypothesisLine> lines;
  bool all_hold = false;
};

// Evaluates each hypothesis of the toughness theorem; no construction.
ToughReport tough_hypothesis_check(const MultiGraph& g,
                                   const VertexIntMap& lower,
                                   const VertexIntMap& upper,
                                   const TheoremParams& params);

// Recomputes the degree report and packings of a certificate from scratch.
bool verify_certificate(const MultiGraph& g, const FactorCertificate& cert,
                        int m = 0, int m0 = 0);

}  // namespace gfactor
