#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gfactor/graph.hpp"

namespace gfactor {

inline constexpr int kLovaszCap = 14;
inline constexpr int kEnumerateCap = 20;
inline constexpr int kSelectorExhaustiveCap = 16;

// Components C of G - (A u B) with g = f on C and d_G(C, B) of the wrong
// parity against sum_C f.
int omega_gf(const MultiGraph& g, const DisjointPair& pair,
             const VertexIntMap& lower, const VertexIntMap& upper);

// RHS - LHS of the (g,f)-factor inequality for one pair:
//   sum_A f + sum_B (d_{G-A}(v) - g(v)) - omega_{g,f}(G, A, B).
int lovasz_deficiency(const MultiGraph& g, const DisjointPair& pair,
                      const VertexIntMap& lower, const VertexIntMap& upper);

struct CriterionResult {
  bool holds = true;
  std::optional<DisjointPair> violation;  // first violating pair found
};

// Exhaustive over all 3^n disjoint pairs; CapExceeded above `cap`.
CriterionResult check_lovasz_condition(const MultiGraph& g,
                                       const VertexIntMap& lower,
                                       const VertexIntMap& upper,
                                       int cap = kLovaszCap);

// Equal-bounds special case.
CriterionResult check_tutte_condition(const MultiGraph& g,
                                      const VertexIntMap& f,
                                      int cap = kLovaszCap);

// Strict form for connected G with even sum f, over pairs with A u B
// nonempty: omega_f < 2 + sum_A f + sum_B (d_{G-A}(v) - f(v)).
// Throws InputError when G is disconnected or sum f is odd.
CriterionResult check_tutte_strict_condition(const MultiGraph& g,
                                             const VertexIntMap& f,
                                             int cap = kLovaszCap);

// d_F(v) = f(v) for all v; nullopt exactly when no such factor exists.
std::optional<Factor> find_f_factor(const MultiGraph& g, const VertexIntMap& f);

// lower(v) <= d_F(v) <= upper(v).
std::optional<Factor> find_interval_factor(const MultiGraph& g,
                                           const VertexIntMap& lower,
                                           const VertexIntMap& upper);

struct Pin {
  int vertex = 0;  // position
  int value = 0;
};

struct SearchOptions {
  // Selector enumeration is complete when the number of two-valued
  // vertices is at most this.
  int exhaustive_cap = kSelectorExhaustiveCap;
  // Attempts above the cap before giving up with kUnknown.
  int budget = 512;
  std::uint64_t seed = 0;
};

struct FactorSearch {
  Status status = Status::kNone;
  std::optional<Factor> factor;
};

// d_F(v) in {lower(v), upper(v)} for all v, and d_F(pin.vertex) = pin.value
// when pinned.
FactorSearch find_two_point_factor(const MultiGraph& g,
                                   const VertexIntMap& lower,
                                   const VertexIntMap& upper,
                                   std::optional<Pin> pin = std::nullopt,
                                   const SearchOptions& options = {});

using DegreePredicate = std::function<bool(std::span<const int>)>;

// All edge subsets whose degree vector satisfies `pred`, ordered
// lexicographically by sorted edge-id list. CapExceeded above `cap` edges.
std::vector<Factor> enumerate_factors(const MultiGraph& g,
                                      const DegreePredicate& pred,
                                      int cap = kEnumerateCap);

// Lexicographically least satisfying subset.
std::optional<Factor> first_factor(const MultiGraph& g,
                                   const DegreePredicate& pred,
                                   int cap = kEnumerateCap);

// True iff d_F(v) is in {lower(v), upper(v)} everywhere.
bool satisfies_two_point(const MultiGraph& g, const Factor& f,
                         const VertexIntMap& lower, const VertexIntMap& upper);

}  // namespace gfactor
