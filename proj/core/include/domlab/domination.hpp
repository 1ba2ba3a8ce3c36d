#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Domination and independence invariants of one graph.
///
/// gamma <= ind_dom <= alpha <= upper_gamma always holds;
/// well_dominated is gamma == upper_gamma and well_covered is ind_dom == alpha.
/// The total variants are std::nullopt when the graph has an isolated vertex.
struct DominationProfile {
  int gamma = 0;
  int upper_gamma = 0;
  int ind_dom = 0;
  int alpha = 0;
  std::optional<int> gamma_t;
  std::optional<int> upper_gamma_t;
  bool well_dominated = false;
  bool well_covered = false;
  VertexSet witness_min_dom;  ///< a minimum dominating set
  VertexSet witness_max_ind;  ///< a maximum independent set
};

/// Visitor for the enumerators; returning false stops the enumeration.
using SetVisitor = std::function<bool(VertexSet)>;

bool is_dominating(const Graph& g, VertexSet s);
bool is_total_dominating(const Graph& g, VertexSet s);

/// pn[v,S] = { u : N[u] ∩ S = {v} }. Throws std::invalid_argument when v is not in s.
VertexSet private_neighbors(const Graph& g, Vertex v, VertexSet s);

bool is_minimal_dominating(const Graph& g, VertexSet s);
bool is_maximal_independent(const Graph& g, VertexSet s);
bool is_minimal_total_dominating(const Graph& g, VertexSet s);

/// Streams every minimal dominating set exactly once in a fixed depth-first order.
///
/// The search branches on the lowest-index undominated vertex, trying each
/// member of its closed neighborhood and forbidding the ones already tried, and
/// abandons a branch as soon as some chosen vertex has lost all its private
/// neighbors. Sets larger than max_size are skipped (the bound also prunes).
/// Returns false when the visitor stopped early.
bool for_each_minimal_dominating(const Graph& g, const SetVisitor& visit, int max_size = kMaxOrder);
/// Every maximal independent set, same branching scheme.
bool for_each_maximal_independent(const Graph& g, const SetVisitor& visit);
/// Every minimal total dominating set. Throws std::invalid_argument on an isolated vertex.
bool for_each_minimal_total_dominating(const Graph& g, const SetVisitor& visit);

/// Materialized enumerations, sorted lexicographically by member sequence.
std::vector<VertexSet> minimal_dominating_sets(const Graph& g);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::vector<VertexSet> minimal_total_dominating_sets(const Graph& g);

/// Exact minimum dominating set by branch and bound seeded with a greedy cover.
VertexSet minimum_dominating_set(const Graph& g);
int domination_number(const Graph& g);
VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

struct TotalDominationNumbers {
  int gamma_t;
  int upper_gamma_t;
  friend bool operator==(const TotalDominationNumbers&, const TotalDominationNumbers&) = default;
};
/// Throws std::invalid_argument when g has an isolated vertex.
TotalDominationNumbers total_domination_numbers(const Graph& g);

/// Outcome of an early-exit decision with the sets that justify it.
/// For a negative answer `smaller` and `larger` are two minimal dominating
/// (respectively maximal independent) sets of different sizes.
struct UniformityDecision {
  bool uniform = false;
  VertexSet smaller;
  VertexSet larger;
};
UniformityDecision decide_well_dominated(const Graph& g);
UniformityDecision decide_well_covered(const Graph& g);
bool is_well_dominated(const Graph& g);
bool is_well_covered(const Graph& g);

DominationProfile domination_profile(const Graph& g);

/// Start from D = V and drop each vertex in turn when the rest still dominates.
/// Throws std::invalid_argument unless ordering is a permutation of 0..n-1.
VertexSet greedy_minimal_dominating(const Graph& g, std::span<const Vertex> ordering);
/// Take each vertex in turn when none of its neighbors is already taken.
VertexSet greedy_maximal_independent(const Graph& g, std::span<const Vertex> ordering);

/// N(u) - N[S - {u}] is nonempty for every u in s.
bool is_open_irredundant(const Graph& g, VertexSet s);

class OpenIrredundanceNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// A minimum dominating set that is open irredundant: the first such set in
/// increasing bitmask order. Throws std::invalid_argument on an isolated vertex
/// and OpenIrredundanceNotFound if no minimum dominating set qualifies.
VertexSet find_open_irredundant_minimum_dominating(const Graph& g);

/// Every pair of distinct members at distance at least 3.
bool is_two_packing(const Graph& g, VertexSet s);

/// Vertices x for which some independent I leaves x isolated in g - N[I].
///
/// Searched in the equivalent form: x is already isolated (I = ∅), or some
/// independent I inside V - N[x] dominates every neighbor of x.
VertexSet isolatable_vertices(const Graph& g);

}  // namespace domlab
