#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

using FiveCycle = std::array<Vertex, 5>;

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

struct CoronaDecomposition {
  Graph core;
  VertexSet core_vertices;
  /// (core vertex, its leaf) pairs in increasing core order.
  std::vector<Edge> matching;
  /// Set when a K2 component forced a choice of core vertex (the lower index).
  bool ambiguous = false;
};

/// Splits g into a core and one private degree-1 neighbor per core vertex.
std::optional<CoronaDecomposition> corona_decomposition(const Graph& g);

/// Every 5-cycle without two consecutive vertices of degree >= 3.
/// Cycles start at their smallest vertex and run toward the smaller neighbor.
std::vector<FiveCycle> basic_five_cycles(const Graph& g);

struct PCPartition {
  VertexSet pendant;         ///< P
  VertexSet cycle_vertices;  ///< C
  std::vector<Edge> pendant_matching;
  std::vector<FiveCycle> basic_cycles;
  /// More than one cover of C by basic 5-cycles exists; the first found is kept.
  bool ambiguous = false;
};

/// Finds a (P, C) partition: pendant edges give P and must match it perfectly,
/// the rest must be covered exactly by vertex-disjoint basic 5-cycles.
std::optional<PCPartition> pc_partition(const Graph& g);

/// Throws std::invalid_argument unless pc is a valid partition of g.
void validate_pc_partition(const Graph& g, const PCPartition& pc);

/// Every pair of the partition's basic 5-cycles is joined by no edge, exactly
/// two vertex-disjoint edges, or exactly four edges.
bool check_pc_well_dominated(const Graph& g, const PCPartition& pc);

enum class SmallFamilyTag { K1, K2, P4, C4, C5, C7, P3_corona, H1, H2, H3, H4, not_member };

std::string_view to_string(SmallFamilyTag tag);

/// The eleven connected triangle-free well-dominated graphs with domination
/// number at most 3, in tag order.
const std::vector<std::pair<SmallFamilyTag, Graph>>& small_triangle_free_family();

SmallFamilyTag classify_small_triangle_free(const Graph& g);

}  // namespace domlab
