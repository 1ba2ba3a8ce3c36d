#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

struct CanonicalLabeling {
  /// label[v] is the position of vertex v in the canonical order.
  std::vector<Vertex> label;
  /// g.relabeled(label); equal for two graphs exactly when they are isomorphic.
  Graph form;
};

/// Canonical labeling by equitable-partition refinement and an individualization
/// search tree, pruned with automorphisms discovered at the leaves.
CanonicalLabeling canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
/// graph6 text of the canonical form; a hashable isomorphism-class key.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);
/// A bijection f with u~v in a iff f[u]~f[v] in b, when one exists.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace domlab
