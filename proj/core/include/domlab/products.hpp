#pragma once

#include <string_view>

#include "domlab/graph.hpp"

namespace domlab {

enum class ProductKind { cartesian, direct, disjunctive };

std::string_view to_string(ProductKind kind);
/// Accepts "cartesian", "direct", "disjunctive" (also "box", "tensor", "or").
ProductKind parse_product_kind(std::string_view text);

/// A product graph on V(first) x V(second) with the row-major index map
/// (a, b) -> a * |V(second)| + b.
struct ProductGraph {
  ProductKind kind;
  Graph first;
  Graph second;
  Graph graph;

  Vertex index(Vertex a, Vertex b) const { return a * second.order() + b; }
  Vertex first_coordinate(Vertex p) const { return p / second.order(); }
  Vertex second_coordinate(Vertex p) const { return p % second.order(); }
};

/// Throws std::invalid_argument when |V(g)|*|V(h)| exceeds kMaxOrder.
ProductGraph product(ProductKind kind, const Graph& g, const Graph& h);

enum class LayerSide { first, second };

/// LayerSide::first with coordinate y gives V(first) x {y};
/// LayerSide::second with coordinate x gives {x} x V(second).
VertexSet layer(const ProductGraph& p, LayerSide which, Vertex coordinate);

/// A x B as product vertex indices.
VertexSet product_set(const ProductGraph& p, VertexSet a, VertexSet b);

}  // namespace domlab
