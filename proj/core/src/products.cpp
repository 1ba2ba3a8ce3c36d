#include "domlab/products.hpp"

#include <stdexcept>
#include <string>

namespace domlab {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::disjunctive: return "disjunctive";
  }
  return "?";
}

ProductKind parse_product_kind(std::string_view text) {
  if (text == "cartesian" || text == "box") return ProductKind::cartesian;
  if (text == "direct" || text == "tensor") return ProductKind::direct;
  if (text == "disjunctive" || text == "or") return ProductKind::disjunctive;
  throw std::invalid_argument("unknown product kind '" + std::string(text) + "'");
}

ProductGraph product(ProductKind kind, const Graph& g, const Graph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng * nh > kMaxOrder) {
    throw std::invalid_argument("product order " + std::to_string(ng * nh) + " exceeds the cap of " + std::to_string(kMaxOrder));
  }
  ProductGraph p{kind, g, h, Graph(ng * nh)};
  for (Vertex a1 = 0; a1 < ng; ++a1)
    for (Vertex b1 = 0; b1 < nh; ++b1)
      for (Vertex a2 = a1; a2 < ng; ++a2)
        for (Vertex b2 = 0; b2 < nh; ++b2) {
          if (a2 == a1 && b2 <= b1) continue;
          const bool ea = g.adjacent(a1, a2), eb = h.adjacent(b1, b2);
          bool edge = false;
          switch (kind) {
            case ProductKind::cartesian: edge = (a1 == a2 && eb) || (b1 == b2 && ea); break;
            case ProductKind::direct: edge = ea && eb; break;
            case ProductKind::disjunctive: edge = ea || eb; break;
          }
          if (edge) p.graph.add_edge(p.index(a1, b1), p.index(a2, b2));
        }
  return p;
}

VertexSet layer(const ProductGraph& p, LayerSide which, Vertex coordinate) {
  VertexSet out;
  if (which == LayerSide::first) {
    if (coordinate < 0 || coordinate >= p.second.order()) throw std::out_of_range("layer coordinate outside the second factor");
    for (Vertex a = 0; a < p.first.order(); ++a) out.insert(p.index(a, coordinate));
  } else {
    if (coordinate < 0 || coordinate >= p.first.order()) throw std::out_of_range("layer coordinate outside the first factor");
    for (Vertex b = 0; b < p.second.order(); ++b) out.insert(p.index(coordinate, b));
  }
  return out;
}

VertexSet product_set(const ProductGraph& p, VertexSet a, VertexSet b) {
  require_owned(p.first, a, "product_set");
  require_owned(p.second, b, "product_set");
  VertexSet out;
  for (Vertex x : a)
    for (Vertex y : b) out.insert(p.index(x, y));
  return out;
}

}  // namespace domlab
