#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "domlab/vertex_set.hpp"

namespace domlab {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1 stored as adjacency bitsets.
///
/// Adjacency is kept symmetric and loop-free by every mutator. Order is
/// restricted to 1..kMaxOrder so every graph has a graph6 short-form encoding.
class Graph {
 public:
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::full(order_); }
  VertexSet neighbors(Vertex v) const { return VertexSet{adj_[static_cast<std::size_t>(v)]}; }
  VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  int edge_count() const;
  std::vector<Edge> edges() const;
  bool has_isolated_vertex() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing vertex order.
  Graph induced(VertexSet keep) const;
  /// Graph with vertex v renamed to target[v]; target must be a permutation.
  Graph relabeled(std::span<const Vertex> target) const;
  /// Adds a vertex with index order() adjacent to `neighbors`.
  Graph with_new_vertex(VertexSet neighbors) const;

  /// True when `s` only names vertices of this graph.
  bool owns(VertexSet s) const { return s.subset_of(vertices()); }

  std::span<const std::uint64_t> rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int order_;
  std::vector<std::uint64_t> adj_;
};

/// N[S]: members of s together with all their neighbors.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);
/// N(S): union of the open neighborhoods of the members of s.
VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// BFS distance; std::nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
/// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);
/// girth >= 4, forests included.
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_independent(const Graph& g, VertexSet s);

/// Throws std::invalid_argument unless g owns s.
void require_owned(const Graph& g, VertexSet s, const char* what);

}  // namespace domlab
