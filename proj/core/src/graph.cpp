#include "domlab/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace domlab {

Graph::Graph(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("graph order must lie in 1.." + std::to_string(kMaxOrder) +
                                ", got " + std::to_string(order));
  }
  adj_.assign(order, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order_ - 1));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](std::uint64_t row) { return row == 0; });
}

Graph Graph::induced(VertexSet keep) const {
  require_owned(*this, keep, "induced subgraph");
  std::vector<Vertex> index(order_, -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  Graph h(next);
  for (Vertex v : keep)
    for (Vertex w : neighbors(v) & keep)
      h.adj_[index[v]] |=
          std::uint64_t{1} << index[w];
  return h;
}

Graph Graph::relabeled(std::span<const Vertex> target) const {
  if (static_cast<int>(target.size()) != order_) throw std::invalid_argument("relabeling has wrong length");
  VertexSet seen;
  for (Vertex t : target) {
    check_vertex(t);
    if (seen.contains(t)) throw std::invalid_argument("relabeling is not a permutation");
    seen.insert(t);
  }
  Graph h(order_);
  for (Vertex v = 0; v < order_; ++v) {
    std::uint64_t row = 0;
    for (Vertex w : neighbors(v)) row |= std::uint64_t{1} << target[w];
    h.adj_[target[v]] = row;
  }
  return h;
}

Graph Graph::with_new_vertex(VertexSet nbrs) const {
  require_owned(*this, nbrs, "new vertex neighborhood");
  Graph h(order_ + 1);
  std::copy(adj_.begin(), adj_.end(), h.adj_.begin());
  const Vertex x = order_;
  for (Vertex w : nbrs) h.adj_[w] |= std::uint64_t{1} << x;
  h.adj_[x] = nbrs.bits();
  return h;
}

void require_owned(const Graph& g, VertexSet s, const char* what) {
  if (!g.owns(s)) {
    throw std::invalid_argument(std::string(what) + ": vertex set names a vertex outside the graph");
  }
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  require_owned(g, s, "closed_neighborhood");
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  require_owned(g, s, "open_neighborhood");
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) throw std::out_of_range("distance: vertex out of range");
  VertexSet reached = VertexSet::single(u);
  VertexSet frontier = reached;
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(v)) return d;
    VertexSet next;
    for (Vertex w : frontier) next |= g.neighbors(w);
    frontier = next - reached;
    reached |= next;
  }
  return std::nullopt;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every root; a non-tree edge between layers d and d (or d and d+1)
  // closes a cycle through the root of length 2d+1 (or 2d+2).
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> depth(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    std::size_t head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex x = queue[head++];
      const int dx = depth[x];
      if (2 * dx + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = dx + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (parent[x] != y) {
          best = std::min(best, dx + depth[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && g.neighbors(u).intersects(g.neighbors(v))) return false;
  return true;
}

bool is_connected(const Graph& g) {
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex w : frontier) next |= g.neighbors(w);
    frontier = next - reached;
    reached |= next;
  }
  return reached == g.vertices();
}

bool is_complete(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.closed_neighbors(v) != g.vertices()) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  require_owned(g, s, "is_independent");
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

}  // namespace domlab
