#include "doctest.h"
#include "domlab/enumerate.hpp"
#include "domlab/graph.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace domlab;
using namespace testing_support;

TEST_CASE("construction enforces the order range and simple-graph rules") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(63), std::invalid_argument);
  CHECK_NOTHROW(Graph(62));
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK(g.edge_count() == 1);
  g.remove_edge(2, 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("neighborhoods") {
  const Graph p4 = P(4);
  CHECK(closed_neighborhood(p4, VertexSet::of({0})) == VertexSet::of({0, 1}));
  CHECK(closed_neighborhood(p4, VertexSet{}).empty());
  CHECK(closed_neighborhood(C(4), VertexSet::of({0, 2})) == VertexSet::full(4));
  CHECK(open_neighborhood(p4, VertexSet::of({1})) == VertexSet::of({0, 2}));
  CHECK_THROWS_AS(closed_neighborhood(p4, VertexSet::of({4})), std::invalid_argument);
}

TEST_CASE("distance") {
  CHECK(distance(C(7), 0, 3) == 3);
  CHECK(distance(C(7), 4, 4) == 0);
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(distance(two_k2, 0, 3).has_value());
}

TEST_CASE("girth") {
  CHECK(girth(K(3)) == 3);
  CHECK_FALSE(girth(P(4)).has_value());
  CHECK(girth(C(7)) == 7);
  CHECK(girth(C(4)) == 4);
  CHECK(girth(special(Special::P10)) == 5);
  CHECK(is_triangle_free(P(4)));
  CHECK_FALSE(is_triangle_free(K(4)));
}

TEST_CASE("connectivity and completeness") {
  CHECK(is_connected(K(1)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_complete(K(5)));
  CHECK_FALSE(is_complete(C(4)));
  CHECK(is_independent(C(4), VertexSet::of({0, 2})));
  CHECK_FALSE(is_independent(C(4), VertexSet::of({0, 1})));
}

TEST_CASE("induced subgraphs, relabeling and vertex addition") {
  const Graph c5 = C(5);
  const Graph sub = c5.induced(VertexSet::of({0, 1, 2}));
  CHECK(sub == P(3));
  const std::vector<Vertex> rot{1, 2, 3, 4, 0};
  const Graph r = c5.relabeled(rot);
  CHECK(r.edge_count() == 5);
  CHECK(r.adjacent(1, 2));
  const std::vector<Vertex> bad{0, 0, 1, 2, 3};
  CHECK_THROWS_AS(c5.relabeled(bad), std::invalid_argument);
  const Graph x = P(3).with_new_vertex(VertexSet::of({0, 2}));
  CHECK(x.order() == 4);
  CHECK(x.degree(3) == 2);
  CHECK(girth(x) == 4);
}

TEST_CASE("girth 3 exactly when some edge closes a triangle") {
  std::uint64_t state = 7;
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(3, 9, state);
    bool common = false;
    for (auto [u, v] : g.edges()) common = common || g.neighbors(u).intersects(g.neighbors(v));
    CHECK((girth(g) == 3) == common);
    CHECK(is_triangle_free(g) == oracle::triangle_free(g));
    CHECK(is_connected(g) == oracle::connected(g));
  }
}
