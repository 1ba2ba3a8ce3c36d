#include "doctest.h"
#include "domlab/canonical.hpp"
#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/products.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace domlab;
using namespace testing_support;

TEST_CASE("examples") {
  CHECK(are_isomorphic(product(ProductKind::cartesian, K(2), K(2)).graph, C(4)));
  const Graph two_c4 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  const Graph c4k2 = product(ProductKind::direct, C(4), K(2)).graph;
  CHECK(are_isomorphic(c4k2, two_c4));
  CHECK_FALSE(is_connected(c4k2));
  CHECK(product(ProductKind::disjunctive, K(2), K(2)).graph == K(4));
}

TEST_CASE("indexing and layers") {
  const ProductGraph p = product(ProductKind::cartesian, K(2), K(2));
  CHECK(p.index(1, 0) == 2);
  CHECK(p.first_coordinate(3) == 1);
  CHECK(p.second_coordinate(3) == 1);
  CHECK(layer(p, LayerSide::first, 0) == VertexSet::of({p.index(0, 0), p.index(1, 0)}));
  CHECK_THROWS_AS(layer(p, LayerSide::first, 2), std::out_of_range);

  const ProductGraph d = product(ProductKind::direct, K(3), K(3));
  const VertexSet l = layer(d, LayerSide::first, 1);
  CHECK(l.size() == 3);
  CHECK(d.graph.induced(l).edge_count() == 0);

  const ProductGraph o = product(ProductKind::disjunctive, K(2), P(4));
  const VertexSet h = layer(o, LayerSide::second, 0);
  CHECK(h.size() == 4);
  CHECK(are_isomorphic(o.graph.induced(h), P(4)));

  CHECK(product_set(o, VertexSet::of({1}), VertexSet::of({0, 3})) == VertexSet::of({4, 7}));
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(product(ProductKind::direct, K(8), K(8)), std::invalid_argument);
  CHECK_NOTHROW(product(ProductKind::direct, K(2), Graph(31)));
}

TEST_CASE("adjacency matches the defining clauses") {
  std::uint64_t state = 41;
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_graph(1, 6, state), h = random_graph(1, 6, state);
    CHECK(product(ProductKind::cartesian, g, h).graph == oracle::product(oracle::Kind::cartesian, g, h));
    CHECK(product(ProductKind::direct, g, h).graph == oracle::product(oracle::Kind::direct, g, h));
    CHECK(product(ProductKind::disjunctive, g, h).graph == oracle::product(oracle::Kind::disjunctive, g, h));
  }
}

TEST_CASE("edge-count identities on 200 random pairs") {
  std::uint64_t state = 43;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(1, 7, state), h = random_graph(1, 7, state);
    const int ng = g.order(), nh = h.order(), eg = g.edge_count(), eh = h.edge_count();
    CHECK(product(ProductKind::cartesian, g, h).graph.edge_count() == ng * eh + nh * eg);
    CHECK(product(ProductKind::direct, g, h).graph.edge_count() == 2 * eg * eh);
    CHECK(product(ProductKind::disjunctive, g, h).graph.edge_count() == eg * nh * nh + eh * ng * ng - 2 * eg * eh);
  }
}

TEST_CASE("commutative up to isomorphism") {
  std::uint64_t state = 47;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_graph(1, 6, state), h = random_graph(1, 6, state);
    for (ProductKind k : {ProductKind::cartesian, ProductKind::direct, ProductKind::disjunctive})
      CHECK(are_isomorphic(product(k, g, h).graph, product(k, h, g).graph));
  }
}

TEST_CASE("layers: edgeless for direct, copies of the factor otherwise") {
  std::uint64_t state = 53;
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(1, 6, state), h = random_graph(1, 6, state);
    const auto d = product(ProductKind::direct, g, h);
    const auto c = product(ProductKind::cartesian, g, h);
    const auto o = product(ProductKind::disjunctive, g, h);
    for (Vertex y = 0; y < h.order(); ++y) {
      CHECK(d.graph.induced(layer(d, LayerSide::first, y)).edge_count() == 0);
      CHECK(c.graph.induced(layer(c, LayerSide::first, y)) == g);
      CHECK(o.graph.induced(layer(o, LayerSide::first, y)) == g);
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      CHECK(c.graph.induced(layer(c, LayerSide::second, x)) == h);
      CHECK(o.graph.induced(layer(o, LayerSide::second, x)) == h);
    }
  }
}

TEST_CASE("kind names") {
  CHECK(parse_product_kind("cartesian") == ProductKind::cartesian);
  CHECK(parse_product_kind("tensor") == ProductKind::direct);
  CHECK(parse_product_kind("or") == ProductKind::disjunctive);
  CHECK(to_string(ProductKind::direct) == "direct");
  CHECK_THROWS_AS(parse_product_kind("strong"), std::invalid_argument);
}
