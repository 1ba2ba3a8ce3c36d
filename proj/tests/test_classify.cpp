#include "doctest.h"
#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"
#include "domlab/classify.hpp"
#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "helpers.hpp"

using namespace domlab;
using namespace testing_support;

TEST_CASE("universal vertices") {
  CHECK(universal_vertices(K(4)) == VertexSet::full(4));
  CHECK(universal_vertices(P(3)) == VertexSet::of({1}));
  CHECK(universal_vertices(C(5)).empty());
}

TEST_CASE("corona decomposition") {
  const auto p4 = corona_decomposition(P(4));
  REQUIRE(p4.has_value());
  CHECK(p4->core_vertices == VertexSet::of({1, 2}));
  CHECK(p4->matching == std::vector<Edge>{{1, 0}, {2, 3}});
  CHECK(p4->core == K(2));
  CHECK_FALSE(p4->ambiguous);
  CHECK_FALSE(corona_decomposition(C(4)).has_value());
  const auto k2 = corona_decomposition(K(2));
  REQUIRE(k2.has_value());
  CHECK(k2->core == K(1));
  CHECK(k2->ambiguous);
  CHECK_FALSE(corona_decomposition(K(1)).has_value());
  CHECK_FALSE(corona_decomposition(P(3)).has_value());
}

TEST_CASE("coronas decompose back to their core") {
  const auto cores = random_graphs(100, 1, 6, 5, true);
  std::uint64_t state = 7;
  for (const Graph& h : cores) {
    const Graph g = corona(h).relabeled(random_ordering(2 * h.order(), state));
    const auto c = corona_decomposition(g);
    REQUIRE(c.has_value());
    CHECK(are_isomorphic(c->core, h));
    CHECK(are_isomorphic(corona(c->core), g));
  }
}

TEST_CASE("basic 5-cycles") {
  CHECK(basic_five_cycles(C(5)).size() == 1);
  CHECK(basic_five_cycles(special(Special::H1)).size() == 1);
  CHECK(basic_five_cycles(C(7)).empty());
  std::uint64_t state = 61;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(5, 11, state);
    for (const FiveCycle& c : basic_five_cycles(g)) {
      CHECK(VertexSet::from_vector({c.begin(), c.end()}).size() == 5);
      for (int k = 0; k < 5; ++k) {
        const Vertex a = c[k], b = c[(k + 1) % 5];
        CHECK(g.adjacent(a, b));
        CHECK((g.degree(a) < 3 || g.degree(b) < 3));
      }
    }
  }
}

TEST_CASE("PC partitions") {
  const Graph cp3 = corona(P(3));
  const auto a = pc_partition(cp3);
  REQUIRE(a.has_value());
  CHECK(a->pendant == VertexSet::full(6));
  CHECK(a->cycle_vertices.empty());

  const auto h1 = pc_partition(special(Special::H1));
  REQUIRE(h1.has_value());
  CHECK(h1->pendant.size() == 2);
  CHECK(h1->cycle_vertices.size() == 5);
  CHECK(h1->basic_cycles.size() == 1);
  CHECK_NOTHROW(validate_pc_partition(special(Special::H1), *h1));

  CHECK_FALSE(pc_partition(C(7)).has_value());
  CHECK(pc_partition(C(5)).has_value());

  PCPartition broken = *h1;
  broken.pendant = VertexSet{};
  CHECK_THROWS_AS(validate_pc_partition(special(Special::H1), broken), std::invalid_argument);
  CHECK_THROWS_AS(check_pc_well_dominated(special(Special::H1), broken), std::invalid_argument);
}

TEST_CASE("joining condition for pairs of basic 5-cycles") {
  CHECK(check_pc_well_dominated(special(Special::H1), *pc_partition(special(Special::H1))));
  CHECK(check_pc_well_dominated(corona(P(3)), *pc_partition(corona(P(3)))));

  Graph one_edge(10);
  for (int k = 0; k < 5; ++k) {
    one_edge.add_edge(k, (k + 1) % 5);
    one_edge.add_edge(5 + k, 5 + (k + 1) % 5);
  }
  one_edge.add_edge(0, 5);
  const auto pc = pc_partition(one_edge);
  REQUIRE(pc.has_value());
  CHECK_FALSE(check_pc_well_dominated(one_edge, *pc));
  CHECK_FALSE(domination_profile(one_edge).well_dominated);

  Graph two_edges = one_edge;
  two_edges.add_edge(2, 7);
  const auto pc2 = pc_partition(two_edges);
  REQUIRE(pc2.has_value());
  CHECK(check_pc_well_dominated(two_edges, *pc2));

  Graph shared_end = one_edge;  // two edges meeting at vertex 0
  shared_end.add_edge(0, 7);
  if (const auto pc3 = pc_partition(shared_end)) CHECK_FALSE(check_pc_well_dominated(shared_end, *pc3));
}

TEST_CASE("a PC graph without basic 5-cycles is the corona of its non-leaf vertices") {
  EnumerationOptions tf;
  tf.triangle_free = true;
  GraphEnumerator e(tf);
  int checked = 0;
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : e.of_order(n)) {
      const auto pc = pc_partition(g);
      if (!pc || !pc->basic_cycles.empty()) continue;
      VertexSet high;
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) >= 2) high.insert(v);
      const auto c = corona_decomposition(g);
      REQUIRE(c.has_value());
      CHECK(c->core_vertices == high);
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("small triangle-free family") {
  CHECK(classify_small_triangle_free(C(5)) == SmallFamilyTag::C5);
  CHECK(classify_small_triangle_free(special(Special::H4)) == SmallFamilyTag::H4);
  CHECK(classify_small_triangle_free(P(6)) == SmallFamilyTag::not_member);
  CHECK(classify_small_triangle_free(corona(P(3))) == SmallFamilyTag::P3_corona);
  CHECK(to_string(SmallFamilyTag::P3_corona) == "P3oK1");
  CHECK(small_triangle_free_family().size() == 11);
  std::uint64_t state = 11;
  for (const auto& [tag, g] : small_triangle_free_family()) {
    CAPTURE(to_string(tag));
    const Graph shuffled = g.relabeled(random_ordering(g.order(), state));
    CHECK(classify_small_triangle_free(shuffled) == tag);
    CHECK(is_connected(g));
    CHECK(is_triangle_free(g));
    CHECK(is_well_dominated(g));
    CHECK(domination_number(g) <= 3);
  }
}
