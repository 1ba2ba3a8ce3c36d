#include "doctest.h"
#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"
#include "domlab/domination.hpp"
#include "domlab/graph6.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace domlab;
using namespace testing_support;

TEST_CASE("families") {
  const Graph c4 = C(4);
  CHECK(c4.order() == 4);
  CHECK(girth(c4) == 4);
  const Graph cp3 = make_named(NamedGraph::corona_of(NamedGraph::path(3)));
  CHECK(cp3.order() == 6);
  for (Vertex v = 0; v < 3; ++v) {
    CHECK(cp3.adjacent(v, 3 + v));
    CHECK(cp3.degree(3 + v) == 1);
  }
  CHECK(corona(P(3)) == cp3);
  CHECK_THROWS_AS(make_named(NamedGraph::cycle(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_named(NamedGraph::path(0)), std::invalid_argument);
}

TEST_CASE("parsing names") {
  CHECK(make_named(parse_named("named:cycle:7")) == C(7));
  CHECK(make_named(parse_named("complete:3")) == K(3));
  CHECK(make_named(parse_named("corona-of:path:3")) == corona(P(3)));
  CHECK(make_named(parse_named("special:H3")) == special(Special::H3));
  CHECK(to_string(parse_named("corona-of:cycle:4")) == "corona-of:cycle:4");
  CHECK_THROWS_AS(parse_named("cycle"), std::invalid_argument);
  CHECK_THROWS_AS(parse_named("special:H9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_named("wheel:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_named("cycle:x"), std::invalid_argument);
}

TEST_CASE("special graphs match their validation records") {
  for (Special s : kAllSpecials) {
    CAPTURE(to_string(s));
    const Graph g = special(s);
    const ValidationRecord rec = validation_record(s);
    CHECK(g.order() == rec.order);
    CHECK(girth(g) == rec.girth);
    CHECK(is_connected(g));
    const auto o = oracle::numbers(g);
    CHECK(o.gamma == rec.gamma);
    CHECK((o.gamma == o.upper_gamma) == rec.well_dominated);
    CHECK((o.ind_dom == o.alpha) == rec.well_covered);
  }
  CHECK(validation_record(Special::P10).gamma == 4);
  CHECK(validation_record(Special::P10).girth == 5);
  for (Special s : {Special::H1, Special::H2, Special::H3, Special::H4}) {
    CHECK(validation_record(s).gamma == 3);
    CHECK(*validation_record(s).girth >= 4);
    CHECK(validation_record(s).well_dominated);
  }
}

TEST_CASE("the four H graphs are pairwise non-isomorphic") {
  const Special hs[] = {Special::H1, Special::H2, Special::H3, Special::H4};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) CHECK_FALSE(oracle::isomorphic(special(hs[a]), special(hs[b])));
}

TEST_CASE("identification") {
  CHECK(to_string(*identify_named(parse_graph6("Cr"))) == "cycle:4");
  CHECK(to_string(*identify_named(C(4).relabeled(std::vector<Vertex>{2, 0, 3, 1}))) == "cycle:4");
  CHECK(to_string(*identify_named(K(4))) == "complete:4");
  CHECK(to_string(*identify_named(special(Special::P10))) == "special:P10");
  CHECK(identify_named(corona(P(3))).has_value());
  CHECK_FALSE(identify_named(Graph(3)).has_value());
}
