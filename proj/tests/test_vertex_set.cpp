#include "doctest.h"
#include "domlab/vertex_set.hpp"

using domlab::VertexSet;

TEST_CASE("vertex sets behave like small ordered sets") {
  VertexSet s = VertexSet::of({3, 0, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.lowest() == 0);
  CHECK(s.highest() == 5);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  CHECK(s.without(3) == VertexSet::of({0, 5}));
  CHECK(s.with(1).size() == 4);
  CHECK(VertexSet::full(4).bits() == 0xF);
  CHECK(VertexSet::full(62).size() == 62);
  CHECK(VertexSet{} < VertexSet::single(0));
}

TEST_CASE("brace construction from a word keeps every bit") {
  const std::uint64_t word = (std::uint64_t{1} << 40) | 6;
  VertexSet s{word};
  CHECK(s.bits() == word);
  CHECK(s.size() == 3);
}

TEST_CASE("set algebra") {
  const VertexSet a = VertexSet::of({0, 1, 2}), b = VertexSet::of({2, 3});
  CHECK((a | b) == VertexSet::of({0, 1, 2, 3}));
  CHECK((a & b) == VertexSet::of({2}));
  CHECK((a - b) == VertexSet::of({0, 1}));
  CHECK((a ^ b) == VertexSet::of({0, 1, 3}));
  CHECK(VertexSet::of({1}).subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.intersects(b));
}

TEST_CASE("lexicographic order compares ascending member lists") {
  CHECK(domlab::lex_less(VertexSet::of({0, 2}), VertexSet::of({0, 3})));
  CHECK(domlab::lex_less(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
  CHECK(domlab::lex_less(VertexSet::of({0}), VertexSet::of({0, 1})));
  CHECK(domlab::lex_less(VertexSet{}, VertexSet::of({4})));
  CHECK_FALSE(domlab::lex_less(VertexSet::of({1}), VertexSet::of({0, 5})));
  CHECK_FALSE(domlab::lex_less(VertexSet::of({2}), VertexSet::of({2})));
}
