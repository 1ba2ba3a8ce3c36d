#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "domlab/enumerate.hpp"
#include "domlab/graph6.hpp"
#include "helpers.hpp"

using namespace domlab;
using namespace testing_support;

TEST_CASE("hand-encoded examples") {
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("A_") == K(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(to_graph6(K(1)) == "@");
  CHECK(to_graph6(K(2)) == "A_");
  CHECK(to_graph6(P(4)) == "Ch");
  CHECK(parse_graph6("Ch") == P(4));
}

TEST_CASE("header and trailing whitespace are tolerated") {
  CHECK(parse_graph6(">>graph6<<Ch") == P(4));
  CHECK(parse_graph6("Ch\r\n") == P(4));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("C"), Graph6Error);         // truncated
  CHECK_THROWS_AS(parse_graph6("Chh"), Graph6Error);       // trailing byte
  CHECK_THROWS_AS(parse_graph6("C\x7f"), Graph6Error);     // byte above 126
  CHECK_THROWS_AS(parse_graph6("C "), Graph6Error);        // the space is stripped, leaving a truncated body
  CHECK_THROWS_AS(parse_graph6("~?@?"), Graph6Error);      // order above 62
  CHECK_THROWS_AS(parse_graph6("?"), Graph6Error);         // order 0
  CHECK_THROWS_AS(parse_graph6("B@"), Graph6Error);        // nonzero padding bit
}

TEST_CASE("round trip on random graphs of every size") {
  std::uint64_t state = 11;
  for (int i = 0; i < 400; ++i) {
    const Graph g = random_graph(1, 62, state);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("streams and files") {
  std::istringstream in(">>graph6<<@\n\nA_\nCh\n");
  const auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 3);
  CHECK(gs[2] == P(4));

  std::istringstream bad("@\n>>graph6<<A_\n");
  CHECK_THROWS_AS(read_graph6_stream(bad), Graph6Error);
  std::istringstream bad_line("@\nC\n");
  CHECK_THROWS_WITH_AS(read_graph6_stream(bad_line), doctest::Contains("line 2"), Graph6Error);

  const auto dir = std::filesystem::temp_directory_path() / "domlab-graph6-test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "few.g6";
  write_graph6_file_atomic(file, {K(1), C(5), special(Special::H3)});
  const auto back = read_graph6_file(file);
  REQUIRE(back.size() == 3);
  CHECK(back[1] == C(5));
  CHECK(back[2] == special(Special::H3));
  for (const auto& entry : std::filesystem::directory_iterator(dir)) CHECK(entry.path().extension() == ".g6");
  std::filesystem::remove_all(dir);
  CHECK_THROWS(read_graph6_file(dir / "missing.g6"));
}
