#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "domlab/catalog.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/graph6.hpp"
#include "domlab/verify.hpp"
#include "helpers.hpp"

using namespace domlab;
using namespace testing_support;

namespace {
void check_tally(const VerificationReport& r) {
  CHECK(r.scanned == r.holds + r.hypothesis_not_met + r.counterexample_count);
  CHECK(r.counterexamples.size() <= static_cast<std::size_t>(std::max<std::int64_t>(r.counterexample_count, 0)));
  CHECK(r.members >= static_cast<std::int64_t>(r.member_instances.size()));
}
}  // namespace

TEST_CASE("LNE over connected graphs of order at most 7") {
  const auto r = verify_corpus("LNE", CorpusSpec::enumerated(1, 7));
  check_tally(r);
  CHECK(r.scanned == 1 + 1 + 2 + 6 + 21 + 112 + 853);
  CHECK(r.counterexample_count == 0);
  CHECK(r.passed());
}

TEST_CASE("TF11 membership") {
  const auto r = verify_corpus("TF11", CorpusSpec::enumerated(1, 8, true));
  check_tally(r);
  CHECK(r.members == 11);
  CHECK(r.counterexample_count == 0);
  CHECK(r.member_instances.size() == 11);
}

TEST_CASE("CHAIN on random graphs") {
  const auto r = verify_corpus("CHAIN", CorpusSpec::random(1000, 10, 2024));
  check_tally(r);
  CHECK(r.scanned == 1000);
  CHECK(r.counterexample_count == 0);
}

TEST_CASE("results do not depend on the worker count") {
  VerifyOptions one, four;
  one.workers = 1;
  four.workers = 4;
  for (auto id : {"T3", "PX", "DIND"}) {
    CAPTURE(id);
    const auto& e = theorem(id);
    auto a = verify_corpus(e, default_corpus(e), one), b = verify_corpus(e, default_corpus(e), four);
    CHECK(a.scanned == b.scanned);
    CHECK(a.holds == b.holds);
    CHECK(a.members == b.members);
    CHECK(a.member_instances == b.member_instances);
    check_tally(a);
  }
}

TEST_CASE("E1 never meets its hypothesis on small pairs") {
  const auto& e = theorem("E1");
  const auto r = verify_corpus(e, default_corpus(e));
  check_tally(r);
  CHECK(r.holds == 0);
  CHECK(r.counterexample_count == 0);
  CHECK(r.hypothesis_not_met == r.scanned);
}

TEST_CASE("pair corpora respect the product cap") {
  CorpusSpec c = CorpusSpec::enumerated(1, 5);
  c.product_cap = 9;
  const auto r = verify_corpus("DIND", c);
  // ordered pairs of connected graphs with |G||H| <= 9
  const int counts[] = {0, 1, 1, 2, 6, 21};
  std::int64_t expected = 0;
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      if (a * b <= 9) expected += counts[a] * counts[b];
  CHECK(r.scanned == expected);
}

TEST_CASE("file corpora") {
  const auto path = std::filesystem::temp_directory_path() / ("domlab-corpus-" + std::to_string(::getpid()) + ".g6");
  {
    std::ofstream out(path);
    out << to_graph6(C(4)) << "\n" << to_graph6(C(5)) << "\n" << to_graph6(corona(P(3))) << "\n";
  }
  const auto r = verify_corpus("PX", CorpusSpec::from_file(path));
  CHECK(r.scanned == 3);
  CHECK(r.members == 2);
  CHECK(r.corpus.find(path.string()) != std::string::npos);
  std::filesystem::remove(path);
  CHECK_THROWS(verify_corpus("PX", CorpusSpec::from_file(path)));
}

TEST_CASE("budget is enforced") {
  VerifyOptions o;
  o.budget = 6;
  CHECK_THROWS_AS(verify_corpus("CHAIN", CorpusSpec::enumerated(1, 7), o), BudgetExceeded);
}

TEST_CASE("member cap") {
  VerifyOptions o;
  o.member_cap = 3;
  const auto r = verify_corpus("P1", CorpusSpec::enumerated(1, 6), o);
  CHECK(r.members > 3);
  CHECK(r.member_instances.size() == 3);
}
