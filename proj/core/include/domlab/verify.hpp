#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/theorems.hpp"

namespace domlab {

/// Where a sweep's instances come from. Pair entries use every ordered pair of
/// corpus graphs whose product order is at most product_cap.
struct CorpusSpec {
  enum class Source { enumerated, file, random };

  Source source = Source::enumerated;
  /// enumerated: connected graphs of these orders; random: order range of each graph.
  int min_order = 1;
  int max_order = 8;
  bool triangle_free = false;
  std::filesystem::path file;
  /// random: number of graphs (single entries) or pairs (pair entries).
  int count = 1000;
  std::uint64_t seed = 1;
  int product_cap = 25;

  static CorpusSpec enumerated(int min_order, int max_order, bool triangle_free = false);
  static CorpusSpec from_file(std::filesystem::path path);
  static CorpusSpec random(int count, int max_order, std::uint64_t seed);

  std::string describe(Arity arity) const;
};

struct VerifyOptions {
  /// 0 means hardware concurrency.
  int workers = 0;
  /// Largest enumerated order accepted.
  int budget = 9;
  std::optional<std::filesystem::path> cache_dir;
  int counterexample_cap = 10;
  int member_cap = 100;
};

struct VerificationReport {
  std::string theorem;
  std::string statement;
  std::string corpus;
  std::string member_label;
  std::int64_t scanned = 0;
  std::int64_t holds = 0;
  std::int64_t hypothesis_not_met = 0;
  /// Total number found; `counterexamples` keeps only the first few.
  std::int64_t counterexample_count = 0;
  std::vector<Certificate> counterexamples;
  std::int64_t members = 0;
  /// graph6 of the first member instances, in corpus order.
  std::vector<std::vector<std::string>> member_instances;
  double elapsed_ms = 0;

  bool passed() const { return counterexample_count == 0; }
};

/// The corpus each entry is swept over when none is given.
CorpusSpec default_corpus(const TheoremEntry& entry);

/// Graphs of a corpus in deterministic order. Throws BudgetExceeded, Graph6Error
/// or std::runtime_error for an unreadable file.
std::vector<Graph> load_corpus(const CorpusSpec& corpus, const VerifyOptions& options = {});

/// Runs check_instance over the corpus on a worker pool. Counts, lists and
/// their order depend only on the corpus, never on scheduling.
VerificationReport verify_corpus(const TheoremEntry& entry, const CorpusSpec& corpus, const VerifyOptions& options = {});
VerificationReport verify_corpus(std::string_view id, const CorpusSpec& corpus, const VerifyOptions& options = {});

}  // namespace domlab
