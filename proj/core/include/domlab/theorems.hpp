#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class Arity { single, pair };

/// A named vertex set backing a counterexample, with the graph it lives in
/// ("G", "H", or a product such as "G x H").
struct WitnessSet {
  std::string name;
  std::string graph;
  VertexSet vertices;
  friend bool operator==(const WitnessSet&, const WitnessSet&) = default;
};

struct Certificate {
  /// The instance: one graph6 string, or two for a pair (G first).
  std::vector<std::string> graph6;
  std::string clause;
  std::vector<WitnessSet> witness_sets;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class VerdictKind { holds, counterexample, hypothesis_not_met };
std::string_view to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::holds;
  /// Present exactly when kind is counterexample.
  std::optional<Certificate> certificate;
  /// The instance belongs to the class the entry tracks (see TheoremEntry::member_label).
  bool member = false;
};

using Instance = std::variant<Graph, std::pair<Graph, Graph>>;

struct TheoremEntry {
  std::string_view id;
  Arity arity;
  std::string_view statement;
  /// What `Verdict::member` records for this entry.
  std::string_view member_label;
  Verdict (*single)(const Graph&) = nullptr;
  Verdict (*pair)(const Graph&, const Graph&) = nullptr;
};

/// Every checkable statement, in a fixed order.
const std::vector<TheoremEntry>& theorem_table();
/// Throws std::invalid_argument for an unknown id.
const TheoremEntry& theorem(std::string_view id);

/// Evaluates one entry on one instance. Counterexample certificates carry the
/// instance's graph6. Throws std::invalid_argument on an arity mismatch.
Verdict check_instance(const TheoremEntry& entry, const Instance& instance);
Verdict check_instance(std::string_view id, const Instance& instance);

}  // namespace domlab
