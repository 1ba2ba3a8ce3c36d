#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class Family { complete, path, cycle, corona_of, special };
enum class Special { P10, H1, H2, H3, H4 };

/// A reproducible recipe for one of the standard graphs.
///
/// Labelings:
///  - complete:N   vertices 0..N-1, all pairs adjacent
///  - path:N       0-1-...-(N-1)
///  - cycle:N      0-1-...-(N-1)-0, N >= 3
///  - corona-of:X  X keeps indices 0..k-1; the leaf attached to v is k+v
///  - special:P10  the girth-5 well-covered graph on 10 vertices; two 5-cycles
///                 0-1-3-4-2 and 2-6-5-7-4 sharing edge 2-4, plus path 0-8-9-7
///  - special:H1..H4  the four exceptional triangle-free graphs with domination
///                 number 3; each is the 5-cycle 0-1-4-5-2 with the path 5-6-3,
///                 plus chords H2: 6-0, H3: 2-3, H4: 2-3 and 6-0
struct NamedGraph {
  Family family = Family::complete;
  int parameter = 1;
  Special special = Special::P10;
  std::shared_ptr<const NamedGraph> inner;

  static NamedGraph complete(int n) { return {Family::complete, n, {}, nullptr}; }
  static NamedGraph path(int n) { return {Family::path, n, {}, nullptr}; }
  static NamedGraph cycle(int n) { return {Family::cycle, n, {}, nullptr}; }
  static NamedGraph corona_of(NamedGraph core) {
    return {Family::corona_of, 0, {}, std::make_shared<const NamedGraph>(std::move(core))};
  }
  static NamedGraph of(Special s) { return {Family::special, 0, s, nullptr}; }
};

/// Builds the graph; throws std::invalid_argument on an invalid parameter.
Graph make_named(const NamedGraph& spec);

/// Parses "cycle:7", "special:H3", "corona-of:path:3" (the "named:" prefix is optional).
NamedGraph parse_named(std::string_view text);
std::string to_string(const NamedGraph& spec);
std::string_view to_string(Special s);

/// G o K1: one new degree-1 neighbor per vertex, labeled as for corona-of.
Graph corona(const Graph& g);

/// Properties each special graph must exhibit; checked against the domination
/// and girth routines by the test suite so a transcription error cannot pass.
struct ValidationRecord {
  int order;
  std::optional<int> girth;
  int gamma;
  bool well_dominated;
  bool well_covered;
};
ValidationRecord validation_record(Special s);

inline constexpr Special kAllSpecials[] = {Special::P10, Special::H1, Special::H2, Special::H3, Special::H4};

/// Best-effort name for g among small complete graphs, paths, cycles, specials
/// and coronas of those; std::nullopt when nothing in the catalog matches.
std::optional<NamedGraph> identify_named(const Graph& g);

}  // namespace domlab
