#pragma once

#include <cstdint>
#include <vector>

#include "domlab/catalog.hpp"
#include "domlab/graph.hpp"

namespace testing_support {

inline domlab::Graph K(int n) { return domlab::make_named(domlab::NamedGraph::complete(n)); }
inline domlab::Graph P(int n) { return domlab::make_named(domlab::NamedGraph::path(n)); }
inline domlab::Graph C(int n) { return domlab::make_named(domlab::NamedGraph::cycle(n)); }
inline domlab::Graph special(domlab::Special s) { return domlab::make_named(domlab::NamedGraph::of(s)); }

inline std::vector<std::uint64_t> bits(const std::vector<domlab::VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (auto s : sets) out.push_back(s.bits());
  return out;
}

}  // namespace testing_support
