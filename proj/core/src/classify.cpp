#include "domlab/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"

namespace domlab {

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.closed_neighbors(v) == g.vertices()) out.insert(v);
  return out;
}

std::optional<CoronaDecomposition> corona_decomposition(const Graph& g) {
  VertexSet leaves;
  bool ambiguous = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    const Vertex w = g.neighbors(v).lowest();
    if (g.degree(w) == 1) {
      // K2 component: either end can be the core; keep the lower one.
      ambiguous = true;
      if (v > w) leaves.insert(v);
    } else {
      leaves.insert(v);
    }
  }
  const VertexSet core = g.vertices() - leaves;
  if (core.empty()) return std::nullopt;
  std::vector<Edge> matching;
  for (Vertex c : core) {
    const VertexSet own = g.neighbors(c) & leaves;
    if (own.size() != 1) return std::nullopt;
    matching.emplace_back(c, own.lowest());
  }
  if (static_cast<int>(matching.size()) != leaves.size()) return std::nullopt;
  return CoronaDecomposition{g.induced(core), core, std::move(matching), ambiguous};
}

std::vector<FiveCycle> basic_five_cycles(const Graph& g) {
  std::vector<FiveCycle> out;
  VertexSet heavy;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) heavy.insert(v);

  for (Vertex a = 0; a < g.order(); ++a) {
    const VertexSet above = g.vertices() - VertexSet::full(a + 1);
    for (Vertex b : g.neighbors(a) & above)
      for (Vertex c : g.neighbors(b) & above)
        for (Vertex d : g.neighbors(c) & above) {
          if (d == b) continue;
          for (Vertex e : g.neighbors(d) & g.neighbors(a) & above) {
            if (e == b || e == c || e <= b) continue;
            const FiveCycle cyc{a, b, c, d, e};
            bool basic = true;
            for (int i = 0; i < 5 && basic; ++i)
              basic = !(heavy.contains(cyc[i]) && heavy.contains(cyc[(i + 1) % 5]));
            if (basic) out.push_back(cyc);
          }
        }
  }
  return out;
}

std::optional<PCPartition> pc_partition(const Graph& g) {
  PCPartition pc;
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) != 1 && g.degree(v) != 1) continue;
    if (pc.pendant.contains(u) || pc.pendant.contains(v)) return std::nullopt;
    pc.pendant.insert(u);
    pc.pendant.insert(v);
    pc.pendant_matching.emplace_back(u, v);
  }
  pc.cycle_vertices = g.vertices() - pc.pendant;

  std::vector<FiveCycle> usable;
  for (const FiveCycle& c : basic_five_cycles(g)) {
    VertexSet members;
    for (Vertex v : c) members.insert(v);
    if (members.subset_of(pc.cycle_vertices)) usable.push_back(c);
  }

  int covers = 0;
  std::vector<FiveCycle> chosen;
  std::function<void(VertexSet)> cover = [&](VertexSet uncovered) {
    if (covers >= 2) return;
    if (uncovered.empty()) {
      if (covers++ == 0) pc.basic_cycles = chosen;
      return;
    }
    const Vertex x = uncovered.lowest();
    for (const FiveCycle& c : usable) {
      VertexSet members;
      for (Vertex v : c) members.insert(v);
      if (!members.contains(x) || !members.subset_of(uncovered)) continue;
      chosen.push_back(c);
      cover(uncovered - members);
      chosen.pop_back();
    }
  };
  cover(pc.cycle_vertices);
  if (covers == 0) return std::nullopt;
  pc.ambiguous = covers > 1;
  return pc;
}

void validate_pc_partition(const Graph& g, const PCPartition& pc) {
  auto fail = [](const char* why) { throw std::invalid_argument(std::string("invalid PC partition: ") + why); };
  if ((pc.pendant | pc.cycle_vertices) != g.vertices() || pc.pendant.intersects(pc.cycle_vertices)) fail("P and C must partition V");
  VertexSet matched;
  for (auto [u, v] : pc.pendant_matching) {
    if (!g.adjacent(u, v) || (g.degree(u) != 1 && g.degree(v) != 1)) fail("matching uses a non-pendant edge");
    if (matched.contains(u) || matched.contains(v)) fail("pendant edges overlap");
    matched.insert(u);
    matched.insert(v);
  }
  if (matched != pc.pendant) fail("pendant edges do not match P perfectly");
  const std::vector<FiveCycle> basic = basic_five_cycles(g);
  VertexSet covered;
  for (const FiveCycle& c : pc.basic_cycles) {
    FiveCycle canon = c;
    // rotate/reflect into the form basic_five_cycles emits
    const auto lo = std::min_element(canon.begin(), canon.end()) - canon.begin();
    std::rotate(canon.begin(), canon.begin() + lo, canon.end());
    if (canon[1] > canon[4]) std::reverse(canon.begin() + 1, canon.end());
    if (std::find(basic.begin(), basic.end(), canon) == basic.end()) fail("listed cycle is not a basic 5-cycle");
    for (Vertex v : c) {
      if (covered.contains(v)) fail("basic cycles overlap");
      covered.insert(v);
    }
  }
  if (covered != pc.cycle_vertices) fail("basic cycles do not cover C exactly");
}

bool check_pc_well_dominated(const Graph& g, const PCPartition& pc) {
  validate_pc_partition(g, pc);
  for (std::size_t i = 0; i < pc.basic_cycles.size(); ++i)
    for (std::size_t j = i + 1; j < pc.basic_cycles.size(); ++j) {
      std::vector<Edge> joining;
      for (Vertex u : pc.basic_cycles[i])
        for (Vertex v : pc.basic_cycles[j])
          if (g.adjacent(u, v)) joining.emplace_back(u, v);
      const std::size_t count = joining.size();
      if (count == 0 || count == 4) continue;
      if (count == 2 && joining[0].first != joining[1].first && joining[0].second != joining[1].second) continue;
      return false;
    }
  return true;
}

std::string_view to_string(SmallFamilyTag tag) {
  switch (tag) {
    case SmallFamilyTag::K1: return "K1";
    case SmallFamilyTag::K2: return "K2";
    case SmallFamilyTag::P4: return "P4";
    case SmallFamilyTag::C4: return "C4";
    case SmallFamilyTag::C5: return "C5";
    case SmallFamilyTag::C7: return "C7";
    case SmallFamilyTag::P3_corona: return "P3oK1";
    case SmallFamilyTag::H1: return "H1";
    case SmallFamilyTag::H2: return "H2";
    case SmallFamilyTag::H3: return "H3";
    case SmallFamilyTag::H4: return "H4";
    case SmallFamilyTag::not_member: return "not-member";
  }
  return "?";
}

const std::vector<std::pair<SmallFamilyTag, Graph>>& small_triangle_free_family() {
  static const std::vector<std::pair<SmallFamilyTag, Graph>> family = [] {
    std::vector<std::pair<SmallFamilyTag, Graph>> f;
    f.emplace_back(SmallFamilyTag::K1, make_named(NamedGraph::complete(1)));
    f.emplace_back(SmallFamilyTag::K2, make_named(NamedGraph::complete(2)));
    f.emplace_back(SmallFamilyTag::P4, make_named(NamedGraph::path(4)));
    f.emplace_back(SmallFamilyTag::C4, make_named(NamedGraph::cycle(4)));
    f.emplace_back(SmallFamilyTag::C5, make_named(NamedGraph::cycle(5)));
    f.emplace_back(SmallFamilyTag::C7, make_named(NamedGraph::cycle(7)));
    f.emplace_back(SmallFamilyTag::P3_corona, make_named(NamedGraph::corona_of(NamedGraph::path(3))));
    f.emplace_back(SmallFamilyTag::H1, make_named(NamedGraph::of(Special::H1)));
    f.emplace_back(SmallFamilyTag::H2, make_named(NamedGraph::of(Special::H2)));
    f.emplace_back(SmallFamilyTag::H3, make_named(NamedGraph::of(Special::H3)));
    f.emplace_back(SmallFamilyTag::H4, make_named(NamedGraph::of(Special::H4)));
    return f;
  }();
  return family;
}

SmallFamilyTag classify_small_triangle_free(const Graph& g) {
  for (const auto& [tag, h] : small_triangle_free_family())
    if (h.order() == g.order() && h.edge_count() == g.edge_count() && are_isomorphic(g, h)) return tag;
  return SmallFamilyTag::not_member;
}

}  // namespace domlab
