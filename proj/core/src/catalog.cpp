#include "domlab/catalog.hpp"

#include <charconv>
#include <stdexcept>

#include "domlab/canonical.hpp"

namespace domlab {
namespace {

Graph special_graph(Special s) {
  switch (s) {
    case Special::P10:
      return Graph::from_edges(10, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}, {2, 6},
                                    {5, 6}, {5, 7}, {4, 7}, {0, 8}, {8, 9}, {7, 9}});
    case Special::H1:
      return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {5, 6}});
    case Special::H2:
      return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {5, 6}, {0, 6}});
    case Special::H3:
      return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {5, 6}, {2, 3}});
    case Special::H4:
      return Graph::from_edges(7, {{0, 1}, {0, 2}, {1, 4}, {2, 5}, {4, 5}, {3, 6}, {5, 6}, {2, 3}, {0, 6}});
  }
  throw std::invalid_argument("unknown special graph");
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

Graph corona(const Graph& g) {
  const int k = g.order();
  if (2 * k > kMaxOrder) throw std::invalid_argument("corona would exceed the order cap");
  Graph h(2 * k);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (Vertex v = 0; v < k; ++v) h.add_edge(v, k + v);
  return h;
}

Graph make_named(const NamedGraph& spec) {
  const int n = spec.parameter;
  switch (spec.family) {
    case Family::complete: {
      if (n < 1) throw std::invalid_argument("complete graph needs order >= 1");
      Graph g(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::path: {
      if (n < 1) throw std::invalid_argument("path needs order >= 1");
      Graph g(n);
      for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Family::cycle: {
      if (n < 3) throw std::invalid_argument("cycle needs length >= 3");
      Graph g(n);
      for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
      return g;
    }
    case Family::corona_of:
      if (!spec.inner) throw std::invalid_argument("corona-of needs an inner graph");
      return corona(make_named(*spec.inner));
    case Family::special:
      return special_graph(spec.special);
  }
  throw std::invalid_argument("unknown family");
}

std::string_view to_string(Special s) {
  switch (s) {
    case Special::P10: return "P10";
    case Special::H1: return "H1";
    case Special::H2: return "H2";
    case Special::H3: return "H3";
    case Special::H4: return "H4";
  }
  return "?";
}

NamedGraph parse_named(std::string_view text) {
  if (text.starts_with("named:")) text.remove_prefix(6);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("named graph needs FAMILY:PARAM, got '" + std::string(text) + "'");
  const std::string_view family = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (family == "complete") return NamedGraph::complete(parse_int(rest));
  if (family == "path") return NamedGraph::path(parse_int(rest));
  if (family == "cycle") return NamedGraph::cycle(parse_int(rest));
  if (family == "corona-of") return NamedGraph::corona_of(parse_named(rest));
  if (family == "special") {
    for (Special s : kAllSpecials)
      if (rest == to_string(s)) return NamedGraph::of(s);
    throw std::invalid_argument("unknown special graph '" + std::string(rest) + "'");
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

std::string to_string(const NamedGraph& spec) {
  switch (spec.family) {
    case Family::complete: return "complete:" + std::to_string(spec.parameter);
    case Family::path: return "path:" + std::to_string(spec.parameter);
    case Family::cycle: return "cycle:" + std::to_string(spec.parameter);
    case Family::corona_of: return "corona-of:" + (spec.inner ? to_string(*spec.inner) : std::string("?"));
    case Family::special: return "special:" + std::string(to_string(spec.special));
  }
  return "?";
}

ValidationRecord validation_record(Special s) {
  switch (s) {
    case Special::P10: return {10, 5, 4, true, true};
    case Special::H1: return {7, 5, 3, true, true};
    case Special::H2: return {7, 4, 3, true, true};
    case Special::H3: return {7, 4, 3, true, true};
    case Special::H4: return {7, 4, 3, true, true};
  }
  throw std::invalid_argument("unknown special graph");
}

std::optional<NamedGraph> identify_named(const Graph& g) {
  const int n = g.order();
  std::vector<NamedGraph> candidates;
  candidates.push_back(NamedGraph::complete(n));
  candidates.push_back(NamedGraph::path(n));
  if (n >= 3) candidates.push_back(NamedGraph::cycle(n));
  for (Special s : kAllSpecials) candidates.push_back(NamedGraph::of(s));
  if (n % 2 == 0 && n >= 2) {
    const int k = n / 2;
    candidates.push_back(NamedGraph::corona_of(NamedGraph::complete(k)));
    candidates.push_back(NamedGraph::corona_of(NamedGraph::path(k)));
    if (k >= 3) candidates.push_back(NamedGraph::corona_of(NamedGraph::cycle(k)));
  }
  for (const NamedGraph& c : candidates) {
    const Graph h = make_named(c);
    if (h.order() == n && h.edge_count() == g.edge_count() && are_isomorphic(g, h)) return c;
  }
  return std::nullopt;
}

}  // namespace domlab
