#pragma once

// Property sweeps shared by the unit suite and the acceptance binary. Each
// check reports how many cases it looked at and describes the first failure.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "domlab/catalog.hpp"
#include "domlab/classify.hpp"
#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/graph6.hpp"
#include "domlab/products.hpp"
#include "oracles.hpp"

namespace property_checks {

using namespace domlab;

struct Tally {
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  bool clean() const { return violations == 0 && checked > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checked << " checked, " << violations << " violations";
    if (violations) out << " (first: " << first << ")";
    return out.str();
  }
};

inline std::string g6(const Graph& g) { return to_graph6(g); }

inline std::vector<Graph> random_corpus() { return random_graphs(1000, 1, 10, 20240611); }

inline std::vector<Graph> all_graphs_up_to(int n, bool connected) {
  EnumerationOptions o;
  o.connected = connected;
  GraphEnumerator e(o);
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k)
    for (const Graph& g : e.of_order(k)) out.push_back(g);
  return out;
}

/// Named graphs known to be well-dominated.
inline std::vector<Graph> well_dominated_catalog() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n) out.push_back(make_named(NamedGraph::complete(n)));
  for (int n : {1, 2, 4}) out.push_back(make_named(NamedGraph::path(n)));
  for (int n : {3, 4, 5, 7}) out.push_back(make_named(NamedGraph::cycle(n)));
  for (Special s : kAllSpecials) out.push_back(make_named(NamedGraph::of(s)));
  out.push_back(make_named(NamedGraph::corona_of(NamedGraph::path(3))));
  out.push_back(make_named(NamedGraph::corona_of(NamedGraph::cycle(4))));
  out.push_back(make_named(NamedGraph::corona_of(NamedGraph::complete(4))));
  return out;
}

inline Tally chain(const std::vector<Graph>& graphs) {
  Tally t;
  for (const Graph& g : graphs) {
    ++t.checked;
    const auto p = domination_profile(g);
    if (!(p.gamma <= p.ind_dom && p.ind_dom <= p.alpha && p.alpha <= p.upper_gamma)) t.fail(g6(g));
  }
  return t;
}

inline Tally well_dominated_implies_covered(const std::vector<Graph>& graphs) {
  Tally t;
  for (const Graph& g : graphs) {
    ++t.checked;
    const auto p = domination_profile(g);
    if (p.well_dominated && !p.well_covered) t.fail(g6(g));
  }
  return t;
}

/// In a well-covered graph the private neighborhood of each member of a
/// maximal independent set is a clique. Private neighbors come from the
/// definition here, not from the library.
inline Tally private_neighbor_cliques(const std::vector<Graph>& graphs) {
  Tally t;
  for (const Graph& g : graphs) {
    if (!is_well_covered(g)) continue;
    const auto m = oracle::matrix(g);
    const int n = g.order();
    for (std::uint64_t s : oracle::maximal_independent_sets(g))
      for (int x = 0; x < n; ++x) {
        if (!oracle::in(s, x)) continue;
        ++t.checked;
        std::vector<int> pn;
        std::uint64_t pn_bits = 0;
        for (int u = 0; u < n; ++u) {
          int hits = 0;
          bool hits_x = false;
          for (int v = 0; v < n; ++v)
            if (oracle::in(s, v) && (u == v || m[u][v])) {
              ++hits;
              hits_x = hits_x || v == x;
            }
          if (hits == 1 && hits_x) {
            pn.push_back(u);
            pn_bits |= std::uint64_t{1} << u;
          }
        }
        if (private_neighbors(g, x, VertexSet{s}).bits() != pn_bits) t.fail(g6(g) + " private neighbors disagree");
        for (std::size_t a = 0; a < pn.size(); ++a)
          for (std::size_t b = a + 1; b < pn.size(); ++b)
            if (!m[pn[a]][pn[b]]) t.fail(g6(g) + " x=" + std::to_string(x));
      }
  }
  return t;
}

inline Tally maximal_independent_sets_are_minimal_dominating(const std::vector<Graph>& graphs) {
  Tally t;
  for (const Graph& g : graphs) {
    const auto m = oracle::matrix(g);
    for_each_maximal_independent(g, [&](VertexSet s) {
      ++t.checked;
      if (!oracle::minimal(m, s.bits(), oracle::dominating)) t.fail(g6(g));
      return true;
    });
  }
  return t;
}

inline Tally greedy_minimality(const std::vector<Graph>& graphs, int orderings, std::uint64_t seed) {
  Tally t;
  std::uint64_t state = seed;
  for (const Graph& g : graphs) {
    const auto m = oracle::matrix(g);
    for (int k = 0; k < orderings; ++k) {
      ++t.checked;
      const auto order = random_ordering(g.order(), state);
      if (!oracle::minimal(m, greedy_minimal_dominating(g, order).bits(), oracle::dominating)) t.fail(g6(g));
      if (!oracle::maximal_independent(m, greedy_maximal_independent(g, order).bits())) t.fail(g6(g) + " (independent)");
    }
  }
  return t;
}

inline Tally greedy_hits_gamma_on_well_dominated(int orderings, std::uint64_t seed) {
  Tally t;
  std::uint64_t state = seed;
  for (const Graph& g : well_dominated_catalog()) {
    const int gamma = oracle::numbers(g).gamma;
    for (int k = 0; k < orderings; ++k) {
      ++t.checked;
      if (greedy_minimal_dominating(g, random_ordering(g.order(), state)).size() != gamma) t.fail(g6(g));
    }
  }
  return t;
}

/// Every connected graph without isolated vertices has a minimum dominating
/// set that is open irredundant; the returned witness is checked from scratch.
inline Tally open_irredundant_witnesses(int max_order) {
  Tally t;
  for (const Graph& g : all_graphs_up_to(max_order, true)) {
    if (g.order() < 2) continue;
    ++t.checked;
    const auto m = oracle::matrix(g);
    const int n = g.order();
    VertexSet s;
    try {
      s = find_open_irredundant_minimum_dominating(g);
    } catch (const std::exception& e) {
      t.fail(g6(g) + ": " + e.what());
      continue;
    }
    bool ok = oracle::dominating(m, s.bits()) && s.size() == oracle::numbers(g).gamma;
    for (Vertex u : s) {
      bool has_external = false;
      for (int w = 0; w < n && !has_external; ++w) {
        if (!m[u][w]) continue;
        bool covered = false;
        for (Vertex v : s)
          if (v != u && (v == w || m[v][w])) covered = true;
        has_external = !covered;
      }
      ok = ok && has_external;
    }
    if (!ok) t.fail(g6(g));
  }
  return t;
}

inline Tally solvers_match_subset_oracle(int max_order) {
  Tally t;
  for (const Graph& g : all_graphs_up_to(max_order, false)) {
    ++t.checked;
    const auto p = domination_profile(g);
    const auto o = oracle::numbers(g);
    bool ok = p.gamma == o.gamma && p.upper_gamma == o.upper_gamma && p.ind_dom == o.ind_dom && p.alpha == o.alpha &&
              p.gamma_t == o.gamma_t && p.upper_gamma_t == o.upper_gamma_t &&
              p.well_dominated == (o.gamma == o.upper_gamma) && p.well_covered == (o.ind_dom == o.alpha);
    const auto m = oracle::matrix(g);
    ok = ok && oracle::dominating(m, p.witness_min_dom.bits()) && p.witness_min_dom.size() == o.gamma;
    ok = ok && oracle::independent(m, p.witness_max_ind.bits()) && p.witness_max_ind.size() == o.alpha;
    if (!ok) t.fail(g6(g));
  }
  return t;
}

inline Graph random_without_isolated(int min_order, int max_order, std::uint64_t& state) {
  for (;;) {
    Graph g = random_graph(min_order, max_order, state);
    if (!g.has_isolated_vertex()) return g;
  }
}

inline Tally product_edge_counts(int pairs, std::uint64_t seed) {
  Tally t;
  std::uint64_t state = seed;
  for (int i = 0; i < pairs; ++i) {
    const Graph g = random_graph(1, 7, state), h = random_graph(1, 7, state);
    const int ng = g.order(), nh = h.order(), eg = g.edge_count(), eh = h.edge_count();
    t.checked += 3;
    const std::string tag = g6(g) + " " + g6(h);
    if (product(ProductKind::cartesian, g, h).graph.edge_count() != ng * eh + nh * eg) t.fail("cartesian " + tag);
    if (product(ProductKind::direct, g, h).graph.edge_count() != 2 * eg * eh) t.fail("direct " + tag);
    if (product(ProductKind::disjunctive, g, h).graph.edge_count() != eg * nh * nh + eh * ng * ng - 2 * eg * eh)
      t.fail("disjunctive " + tag);
  }
  return t;
}

inline Tally direct_product_domination_bound(int pairs, std::uint64_t seed) {
  Tally t;
  std::uint64_t state = seed;
  for (int i = 0; i < pairs; ++i) {
    const Graph g = random_without_isolated(2, 6, state), h = random_without_isolated(2, 6, state);
    ++t.checked;
    const int lhs = domination_number(product(ProductKind::direct, g, h).graph);
    if (lhs > 3 * domination_number(g) * domination_number(h)) t.fail(g6(g) + " " + g6(h));
  }
  return t;
}

}  // namespace property_checks
