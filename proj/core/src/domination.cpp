#include "domlab/domination.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace domlab {
namespace {

void require_permutation(const Graph& g, std::span<const Vertex> ordering) {
  if (static_cast<int>(ordering.size()) != g.order()) throw std::invalid_argument("ordering is not a permutation of the vertices");
  VertexSet seen;
  for (Vertex v : ordering) {
    if (v < 0 || v >= g.order() || seen.contains(v)) throw std::invalid_argument("ordering is not a permutation of the vertices");
    seen.insert(v);
  }
}

// Tracks how many chosen sets cover each vertex, saturating at two.
struct CoverCount {
  VertexSet once;
  VertexSet twice;

  CoverCount add(VertexSet cover) const {
    CoverCount next;
    next.twice = twice | (once & cover);
    next.once = (once | cover) - next.twice;
    return next;
  }
};

class MinimalDominatingSearch {
 public:
  MinimalDominatingSearch(const Graph& g, const SetVisitor& visit, int max_size)
      : g_(g), all_(g.vertices()), visit_(visit), max_size_(max_size) {}

  bool run() {
    extend({}, {}, {}, {});
    return !stopped_;
  }

 private:
  void extend(VertexSet chosen, VertexSet forbidden, VertexSet dominated, CoverCount count) {
    for (Vertex v : chosen)
      if (!g_.closed_neighbors(v).intersects(count.once)) return;
    if (dominated == all_) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    if (chosen.size() >= max_size_) return;
    const VertexSet undominated = all_ - dominated;
    for (Vertex x : undominated)
      if (g_.closed_neighbors(x).subset_of(forbidden)) return;

    const Vertex u = undominated.lowest();
    VertexSet tried = forbidden;
    for (Vertex w : g_.closed_neighbors(u) - forbidden) {
      const VertexSet cover = g_.closed_neighbors(w);
      extend(chosen.with(w), tried, dominated | cover, count.add(cover));
      if (stopped_) return;
      tried.insert(w);
    }
  }

  const Graph& g_;
  VertexSet all_;
  const SetVisitor& visit_;
  int max_size_;
  bool stopped_ = false;
};

class MaximalIndependentSearch {
 public:
  MaximalIndependentSearch(const Graph& g, const SetVisitor& visit) : g_(g), all_(g.vertices()), visit_(visit) {}

  bool run() {
    extend({}, {}, {});
    return !stopped_;
  }

 private:
  void extend(VertexSet chosen, VertexSet forbidden, VertexSet dominated) {
    if (dominated == all_) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    const VertexSet undominated = all_ - dominated;
    const VertexSet available = undominated - forbidden;
    for (Vertex x : undominated)
      if (!g_.closed_neighbors(x).intersects(available)) return;

    const Vertex u = undominated.lowest();
    VertexSet tried = forbidden;
    for (Vertex w : g_.closed_neighbors(u) & available) {
      extend(chosen.with(w), tried, dominated | g_.closed_neighbors(w));
      if (stopped_) return;
      tried.insert(w);
    }
  }

  const Graph& g_;
  VertexSet all_;
  const SetVisitor& visit_;
  bool stopped_ = false;
};

class MinimalTotalDominatingSearch {
 public:
  MinimalTotalDominatingSearch(const Graph& g, const SetVisitor& visit) : g_(g), all_(g.vertices()), visit_(visit) {}

  bool run() {
    extend({}, {}, {}, {});
    return !stopped_;
  }

 private:
  void extend(VertexSet chosen, VertexSet forbidden, VertexSet dominated, CoverCount count) {
    for (Vertex v : chosen)
      if (!g_.neighbors(v).intersects(count.once)) return;
    if (dominated == all_) {
      if (!visit_(chosen)) stopped_ = true;
      return;
    }
    const VertexSet undominated = all_ - dominated;
    for (Vertex x : undominated)
      if (g_.neighbors(x).subset_of(forbidden)) return;

    const Vertex u = undominated.lowest();
    VertexSet tried = forbidden;
    for (Vertex w : g_.neighbors(u) - forbidden) {
      const VertexSet cover = g_.neighbors(w);
      extend(chosen.with(w), tried, dominated | cover, count.add(cover));
      if (stopped_) return;
      tried.insert(w);
    }
  }

  const Graph& g_;
  VertexSet all_;
  const SetVisitor& visit_;
  bool stopped_ = false;
};

VertexSet greedy_cover(const Graph& g) {
  VertexSet chosen, dominated;
  while (dominated != g.vertices()) {
    const VertexSet undominated = g.vertices() - dominated;
    Vertex best = -1;
    int best_gain = -1;
    for (Vertex w = 0; w < g.order(); ++w) {
      const int gain = (g.closed_neighbors(w) & undominated).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = w;
      }
    }
    chosen.insert(best);
    dominated |= g.closed_neighbors(best);
  }
  return chosen;
}

class MinimumDominatingSearch {
 public:
  explicit MinimumDominatingSearch(const Graph& g) : g_(g), all_(g.vertices()) {
    best_ = greedy_cover(g);
  }

  VertexSet run() {
    extend({}, {}, {});
    return best_;
  }

 private:
  void extend(VertexSet chosen, VertexSet forbidden, VertexSet dominated) {
    if (dominated == all_) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    const VertexSet undominated = all_ - dominated;
    const int need = undominated.size();

    int max_gain = 0;
    for (Vertex w : closed_neighborhood(g_, undominated) - forbidden)
      max_gain = std::max(max_gain, (g_.closed_neighbors(w) & undominated).size());
    if (max_gain == 0) return;
    if (chosen.size() + (need + max_gain - 1) / max_gain >= best_.size()) return;

    // branch on the undominated vertex with the fewest remaining dominators
    Vertex u = -1;
    int fewest = kMaxOrder + 1;
    for (Vertex x : undominated) {
      const int options = (g_.closed_neighbors(x) - forbidden).size();
      if (options < fewest) {
        fewest = options;
        u = x;
      }
    }
    if (fewest == 0) return;

    std::array<Vertex, kMaxOrder> order{};
    int k = 0;
    for (Vertex w : g_.closed_neighbors(u) - forbidden) order[k++] = w;
    std::stable_sort(order.begin(), order.begin() + k, [&](Vertex a, Vertex b) {
      return (g_.closed_neighbors(a) & undominated).size() > (g_.closed_neighbors(b) & undominated).size();
    });

    VertexSet tried = forbidden;
    for (int i = 0; i < k; ++i) {
      const Vertex w = order[i];
      extend(chosen.with(w), tried, dominated | g_.closed_neighbors(w));
      tried.insert(w);
    }
  }

  const Graph& g_;
  VertexSet all_;
  VertexSet best_;
};

std::vector<VertexSet> collect(const std::function<bool(const SetVisitor&)>& run) {
  std::vector<VertexSet> out;
  run([&](VertexSet s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::vector<Vertex>> probe_orderings(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> forward(n);
  std::iota(forward.begin(), forward.end(), 0);
  std::vector<Vertex> backward(forward.rbegin(), forward.rend());
  std::vector<Vertex> by_degree = forward;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<Vertex> by_degree_desc = forward;
  std::stable_sort(by_degree_desc.begin(), by_degree_desc.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return {forward, backward, by_degree, by_degree_desc};
}

}  // namespace

bool is_dominating(const Graph& g, VertexSet s) { return closed_neighborhood(g, s) == g.vertices(); }

bool is_total_dominating(const Graph& g, VertexSet s) { return open_neighborhood(g, s) == g.vertices(); }

VertexSet private_neighbors(const Graph& g, Vertex v, VertexSet s) {
  require_owned(g, s, "private_neighbors");
  if (!s.contains(v)) throw std::invalid_argument("private_neighbors: vertex is not a member of the set");
  VertexSet out;
  for (Vertex u : g.closed_neighbors(v))
    if ((g.closed_neighbors(u) & s) == VertexSet::single(v)) out.insert(u);
  return out;
}

bool is_minimal_dominating(const Graph& g, VertexSet s) {
  if (!is_dominating(g, s)) return false;
  for (Vertex u : s)
    if (private_neighbors(g, u, s).empty()) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, VertexSet s) { return is_independent(g, s) && is_dominating(g, s); }

bool is_minimal_total_dominating(const Graph& g, VertexSet s) {
  if (!is_total_dominating(g, s)) return false;
  for (Vertex v : s) {
    bool has_private = false;
    for (Vertex u : g.neighbors(v))
      if ((g.neighbors(u) & s) == VertexSet::single(v)) has_private = true;
    if (!has_private) return false;
  }
  return true;
}

bool for_each_minimal_dominating(const Graph& g, const SetVisitor& visit, int max_size) {
  return MinimalDominatingSearch(g, visit, max_size).run();
}

bool for_each_maximal_independent(const Graph& g, const SetVisitor& visit) {
  return MaximalIndependentSearch(g, visit).run();
}

bool for_each_minimal_total_dominating(const Graph& g, const SetVisitor& visit) {
  if (g.has_isolated_vertex()) throw std::invalid_argument("total domination is undefined on graphs with isolated vertices");
  return MinimalTotalDominatingSearch(g, visit).run();
}

std::vector<VertexSet> minimal_dominating_sets(const Graph& g) {
  return collect([&](const SetVisitor& v) { return for_each_minimal_dominating(g, v); });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return collect([&](const SetVisitor& v) { return for_each_maximal_independent(g, v); });
}

std::vector<VertexSet> minimal_total_dominating_sets(const Graph& g) {
  return collect([&](const SetVisitor& v) { return for_each_minimal_total_dominating(g, v); });
}

VertexSet minimum_dominating_set(const Graph& g) { return MinimumDominatingSearch(g).run(); }

int domination_number(const Graph& g) { return minimum_dominating_set(g).size(); }

VertexSet maximum_independent_set(const Graph& g) {
  VertexSet best;
  bool have = false;
  for_each_maximal_independent(g, [&](VertexSet s) {
    if (!have || s.size() > best.size() || (s.size() == best.size() && lex_less(s, best))) best = s;
    have = true;
    return true;
  });
  return best;
}

int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

TotalDominationNumbers total_domination_numbers(const Graph& g) {
  int lo = kMaxOrder + 1, hi = 0;
  for_each_minimal_total_dominating(g, [&](VertexSet s) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
    return true;
  });
  return {lo, hi};
}

UniformityDecision decide_well_dominated(const Graph& g) {
  const VertexSet minimum = minimum_dominating_set(g);
  const int gamma = minimum.size();
  UniformityDecision decision{true, minimum, minimum};

  // Cheap probes first: greedy results are minimal dominating sets.
  for (const auto& ordering : probe_orderings(g)) {
    for (VertexSet s : {greedy_maximal_independent(g, ordering), greedy_minimal_dominating(g, ordering)}) {
      if (s.size() != gamma) {
        decision.uniform = false;
        decision.larger = s;
        return decision;
      }
    }
  }
  for_each_minimal_dominating(g, [&](VertexSet s) {
    if (s.size() == gamma) return true;
    decision.uniform = false;
    decision.larger = s;
    return false;
  });
  return decision;
}

UniformityDecision decide_well_covered(const Graph& g) {
  std::vector<VertexSet> seen;
  for (const auto& ordering : probe_orderings(g)) seen.push_back(greedy_maximal_independent(g, ordering));
  auto differ = [&](VertexSet a, VertexSet b) -> UniformityDecision {
    return a.size() < b.size() ? UniformityDecision{false, a, b} : UniformityDecision{false, b, a};
  };
  for (VertexSet s : seen)
    if (s.size() != seen.front().size()) return differ(seen.front(), s);

  const VertexSet first = seen.front();
  UniformityDecision decision{true, first, first};
  for_each_maximal_independent(g, [&](VertexSet s) {
    if (s.size() == first.size()) return true;
    decision = differ(first, s);
    return false;
  });
  return decision;
}

bool is_well_dominated(const Graph& g) { return decide_well_dominated(g).uniform; }

bool is_well_covered(const Graph& g) { return decide_well_covered(g).uniform; }

DominationProfile domination_profile(const Graph& g) {
  DominationProfile p;
  p.witness_min_dom = minimum_dominating_set(g);
  p.gamma = p.witness_min_dom.size();

  p.upper_gamma = 0;
  for_each_minimal_dominating(g, [&](VertexSet s) {
    p.upper_gamma = std::max(p.upper_gamma, s.size());
    return true;
  });

  p.ind_dom = kMaxOrder + 1;
  p.alpha = 0;
  for_each_maximal_independent(g, [&](VertexSet s) {
    p.ind_dom = std::min(p.ind_dom, s.size());
    if (s.size() > p.alpha || (s.size() == p.alpha && lex_less(s, p.witness_max_ind))) {
      p.alpha = s.size();
      p.witness_max_ind = s;
    }
    return true;
  });

  if (!g.has_isolated_vertex()) {
    const TotalDominationNumbers t = total_domination_numbers(g);
    p.gamma_t = t.gamma_t;
    p.upper_gamma_t = t.upper_gamma_t;
  }
  p.well_dominated = p.gamma == p.upper_gamma;
  p.well_covered = p.ind_dom == p.alpha;
  return p;
}

VertexSet greedy_minimal_dominating(const Graph& g, std::span<const Vertex> ordering) {
  require_permutation(g, ordering);
  VertexSet d = g.vertices();
  for (Vertex v : ordering)
    if (is_dominating(g, d.without(v))) d.erase(v);
  return d;
}

VertexSet greedy_maximal_independent(const Graph& g, std::span<const Vertex> ordering) {
  require_permutation(g, ordering);
  VertexSet chosen;
  for (Vertex v : ordering)
    if (!g.neighbors(v).intersects(chosen)) chosen.insert(v);
  return chosen;
}

bool is_open_irredundant(const Graph& g, VertexSet s) {
  require_owned(g, s, "is_open_irredundant");
  for (Vertex u : s)
    if ((g.neighbors(u) - closed_neighborhood(g, s.without(u))).empty()) return false;
  return true;
}

VertexSet find_open_irredundant_minimum_dominating(const Graph& g) {
  if (g.has_isolated_vertex()) throw std::invalid_argument("open irredundant minimum dominating set needs a graph without isolated vertices");
  const int gamma = domination_number(g);
  std::vector<VertexSet> minimum_sets;
  for_each_minimal_dominating(
      g,
      [&](VertexSet s) {
        minimum_sets.push_back(s);
        return true;
      },
      gamma);
  std::sort(minimum_sets.begin(), minimum_sets.end());
  for (VertexSet s : minimum_sets)
    if (is_open_irredundant(g, s)) return s;
  throw OpenIrredundanceNotFound("no minimum dominating set is open irredundant");
}

bool is_two_packing(const Graph& g, VertexSet s) {
  require_owned(g, s, "is_two_packing");
  for (Vertex u : s)
    for (Vertex v : s)
      if (u < v) {
        const auto d = distance(g, u, v);
        if (d && *d < 3) return false;
      }
  return true;
}

VertexSet isolatable_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex x = 0; x < g.order(); ++x) {
    const VertexSet targets = g.neighbors(x);
    if (targets.empty()) {
      out.insert(x);
      continue;
    }
    const VertexSet pool = g.vertices() - g.closed_neighbors(x);
    // Depth-first over independent subsets of pool, always covering the
    // lowest still-uncovered neighbor of x next.
    std::function<bool(VertexSet, VertexSet)> search = [&](VertexSet chosen, VertexSet uncovered) {
      if (uncovered.empty()) return true;
      const Vertex y = uncovered.lowest();
      for (Vertex w : g.neighbors(y) & pool) {
        if (g.neighbors(w).intersects(chosen)) continue;
        if (search(chosen.with(w), uncovered - g.neighbors(w))) return true;
      }
      return false;
    };
    if (search({}, targets)) out.insert(x);
  }
  return out;
}

}  // namespace domlab
