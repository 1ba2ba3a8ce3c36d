#include "domlab/theorems.hpp"

#include <stdexcept>
#include <string>

#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"
#include "domlab/classify.hpp"
#include "domlab/domination.hpp"
#include "domlab/graph6.hpp"
#include "domlab/products.hpp"

namespace domlab {

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::holds: return "holds";
    case VerdictKind::counterexample: return "counterexample";
    case VerdictKind::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "?";
}

namespace {

Verdict not_met() { return {VerdictKind::hypothesis_not_met, std::nullopt, false}; }
Verdict ok(bool member = false) { return {VerdictKind::holds, std::nullopt, member}; }
Verdict fail(std::string clause, std::vector<WitnessSet> witnesses = {}, bool member = false) {
  return {VerdictKind::counterexample, Certificate{{}, std::move(clause), std::move(witnesses)}, member};
}

bool nontrivial_connected(const Graph& g) { return g.order() >= 2 && is_connected(g); }
bool is_k2(const Graph& g) { return g.order() == 2 && g.edge_count() == 1; }
bool is_k3(const Graph& g) { return g.order() == 3 && g.edge_count() == 3; }
bool is_c4(const Graph& g) {
  if (g.order() != 4 || g.edge_count() != 4) return false;
  for (Vertex v = 0; v < 4; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}
bool is_corona_of_connected(const Graph& g) {
  auto c = corona_decomposition(g);
  return c && is_connected(c->core);
}
bool no_isolatable(const Graph& g) { return isolatable_vertices(g).empty(); }

// Two sets of different sizes proving a graph is not well-dominated or not well-covered.
void add_pair(std::vector<WitnessSet>& out, const UniformityDecision& d, const std::string& graph, const char* what) {
  out.push_back({std::string("smaller ") + what, graph, d.smaller});
  out.push_back({std::string("larger ") + what, graph, d.larger});
}
std::vector<WitnessSet> pair_of(const UniformityDecision& d, const std::string& graph, const char* what) {
  std::vector<WitnessSet> out;
  add_pair(out, d, graph, what);
  return out;
}

constexpr const char* kMinDom = "minimal dominating set";
constexpr const char* kMaxInd = "maximal independent set";

// ---- Cartesian products ------------------------------------------------

Verdict t1(const Graph& g, const Graph& h) {
  if (!is_connected(g) || !is_connected(h)) return not_met();
  const auto p = product(ProductKind::cartesian, g, h);
  if (!decide_well_dominated(p.graph).uniform) return ok(false);
  const auto dg = decide_well_dominated(g), dh = decide_well_dominated(h);
  if (dg.uniform || dh.uniform) return ok(true);
  std::vector<WitnessSet> w;
  add_pair(w, dg, "G", kMinDom);
  add_pair(w, dh, "H", kMinDom);
  return fail("G box H is well-dominated but neither G nor H is", w, true);
}

Verdict t2(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h) || !is_triangle_free(g) || !is_triangle_free(h)) return not_met();
  const auto p = product(ProductKind::cartesian, g, h);
  const auto d = decide_well_dominated(p.graph);
  const bool rhs = is_k2(g) && is_k2(h);
  if (d.uniform && !rhs) return fail("forward: G box H is well-dominated but (G, H) is not (K2, K2)", {}, true);
  if (!d.uniform && rhs) return fail("converse: G = H = K2 but G box H is not well-dominated", pair_of(d, "G box H", kMinDom));
  return ok(d.uniform);
}

Verdict wcfactor(const Graph& g, const Graph& h) {
  if (!is_connected(g) || !is_connected(h)) return not_met();
  const auto p = product(ProductKind::cartesian, g, h);
  if (!decide_well_covered(p.graph).uniform) return ok(false);
  const auto dg = decide_well_covered(g), dh = decide_well_covered(h);
  if (dg.uniform || dh.uniform) return ok(true);
  std::vector<WitnessSet> w;
  add_pair(w, dg, "G", kMaxInd);
  add_pair(w, dh, "H", kMaxInd);
  return fail("G box H is well-covered but neither factor is", w, true);
}

Verdict g4cart(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h) || !is_triangle_free(g) || !is_triangle_free(h)) return not_met();
  const auto p = product(ProductKind::cartesian, g, h);
  if (!decide_well_covered(p.graph).uniform) return ok(false);
  if (is_k2(g) || is_k2(h)) return ok(true);
  return fail("G box H is well-covered but neither factor is K2", {}, true);
}

Verdict prism(const Graph& g) {
  if (!nontrivial_connected(g)) return not_met();
  const auto p = product(ProductKind::cartesian, g, make_named(NamedGraph::complete(2)));
  if (!decide_well_dominated(p.graph).uniform) return ok(false);
  if (is_k2(g)) return ok(true);
  return fail("G box K2 is well-dominated but G is not K2", {}, true);
}

Verdict bc(const Graph& g) {
  if (g.has_isolated_vertex()) return not_met();
  try {
    const VertexSet s = find_open_irredundant_minimum_dominating(g);
    if (!is_dominating(g, s) || s.size() != domination_number(g) || !is_open_irredundant(g, s)) {
      return fail("returned set is not an open irredundant minimum dominating set", {{"returned", "G", s}});
    }
    return ok();
  } catch (const OpenIrredundanceNotFound&) {
    return fail("no minimum dominating set is open irredundant", {{"minimum dominating set", "G", minimum_dominating_set(g)}});
  }
}

// ---- Direct products ---------------------------------------------------

Verdict t3(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h)) return not_met();
  if (!no_isolatable(g) && !no_isolatable(h)) return not_met();
  const auto p = product(ProductKind::direct, g, h);
  const auto d = decide_well_dominated(p.graph);
  const bool rhs = (is_k3(g) && is_k3(h)) || (is_k2(g) && (is_c4(h) || is_corona_of_connected(h))) ||
                   (is_k2(h) && (is_c4(g) || is_corona_of_connected(g)));
  if (d.uniform && !rhs) return fail("forward: G x H is well-dominated but the factors are not on the list", {}, true);
  if (!d.uniform && rhs) return fail("converse: factors are on the list but G x H is not well-dominated", pair_of(d, "G x H", kMinDom));
  return ok(d.uniform);
}

Verdict ub3(const Graph& g, const Graph& h) {
  // K1 x K4 is edgeless on four vertices, so factors with isolated vertices are out of scope
  if (g.has_isolated_vertex() || h.has_isolated_vertex()) return not_met();
  const auto p = product(ProductKind::direct, g, h);
  const VertexSet best = minimum_dominating_set(p.graph);
  if (best.size() <= 3 * domination_number(g) * domination_number(h)) return ok();
  return fail("gamma(G x H) > 3 gamma(G) gamma(H)", {{"minimum dominating set", "G x H", best}});
}

Verdict dk(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h) || !no_isolatable(h)) return not_met();
  const auto p = product(ProductKind::direct, g, h);
  if (!decide_well_covered(p.graph).uniform) return ok(false);
  if (is_complete(h)) return ok(true);
  return fail("G x H is well-covered and H has no isolatable vertex, yet H is not complete", {}, true);
}

Verdict l3g(const Graph& g, const Graph& h) {
  if (g.has_isolated_vertex() || h.has_isolated_vertex()) return not_met();
  const auto p = product(ProductKind::direct, g, h);
  if (!decide_well_dominated(p.graph).uniform) return ok(false);
  const VertexSet mg = minimum_dominating_set(g), mh = minimum_dominating_set(h);
  if (3 * mg.size() < g.order()) return fail("G x H is well-dominated but 3 gamma(G) < |V(G)|", {{"minimum dominating set", "G", mg}}, true);
  if (3 * mh.size() < h.order()) return fail("G x H is well-dominated but 3 gamma(H) < |V(H)|", {{"minimum dominating set", "H", mh}}, true);
  return ok(true);
}

Verdict tv(const Graph& g, const Graph& h) {
  if (g.has_isolated_vertex() || h.has_isolated_vertex()) return not_met();
  const auto p = product(ProductKind::direct, g, h);
  if (!decide_well_covered(p.graph).uniform) return ok(false);
  const auto dg = decide_well_covered(g), dh = decide_well_covered(h);
  if (!dg.uniform) return fail("G x H is well-covered but G is not", pair_of(dg, "G", kMaxInd), true);
  if (!dh.uniform) return fail("G x H is well-covered but H is not", pair_of(dh, "H", kMaxInd), true);
  const VertexSet ig = maximum_independent_set(g), ih = maximum_independent_set(h);
  if (ig.size() * h.order() != ih.size() * g.order()) {
    return fail("G x H is well-covered but alpha(G)|V(H)| != alpha(H)|V(G)|",
                {{"maximum independent set", "G", ig}, {"maximum independent set", "H", ih}}, true);
  }
  return ok(true);
}

Verdict px(const Graph& g) {
  if (!nontrivial_connected(g)) return not_met();
  const VertexSet best = minimum_dominating_set(g);
  const bool lhs = 2 * best.size() == g.order();
  const bool rhs = is_c4(g) || is_corona_of_connected(g);
  if (lhs && !rhs) return fail("forward: gamma = n/2 but G is neither C4 nor a corona", {{"minimum dominating set", "G", best}}, true);
  if (!lhs && rhs) return fail("converse: G is C4 or a corona but gamma != n/2", {{"minimum dominating set", "G", best}});
  return ok(lhs);
}

Verdict lk2(const Graph& g) {
  if (!nontrivial_connected(g)) return not_met();
  const auto p = product(ProductKind::direct, g, make_named(NamedGraph::complete(2)));
  const auto d = decide_well_dominated(p.graph);
  const bool rhs = is_c4(g) || is_corona_of_connected(g);
  if (d.uniform && !rhs) return fail("forward: G x K2 is well-dominated but G is neither C4 nor a corona", {}, true);
  if (!d.uniform && rhs) return fail("converse: G is C4 or a corona but G x K2 is not well-dominated", pair_of(d, "G x K2", kMinDom));
  return ok(d.uniform);
}

Verdict l2p(const Graph& g) {
  if (!is_connected(g)) return not_met();
  const auto p = product(ProductKind::direct, g, make_named(NamedGraph::complete(3)));
  if (!decide_well_dominated(p.graph).uniform) return ok(false);
  std::optional<VertexSet> bad;
  for_each_maximal_independent(g, [&](VertexSet s) {
    if (is_two_packing(g, s)) return true;
    bad = s;
    return false;
  });
  if (bad) return fail("G x K3 is well-dominated but a maximal independent set is not a 2-packing", {{"maximal independent set", "G", *bad}}, true);
  return ok(true);
}

Verdict lk3(const Graph& g) {
  if (!nontrivial_connected(g)) return not_met();
  const auto p = product(ProductKind::direct, g, make_named(NamedGraph::complete(3)));
  if (!decide_well_dominated(p.graph).uniform) return ok(false);
  if (is_k3(g)) return ok(true);
  return fail("G x K3 is well-dominated but G is not K3", {}, true);
}

// ---- Disjunctive products ---------------------------------------------

Verdict t4(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h)) return not_met();
  const auto p = product(ProductKind::disjunctive, g, h);
  const auto d = decide_well_dominated(p.graph);
  auto wd_small = [](const Graph& x) { return is_well_dominated(x) && domination_number(x) <= 2; };
  const bool rhs = (is_complete(g) && wd_small(h)) || (is_complete(h) && wd_small(g));
  if (d.uniform && !rhs) return fail("forward: G or H is well-dominated but no factor is complete with the other well-dominated and gamma <= 2", {}, true);
  if (!d.uniform && rhs) return fail("converse: a factor is complete and the other well-dominated with gamma <= 2, but G or H is not well-dominated", pair_of(d, "G or H", kMinDom));
  return ok(d.uniform);
}

Verdict lne(const Graph& g) {
  if (!is_connected(g)) return not_met();
  const VertexSet ind = maximum_independent_set(g);
  const VertexSet dom = minimum_dominating_set(g);
  const bool member = ind.size() >= 2 && ind.size() == dom.size();
  if (member && total_domination_numbers(g).gamma_t == 2 * dom.size()) {
    return fail("connected graph with 2 <= alpha = gamma and gamma_t = 2 gamma",
                {{"maximum independent set", "G", ind}, {"minimum dominating set", "G", dom}}, true);
  }
  return ok(member);
}

Verdict dind(const Graph& g, const Graph& h) {
  const auto p = product(ProductKind::disjunctive, g, h);
  const auto gi = maximal_independent_sets(g), hj = maximal_independent_sets(h);
  for (VertexSet i : gi)
    for (VertexSet j : hj) {
      const VertexSet s = product_set(p, i, j);
      if (!is_maximal_independent(p.graph, s)) {
        return fail("I x J is not a maximal independent set of G or H",
                    {{"I", "G", i}, {"J", "H", j}, {"I x J", "G or H", s}});
      }
    }
  return ok();
}

Verdict dtot(const Graph& g, const Graph& h) {
  if (g.has_isolated_vertex() || h.has_isolated_vertex()) return not_met();
  const auto p = product(ProductKind::disjunctive, g, h);
  const VertexSet ug = universal_vertices(g), uh = universal_vertices(h);
  for (VertexSet a : minimal_total_dominating_sets(h))
    for (Vertex x : g.vertices() - ug) {
      const VertexSet s = product_set(p, VertexSet::single(x), a);
      if (!is_minimal_dominating(p.graph, s)) {
        return fail("{g} x A is not a minimal dominating set of G or H",
                    {{"g", "G", VertexSet::single(x)}, {"A", "H", a}, {"{g} x A", "G or H", s}});
      }
    }
  for (VertexSet b : minimal_total_dominating_sets(g))
    for (Vertex y : h.vertices() - uh) {
      const VertexSet s = product_set(p, b, VertexSet::single(y));
      if (!is_minimal_dominating(p.graph, s)) {
        return fail("B x {h} is not a minimal dominating set of G or H",
                    {{"B", "G", b}, {"h", "H", VertexSet::single(y)}, {"B x {h}", "G or H", s}});
      }
    }
  return ok();
}

Verdict dne(const Graph& g, const Graph& h) {
  if (!is_connected(g) || h.has_isolated_vertex() || is_complete(g) || is_complete(h)) return not_met();
  const auto p = product(ProductKind::disjunctive, g, h);
  if (decide_well_dominated(p.graph).uniform) return fail("neither factor is complete but G or H is well-dominated", {}, true);
  return ok();
}

Verdict dkn(const Graph& g, const Graph& h) {
  if (!is_complete(g) || g.order() < 2) return not_met();
  const auto p = product(ProductKind::disjunctive, g, h);
  const auto d = decide_well_dominated(p.graph);
  const bool rhs = is_well_dominated(h) && domination_number(h) <= 2;
  if (d.uniform && !rhs) return fail("forward: Kn or H is well-dominated but H is not well-dominated with gamma <= 2", {}, true);
  if (!d.uniform && rhs) return fail("converse: H is well-dominated with gamma <= 2 but Kn or H is not well-dominated", pair_of(d, "G or H", kMinDom));
  return ok(d.uniform);
}

Verdict e1(const Graph& g, const Graph& h) {
  if (!nontrivial_connected(g) || !nontrivial_connected(h) || is_complete(g) || is_complete(h)) return not_met();
  const auto p = product(ProductKind::disjunctive, g, h);
  if (!decide_well_dominated(p.graph).uniform) return not_met();
  const int prod = independence_number(g) * independence_number(h);
  const int tg = total_domination_numbers(g).gamma_t, th = total_domination_numbers(h).gamma_t;
  if (prod != tg || tg != th) return fail("alpha(G) alpha(H), gamma_t(G), gamma_t(H) are not all equal", {}, true);
  return ok(true);
}

// ---- Small and girth-restricted classes --------------------------------

Verdict p1(const Graph& g) {
  if (!decide_well_dominated(g).uniform) return ok(false);
  const auto d = decide_well_covered(g);
  if (d.uniform) return ok(true);
  return fail("well-dominated but not well-covered", pair_of(d, "G", kMaxInd), true);
}

Verdict chain(const Graph& g) {
  const DominationProfile p = domination_profile(g);
  std::vector<WitnessSet> w{{"minimum dominating set", "G", p.witness_min_dom}, {"maximum independent set", "G", p.witness_max_ind}};
  if (p.gamma > p.ind_dom) return fail("gamma > i", w);
  if (p.ind_dom > p.alpha) return fail("i > alpha", w);
  if (p.alpha > p.upper_gamma) return fail("alpha > Gamma", w);
  return ok();
}

Verdict tf11(const Graph& g) {
  if (!is_connected(g) || !is_triangle_free(g)) return not_met();
  if (g.order() >= 9) {
    const VertexSet ind = maximum_independent_set(g);
    if (ind.size() < 4) return fail("triangle-free graph of order >= 9 with alpha < 4", {{"maximum independent set", "G", ind}});
  }
  const bool lhs = domination_number(g) <= 3 && is_well_dominated(g);
  const bool rhs = classify_small_triangle_free(g) != SmallFamilyTag::not_member;
  if (lhs && !rhs) return fail("forward: well-dominated with gamma <= 3 but not one of the eleven graphs", {}, true);
  if (!lhs && rhs) return fail("converse: one of the eleven graphs but not well-dominated with gamma <= 3");
  return ok(lhs);
}

Verdict g5wd(const Graph& g) {
  if (!is_connected(g)) return not_met();
  if (auto girth_g = girth(g); girth_g && *girth_g < 5) return not_met();
  if (!decide_well_dominated(g).uniform) return not_met();
  const auto pc = pc_partition(g);
  if (pc) {
    if (!check_pc_well_dominated(g, *pc)) {
      return fail("forward: well-dominated PC graph with two basic 5-cycles joined by neither 0, 2 disjoint nor 4 edges", {}, true);
    }
    if (pc->basic_cycles.empty() && g.order() >= 3) {
      VertexSet high;
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= 2) high.insert(v);
      const auto c = corona_decomposition(g);
      if (!c || c->core_vertices != high) {
        return fail("PC graph without basic 5-cycles is not the corona of its non-leaf vertices", {{"non-leaf vertices", "G", high}}, true);
      }
    }
    return ok(true);
  }
  for (const Graph& e : {make_named(NamedGraph::complete(1)), make_named(NamedGraph::cycle(7)), make_named(NamedGraph::of(Special::P10))})
    if (are_isomorphic(g, e)) return ok(true);
  return fail("well-dominated girth >= 5 graph outside PC that is not K1, C7 or P10", {}, true);
}

std::vector<TheoremEntry> build_table() {
  using A = Arity;
  return {
      {"T1", A::pair, "G, H connected: if G box H is well-dominated then G or H is well-dominated", "G box H well-dominated", nullptr, t1},
      {"T2", A::pair, "G, H nontrivial connected with girth >= 4: G box H is well-dominated iff G = H = K2", "G box H well-dominated", nullptr, t2},
      {"T3", A::pair, "G, H nontrivial connected, one without isolatable vertices: G x H is well-dominated iff G = H = K3, or one factor is K2 and the other is C4 or the corona of a connected graph", "G x H well-dominated", nullptr, t3},
      {"T4", A::pair, "G, H nontrivial connected: G or H is well-dominated iff one factor is complete and the other is well-dominated with gamma <= 2", "G or H well-dominated", nullptr, t4},
      {"P1", A::single, "every well-dominated graph is well-covered", "well-dominated", p1, nullptr},
      {"CHAIN", A::single, "gamma <= i <= alpha <= Gamma", "", chain, nullptr},
      {"UB3", A::pair, "G, H without isolated vertices: gamma(G x H) <= 3 gamma(G) gamma(H)", "", nullptr, ub3},
      {"WCFACTOR", A::pair, "G, H connected: if G box H is well-covered then G or H is well-covered", "G box H well-covered", nullptr, wcfactor},
      {"G4CART", A::pair, "G, H nontrivial connected with girth >= 4: if G box H is well-covered then G or H is K2", "G box H well-covered", nullptr, g4cart},
      {"PRISM", A::single, "G nontrivial connected: if G box K2 is well-dominated then G = K2", "G box K2 well-dominated", prism, nullptr},
      {"BC", A::single, "G without isolated vertices has an open irredundant minimum dominating set", "", bc, nullptr},
      {"DK", A::pair, "G, H nontrivial connected, H without isolatable vertices: if G x H is well-covered then H is complete", "G x H well-covered", nullptr, dk},
      {"L3G", A::pair, "G, H without isolated vertices: if G x H is well-dominated then 3 gamma(G) >= |V(G)| and 3 gamma(H) >= |V(H)|", "G x H well-dominated", nullptr, l3g},
      {"TV", A::pair, "G, H without isolated vertices: if G x H is well-covered then G and H are well-covered and alpha(G)|V(H)| = alpha(H)|V(G)|", "G x H well-covered", nullptr, tv},
      {"PX", A::single, "G connected of order >= 2: gamma = n/2 iff G = C4 or G is the corona of a connected graph", "gamma = n/2", px, nullptr},
      {"LK2", A::single, "G nontrivial connected: G x K2 is well-dominated iff G = C4 or G is the corona of a connected graph", "G x K2 well-dominated", lk2, nullptr},
      {"L2P", A::single, "G connected: if G x K3 is well-dominated then every maximal independent set of G is a 2-packing", "G x K3 well-dominated", l2p, nullptr},
      {"LK3", A::single, "G nontrivial connected: if G x K3 is well-dominated then G = K3", "G x K3 well-dominated", lk3, nullptr},
      {"LNE", A::single, "no connected graph has 2 <= alpha = gamma and gamma_t = 2 gamma", "2 <= alpha = gamma", lne, nullptr},
      {"DIND", A::pair, "I x J is a maximal independent set of G or H for maximal independent I, J", "", nullptr, dind},
      {"DTOT", A::pair, "G, H without isolated vertices: {g} x A and B x {h} are minimal dominating in G or H for minimal total dominating A, B and non-universal g, h", "", nullptr, dtot},
      {"DNE", A::pair, "G connected, H without isolated vertices, neither complete: G or H is not well-dominated", "", nullptr, dne},
      {"DKN", A::pair, "G = Kn with n >= 2: Kn or H is well-dominated iff H is well-dominated with gamma(H) <= 2", "Kn or H well-dominated", nullptr, dkn},
      {"E1", A::pair, "G, H nontrivial connected non-complete with G or H well-dominated: alpha(G) alpha(H) = gamma_t(G) = gamma_t(H)", "hypothesis met", nullptr, e1},
      {"TF11", A::single, "a connected triangle-free graph is well-dominated with gamma <= 3 iff it is one of K1, K2, P4, C4, C5, C7, P3 o K1, H1, H2, H3, H4", "well-dominated with gamma <= 3", tf11, nullptr},
      {"G5WD", A::single, "G connected well-dominated with girth >= 5: if G is in PC every two basic 5-cycles are joined by 0 edges, 2 disjoint edges or 4 edges; otherwise G is K1, C7 or P10", "hypothesis met", g5wd, nullptr},
  };
}

}  // namespace

const std::vector<TheoremEntry>& theorem_table() {
  static const std::vector<TheoremEntry> table = build_table();
  return table;
}

const TheoremEntry& theorem(std::string_view id) {
  for (const auto& e : theorem_table())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown theorem id: " + std::string(id));
}

Verdict check_instance(const TheoremEntry& entry, const Instance& instance) {
  Verdict v;
  std::vector<std::string> names;
  if (const Graph* g = std::get_if<Graph>(&instance)) {
    if (entry.arity != Arity::single) throw std::invalid_argument(std::string(entry.id) + " takes a pair of graphs");
    v = entry.single(*g);
    names = {to_graph6(*g)};
  } else {
    if (entry.arity != Arity::pair) throw std::invalid_argument(std::string(entry.id) + " takes a single graph");
    const auto& [first, second] = std::get<std::pair<Graph, Graph>>(instance);
    v = entry.pair(first, second);
    names = {to_graph6(first), to_graph6(second)};
  }
  if (v.certificate) v.certificate->graph6 = std::move(names);
  return v;
}

Verdict check_instance(std::string_view id, const Instance& instance) { return check_instance(theorem(id), instance); }

}  // namespace domlab
