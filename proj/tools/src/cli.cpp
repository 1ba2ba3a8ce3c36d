#include "domlab_cli/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "domlab/canonical.hpp"
#include "domlab/catalog.hpp"
#include "domlab/classify.hpp"
#include "domlab/domination.hpp"
#include "domlab/enumerate.hpp"
#include "domlab/graph6.hpp"
#include "domlab/products.hpp"
#include "domlab/report_json.hpp"
#include "domlab/verify.hpp"
#include "json.hpp"

namespace domlab::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + " must be an integer, got '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + " must be a non-negative integer, got '" + text + "'");
  }
}

std::map<std::string, std::string> read_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path.string());
  std::map<std::string, std::string> out;
  for (const auto& item : CLI::ConfigINI().from_config(in)) {
    if (!item.parents.empty() || item.inputs.empty()) continue;
    std::string value = item.inputs.front();
    out[item.name] = value;
  }
  return out;
}

/// Raw flag values before merging; empty optionals mean "not given".
struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> cache_dir;
  std::optional<int> workers;
  std::optional<int> budget;
  std::optional<std::uint64_t> seed;
};

Settings resolve(const Flags& flags) {
  std::map<std::string, std::string> file;
  if (flags.config) {
    file = read_config(*flags.config);
  } else if (auto p = default_config_path(); p && fs::is_regular_file(*p)) {
    file = read_config(*p);
  }
  auto pick = [&](const std::optional<std::string>& flag, const char* env_name, const char* key) -> std::optional<std::string> {
    if (flag) return flag;
    if (env_name != nullptr)
      if (auto e = env(env_name)) return e;
    if (auto it = file.find(key); it != file.end()) return it->second;
    return std::nullopt;
  };
  auto to_string_opt = [](const auto& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return std::to_string(*v);
  };

  Settings s;
  if (auto v = pick(flags.cache_dir, "DOMLAB_CACHE_DIR", "cache_dir")) s.cache_dir = fs::path(*v);
  if (auto v = pick(to_string_opt(flags.workers), "DOMLAB_WORKERS", "workers")) s.workers = parse_int(*v, "workers");
  if (auto v = pick(to_string_opt(flags.budget), nullptr, "budget")) s.budget = parse_int(*v, "budget");
  if (auto v = pick(to_string_opt(flags.seed), nullptr, "seed")) s.seed = parse_u64(*v, "seed");
  if (s.workers < 0) throw InputError("workers must be >= 0");
  if (s.budget < 1 || s.budget > kMaxOrder) throw InputError("budget must lie in 1..62");
  return s;
}

Graph load_graph(const std::string& spec) {
  if (spec.starts_with("named:")) return make_named(parse_named(spec));
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) {
    auto graphs = read_graph6_file(spec);
    if (graphs.size() != 1) {
      throw InputError(spec + " holds " + std::to_string(graphs.size()) + " graphs; exactly one is expected here");
    }
    return graphs.front();
  }
  if (spec.ends_with(".g6")) throw InputError("cannot read " + spec);
  return parse_graph6(spec);
}

Json set_json(VertexSet s) { return s.to_vector(); }

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (auto [u, v] : edges) a.push_back({u, v});
  return a;
}

std::string join(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "undefined"; }
Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string to_dot(const Graph& g) {
  std::ostringstream s;
  s << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) s << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) s << "  " << u << " -- " << v << ";\n";
  s << "}\n";
  return s.str();
}

// ---- subcommands ---------------------------------------------------------

int cmd_invariants(const std::string& spec, bool json, std::ostream& out) {
  const Graph g = load_graph(spec);
  const DominationProfile p = domination_profile(g);
  if (json) {
    Json j;
    j["schema"] = "domlab.invariants.v1";
    j["graph6"] = to_graph6(g);
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    j["gamma"] = p.gamma;
    j["upper_gamma"] = p.upper_gamma;
    j["ind_dom"] = p.ind_dom;
    j["alpha"] = p.alpha;
    j["gamma_t"] = optional_json(p.gamma_t);
    j["upper_gamma_t"] = optional_json(p.upper_gamma_t);
    j["well_dominated"] = p.well_dominated;
    j["well_covered"] = p.well_covered;
    j["witness_min_dom"] = set_json(p.witness_min_dom);
    j["witness_max_ind"] = set_json(p.witness_max_ind);
    out << j.dump(2) << '\n';
  } else {
    print_rows(out, {{"graph6", to_graph6(g)},
                     {"order", std::to_string(g.order())},
                     {"edges", std::to_string(g.edge_count())},
                     {"gamma", std::to_string(p.gamma)},
                     {"upper gamma", std::to_string(p.upper_gamma)},
                     {"i", std::to_string(p.ind_dom)},
                     {"alpha", std::to_string(p.alpha)},
                     {"gamma_t", optional_text(p.gamma_t)},
                     {"upper gamma_t", optional_text(p.upper_gamma_t)},
                     {"well-dominated", p.well_dominated ? "yes" : "no"},
                     {"well-covered", p.well_covered ? "yes" : "no"},
                     {"minimum dominating", join(p.witness_min_dom)},
                     {"maximum independent", join(p.witness_max_ind)}});
  }
  return kExitOk;
}

const std::vector<std::string> kProperties = {"well-dominated", "well-covered", "connected", "triangle-free",
                                              "complete", "corona", "pc"};

int cmd_decide(const std::string& property, const std::string& spec, bool assert_true, bool json, std::ostream& out) {
  const Graph g = load_graph(spec);
  bool value = false;
  Json witness = nullptr;
  std::string note;
  if (property == "well-dominated" || property == "well-covered") {
    const auto d = property == "well-dominated" ? decide_well_dominated(g) : decide_well_covered(g);
    value = d.uniform;
    if (!value) {
      witness = Json{{"smaller", set_json(d.smaller)}, {"larger", set_json(d.larger)}};
      note = "sets of sizes " + std::to_string(d.smaller.size()) + " and " + std::to_string(d.larger.size()) + ": " +
             join(d.smaller) + " " + join(d.larger);
    }
  } else if (property == "connected") {
    value = is_connected(g);
  } else if (property == "triangle-free") {
    value = is_triangle_free(g);
  } else if (property == "complete") {
    value = is_complete(g);
  } else if (property == "corona") {
    const auto c = corona_decomposition(g);
    value = c.has_value();
    if (c) {
      witness = Json{{"core", set_json(c->core_vertices)}, {"matching", edges_json(c->matching)}};
      note = "core " + join(c->core_vertices);
    }
  } else if (property == "pc") {
    const auto pc = pc_partition(g);
    value = pc.has_value();
    if (pc) {
      Json cycles = Json::array();
      for (const auto& c : pc->basic_cycles) cycles.push_back(c);
      witness = Json{{"pendant", set_json(pc->pendant)}, {"basic_cycles", cycles}};
      note = "P = " + join(pc->pendant) + ", C = " + join(pc->cycle_vertices);
    }
  } else {
    throw InputError("unknown property '" + property + "'");
  }
  if (json) {
    Json j;
    j["schema"] = "domlab.decide.v1";
    j["property"] = property;
    j["graph6"] = to_graph6(g);
    j["value"] = value;
    j["witness"] = witness;
    out << j.dump(2) << '\n';
  } else {
    out << property << ": " << (value ? "true" : "false");
    if (!note.empty()) out << " (" << note << ")";
    out << '\n';
  }
  return assert_true && !value ? kExitFailure : kExitOk;
}

int cmd_product(const std::string& kind_text, const std::string& a, const std::string& b, const std::string& emit,
                bool json, std::ostream& out, std::ostream& err) {
  const ProductKind kind = parse_product_kind(kind_text);
  const Graph g = load_graph(a), h = load_graph(b);
  const ProductGraph p = product(kind, g, h);
  const auto named = identify_named(p.graph);
  if (json) {
    Json j;
    j["schema"] = "domlab.product.v1";
    j["kind"] = to_string(kind);
    j["factors"] = {to_graph6(g), to_graph6(h)};
    j["order"] = p.graph.order();
    j["edges"] = p.graph.edge_count();
    j["graph6"] = to_graph6(p.graph);
    j["identified_as"] = named ? Json("named:" + to_string(*named)) : Json(nullptr);
    if (emit == "dot") j["dot"] = to_dot(p.graph);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (emit == "dot") {
    out << to_dot(p.graph);
  } else {
    out << to_graph6(p.graph) << '\n';
  }
  if (named) err << "isomorphic to named:" << to_string(*named) << '\n';
  return kExitOk;
}

int cmd_classify(const std::string& spec, bool json, std::ostream& out) {
  const Graph g = load_graph(spec);
  const bool connected = is_connected(g), tf = is_triangle_free(g);
  const auto gi = girth(g);
  const auto corona = corona_decomposition(g);
  const auto pc = pc_partition(g);
  const auto named = identify_named(g);
  std::optional<SmallFamilyTag> tag;
  if (connected && tf) tag = classify_small_triangle_free(g);

  if (json) {
    Json j;
    j["schema"] = "domlab.classify.v1";
    j["graph6"] = to_graph6(g);
    j["connected"] = connected;
    j["triangle_free"] = tf;
    j["girth"] = optional_json(gi);
    j["universal_vertices"] = set_json(universal_vertices(g));
    j["isolatable_vertices"] = set_json(isolatable_vertices(g));
    if (corona) {
      j["corona"] = Json{{"core", set_json(corona->core_vertices)},
                         {"matching", edges_json(corona->matching)},
                         {"ambiguous", corona->ambiguous}};
    } else {
      j["corona"] = nullptr;
    }
    if (pc) {
      Json cycles = Json::array();
      for (const auto& c : pc->basic_cycles) cycles.push_back(c);
      j["pc"] = Json{{"pendant", set_json(pc->pendant)},
                     {"cycle_vertices", set_json(pc->cycle_vertices)},
                     {"pendant_matching", edges_json(pc->pendant_matching)},
                     {"basic_cycles", cycles},
                     {"ambiguous", pc->ambiguous},
                     {"cycle_pairs_ok", check_pc_well_dominated(g, *pc)}};
    } else {
      j["pc"] = nullptr;
    }
    j["small_triangle_free"] = tag ? Json(std::string(to_string(*tag))) : Json(nullptr);
    j["named"] = named ? Json("named:" + to_string(*named)) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"graph6", to_graph6(g)},
      {"connected", connected ? "yes" : "no"},
      {"triangle-free", tf ? "yes" : "no"},
      {"girth", gi ? std::to_string(*gi) : "infinite"},
      {"universal", join(universal_vertices(g))},
      {"isolatable", join(isolatable_vertices(g))},
      {"corona", corona ? "core " + join(corona->core_vertices) + (corona->ambiguous ? " (one of several)" : "") : "no"},
  };
  if (pc) {
    std::string cycles;
    for (const auto& c : pc->basic_cycles) {
      cycles += cycles.empty() ? "" : " ";
      cycles += join(VertexSet::from_vector({c.begin(), c.end()}));
    }
    rows.emplace_back("PC", "P = " + join(pc->pendant) + ", cycles " + (cycles.empty() ? "none" : cycles));
    rows.emplace_back("cycle pairs", check_pc_well_dominated(g, *pc) ? "0, 2 disjoint or 4 edges each" : "violated");
  } else {
    rows.emplace_back("PC", "no");
  }
  rows.emplace_back("small triangle-free", tag ? std::string(to_string(*tag)) : "n/a");
  rows.emplace_back("named", named ? "named:" + to_string(*named) : "none");
  print_rows(out, rows);
  return kExitOk;
}

std::vector<Vertex> parse_ordering(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(parse_int(item, "ordering entry"));
  return out;
}

int cmd_greedy(const std::string& kind, const std::string& spec, const std::optional<std::string>& ordering, int trials,
               std::uint64_t seed, bool json, std::ostream& out) {
  if (kind != "dominating" && kind != "independent") throw InputError("greedy kind must be 'dominating' or 'independent'");
  const Graph g = load_graph(spec);
  std::vector<std::vector<Vertex>> orders;
  if (ordering) {
    orders.push_back(parse_ordering(*ordering));
  } else {
    if (trials < 1) throw InputError("--trials must be positive");
    std::uint64_t state = seed;
    for (int t = 0; t < trials; ++t) orders.push_back(random_ordering(g.order(), state));
  }
  Json runs = Json::array();
  int lo = kMaxOrder + 1, hi = -1;
  for (const auto& o : orders) {
    const VertexSet s = kind == "dominating" ? greedy_minimal_dominating(g, o) : greedy_maximal_independent(g, o);
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
    if (json) {
      runs.push_back(Json{{"ordering", o}, {"set", set_json(s)}, {"size", s.size()}});
    } else {
      out << join(s) << "  size " << s.size() << '\n';
    }
  }
  if (json) {
    Json j;
    j["schema"] = "domlab.greedy.v1";
    j["kind"] = kind;
    j["graph6"] = to_graph6(g);
    j["runs"] = runs;
    j["min_size"] = lo;
    j["max_size"] = hi;
    out << j.dump(2) << '\n';
  } else if (orders.size() > 1) {
    out << "sizes " << lo << ".." << hi << " over " << orders.size() << " orderings\n";
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::optional<int> order, min_order, max_order;
  bool triangle_free = false;
  bool all_graphs = false;
  bool count_only = false;
  std::optional<std::string> output;
};

int cmd_enumerate(const EnumerateArgs& a, const Settings& s, bool json, std::ostream& out) {
  if (a.order && (a.min_order || a.max_order)) throw InputError("--order conflicts with --min-order/--max-order");
  if (!a.order && !a.max_order) throw InputError("give --order N or --max-order N");
  const int lo = a.order ? *a.order : a.min_order.value_or(1);
  const int hi = a.order ? *a.order : *a.max_order;
  if (lo > hi) throw InputError("empty order range");
  EnumerationOptions eo;
  eo.budget = s.budget;
  eo.triangle_free = a.triangle_free;
  eo.connected = !a.all_graphs;
  eo.cache_dir = s.cache_dir;
  eo.workers = s.workers;
  GraphEnumerator e(eo);
  std::vector<Graph> all;
  Json counts = Json::array();
  for (int n = lo; n <= hi; ++n) {
    const auto& layer = e.of_order(n);
    counts.push_back(Json{{"order", n}, {"count", layer.size()}});
    if (!a.count_only) all.insert(all.end(), layer.begin(), layer.end());
  }
  if (a.output) write_graph6_file_atomic(*a.output, all);
  if (json) {
    Json j;
    j["schema"] = "domlab.enumerate.v1";
    j["connected"] = !a.all_graphs;
    j["triangle_free"] = a.triangle_free;
    j["orders"] = counts;
    std::size_t total = 0;
    for (const auto& c : counts) total += c["count"].get<std::size_t>();
    j["total"] = total;
    if (!a.count_only && !a.output) {
      Json g6 = Json::array();
      for (const auto& g : all) g6.push_back(to_graph6(g));
      j["graphs"] = g6;
    }
    out << j.dump(2) << '\n';
  } else if (a.count_only || a.output) {
    for (const auto& c : counts) out << "order " << c["order"].get<int>() << ": " << c["count"].get<std::size_t>() << '\n';
  } else {
    for (const auto& g : all) out << to_graph6(g) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string id;
  std::optional<int> min_order, max_order, product_cap, random, counterexample_cap;
  bool triangle_free = false;
  bool any_graph = false;
  std::optional<std::string> corpus;
  bool list = false;
  bool no_elapsed = false;
};

void print_report(const VerificationReport& r, std::ostream& out) {
  out << r.theorem << "  " << (r.passed() ? "holds" : "FAILS") << "  scanned=" << r.scanned << " holds=" << r.holds
      << " hypothesis-not-met=" << r.hypothesis_not_met << " counterexamples=" << r.counterexample_count;
  if (!r.member_label.empty()) out << " members=" << r.members;
  out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
  out << "  corpus: " << r.corpus << '\n';
  if (!r.member_label.empty()) out << "  members: " << r.member_label << '\n';
  for (const auto& c : r.counterexamples) {
    out << "  counterexample";
    for (const auto& g : c.graph6) out << ' ' << g;
    out << ": " << c.clause << '\n';
    for (const auto& w : c.witness_sets) out << "    " << w.name << " in " << w.graph << ": " << join(w.vertices) << '\n';
  }
}

int cmd_verify(const VerifyArgs& a, const Settings& s, bool json, std::ostream& out) {
  if (a.list && json) {
    Json list = Json::array();
    for (const auto& e : theorem_table()) {
      list.push_back(Json{{"id", e.id},
                          {"arity", e.arity == Arity::pair ? "pair" : "single"},
                          {"statement", e.statement},
                          {"default_corpus", default_corpus(e).describe(e.arity)}});
    }
    out << Json{{"schema", "domlab.theorem-list.v1"}, {"theorems", list}}.dump(2) << '\n';
    return kExitOk;
  }
  if (a.list) {
    for (const auto& e : theorem_table()) {
      out << std::left << std::setw(10) << e.id << (e.arity == Arity::pair ? "pair    " : "single  ") << e.statement << '\n';
    }
    return kExitOk;
  }
  if (a.id.empty()) throw InputError("verify needs a theorem id (or 'all', or --list)");
  if (a.corpus && a.random) throw InputError("--corpus conflicts with --random");
  if (a.corpus && (a.min_order || a.max_order || a.triangle_free)) throw InputError("--corpus conflicts with order and class filters");

  std::vector<const TheoremEntry*> entries;
  if (a.id == "all") {
    for (const auto& e : theorem_table()) entries.push_back(&e);
  } else {
    entries.push_back(&theorem(a.id));
  }

  VerifyOptions vo;
  vo.workers = s.workers;
  vo.budget = s.budget;
  vo.cache_dir = s.cache_dir;
  if (a.counterexample_cap) vo.counterexample_cap = *a.counterexample_cap;

  std::vector<VerificationReport> reports;
  for (const TheoremEntry* e : entries) {
    CorpusSpec c = default_corpus(*e);
    if (a.corpus) {
      c = CorpusSpec::from_file(*a.corpus);
    } else if (a.random) {
      const int max_order = a.max_order.value_or(e->arity == Arity::pair ? 5 : 10);
      c = CorpusSpec::random(*a.random, max_order, s.seed);
      if (a.min_order) c.min_order = *a.min_order;
    } else {
      if (a.min_order) c.min_order = *a.min_order;
      if (a.max_order) c.max_order = *a.max_order;
      if (a.triangle_free) c.triangle_free = true;
      if (a.any_graph) c.triangle_free = false;
    }
    if (a.product_cap) c.product_cap = *a.product_cap;
    reports.push_back(verify_corpus(*e, c, vo));
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (json) {
    if (reports.size() == 1) {
      out << report_to_json(reports.front(), 2, !a.no_elapsed) << '\n';
    } else {
      Json j;
      j["schema"] = "domlab.verification-suite.v1";
      j["passed"] = passed;
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(Json::parse(report_to_json(r, -1, !a.no_elapsed)));
      j["reports"] = arr;
      out << j.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

std::optional<fs::path> default_config_path() {
  if (auto p = env("DOMLAB_CONFIG")) return fs::path(*p);
  if (auto x = env("XDG_CONFIG_HOME")) return fs::path(*x) / "domlab" / "config";
  if (auto h = env("HOME")) return fs::path(*h) / ".config" / "domlab" / "config";
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination invariants, graph products and theorem sweeps on small graphs", "domlab"};
  app.require_subcommand(1);
  app.fallthrough();

  Flags flags;
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of a table");
  app.add_option("--config", flags.config, "key=value config file (default $DOMLAB_CONFIG or ~/.config/domlab/config)");
  app.add_option("--cache-dir", flags.cache_dir, "Corpus cache directory (env DOMLAB_CACHE_DIR)");
  app.add_option("--workers", flags.workers, "Worker threads, 0 = all cores (env DOMLAB_WORKERS)");
  app.add_option("--budget", flags.budget, "Largest order the enumerator may generate (default 9)");
  app.add_option("--seed", flags.seed, "Seed for randomized corpora and orderings (default 1)");

  std::string graph_a, graph_b, word;
  auto* inv = app.add_subcommand("invariants", "Domination and independence numbers of one graph");
  inv->add_option("graph", graph_a, "graph6 literal, .g6 file or named:FAMILY:PARAM")->required();

  bool assert_true = false;
  auto* dec = app.add_subcommand("decide", "Decide one property, with a witness when available");
  dec->add_option("property", word, "Property to decide")->required()->check(CLI::IsMember(kProperties));
  dec->add_option("graph", graph_a, "Input graph")->required();
  dec->add_flag("--assert", assert_true, "Exit with status 1 when the property is false");

  std::string emit = "graph6";
  auto* prod = app.add_subcommand("product", "Build a graph product");
  prod->add_option("kind", word, "cartesian, direct or disjunctive")->required();
  prod->add_option("first", graph_a, "First factor")->required();
  prod->add_option("second", graph_b, "Second factor")->required();
  prod->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6", "dot"}));

  auto* cls = app.add_subcommand("classify", "Structural classification: corona, PC partition, small families");
  cls->add_option("graph", graph_a, "Input graph")->required();

  std::optional<std::string> ordering;
  int trials = 1;
  auto* gr = app.add_subcommand("greedy", "Greedy minimal dominating or maximal independent sets");
  gr->add_option("kind", word, "dominating or independent")->required();
  gr->add_option("graph", graph_a, "Input graph")->required();
  auto* order_opt = gr->add_option("--order", ordering, "Comma-separated vertex ordering");
  gr->add_option("--trials", trials, "Number of random orderings when --order is absent")->excludes(order_opt);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Connected graphs up to isomorphism, as graph6");
  en->add_option("--order", ea.order, "Single order");
  en->add_option("--min-order", ea.min_order, "Smallest order (default 1)");
  en->add_option("--max-order", ea.max_order, "Largest order");
  en->add_flag("--triangle-free", ea.triangle_free, "Only triangle-free graphs");
  en->add_flag("--all-graphs", ea.all_graphs, "Include disconnected graphs");
  en->add_flag("--count", ea.count_only, "Print counts only");
  en->add_option("--output", ea.output, "Write graph6 lines to this file (atomically)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Sweep a theorem over a corpus and report counterexamples");
  ver->add_option("theorem", va.id, "Theorem id, or 'all'");
  ver->add_flag("--list", va.list, "List theorem ids");
  ver->add_option("--min-order", va.min_order, "Smallest corpus order");
  ver->add_option("--max-order", va.max_order, "Largest corpus order");
  auto* tf_flag = ver->add_flag("--triangle-free", va.triangle_free, "Restrict the corpus to triangle-free graphs");
  ver->add_flag("--any-graph", va.any_graph, "Lift the default triangle-free restriction")->excludes(tf_flag);
  ver->add_option("--corpus", va.corpus, "graph6 corpus file instead of enumeration");
  ver->add_option("--random", va.random, "Use N random graphs (or pairs) drawn from --seed");
  ver->add_option("--product-cap", va.product_cap, "Largest product order for pair theorems (default 25)");
  ver->add_option("--counterexample-cap", va.counterexample_cap, "Counterexamples kept in the report (default 10)");
  ver->add_flag("--no-elapsed", va.no_elapsed, "Omit elapsed_ms from JSON for byte-stable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings s = resolve(flags);
    if (inv->parsed()) return cmd_invariants(graph_a, json, out);
    if (dec->parsed()) return cmd_decide(word, graph_a, assert_true, json, out);
    if (prod->parsed()) return cmd_product(word, graph_a, graph_b, emit, json, out, err);
    if (cls->parsed()) return cmd_classify(graph_a, json, out);
    if (gr->parsed()) return cmd_greedy(word, graph_a, ordering, trials, s.seed, json, out);
    if (en->parsed()) return cmd_enumerate(ea, s, json, out);
    if (ver->parsed()) return cmd_verify(va, s, json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace domlab::cli
