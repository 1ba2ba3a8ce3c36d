#include "domlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "domlab/enumerate.hpp"
#include "domlab/graph6.hpp"

namespace domlab {

CorpusSpec CorpusSpec::enumerated(int min_order, int max_order, bool triangle_free) {
  CorpusSpec c;
  c.min_order = min_order;
  c.max_order = max_order;
  c.triangle_free = triangle_free;
  return c;
}

CorpusSpec CorpusSpec::from_file(std::filesystem::path path) {
  CorpusSpec c;
  c.source = Source::file;
  c.file = std::move(path);
  return c;
}

CorpusSpec CorpusSpec::random(int count, int max_order, std::uint64_t seed) {
  CorpusSpec c;
  c.source = Source::random;
  c.count = count;
  c.max_order = max_order;
  c.seed = seed;
  return c;
}

std::string CorpusSpec::describe(Arity arity) const {
  std::string text;
  switch (source) {
    case Source::enumerated:
      text = std::string("connected ") + (triangle_free ? "triangle-free " : "") + "graphs of order " +
             std::to_string(min_order) + ".." + std::to_string(max_order);
      break;
    case Source::file:
      text = "graphs from " + file.string();
      break;
    case Source::random:
      text = std::to_string(count) + (arity == Arity::pair ? " random pairs" : " random graphs") + " of order " +
             std::to_string(min_order) + ".." + std::to_string(max_order) + " (seed " + std::to_string(seed) + ")";
      break;
  }
  if (arity == Arity::pair && source != Source::random) text += ", ordered pairs";
  if (arity == Arity::pair) text += " with product order <= " + std::to_string(product_cap);
  return text;
}

CorpusSpec default_corpus(const TheoremEntry& entry) {
  const std::string_view id = entry.id;
  if (entry.arity == Arity::single) return CorpusSpec::enumerated(1, 8, id == "TF11" || id == "G5WD");
  if (id == "T2") return CorpusSpec::enumerated(2, 5, true);
  if (id == "T3") return CorpusSpec::enumerated(2, 5);
  if (id == "T4") return CorpusSpec::enumerated(2, 4);
  return CorpusSpec::enumerated(1, 5);
}

std::vector<Graph> load_corpus(const CorpusSpec& corpus, const VerifyOptions& options) {
  switch (corpus.source) {
    case CorpusSpec::Source::enumerated: {
      if (corpus.min_order < 1 || corpus.min_order > corpus.max_order) throw std::invalid_argument("corpus order range is empty");
      if (corpus.max_order > options.budget) {
        throw BudgetExceeded("order " + std::to_string(corpus.max_order) + " exceeds the enumeration budget of " +
                             std::to_string(options.budget));
      }
      EnumerationOptions eo;
      eo.budget = options.budget;
      eo.triangle_free = corpus.triangle_free;
      eo.cache_dir = options.cache_dir;
      eo.workers = options.workers;
      GraphEnumerator e(eo);
      std::vector<Graph> out;
      for (int n = corpus.min_order; n <= corpus.max_order; ++n) {
        const auto& layer = e.of_order(n);
        out.insert(out.end(), layer.begin(), layer.end());
      }
      return out;
    }
    case CorpusSpec::Source::file: {
      std::ifstream in(corpus.file);
      if (!in) throw std::runtime_error("cannot read corpus file " + corpus.file.string());
      return read_graph6_stream(in);
    }
    case CorpusSpec::Source::random:
      return random_graphs(corpus.count, corpus.min_order, corpus.max_order, corpus.seed);
  }
  return {};
}

namespace {

std::vector<Instance> build_instances(const TheoremEntry& entry, const CorpusSpec& corpus, const VerifyOptions& options) {
  std::vector<Instance> out;
  if (entry.arity == Arity::single) {
    for (Graph& g : load_corpus(corpus, options)) out.emplace_back(std::move(g));
    return out;
  }
  const int cap = std::min(corpus.product_cap, kMaxOrder);
  if (corpus.source == CorpusSpec::Source::random) {
    std::uint64_t state = corpus.seed;
    while (static_cast<int>(out.size()) < corpus.count) {
      Graph g = random_graph(corpus.min_order, corpus.max_order, state);
      Graph h = random_graph(corpus.min_order, corpus.max_order, state);
      if (g.order() * h.order() <= cap) out.emplace_back(std::pair{std::move(g), std::move(h)});
    }
    return out;
  }
  const std::vector<Graph> graphs = load_corpus(corpus, options);
  for (const Graph& g : graphs)
    for (const Graph& h : graphs)
      if (g.order() * h.order() <= cap) out.emplace_back(std::pair{g, h});
  return out;
}

}  // namespace

VerificationReport verify_corpus(const TheoremEntry& entry, const CorpusSpec& corpus, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Instance> instances = build_instances(entry, corpus, options);
  std::vector<Verdict> verdicts(instances.size());

  int workers = options.workers > 0 ? options.workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));

  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::size_t failure_index = instances.size();
  std::exception_ptr failure;

  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        verdicts[i] = check_instance(entry, instances[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (i < failure_index) {
          failure_index = i;
          failure = std::current_exception();
        }
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerificationReport r;
  r.theorem = entry.id;
  r.statement = entry.statement;
  r.corpus = corpus.describe(entry.arity);
  r.member_label = entry.member_label;
  r.scanned = static_cast<std::int64_t>(instances.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    Verdict& v = verdicts[i];
    switch (v.kind) {
      case VerdictKind::holds: ++r.holds; break;
      case VerdictKind::hypothesis_not_met: ++r.hypothesis_not_met; break;
      case VerdictKind::counterexample:
        ++r.counterexample_count;
        if (static_cast<int>(r.counterexamples.size()) < options.counterexample_cap) r.counterexamples.push_back(std::move(*v.certificate));
        break;
    }
    if (v.member) {
      ++r.members;
      if (static_cast<int>(r.member_instances.size()) < options.member_cap) {
        if (const Graph* g = std::get_if<Graph>(&instances[i])) {
          r.member_instances.push_back({to_graph6(*g)});
        } else {
          const auto& [g1, g2] = std::get<std::pair<Graph, Graph>>(instances[i]);
          r.member_instances.push_back({to_graph6(g1), to_graph6(g2)});
        }
      }
    }
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify_corpus(std::string_view id, const CorpusSpec& corpus, const VerifyOptions& options) {
  return verify_corpus(theorem(id), corpus, options);
}

}  // namespace domlab
