#include "domlab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>

#include "domlab/canonical.hpp"
#include "domlab/graph6.hpp"

namespace domlab {

GraphEnumerator::GraphEnumerator(EnumerationOptions options) : options_(std::move(options)) {
  if (options_.budget < 1 || options_.budget > kMaxOrder) throw std::invalid_argument("enumeration budget must lie in 1..62");
}

std::filesystem::path GraphEnumerator::cache_file(int n) const {
  std::string name = options_.connected ? "connected" : "all";
  name += "-n" + std::to_string(n);
  if (options_.triangle_free) name += "-trianglefree";
  name += ".g6";
  return options_.cache_dir ? *options_.cache_dir / name : std::filesystem::path(name);
}

const std::vector<Graph>& GraphEnumerator::of_order(int n) {
  if (n < 1) throw std::invalid_argument("enumeration order must be at least 1");
  if (n > options_.budget) {
    throw BudgetExceeded("order " + std::to_string(n) + " exceeds the enumeration budget of " + std::to_string(options_.budget));
  }
  if (auto it = layers_.find(n); it != layers_.end()) return it->second;

  if (options_.cache_dir && std::filesystem::exists(cache_file(n))) {
    if (auto cached = read_cached(n)) return layers_[n] = std::move(*cached);
  }

  std::vector<Graph> layer;
  if (n == 1) {
    layer.emplace_back(1);
  } else {
    layer = extend(of_order(n - 1));
  }
  if (options_.cache_dir) write_graph6_file_atomic(cache_file(n), layer);
  return layers_[n] = std::move(layer);
}

// A cache file that fails to parse or holds graphs outside the class is
// ignored and regenerated.
std::optional<std::vector<Graph>> GraphEnumerator::read_cached(int n) const {
  std::vector<Graph> graphs;
  try {
    graphs = read_graph6_file(cache_file(n));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::unordered_set<std::string> seen;
  for (const Graph& g : graphs) {
    if (g.order() != n) return std::nullopt;
    if (options_.connected && !is_connected(g)) return std::nullopt;
    if (options_.triangle_free && !is_triangle_free(g)) return std::nullopt;
    if (!seen.insert(canonical_key(g)).second) return std::nullopt;
  }
  return graphs;
}

std::vector<Graph> GraphEnumerator::extend(const std::vector<Graph>& parents) const {
  struct Found {
    std::vector<std::string> keys;
    std::vector<Graph> graphs;
  };

  auto work = [&](std::size_t begin, std::size_t end, Found& found) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = begin; i < end; ++i) {
      const Graph& parent = parents[i];
      const std::uint64_t limit = std::uint64_t{1} << parent.order();
      for (std::uint64_t mask = options_.connected ? 1 : 0; mask < limit; ++mask) {
        const VertexSet nbrs{mask};
        if (options_.triangle_free && !is_independent(parent, nbrs)) continue;
        CanonicalLabeling c = canonical_labeling(parent.with_new_vertex(nbrs));
        std::string key = to_graph6(c.form);
        if (seen.insert(key).second) {
          found.keys.push_back(std::move(key));
          found.graphs.push_back(std::move(c.form));
        }
      }
    }
  };

  int workers = options_.workers > 0 ? options_.workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(parents.size())));
  std::vector<Found> parts(workers);
  const std::size_t chunk = (parents.size() + workers - 1) / workers;
  if (workers == 1) {
    work(0, parents.size(), parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::size_t b = std::min(parents.size(), w * chunk), e = std::min(parents.size(), (w + 1) * chunk);
      pool.emplace_back(work, b, e, std::ref(parts[w]));
    }
    for (auto& t : pool) t.join();
  }

  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (Found& part : parts)
    for (std::size_t i = 0; i < part.keys.size(); ++i)
      if (seen.insert(part.keys[i]).second) out.push_back(std::move(part.graphs[i]));
  return out;
}

std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter, const EnumerationOptions& options) {
  EnumerationOptions opts = options;
  opts.connected = true;
  GraphEnumerator e(opts);
  std::vector<Graph> out;
  for (const Graph& g : e.of_order(n))
    if (!filter || filter(g)) out.push_back(g);
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t below(std::uint64_t& state, std::uint64_t bound) {
  // rejection sampling keeps the draw unbiased
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = splitmix64(state);
  while (x >= limit);
  return x % bound;
}

}  // namespace

std::vector<Vertex> random_ordering(int n, std::uint64_t& state) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[below(state, static_cast<std::uint64_t>(i) + 1)]);
  return order;
}

Graph random_graph(int min_order, int max_order, std::uint64_t& state) {
  if (min_order < 1 || max_order > kMaxOrder || min_order > max_order) throw std::invalid_argument("random_graph: bad order range");
  const int n = min_order + static_cast<int>(below(state, static_cast<std::uint64_t>(max_order - min_order + 1)));
  const std::uint64_t percent = 10 + 5 * below(state, 17);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (below(state, 100) < percent) g.add_edge(u, v);
  return g;
}

std::vector<Graph> random_graphs(int count, int min_order, int max_order, std::uint64_t seed, bool connected_only) {
  std::uint64_t state = seed;
  std::vector<Graph> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    Graph g = random_graph(min_order, max_order, state);
    if (connected_only && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace domlab
