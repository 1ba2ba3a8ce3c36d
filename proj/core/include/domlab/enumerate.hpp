#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using GraphFilter = std::function<bool(const Graph&)>;

struct EnumerationOptions {
  /// Largest order the enumerator will generate.
  int budget = 9;
  /// Restrict to triangle-free graphs (the class is hereditary, so generation stays closed).
  bool triangle_free = false;
  /// false enumerates every graph, connected or not.
  bool connected = true;
  /// Read and write `connected-n{N}[-trianglefree].g6` (or `all-n{N}...`) here.
  std::optional<std::filesystem::path> cache_dir;
  /// Threads used to canonicalize candidate extensions; 0 means hardware concurrency.
  int workers = 1;
};

/// One canonical representative per isomorphism class, built order by order.
///
/// Order n is obtained from the order n-1 representatives by attaching a new
/// vertex to every admissible neighbor set and keeping the first candidate of
/// each canonical form. For connected graphs the new vertex needs a nonempty
/// neighborhood: every connected graph has a vertex whose removal leaves it
/// connected. Output order is deterministic.
class GraphEnumerator {
 public:
  explicit GraphEnumerator(EnumerationOptions options = {});

  /// Throws BudgetExceeded when n exceeds the budget, std::invalid_argument when n < 1.
  const std::vector<Graph>& of_order(int n);

  const EnumerationOptions& options() const { return options_; }
  std::filesystem::path cache_file(int n) const;

 private:
  std::vector<Graph> extend(const std::vector<Graph>& parents) const;
  std::optional<std::vector<Graph>> read_cached(int n) const;

  EnumerationOptions options_;
  std::map<int, std::vector<Graph>> layers_;
};

/// Connected graphs of order n passing `filter`, one per isomorphism class.
std::vector<Graph> enumerate_connected(int n, const GraphFilter& filter = {}, const EnumerationOptions& options = {});

/// One random graph drawn from `state`: order uniform in [min_order, max_order],
/// edge probability uniform in {10%, 15%, ..., 90%}.
Graph random_graph(int min_order, int max_order, std::uint64_t& state);

/// Independent-edge random sample: order uniform in [min_order, max_order], edge
/// probability drawn per graph, reproducible from the seed on every platform.
std::vector<Graph> random_graphs(int count, int min_order, int max_order, std::uint64_t seed, bool connected_only = false);

/// A uniformly shuffled ordering of 0..n-1 from the given generator state.
std::vector<Vertex> random_ordering(int n, std::uint64_t& state);

/// SplitMix64 step; the portable generator behind every randomized routine.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace domlab
