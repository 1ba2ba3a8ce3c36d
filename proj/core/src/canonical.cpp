#include "domlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <numeric>

#include "domlab/graph6.hpp"

namespace domlab {
namespace {

struct Partition {
  std::array<std::uint64_t, kMaxOrder> cells{};
  int count = 0;
};

// Splits every cell by neighbor counts into every other cell until the partition
// is equitable. New fragments keep the position of the cell they came from and
// appear in ascending count order, so the result commutes with relabeling.
void refine(const Graph& g, Partition& p) {
  const auto rows = g.rows();
  std::array<int, kMaxOrder> degree_in{};
  std::array<std::uint64_t, kMaxOrder + 1> bucket{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.count; ++s) {
      const std::uint64_t splitter = p.cells[s];
      for (int c = 0; c < p.count; ++c) {
        const std::uint64_t cell = p.cells[c];
        if ((cell & (cell - 1)) == 0) continue;
        int lo = INT_MAX, hi = -1;
        for (Vertex v : VertexSet{cell}) {
          const int k = std::popcount(rows[v] & splitter);
          degree_in[v] = k;
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) continue;
        std::fill(bucket.begin() + lo, bucket.begin() + hi + 1, 0);
        for (Vertex v : VertexSet{cell}) bucket[degree_in[v]] |= std::uint64_t{1} << v;
        std::array<std::uint64_t, kMaxOrder> fragments{};
        int parts = 0;
        for (int k = lo; k <= hi; ++k)
          if (bucket[k] != 0) fragments[parts++] = bucket[k];
        // shift the tail right by parts-1 and drop the fragments in
        for (int i = p.count - 1; i > c; --i) p.cells[i + parts - 1] = p.cells[i];
        for (int i = 0; i < parts; ++i) p.cells[c + i] = fragments[i];
        p.count += parts - 1;
        c += parts - 1;
        changed = true;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    Partition root;
    root.cells[0] = g_.vertices().bits();
    root.count = 1;
    path_.reserve(n_);
    search(root, 0);
    return best_label_;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  int search(Partition p, int depth) {
    refine(g_, p);
    if (p.count == n_) return leaf(p, depth);

    int target = 0;
    while (std::popcount(p.cells[target]) == 1) ++target;
    const VertexSet cell{p.cells[target]};

    VertexSet tried;
    std::size_t autos_seen = 0;
    std::vector<Vertex> orbit;
    for (Vertex v : cell) {
      if (!tried.empty()) {
        if (orbit.empty() || autos_seen != autos_.size()) {
          orbit = orbits_fixing_prefix(depth);
          autos_seen = autos_.size();
        }
        const Vertex root = orbit[v];
        bool redundant = false;
        for (Vertex u : tried)
          if (orbit[u] == root) {
            redundant = true;
            break;
          }
        if (redundant) continue;
      }

      Partition child = p;
      for (int i = child.count - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
      child.cells[target] = VertexSet::single(v).bits();
      child.cells[target + 1] = cell.without(v).bits();
      ++child.count;

      path_.push_back(v);
      const int jump = search(child, depth + 1);
      path_.pop_back();
      tried.insert(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p, int depth) {
    std::vector<Vertex> label(n_);
    for (int i = 0; i < n_; ++i) label[std::countr_zero(p.cells[i])] = i;
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t row = 0;
      for (Vertex w : g_.neighbors(v)) row |= std::uint64_t{1} << label[w];
      rows[label[v]] = row;
    }

    if (first_label_.empty()) {
      first_label_ = label;
      first_rows_ = rows;
      first_path_ = path_;
      best_label_ = std::move(label);
      best_rows_ = std::move(rows);
      return kNoJump;
    }
    if (rows == first_rows_) {
      record_automorphism(first_label_, label);
      int k = 0;
      while (k < depth && path_[k] == first_path_[k]) ++k;
      return k;
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_label_ = std::move(label);
    } else if (rows == best_rows_) {
      record_automorphism(best_label_, label);
    }
    return kNoJump;
  }

  // Two leaves with identical relabeled graphs differ by the automorphism
  // v -> reference^{-1}(current(v)).
  void record_automorphism(const std::vector<Vertex>& reference, const std::vector<Vertex>& current) {
    std::vector<Vertex> inverse(n_);
    for (Vertex v = 0; v < n_; ++v) inverse[reference[v]] = v;
    std::vector<Vertex> image(n_);
    for (Vertex v = 0; v < n_; ++v) image[v] = inverse[current[v]];
    autos_.push_back(std::move(image));
  }

  // Orbit representatives under the stored automorphisms that fix path_[0..depth) pointwise.
  std::vector<Vertex> orbits_fixing_prefix(int depth) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int k = 0; k < depth && fixes; ++k) fixes = a[path_[k]] == path_[k];
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex x = find(v), y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
  std::vector<Vertex> first_path_;
  std::vector<Vertex> first_label_, best_label_;
  std::vector<std::uint64_t> first_rows_, best_rows_;
  std::vector<std::vector<Vertex>> autos_;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  std::vector<Vertex> label = CanonicalSearch(g).run();
  Graph form = g.relabeled(label);
  return {std::move(label), std::move(form)};
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).form; }

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  const CanonicalLabeling ca = canonical_labeling(a);
  const CanonicalLabeling cb = canonical_labeling(b);
  if (ca.form != cb.form) return std::nullopt;
  std::vector<Vertex> inverse_b(b.order());
  for (Vertex v = 0; v < b.order(); ++v) inverse_b[cb.label[v]] = v;
  std::vector<Vertex> f(a.order());
  for (Vertex v = 0; v < a.order(); ++v) f[v] = inverse_b[ca.label[v]];
  return f;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace domlab
