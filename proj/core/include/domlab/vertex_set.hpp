#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace domlab {

using Vertex = int;

/// Largest order representable in graph6 short form and in one 64-bit word.
inline constexpr int kMaxOrder = 62;

/// A set of vertices packed into a single machine word.
///
/// Membership is only meaningful relative to a host graph; operations that take
/// a graph and a VertexSet check that every member is below the host order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr VertexSet of(std::initializer_list<Vertex> members) {
    std::uint64_t bits = 0;
    for (Vertex v : members) bits |= std::uint64_t{1} << v;
    return VertexSet{bits};
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet full(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet from_vector(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex lowest() const { return std::countr_zero(bits_); }
  /// Largest member; undefined on the empty set.
  constexpr Vertex highest() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(Vertex v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
  constexpr VertexSet without(Vertex v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet{a.bits_ ^ b.bits_}; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  /// Numeric order of the packed word (vertex 0 least significant).
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member sequences: {0,2} < {0,3} < {1,2}.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint64_t at_or_above = ~((std::uint64_t{1} << d) - 1);
  if (a.contains(d)) {
    // b lacks d; b is a proper prefix of a exactly when b has nothing at or above d.
    return (b.bits() & at_or_above) != 0;
  }
  return (a.bits() & at_or_above) == 0;
}

}  // namespace domlab
