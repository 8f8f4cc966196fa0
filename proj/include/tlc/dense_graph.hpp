#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "tlc/graph.hpp"

namespace tlc {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }

/// Bitmask adjacency over local indices 0..n-1 (n <= 64). Local index order
/// follows vertex id order, so "lowest index" and "lowest id" coincide.
struct DenseGraph {
  std::vector<Vertex> ids;
  std::vector<Mask> adj;

  static constexpr int kMaxVertices = 64;

  static DenseGraph from(const Graph& g);

  int size() const { return static_cast<int>(ids.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
  int index_of(Vertex v) const;
  std::vector<Vertex> to_vertices(Mask m) const;
  Mask to_mask(std::span<const Vertex> vs) const;
};

/// Whether the subgraph induced by `set` is connected (empty counts as connected).
bool mask_connected(const std::vector<Mask>& adj, Mask set);

/// Lexicographic order on equal-size index sets read as sorted sequences.
inline bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

}  // namespace tlc
