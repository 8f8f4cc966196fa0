#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

#include "tlc/graph.hpp"

namespace tlc {

/// Partition of V(G) into connected bags; bag t is the preimage of one
/// vertex of the contracted graph. Bags are kept sorted and ordered by their
/// smallest member.
struct WitnessStructure {
  std::vector<std::vector<Vertex>> bags;

  /// Sorts every bag and the bag list.
  void canonicalize();
  /// Sum over bags of |bag| - 1: the number of contractions it encodes.
  int cost() const;

  bool operator==(const WitnessStructure&) const = default;
};

/// An edge set F with G/F in T_ell. The objective value is min(|F|, k + 1).
struct ContractionSolution {
  EdgeSet edges;

  int size() const { return static_cast<int>(edges.size()); }
  int capped_value(int k) const { return std::min(size(), k + 1); }
};

enum class WitnessReason {
  ok,
  not_partition,
  disconnected_bag,
  quotient_outside_class,
  over_budget,
};

std::string_view to_string(WitnessReason r);

struct WitnessCheck {
  bool valid = false;
  int cost = 0;
  WitnessReason reason = WitnessReason::ok;
};

/// Bags are the connected components of (V(g), f).
WitnessStructure witness_from_solution(const Graph& g, std::span<const Edge> f);

/// One vertex per bag (named by its smallest member), adjacent iff the bags
/// are adjacent in g. Throws InputError if w is not a partition of V(g) into
/// connected bags.
Graph quotient(const Graph& g, const WitnessStructure& w);

/// Partition, bag connectivity, quotient in T_ell, and cost <= k, checked in
/// that order. The cost is reported whenever the partition check passes.
WitnessCheck verify_witness(const Graph& g, const WitnessStructure& w, int ell, int k);

/// Spanning tree edges of each bag; contracting them yields the quotient.
EdgeSet solution_edges(const Graph& g, const WitnessStructure& w);

/// Rewrites w so that every leaf of the quotient is a singleton bag, keeping
/// the quotient and the cost. Requires a quotient with at least 3 vertices.
/// Choices (leaf bag, spanning tree, kept vertex) go to the lowest id.
WitnessStructure normalize_leaves(const Graph& g, const WitnessStructure& w);

}  // namespace tlc
