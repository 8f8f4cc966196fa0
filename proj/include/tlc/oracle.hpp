#pragma once

#include <optional>

#include "tlc/execution.hpp"
#include "tlc/graph.hpp"

namespace tlc {

struct OracleLimits {
  static constexpr int kMaxEdges = 24;
  static constexpr int kMaxBudget = 6;
};

/// Brute-force minimum contraction set. Subsets are tried by increasing size
/// and, within a size, in lexicographic order of the sorted edge list, so
/// the answer is canonical for both execution paths.
///
/// Budgets above |V| - 1 are clamped (contracting a spanning tree always
/// works). Throws SizeError past OracleLimits.
std::optional<EdgeSet> exact_opt(const Graph& g, int ell, int k_max,
                                 Execution exec = Execution::parallel);

/// True iff some F with |F| <= k has G/F in T_ell. Negative k is a no.
bool exact_decide(const Instance& instance, Execution exec = Execution::parallel);

/// Tree-contraction optimum (ell = 0), or nullopt if it exceeds k_max.
std::optional<int> exact_tree_contraction_opt(const Graph& g, int k_max);

}  // namespace tlc
