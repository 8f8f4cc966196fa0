#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlc/graph.hpp"

namespace tlc {

enum class StepKind { leaf, long_path, twin, common };

std::string_view to_string(StepKind kind);

/// One applied reduction. Ids refer to the graph right before the step.
struct ReductionStep {
  StepKind kind = StepKind::leaf;
  int k_before = 0;
  Vertex vertex = -1;       // leaf / twin: the deleted vertex
  EdgeSet contracted;       // long_path: one edge; common: {v1 h_1, ..., v1 h_d}
  Vertex merged = -1;       // long_path / common: id of the merged vertex

  bool operator==(const ReductionStep&) const = default;
};

struct KernelTrace {
  int k = 0;  // budget of the original instance
  int ell = 0;
  double alpha = 2.0;
  int d = 2;
  std::vector<ReductionStep> steps;
  /// Set when the reduced instance is known to be a no-instance; lifting
  /// then returns every edge of the original graph.
  bool decided_no = false;

  bool operator==(const KernelTrace&) const = default;
};

struct HirPartition {
  std::vector<Vertex> h;
  std::vector<Vertex> i;
  std::vector<Vertex> r;
};

struct RuleSet {
  bool leaf = true;
  bool long_path = true;
  bool twin = true;
  bool common = true;

  static RuleSet all() { return {}; }
  /// The two rules that preserve the decision exactly.
  static RuleSet exact() { return {false, true, true, false}; }
  bool is_all() const { return leaf && long_path && twin && common; }
};

/// 2(k+3)(k+2ell): the degree threshold minus one, and the bound on |H|.
std::uint64_t hir_budget(int k, int ell);

/// ceil(alpha / (alpha - 1)). Throws InputError for alpha <= 1 or if d > 16.
int rule_d(double alpha);

HirPartition partition_hir(const Graph& g, int k, int ell);

/// Deletes the lowest-id degree-1 vertex.
std::optional<ReductionStep> reduce_leaves(Instance& instance);

/// Contracts u_{q-1} u_q on the first maximal degree-2 run (by lowest member)
/// whose path has q > k + 2 internal vertices. u_0 is the lower-id end.
std::optional<ReductionStep> reduce_long_paths(Instance& instance);

/// Deletes the highest-id member of the first twin class in I (ordered by
/// lowest member) with at least k + ell + 3 members.
std::optional<ReductionStep> reduce_false_twins(Instance& instance);

/// Contracts v1 h_1 .. v1 h_d for the lexicographically smallest d-subset of
/// H shared by at least k + ell + 2 vertices of I, and lowers k by d - 1.
/// Returns nullopt when nothing fires. Sets `decided_no` instead of
/// contracting when k < d - 1.
std::optional<ReductionStep> reduce_common_neighborhood(Instance& instance, double alpha, bool& decided_no);

/// Upper bound on |V| of a reduced yes-instance: max of the spec-ledger sum
/// B + 2B^2 + (k+ell+2)(C(B,d-1) + C(B,d)) and the sum counted by
/// neighbourhood size, B = hir_budget(k, ell). Saturates at UINT64_MAX.
std::uint64_t kernel_size_bound(int k, int ell, int d);

struct KernelResult {
  Instance reduced;
  KernelTrace trace;
};

/// Applies the enabled rules in the order leaf, long path, twin, common
/// neighbourhood until none fires. With all rules enabled, an instance
/// outside T_ell that is larger than kernel_size_bound is flagged no.
KernelResult kernelize(const Instance& instance, double alpha, RuleSet rules = RuleSet::all());

/// Replays the trace forward from the original instance. Throws InputError
/// if a step does not apply. Returns every intermediate instance, original
/// first.
std::vector<Instance> replay_trace(const Instance& original, const KernelTrace& trace);

/// Maps a solution of the reduced instance back to the original one. Steps
/// are undone in reverse; before each, an F' larger than that stage's budget
/// collapses to every original edge.
/// Throws InputError if the trace does not replay or f_reduced is not a set
/// of edges of the reduced graph.
EdgeSet lift_solution(const Instance& original, const KernelTrace& trace, std::span<const Edge> f_reduced);

}  // namespace tlc
