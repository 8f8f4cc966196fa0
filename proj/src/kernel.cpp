#include "tlc/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "tlc/derand.hpp"

namespace tlc {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::leaf:
      return "leaf";
    case StepKind::long_path:
      return "longpath";
    case StepKind::twin:
      return "twin";
    case StepKind::common:
      return "common";
  }
  return "unknown";
}

std::uint64_t hir_budget(int k, int ell) {
  return 2ULL * static_cast<std::uint64_t>(std::max(k + 3, 0)) * static_cast<std::uint64_t>(std::max(k + 2 * ell, 0));
}

int rule_d(double alpha) {
  if (!(alpha > 1.0)) throw InputError("alpha must be greater than 1");
  double ratio = alpha / (alpha - 1.0);
  if (ratio > 16.0 + 1e-9) throw InputError("alpha too close to 1: d = ceil(alpha/(alpha-1)) would exceed 16");
  return static_cast<int>(std::ceil(ratio - 1e-9));
}

HirPartition partition_hir(const Graph& g, int k, int ell) {
  const std::uint64_t threshold = hir_budget(k, ell) + 1;
  HirPartition p;
  std::set<Vertex> high;
  for (Vertex v : g.vertices()) {
    if (static_cast<std::uint64_t>(g.degree(v)) >= threshold) {
      p.h.push_back(v);
      high.insert(v);
    }
  }
  for (Vertex v : g.vertices()) {
    if (high.contains(v)) continue;
    const auto& nb = g.neighbors(v);
    bool into_h = std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return high.contains(w); });
    (into_h ? p.i : p.r).push_back(v);
  }
  return p;
}

std::optional<ReductionStep> reduce_leaves(Instance& instance) {
  for (Vertex v : instance.graph.vertices()) {
    if (instance.graph.degree(v) == 1) {
      ReductionStep step{StepKind::leaf, instance.k, v, {}, -1};
      instance.graph.remove_vertex(v);
      return step;
    }
  }
  return std::nullopt;
}

namespace {

// Walks from `from` into `next` and onwards while the current vertex has
// degree 2. Returns the degree-2 vertices passed and the vertex where the
// walk stopped (a vertex of other degree, or `origin` if it closed a cycle).
std::pair<std::vector<Vertex>, Vertex> walk(const Graph& g, Vertex origin, Vertex from, Vertex next) {
  std::vector<Vertex> passed;
  while (next != origin && g.degree(next) == 2) {
    passed.push_back(next);
    const auto& nb = g.neighbors(next);
    Vertex after = nb[0] == from ? nb[1] : nb[0];
    from = next;
    next = after;
  }
  return {passed, next};
}

// The contracted edge for the run through v, if the rule fires there.
std::optional<Edge> long_path_edge(const Graph& g, Vertex v, int k, std::set<Vertex>& seen) {
  const auto& nb = g.neighbors(v);
  auto [left, left_end] = walk(g, v, v, nb[0]);
  if (left_end == v) {
    // Whole cycle: v plus `left` in cycle order.
    std::vector<Vertex> cycle{v};
    cycle.insert(cycle.end(), left.begin(), left.end());
    seen.insert(cycle.begin(), cycle.end());
    auto low = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), low, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    int n = static_cast<int>(cycle.size());
    int q = n - 2;
    if (q <= k + 2) return std::nullopt;
    return Edge{cycle[static_cast<std::size_t>(q - 1)], cycle[static_cast<std::size_t>(q)]};
  }
  auto [right, right_end] = walk(g, v, v, nb[1]);
  std::vector<Vertex> run(left.rbegin(), left.rend());
  run.push_back(v);
  run.insert(run.end(), right.begin(), right.end());
  seen.insert(run.begin(), run.end());
  Vertex x = left_end;
  Vertex y = right_end;
  int r = static_cast<int>(run.size());
  int q = x == y ? r - 1 : r;
  if (q <= k + 2) return std::nullopt;
  // Orient so that u_0 is the lower-id end (for a closed loop, u_1 is the
  // lower of the two run ends).
  bool flip = x == y ? run.back() < run.front() : y < x;
  if (flip) std::reverse(run.begin(), run.end());
  // run[i] is u_{i+1}.
  return Edge{run[static_cast<std::size_t>(q - 2)], run[static_cast<std::size_t>(q - 1)]};
}

}  // namespace

std::optional<ReductionStep> reduce_long_paths(Instance& instance) {
  const Graph& g = instance.graph;
  std::set<Vertex> seen;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 2 || seen.contains(v)) continue;
    if (auto e = long_path_edge(g, v, instance.k, seen)) {
      Edge edge = *e;
      if (edge.u > edge.v) std::swap(edge.u, edge.v);
      ReductionStep step{StepKind::long_path, instance.k, -1, {edge}, edge.u};
      instance.graph = contract_edges(g, step.contracted).graph;
      return step;
    }
  }
  return std::nullopt;
}

std::optional<ReductionStep> reduce_false_twins(Instance& instance) {
  const Graph& g = instance.graph;
  HirPartition p = partition_hir(g, instance.k, instance.ell);
  std::map<std::vector<Vertex>, std::vector<Vertex>> classes;
  for (Vertex v : p.i) classes[g.neighbors(v)].push_back(v);
  std::vector<const std::vector<Vertex>*> order;
  for (const auto& [_, members] : classes) order.push_back(&members);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->front() < b->front(); });
  const auto needed = static_cast<std::size_t>(std::max(instance.k + instance.ell + 3, 0));
  for (const auto* members : order) {
    if (members->size() >= needed) {
      ReductionStep step{StepKind::twin, instance.k, members->back(), {}, -1};
      instance.graph.remove_vertex(step.vertex);
      return step;
    }
  }
  return std::nullopt;
}

std::optional<ReductionStep> reduce_common_neighborhood(Instance& instance, double alpha, bool& decided_no) {
  const int d = rule_d(alpha);
  const Graph& g = instance.graph;
  HirPartition p = partition_hir(g, instance.k, instance.ell);
  if (static_cast<int>(p.h.size()) < d) return std::nullopt;

  // Count I-vertices per d-subset of H they are adjacent to. Each I-vertex
  // has N(v) inside H, so its d-subsets of N(v) are exactly the candidates.
  std::map<std::vector<Vertex>, std::vector<Vertex>> sharing;
  for (Vertex v : p.i) {
    const auto& nb = g.neighbors(v);
    int m = static_cast<int>(nb.size());
    if (m < d) continue;
    if (binomial(m, d) > 2'000'000) throw SizeError("common-neighbourhood search too large");
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<Vertex> key;
      key.reserve(c.size());
      for (int i : c) key.push_back(nb[static_cast<std::size_t>(i)]);
      sharing[key].push_back(v);
      int pos = d - 1;
      while (pos >= 0 && c[static_cast<std::size_t>(pos)] == m - d + pos) --pos;
      if (pos < 0) break;
      ++c[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < d; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  const auto needed = static_cast<std::size_t>(std::max(instance.k + instance.ell + 2, 0));
  for (const auto& [hs, vs] : sharing) {  // map order is lexicographic
    if (vs.size() < needed) continue;
    if (instance.k < d - 1) {
      decided_no = true;
      return std::nullopt;
    }
    Vertex v1 = *std::min_element(vs.begin(), vs.end());
    ReductionStep step{StepKind::common, instance.k, -1, {}, v1};
    for (Vertex h : hs) {
      step.contracted.push_back(Edge{std::min(v1, h), std::max(v1, h)});
      step.merged = std::min(step.merged, h);
    }
    normalize(step.contracted);
    instance.graph = contract_edges(g, step.contracted).graph;
    instance.k -= d - 1;
    return step;
  }
  return std::nullopt;
}

std::uint64_t kernel_size_bound(int k, int ell, int d) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto mul = [](std::uint64_t a, std::uint64_t b) { return a != 0 && b > kMax / a ? kMax : a * b; };
  const std::uint64_t b = hir_budget(k, ell);
  const int bi = b > 100000 ? 100000 : static_cast<int>(b);
  const auto share = static_cast<std::uint64_t>(std::max(k + ell + 2, 0));
  std::uint64_t base = add(b, mul(2, mul(b, b)));

  std::uint64_t spec = add(base, mul(share, add(binomial(bi, d - 1), binomial(bi, d))));

  std::uint64_t by_size = 0;  // I-vertices grouped by |N(v)|
  for (int j = 1; j < d; ++j) by_size = add(by_size, binomial(bi, j));
  std::uint64_t rigorous = add(base, add(mul(share, by_size), mul(share == 0 ? 0 : share - 1, binomial(bi, d))));
  return std::max(spec, rigorous);
}

KernelResult kernelize(const Instance& instance, double alpha, RuleSet rules) {
  KernelResult out{instance, KernelTrace{instance.k, instance.ell, alpha, rule_d(alpha), {}, false}};
  Instance& cur = out.reduced;
  for (;;) {
    if (cur.k < 0) {
      out.trace.decided_no = true;
      break;
    }
    std::optional<ReductionStep> step;
    if (rules.leaf) step = reduce_leaves(cur);
    if (!step && rules.long_path) step = reduce_long_paths(cur);
    if (!step && rules.twin) step = reduce_false_twins(cur);
    if (!step && rules.common) {
      bool no = false;
      step = reduce_common_neighborhood(cur, alpha, no);
      if (no) {
        out.trace.decided_no = true;
        break;
      }
    }
    if (!step) break;
    out.trace.steps.push_back(std::move(*step));
  }
  if (rules.is_all() && !out.trace.decided_no && !is_in_t_ell(cur.graph, cur.ell) &&
      static_cast<std::uint64_t>(cur.graph.num_vertices()) > kernel_size_bound(cur.k, cur.ell, out.trace.d)) {
    out.trace.decided_no = true;
  }
  return out;
}

std::vector<Instance> replay_trace(const Instance& original, const KernelTrace& trace) {
  if (original.k != trace.k || original.ell != trace.ell) {
    throw InputError("trace was recorded for k=" + std::to_string(trace.k) + ", ell=" + std::to_string(trace.ell));
  }
  std::vector<Instance> stages{original};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& s = trace.steps[i];
    Instance next = stages.back();
    auto fail = [&](const std::string& why) {
      throw InputError("trace step " + std::to_string(i + 1) + " (" + std::string(to_string(s.kind)) + "): " + why);
    };
    if (s.k_before != next.k) fail("budget mismatch");
    switch (s.kind) {
      case StepKind::leaf:
      case StepKind::twin:
        if (!next.graph.has_vertex(s.vertex)) fail("vertex " + std::to_string(s.vertex) + " is not in the graph");
        if (s.kind == StepKind::leaf && next.graph.degree(s.vertex) != 1) fail("vertex is not a leaf");
        next.graph.remove_vertex(s.vertex);
        break;
      case StepKind::long_path:
      case StepKind::common: {
        if (s.contracted.empty()) fail("no contracted edges");
        if (s.kind == StepKind::long_path && s.contracted.size() != 1) fail("expected exactly one edge");
        Vertex low = std::numeric_limits<Vertex>::max();
        for (const Edge& e : s.contracted) {
          if (!next.graph.has_edge(e.u, e.v)) fail("edge " + to_string(e) + " is not in the graph");
          low = std::min({low, e.u, e.v});
        }
        if (low != s.merged) fail("merged id should be " + std::to_string(low));
        next.graph = contract_edges(next.graph, s.contracted).graph;
        if (next.graph.num_vertices() != stages.back().graph.num_vertices() - static_cast<int>(s.contracted.size())) {
          fail("contracted edges do not form a tree");
        }
        if (s.kind == StepKind::common) next.k -= static_cast<int>(s.contracted.size()) - 1;
        break;
      }
    }
    stages.push_back(std::move(next));
  }
  return stages;
}

namespace {

// Rewrites edges of the post-contraction graph in terms of the graph before
// it: an edge at the merged vertex goes to the lowest group member adjacent
// to the far endpoint.
EdgeSet unmerge(const Graph& before, const EdgeSet& contracted, Vertex merged, const EdgeSet& f) {
  std::vector<Vertex> group;
  for (const Edge& e : contracted) {
    group.push_back(e.u);
    group.push_back(e.v);
  }
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  EdgeSet out;
  for (const Edge& e : f) {
    if (e.u != merged && e.v != merged) {
      out.push_back(e);
      continue;
    }
    Vertex far = e.u == merged ? e.v : e.u;
    Vertex near = -1;
    for (Vertex y : group) {
      if (before.has_edge(y, far)) {
        near = y;
        break;
      }
    }
    if (near < 0) throw InputError("edge " + to_string(e) + " has no preimage");
    out.push_back(Edge{std::min(near, far), std::max(near, far)});
  }
  normalize(out);
  return out;
}

}  // namespace

EdgeSet lift_solution(const Instance& original, const KernelTrace& trace, std::span<const Edge> f_reduced) {
  std::vector<Instance> stages = replay_trace(original, trace);
  if (trace.decided_no) return original.graph.edges();
  EdgeSet f(f_reduced.begin(), f_reduced.end());
  for (Edge& e : f) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  normalize(f);
  for (const Edge& e : f) {
    if (!stages.back().graph.has_edge(e.u, e.v)) {
      throw InputError("edge " + to_string(e) + " is not in the reduced graph");
    }
  }
  // Overflow is judged on F' against the budget of the instance it solves.
  // The common step then adds d edges for d - 1 budget, which is the loss.
  if (static_cast<int>(f.size()) > stages.back().k) return original.graph.edges();
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    if (static_cast<int>(f.size()) > stages[i + 1].k) return original.graph.edges();
    const ReductionStep& s = trace.steps[i];
    if (s.kind == StepKind::long_path) {
      f = unmerge(stages[i].graph, s.contracted, s.merged, f);
    } else if (s.kind == StepKind::common) {
      f = unmerge(stages[i].graph, s.contracted, s.merged, f);
      f.insert(f.end(), s.contracted.begin(), s.contracted.end());
      normalize(f);
    }
  }
  return f;
}

}  // namespace tlc
