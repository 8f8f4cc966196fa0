#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tlc/kernel.hpp"
#include "tlc/oracle.hpp"
#include "tlc/witness.hpp"

namespace tlc {
namespace {

using testing::complete_bipartite;
using testing::cycle;
using testing::isomorphic;
using testing::path;
using V = std::vector<Vertex>;

TEST(Kernel, RuleD) {
  EXPECT_EQ(rule_d(2.0), 2);
  EXPECT_EQ(rule_d(1.5), 3);
  EXPECT_EQ(rule_d(1.1), 11);
  EXPECT_THROW(rule_d(1.0), InputError);
  EXPECT_THROW(rule_d(0.5), InputError);
  EXPECT_THROW(rule_d(1.01), InputError);  // d = 101
}

TEST(Kernel, HirExamples) {
  EXPECT_EQ(hir_budget(1, 0), 8u);
  HirPartition star = partition_hir(testing::star(12), 1, 0);
  EXPECT_EQ(star.h, V{1});
  EXPECT_EQ(star.i.size(), 12u);
  EXPECT_TRUE(star.r.empty());

  HirPartition c5 = partition_hir(cycle(5), 1, 0);
  EXPECT_TRUE(c5.h.empty());
  EXPECT_TRUE(c5.i.empty());
  EXPECT_EQ(c5.r, (V{1, 2, 3, 4, 5}));

  HirPartition kb = partition_hir(complete_bipartite(2, 10), 1, 0);
  EXPECT_EQ(kb.h, (V{1, 2}));
  EXPECT_EQ(kb.i.size(), 10u);
  EXPECT_TRUE(kb.r.empty());
}

TEST(Kernel, LongPathExamples) {
  Instance c10{cycle(10), 1, 0};
  auto step = reduce_long_paths(c10);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->kind, StepKind::long_path);
  EXPECT_TRUE(isomorphic(c10.graph, cycle(9)));
  EXPECT_EQ(c10.k, 1);

  Instance c6{cycle(6), 4, 0};
  EXPECT_FALSE(reduce_long_paths(c6));
  EXPECT_EQ(c6.graph, cycle(6));

  Instance p20{path(20), 2, 0};
  int fired = 0;
  while (reduce_long_paths(p20)) ++fired;
  EXPECT_EQ(fired, 14);
  EXPECT_TRUE(isomorphic(p20.graph, path(6)));
}

TEST(Kernel, TwinExamples) {
  Instance star{testing::star(12), 1, 0};
  auto step = reduce_false_twins(star);
  ASSERT_TRUE(step);
  EXPECT_EQ(step->vertex, 13);
  EXPECT_EQ(star.graph.num_vertices(), 12);
  EXPECT_EQ(star.graph.degree(1), 11);

  Instance kb{complete_bipartite(2, 10), 1, 0};
  ASSERT_TRUE(reduce_false_twins(kb));
  EXPECT_TRUE(isomorphic(kb.graph, complete_bipartite(2, 9)));  // 11 vertices

  Instance c5{cycle(5), 1, 0};
  EXPECT_FALSE(reduce_false_twins(c5));
}

TEST(Kernel, CommonNeighborhoodExamples) {
  Instance kb{complete_bipartite(2, 10), 1, 0};
  bool no = false;
  auto step = reduce_common_neighborhood(kb, 2.0, no);
  ASSERT_TRUE(step);
  EXPECT_FALSE(no);
  EXPECT_EQ(step->contracted, (EdgeSet{{1, 3}, {2, 3}}));
  EXPECT_EQ(kb.k, 0);
  EXPECT_TRUE(isomorphic(kb.graph, testing::star(9)));
  EXPECT_EQ(kb.graph.num_edges(), 9);

  Instance c5{cycle(5), 1, 0};
  EXPECT_FALSE(reduce_common_neighborhood(c5, 1.5, no));

  // Not enough budget for d - 1 = 2 contractions.
  Instance tight{complete_bipartite(3, 12), 1, 0};
  no = false;
  auto flagged = reduce_common_neighborhood(tight, 1.5, no);
  EXPECT_TRUE(no);
  EXPECT_THROW(reduce_common_neighborhood(tight, 1.0, no), InputError);
  (void)flagged;
}

TEST(Kernel, KernelizeExamples) {
  KernelResult c5 = kernelize({cycle(5), 1, 0}, 2.0);
  EXPECT_EQ(c5.reduced.graph, cycle(5));
  EXPECT_TRUE(c5.trace.steps.empty());
  EXPECT_FALSE(c5.trace.decided_no);

  KernelResult c100 = kernelize({cycle(100), 1, 0}, 2.0);
  EXPECT_LE(c100.reduced.graph.num_vertices(), 5);
  EXPECT_TRUE(isomorphic(c100.reduced.graph, cycle(c100.reduced.graph.num_vertices())));

  KernelResult kb = kernelize({complete_bipartite(2, 10), 1, 0}, 2.0);
  EXPECT_FALSE(kb.trace.steps.empty());
  EXPECT_LE(static_cast<std::uint64_t>(kb.reduced.graph.num_vertices()), kernel_size_bound(1, 0, 2));
  EXPECT_EQ(replay_trace({complete_bipartite(2, 10), 1, 0}, kb.trace).back().graph, kb.reduced.graph);
}

TEST(Kernel, LiftExamples) {
  Instance c5{cycle(5), 1, 0};
  KernelTrace empty{1, 0, 2.0, 2, {}, false};
  EdgeSet f{{1, 2}};
  EXPECT_EQ(lift_solution(c5, empty, f), f);

  Instance kb{complete_bipartite(2, 10), 1, 0};
  Instance after = kb;
  bool no = false;
  ReductionStep step = *reduce_common_neighborhood(after, 2.0, no);
  KernelTrace one{1, 0, 2.0, 2, {step}, false};
  EXPECT_EQ(lift_solution(kb, one, {}), (EdgeSet{{1, 3}, {2, 3}}));

  // |F'| > k' overflows to every original edge.
  EdgeSet big{{1, 4}};
  EXPECT_EQ(lift_solution(kb, one, big), kb.graph.edges());

  KernelTrace decided{1, 0, 2.0, 2, {}, true};
  EXPECT_EQ(lift_solution(c5, decided, {}), c5.graph.edges());

  EdgeSet foreign{{1, 3}};
  EXPECT_THROW(lift_solution(c5, empty, foreign), InputError);
}

TEST(Kernel, ReplayRejectsMismatch) {
  Instance c10{cycle(10), 1, 0};
  KernelResult r = kernelize(c10, 2.0);
  ASSERT_FALSE(r.trace.steps.empty());
  EXPECT_THROW(replay_trace({cycle(8), 1, 0}, r.trace), InputError);
  KernelTrace broken = r.trace;
  broken.steps.front().contracted = {{1, 5}};
  EXPECT_THROW(replay_trace(c10, broken), InputError);
}

TEST(Kernel, SizeBound) {
  EXPECT_GE(kernel_size_bound(1, 0, 2), 8u + 2 * 64u);
  EXPECT_EQ(kernel_size_bound(60, 60, 16), UINT64_MAX);
}

// Graph with pendant trees and subdivided edges so every rule gets a chance.
Graph decorated(std::mt19937_64& rng) {
  int n = 3 + static_cast<int>(rng() % 4);
  Graph g = testing::random_connected(n, 0.5, rng);
  Vertex next = g.max_vertex() + 1;
  EdgeSet e = g.edges();
  const Edge& pick = e[rng() % e.size()];
  int len = static_cast<int>(rng() % 6);
  g.remove_edge(pick.u, pick.v);
  Vertex prev = pick.u;
  for (int i = 0; i < len; ++i) {
    g.add_vertex(next);
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, pick.v);
  int leaves = static_cast<int>(rng() % 3);
  for (int i = 0; i < leaves; ++i) {
    V vs = g.vertices();
    Vertex at = vs[rng() % vs.size()];
    g.add_vertex(next);
    g.add_edge(at, next++);
  }
  return g;
}

// Replays reproduce the kernel, and lifted optimal kernel solutions verify on
// the original instance within alpha times the optimum.
TEST(Kernel, LiftedSolutionsVerify) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = decorated(rng);
    if (g.num_edges() > 18) continue;
    int k = 1 + static_cast<int>(rng() % 3);
    int ell = static_cast<int>(rng() % 2);
    double alpha = trial % 2 ? 2.0 : 1.5;
    Instance inst{g, k, ell};
    KernelResult r = kernelize(inst, alpha);
    auto chain = replay_trace(inst, r.trace);
    ASSERT_EQ(chain.back().graph, r.reduced.graph);
    ASSERT_EQ(chain.back().k, r.reduced.k);
    EdgeSet fr;
    if (!r.trace.decided_no && r.reduced.k >= 0) {
      auto s = exact_opt(r.reduced.graph, ell, std::max(r.reduced.k, 0));
      if (s) fr = *s;
      else fr = r.reduced.graph.edges();
    }
    EdgeSet f = lift_solution(inst, r.trace, fr);
    auto opt = exact_opt(g, ell, k);
    EXPECT_TRUE(testing::brute_contracts_into(g, f, ell)) << trial;
    int lifted = std::min(static_cast<int>(f.size()), k + 1);
    int best = opt ? static_cast<int>(opt->size()) : k + 1;
    if (best >= 1) EXPECT_LE(lifted, alpha * best + 1e-9) << trial;
    if (best == 0) EXPECT_EQ(lifted, 0);
  }
}

// With only the exact rules the decision never changes.
TEST(Kernel, ExactRulesPreserveDecision) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = decorated(rng);
    if (g.num_edges() > 18) continue;
    int k = static_cast<int>(rng() % 3);
    int ell = static_cast<int>(rng() % 2);
    KernelResult r = kernelize({g, k, ell}, 2.0, RuleSet::exact());
    EXPECT_EQ(exact_decide(r.reduced), exact_decide({g, k, ell})) << trial;
  }
}

// Some minimum solution avoids every edge of a long degree-2 path.
TEST(Kernel, MinimumSolutionsAvoidLongPaths) {
  for (const Graph& base : testing::connected_graphs_up_to(4)) {
    if (base.num_edges() == 0) continue;
    for (int k = 1; k <= 2; ++k) {
      for (int ell = 0; ell <= 1; ++ell) {
        for (const Edge& e : base.edges()) {
          Graph g = base;
          g.remove_edge(e.u, e.v);
          int q = k + 3;
          Vertex prev = e.u;
          Vertex next = base.max_vertex() + 1;
          EdgeSet path_edges;
          for (int i = 0; i < q; ++i) {
            g.add_vertex(next);
            g.add_edge(prev, next);
            path_edges.emplace_back(prev, next);
            prev = next++;
          }
          g.add_edge(prev, e.v);
          path_edges.emplace_back(prev, e.v);
          auto all = testing::all_min_solutions(g, ell, k);
          if (all.empty()) continue;
          bool avoided = std::any_of(all.begin(), all.end(), [&](const EdgeSet& f) {
            for (const Edge& x : f) {
              if (std::find(path_edges.begin(), path_edges.end(), x) != path_edges.end()) return false;
            }
            return true;
          });
          EXPECT_TRUE(avoided);
        }
      }
    }
  }
}

}  // namespace
}  // namespace tlc
