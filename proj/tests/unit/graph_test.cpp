#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tlc/graph.hpp"

namespace tlc {
namespace {

using testing::complete;
using testing::cycle;
using testing::isomorphic;
using testing::make_graph;
using testing::path;

TEST(Contract, MergesAdjacentCycleVertices) {
  Contraction c = contract_edges(cycle(4), std::vector<Edge>{{1, 2}});
  EXPECT_TRUE(isomorphic(c.graph, cycle(3)));
  EXPECT_EQ(c.merge.at(2), 1);
  EXPECT_EQ(c.merge.at(3), 3);
}

TEST(Contract, TriangleToEdge) {
  Contraction c = contract_edges(complete(3), std::vector<Edge>{{1, 2}});
  EXPECT_EQ(c.graph.num_vertices(), 2);
  EXPECT_EQ(c.graph.num_edges(), 1);
}

TEST(Contract, PathMiddleEdge) {
  Contraction c = contract_edges(path(4), std::vector<Edge>{{2, 3}});
  EXPECT_EQ(c.graph, make_graph(4, {{1, 2}, {2, 4}}).without(std::vector<Vertex>{3}));
}

TEST(Contract, UnknownEdgeIsAnInputError) {
  EXPECT_THROW(contract_edges(path(4), std::vector<Edge>{{1, 3}}), InputError);
}

TEST(Contract, ComposeFollowsBothMaps) {
  Graph g = path(4);
  Contraction first = contract_edges(g, std::vector<Edge>{{3, 4}});
  Contraction second = contract_edges(first.graph, std::vector<Edge>{{1, 2}});
  MergeMap m = compose(first.merge, second.merge);
  EXPECT_EQ(m.at(1), 1);
  EXPECT_EQ(m.at(2), 1);
  EXPECT_EQ(m.at(4), 3);
}

TEST(TEll, Examples) {
  EXPECT_TRUE(is_in_t_ell(path(3), 0));
  EXPECT_FALSE(is_in_t_ell(cycle(4), 0));
  EXPECT_TRUE(is_in_t_ell(cycle(4), 1));
  EXPECT_FALSE(is_in_t_ell(complete(4), 2));
  EXPECT_TRUE(is_in_t_ell(complete(4), 3));
  EXPECT_FALSE(is_in_t_ell(make_graph(4, {{1, 2}, {3, 4}}), 5));
  EXPECT_FALSE(is_in_t_ell(Graph{}, 0));
}

TEST(Connectivity, Examples) {
  ConnectivityInfo c4 = analyze_connectivity(cycle(4));
  EXPECT_EQ(c4.components.size(), 1u);
  EXPECT_TRUE(c4.cut_vertices.empty());
  EXPECT_TRUE(c4.is_two_connected);

  Graph bowtie = make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
  ConnectivityInfo b = analyze_connectivity(bowtie);
  EXPECT_EQ(b.cut_vertices, std::vector<Vertex>{1});
  EXPECT_FALSE(b.is_two_connected);

  ConnectivityInfo two = analyze_connectivity(make_graph(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(two.components.size(), 2u);
  EXPECT_FALSE(two.is_two_connected);
  EXPECT_FALSE(analyze_connectivity(path(2)).is_two_connected);
}

// Removing each vertex and counting components is the definition.
TEST(Connectivity, CutVerticesMatchDefinition) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    std::vector<Vertex> expected;
    for (Vertex v : g.vertices()) {
      Graph h = g.without(std::vector<Vertex>{v});
      if (!h.empty() && analyze_connectivity(h).components.size() > 1) expected.push_back(v);
    }
    EXPECT_EQ(analyze_connectivity(g).cut_vertices, expected);
  }
}

TEST(Coloring, TreeGetsTwoColors) {
  Coloring c = proper_color_t_ell(path(5), 0);
  EXPECT_TRUE(is_proper_coloring(path(5), c));
  std::set<int> used;
  for (auto [v, col] : c) used.insert(col);
  EXPECT_LE(used.size(), 2u);
}

TEST(Coloring, SmallExamples) {
  for (auto [g, ell] : {std::pair{cycle(4), 1}, std::pair{complete(4), 3}}) {
    Coloring c = proper_color_t_ell(g, ell);
    EXPECT_TRUE(is_proper_coloring(g, c));
    for (auto [v, col] : c) EXPECT_LT(col, t_ell_color_bound(ell));
  }
  EXPECT_EQ(t_ell_color_bound(3), 6);
  EXPECT_THROW(proper_color_t_ell(complete(4), 2), InputError);
}

// Contracting f at once equals contracting its edges one by one, in any order.
TEST(Contract, OrderIndependent) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    EdgeSet e = g.edges();
    int m = static_cast<int>(e.size());
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        for (int c = b + 1; c <= m; ++c) {  // c == m means |f| = 2
          std::vector<Edge> f{e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]};
          if (c < m) f.push_back(e[static_cast<std::size_t>(c)]);
          Graph at_once = contract_edges(g, f).graph;
          std::sort(f.begin(), f.end());
          do {
            Graph step = g;
            MergeMap total;
            for (Vertex v : g.vertices()) total[v] = v;
            for (const Edge& x : f) {
              Vertex u = total.at(x.u);
              Vertex v = total.at(x.v);
              if (u == v) continue;
              Contraction one = contract_edges(step, std::vector<Edge>{{std::min(u, v), std::max(u, v)}});
              total = compose(total, one.merge);
              step = one.graph;
            }
            ASSERT_EQ(step, at_once);
          } while (std::next_permutation(f.begin(), f.end()));
        }
      }
    }
  }
}

// Subdividing or contracting any edge of a T_ell member keeps it in T_ell.
TEST(TEll, ClosedUnderSubdivisionAndContraction) {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    int ell = std::max(0, cyclomatic_number(g));
    for (const Edge& e : g.edges()) {
      Graph sub = g;
      Vertex mid = g.max_vertex() + 1;
      sub.remove_edge(e.u, e.v);
      sub.add_vertex(mid);
      sub.add_edge(e.u, mid);
      sub.add_edge(mid, e.v);
      EXPECT_TRUE(is_in_t_ell(sub, ell));
      EXPECT_TRUE(is_in_t_ell(contract_edges(g, std::vector<Edge>{e}).graph, ell));
    }
  }
}

// Splitting v into two adjacent vertices that partition N(v) stays in T_ell.
TEST(TEll, ClosedUnderVertexSplit) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    int ell = cyclomatic_number(g);
    for (Vertex v : g.vertices()) {
      const std::vector<Vertex> nb = g.neighbors(v);
      Vertex twin = g.max_vertex() + 1;
      for (std::uint32_t mask = 0; mask < (1u << nb.size()); ++mask) {
        Graph h = g;
        h.add_vertex(twin);
        h.add_edge(v, twin);
        for (std::size_t i = 0; i < nb.size(); ++i) {
          if (mask & (1u << i)) {
            h.remove_edge(v, nb[i]);
            h.add_edge(twin, nb[i]);
          }
        }
        EXPECT_TRUE(is_in_t_ell(h, ell));
      }
    }
  }
}

TEST(Coloring, RandomMembersAreProperWithinBudget) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 14);
    Graph g = testing::random_connected(n, 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    int ell = cyclomatic_number(g) + static_cast<int>(rng() % 2);
    Coloring c = proper_color_t_ell(g, ell);
    ASSERT_TRUE(is_proper_coloring(g, c));
    std::set<int> used;
    for (auto [v, col] : c) used.insert(col);
    EXPECT_LE(static_cast<int>(used.size()), t_ell_color_bound(ell));
    for (int col : used) EXPECT_LT(col, t_ell_color_bound(ell));
  }
}

}  // namespace
}  // namespace tlc
