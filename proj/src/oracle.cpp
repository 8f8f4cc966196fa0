#include "tlc/oracle.hpp"

#include <algorithm>
#include <array>

#include "tlc/dense_graph.hpp"

namespace tlc {

namespace {

struct EdgeIndex {
  int n = 0;
  std::vector<std::pair<int, int>> ends;  // local endpoint indices, lex order
};

EdgeIndex index_edges(const Graph& g) {
  DenseGraph d = DenseGraph::from(g);
  EdgeIndex idx;
  idx.n = d.size();
  for (const Edge& e : g.edges()) idx.ends.emplace_back(d.index_of(e.u), d.index_of(e.v));
  return idx;
}

// Whether contracting the chosen edges of a connected graph lands in T_ell.
bool contracts_into(const EdgeIndex& idx, const int* chosen, int count, int ell) {
  std::array<int, 64> parent{};
  for (int i = 0; i < idx.n; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int merges = 0;
  for (int i = 0; i < count; ++i) {
    auto [a, b] = idx.ends[static_cast<std::size_t>(chosen[i])];
    int ra = find(a);
    int rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      ++merges;
    }
  }
  std::array<Mask, 64> adj{};
  int quotient_edges_twice = 0;
  for (auto [a, b] : idx.ends) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) continue;
    Mask m = bit(rb);
    if ((adj[static_cast<std::size_t>(ra)] & m) == 0) {
      adj[static_cast<std::size_t>(ra)] |= m;
      adj[static_cast<std::size_t>(rb)] |= bit(ra);
      quotient_edges_twice += 2;
    }
  }
  int quotient_vertices = idx.n - merges;
  return quotient_edges_twice / 2 <= quotient_vertices - 1 + ell;
}

// First (lex) subset of the given size whose smallest edge index is `first`.
std::optional<std::vector<int>> first_hit_from(const EdgeIndex& idx, int size, int first, int ell) {
  int m = static_cast<int>(idx.ends.size());
  std::vector<int> c(static_cast<std::size_t>(size));
  c[0] = first;
  for (int i = 1; i < size; ++i) c[static_cast<std::size_t>(i)] = first + i;
  if (size > 0 && c.back() >= m) return std::nullopt;
  for (;;) {
    if (contracts_into(idx, c.data(), size, ell)) return c;
    // Advance positions 1..size-1; position 0 stays pinned to `first`.
    int pos = size - 1;
    while (pos >= 1 && c[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
    if (pos < 1) return std::nullopt;
    ++c[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::optional<std::vector<int>> first_hit_serial(const EdgeIndex& idx, int size, int ell) {
  int m = static_cast<int>(idx.ends.size());
  for (int first = 0; first + size <= m; ++first) {
    if (auto hit = first_hit_from(idx, size, first, ell)) return hit;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> first_hit_parallel(const EdgeIndex& idx, int size, int ell) {
  int m = static_cast<int>(idx.ends.size());
  int slots = m - size + 1;
  std::vector<std::optional<std::vector<int>>> hits(static_cast<std::size_t>(std::max(slots, 0)));
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < slots; ++first) {
    hits[static_cast<std::size_t>(first)] = first_hit_from(idx, size, first, ell);
  }
  for (auto& hit : hits) {
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeSet> exact_opt(const Graph& g, int ell, int k_max, Execution exec) {
  if (k_max < 0) throw InputError("exact_opt needs k_max >= 0");
  if (!is_connected(g)) return std::nullopt;
  int budget = std::min(k_max, g.num_vertices() - 1);
  if (g.num_edges() > OracleLimits::kMaxEdges || budget > OracleLimits::kMaxBudget) {
    throw SizeError("oracle refuses |E| = " + std::to_string(g.num_edges()) +
                    ", budget = " + std::to_string(budget) + " (caps 24 / 6)");
  }
  if (is_in_t_ell(g, ell)) return EdgeSet{};
  EdgeIndex idx = index_edges(g);
  EdgeSet sorted = g.edges();
  for (int size = 1; size <= budget; ++size) {
    auto hit = exec == Execution::parallel ? first_hit_parallel(idx, size, ell)
                                           : first_hit_serial(idx, size, ell);
    if (hit) {
      EdgeSet out;
      for (int i : *hit) out.push_back(sorted[static_cast<std::size_t>(i)]);
      return out;
    }
  }
  return std::nullopt;
}

bool exact_decide(const Instance& instance, Execution exec) {
  if (instance.k < 0) return false;
  return exact_opt(instance.graph, instance.ell, instance.k, exec).has_value();
}

std::optional<int> exact_tree_contraction_opt(const Graph& g, int k_max) {
  auto f = exact_opt(g, 0, k_max);
  if (!f) return std::nullopt;
  return static_cast<int>(f->size());
}

}  // namespace tlc
