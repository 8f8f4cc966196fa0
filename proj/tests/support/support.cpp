#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tlc::testing {

namespace {

// Color refinement with canonical color names: start from degrees, then
// repeatedly name each vertex by (color, sorted neighbour colors).
std::vector<int> refined_colors(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.first = color[static_cast<std::size_t>(v)];
      for (int w : adj[static_cast<std::size_t>(v)]) s.second.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(s.second.begin(), s.second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      next[static_cast<std::size_t>(v)] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) - sorted.begin());
    }
    std::set<int> distinct_before(color.begin(), color.end());
    std::set<int> distinct_after(next.begin(), next.end());
    color = next;
    if (distinct_after.size() == distinct_before.size()) return color;
  }
}

std::uint64_t code_of(int n, const std::vector<std::vector<char>>& m, const std::vector<int>& order) {
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      code = (code << 1) | static_cast<std::uint64_t>(m[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])][static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
    }
  }
  return code;
}

}  // namespace

namespace {

// Canonical code of the graph on 0..n-1 given by symmetric adjacency rows.
std::uint64_t canonical_code_rows(int n, const std::vector<std::uint32_t>& rows) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::vector<char>> m(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (rows[static_cast<std::size_t>(a)] & (1u << b)) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      }
    }
  }
  std::vector<int> color = refined_colors(n, adj);
  // Vertices grouped by color; permute freely inside each group.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(color[static_cast<std::size_t>(a)], a) < std::pair(color[static_cast<std::size_t>(b)], b);
  });
  std::vector<std::pair<int, int>> groups;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] == color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  // Odometer over per-group permutations.
  for (;;) {
    best = std::max(best, code_of(n, m, order));
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [b, e] = groups[gi];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
      // wrapped back to sorted order; carry into the next group
    }
    if (gi == groups.size()) break;
  }
  return best | (static_cast<std::uint64_t>(n) << 58);
}

std::vector<std::uint32_t> rows_of(const Graph& g) {
  std::vector<Vertex> ids = g.vertices();
  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
  std::vector<std::uint32_t> rows(ids.size(), 0);
  for (const Edge& e : g.edges()) {
    int a = idx[e.u];
    int b = idx[e.v];
    rows[static_cast<std::size_t>(a)] |= 1u << b;
    rows[static_cast<std::size_t>(b)] |= 1u << a;
  }
  return rows;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  int n = g.num_vertices();
  if (n > 11) throw std::invalid_argument("canonical_code supports at most 11 vertices");
  return canonical_code_rows(n, rows_of(g));
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() && canonical_code(a) == canonical_code(b);
}

const std::vector<Graph>& connected_graphs(int n) {
  static std::mutex lock;
  static std::map<int, std::vector<Graph>> cache;
  if (n < 1 || n > 8) throw std::invalid_argument("connected_graphs supports 1..8 vertices");
  std::lock_guard<std::mutex> guard(lock);
  if (cache.empty()) cache[1].push_back(Graph::with_vertices(1));
  // Every connected graph has a vertex whose removal keeps it connected, so
  // adding vertex m with every nonempty neighbourhood to each class on m - 1
  // vertices reaches all classes on m.
  for (int m = 2; m <= n; ++m) {
    if (cache.contains(m)) continue;
    std::vector<Graph> out;
    std::set<std::uint64_t> seen;
    for (const Graph& base : cache.at(m - 1)) {
      for (std::uint32_t mask = 1; mask < (1u << (m - 1)); ++mask) {
        Graph g = base;
        g.add_vertex(m);
        for (int v = 1; v < m; ++v) {
          if (mask & (1u << (v - 1))) g.add_edge(v, m);
        }
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
      }
    }
    cache.emplace(m, std::move(out));
  }
  return cache.at(n);
}

std::size_t for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
  if (n <= 8) {
    for (const Graph& g : connected_graphs(n)) fn(g);
    return connected_graphs(n).size();
  }
  if (n != 9) throw std::invalid_argument("for_each_connected_graph supports 1..9 vertices");
  // Same augmentation as connected_graphs, on bit rows, keeping only codes.
  std::set<std::uint64_t> seen;
  for (const Graph& base : connected_graphs(8)) {
    std::vector<std::uint32_t> rows = rows_of(base);
    rows.push_back(0);
    for (std::uint32_t mask = 1; mask < (1u << 8); ++mask) {
      std::vector<std::uint32_t> r = rows;
      r[8] = mask;
      for (int v = 0; v < 8; ++v) {
        if (mask & (1u << v)) r[static_cast<std::size_t>(v)] |= 1u << 8;
      }
      if (!seen.insert(canonical_code_rows(9, r)).second) continue;
      Graph g = Graph::with_vertices(9);
      for (int a = 0; a < 9; ++a) {
        for (int b = a + 1; b < 9; ++b) {
          if (r[static_cast<std::size_t>(a)] & (1u << b)) g.add_edge(a + 1, b + 1);
        }
      }
      fn(g);
    }
  }
  return seen.size();
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Graph random_connected(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  for (;;) {
    Graph g = Graph::with_vertices(n);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return g;
  }
}

std::vector<Vertex> brute_min_cvc(const Graph& g) {
  std::vector<Vertex> ids = g.vertices();
  int n = static_cast<int>(ids.size());
  if (n > 20) throw std::invalid_argument("brute_min_cvc supports at most 20 vertices");
  EdgeSet edges = g.edges();
  std::optional<std::vector<Vertex>> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> set;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) set.push_back(ids[static_cast<std::size_t>(i)]);
    }
    if (best && set.size() > best->size()) continue;
    bool covers = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return std::binary_search(set.begin(), set.end(), e.u) || std::binary_search(set.begin(), set.end(), e.v);
    });
    if (!covers) continue;
    // connectivity of g[set] by flood fill
    bool connected = true;
    if (!set.empty()) {
      std::set<Vertex> reached{set.front()};
      std::vector<Vertex> stack{set.front()};
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v)) {
          if (std::binary_search(set.begin(), set.end(), w) && reached.insert(w).second) stack.push_back(w);
        }
      }
      connected = reached.size() == set.size();
    }
    if (!connected) continue;
    if (!best || set.size() < best->size() || (set.size() == best->size() && set < *best)) best = set;
  }
  return *best;
}

bool brute_contracts_into(const Graph& g, const EdgeSet& f, int ell) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : g.vertices()) parent[v] = v;
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const Edge& e : f) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a != b) parent[a] = b;
  }
  std::set<std::pair<Vertex, Vertex>> qe;
  std::set<Vertex> qv;
  for (Vertex v : g.vertices()) qv.insert(find(v));
  for (const Edge& e : g.edges()) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a != b) qe.insert({std::min(a, b), std::max(a, b)});
  }
  // connectivity of the quotient
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto [a, b] : qe) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::set<Vertex> reached{*qv.begin()};
  std::vector<Vertex> stack{*qv.begin()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (reached.insert(w).second) stack.push_back(w);
    }
  }
  if (reached.size() != qv.size()) return false;
  return static_cast<long>(qe.size()) <= static_cast<long>(qv.size()) - 1 + ell;
}

namespace {

template <class Visit>
void for_each_subset(const EdgeSet& edges, int size, Visit visit) {
  int m = static_cast<int>(edges.size());
  std::vector<int> c(static_cast<std::size_t>(size));
  std::iota(c.begin(), c.end(), 0);
  if (size > m) return;
  for (;;) {
    EdgeSet f;
    for (int i : c) f.push_back(edges[static_cast<std::size_t>(i)]);
    if (!visit(f)) return;
    int pos = size - 1;
    while (pos >= 0 && c[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
    if (pos < 0) return;
    ++c[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::optional<int> brute_opt(const Graph& g, int ell, int k_max) {
  if (!is_connected(g)) return std::nullopt;
  EdgeSet edges = g.edges();
  for (int s = 0; s <= k_max; ++s) {
    bool found = false;
    for_each_subset(edges, s, [&](const EdgeSet& f) {
      found = brute_contracts_into(g, f, ell);
      return !found;
    });
    if (found) return s;
  }
  return std::nullopt;
}

std::vector<EdgeSet> all_min_solutions(const Graph& g, int ell, int k_max) {
  std::vector<EdgeSet> out;
  auto opt = brute_opt(g, ell, k_max);
  if (!opt) return out;
  for_each_subset(g.edges(), *opt, [&](const EdgeSet& f) {
    if (brute_contracts_into(g, f, ell)) out.push_back(f);
    return true;
  });
  return out;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g = Graph::with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g = Graph::with_vertices(n);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
  return g;
}

Graph path(int n) {
  Graph g = Graph::with_vertices(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g = Graph::with_vertices(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star(int leaves) {
  Graph g = Graph::with_vertices(leaves + 1);
  for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g = Graph::with_vertices(a + b);
  for (int u = 1; u <= a; ++u) {
    for (int v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace tlc::testing
