#include "tlc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tlc {

void normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(std::span<const Vertex> vertices, std::span<const Edge> edges) {
  for (Vertex v : vertices) add_vertex(v);
  for (const Edge& e : edges) {
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError("edge " + to_string(e) + " has an endpoint outside the vertex set");
    }
    add_edge(e.u, e.v);
  }
}

Graph Graph::with_vertices(int n, std::span<const Edge> edges) {
  std::vector<Vertex> vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), 1);
  return Graph(vs, edges);
}

void Graph::add_vertex(Vertex v) { adj_.try_emplace(v); }

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  auto iu = adj_.find(u);
  auto iv = adj_.find(v);
  if (iu == adj_.end() || iv == adj_.end()) return;
  auto& nu = iu->second;
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return;
  nu.erase(it);
  auto& nv = iv->second;
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --num_edges_;
}

void Graph::remove_vertex(Vertex v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (Vertex w : it->second) {
    auto& nw = adj_.at(w);
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  num_edges_ -= static_cast<int>(it->second.size());
  adj_.erase(it);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(adj_.size());
  for (const auto& [v, _] : adj_) out.push_back(v);
  return out;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (const auto& [u, nbrs] : adj_) {
    for (Vertex w : nbrs) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Vertex Graph::max_vertex() const {
  if (adj_.empty()) return 0;
  return adj_.rbegin()->first;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::set<Vertex> inside(keep.begin(), keep.end());
  Graph out;
  for (Vertex v : inside) {
    if (!has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    out.add_vertex(v);
  }
  for (Vertex v : inside) {
    for (Vertex w : neighbors(v)) {
      if (v < w && inside.contains(w)) out.add_edge(v, w);
    }
  }
  return out;
}

Graph Graph::without(std::span<const Vertex> drop) const {
  Graph out = *this;
  for (Vertex v : drop) out.remove_vertex(v);
  return out;
}

namespace {

struct DisjointSets {
  std::map<Vertex, Vertex> parent;

  Vertex find(Vertex x) {
    Vertex root = x;
    while (parent.at(root) != root) root = parent.at(root);
    while (parent.at(x) != root) {
      Vertex next = parent.at(x);
      parent[x] = root;
      x = next;
    }
    return root;
  }

  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // the smaller id stays the representative
  }
};

}  // namespace

Contraction contract_edges(const Graph& g, std::span<const Edge> f) {
  DisjointSets sets;
  for (Vertex v : g.vertices()) sets.parent.emplace(v, v);
  for (const Edge& e : f) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("cannot contract " + to_string(e) + ": not an edge of the graph");
    }
    sets.unite(e.u, e.v);
  }
  Contraction out;
  for (Vertex v : g.vertices()) {
    Vertex r = sets.find(v);
    out.merge.emplace(v, r);
    out.graph.add_vertex(r);
  }
  for (const Edge& e : g.edges()) {
    Vertex a = out.merge.at(e.u);
    Vertex b = out.merge.at(e.v);
    if (a != b) out.graph.add_edge(a, b);
  }
  return out;
}

MergeMap compose(const MergeMap& inner, const MergeMap& outer) {
  MergeMap out;
  for (const auto& [orig, mid] : inner) {
    auto it = outer.find(mid);
    out.emplace(orig, it == outer.end() ? mid : it->second);
  }
  return out;
}

namespace {

std::vector<std::vector<Vertex>> components_of(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::set<Vertex> seen;
  for (Vertex s : g.vertices()) {
    if (seen.contains(s)) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen.insert(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  return components_of(g).size() == 1;
}

bool is_in_t_ell(const Graph& g, int ell) {
  if (!is_connected(g)) return false;
  return g.num_edges() <= g.num_vertices() - 1 + ell;
}

int cyclomatic_number(const Graph& g) {
  return g.num_edges() - g.num_vertices() + static_cast<int>(components_of(g).size());
}

ConnectivityInfo analyze_connectivity(const Graph& g) {
  ConnectivityInfo info;
  info.components = components_of(g);

  // Iterative Tarjan articulation points.
  std::map<Vertex, int> disc, low;
  std::set<Vertex> cuts;
  int timer = 0;
  for (const auto& comp : info.components) {
    Vertex root = comp.front();
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
    };
    std::vector<Frame> stack{{root, root, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& nbrs = g.neighbors(top.v);
      if (top.next < nbrs.size()) {
        Vertex w = nbrs[top.next++];
        if (!disc.contains(w)) {
          disc[w] = low[w] = timer++;
          if (top.v == root) ++root_children;
          stack.push_back({w, top.v, 0});
        } else if (w != top.parent) {
          low[top.v] = std::min(low[top.v], disc[w]);
        }
      } else {
        Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (p != root && low[done.v] >= disc[p]) cuts.insert(p);
        }
      }
    }
    if (root_children > 1) cuts.insert(root);
  }
  info.cut_vertices.assign(cuts.begin(), cuts.end());
  info.is_two_connected =
      info.components.size() == 1 && g.num_vertices() >= 3 && info.cut_vertices.empty();
  return info;
}

bool induces_connected(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return true;
  std::set<Vertex> inside(set.begin(), set.end());
  std::set<Vertex> seen{*inside.begin()};
  std::vector<Vertex> stack{*inside.begin()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (inside.contains(w) && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == inside.size();
}

EdgeSet spanning_forest(const Graph& g, std::span<const Vertex> set) {
  std::set<Vertex> inside(set.begin(), set.end());
  std::set<Vertex> seen;
  EdgeSet out;
  for (Vertex s : inside) {
    if (!seen.insert(s).second) continue;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (inside.contains(w) && seen.insert(w).second) {
          out.emplace_back(v, w);
          queue.push_back(w);
        }
      }
    }
  }
  normalize(out);
  return out;
}

int ceil_sqrt(int x) {
  if (x <= 0) return 0;
  int r = 0;
  while (r * r < x) ++r;
  return r;
}

int t_ell_color_bound(int ell) { return 2 * ceil_sqrt(ell) + 2; }

namespace {

// Backtracking search for a proper coloring of `g` with `colors` colors.
bool color_with(const Graph& g, const std::vector<Vertex>& order, std::size_t at, int colors,
                Coloring& out) {
  if (at == order.size()) return true;
  Vertex v = order[at];
  for (int c = 0; c < colors; ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v)) {
      auto it = out.find(w);
      if (it != out.end() && it->second == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    out[v] = c;
    if (color_with(g, order, at + 1, colors, out)) return true;
    out.erase(v);
  }
  return false;
}

Coloring optimal_coloring(const Graph& g) {
  std::vector<Vertex> order = g.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (int colors = 1;; ++colors) {
    Coloring c;
    if (color_with(g, order, 0, colors, c)) return c;
  }
}

}  // namespace

Coloring proper_color_t_ell(const Graph& g, int ell) {
  if (!is_in_t_ell(g, ell)) throw InputError("graph is not in T_ell for the requested ell");
  std::vector<Vertex> all = g.vertices();
  EdgeSet tree = spanning_forest(g, all);
  EdgeSet all_edges = g.edges();
  EdgeSet excess;
  std::set_difference(all_edges.begin(), all_edges.end(), tree.begin(), tree.end(),
                      std::back_inserter(excess));
  std::set<Vertex> endpoints;
  for (const Edge& e : excess) {
    endpoints.insert(e.u);
    endpoints.insert(e.v);
  }
  std::vector<Vertex> marked(endpoints.begin(), endpoints.end());
  Coloring coloring = optimal_coloring(g.induced(marked));
  int base = 0;
  for (const auto& [_, c] : coloring) base = std::max(base, c + 1);

  // Tree parity from the BFS root decides the two fresh colors.
  std::map<Vertex, int> depth{{all.front(), 0}};
  std::deque<Vertex> queue{all.front()};
  std::set<Edge> tree_edges(tree.begin(), tree.end());
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!depth.contains(w) && tree_edges.contains(Edge(v, w))) {
        depth[w] = depth[v] + 1;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v : all) {
    if (!endpoints.contains(v)) coloring[v] = base + depth.at(v) % 2;
  }
  return coloring;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  for (const Edge& e : g.edges()) {
    auto a = c.find(e.u);
    auto b = c.find(e.v);
    if (a == c.end() || b == c.end() || a->second == b->second) return false;
  }
  return true;
}

}  // namespace tlc
