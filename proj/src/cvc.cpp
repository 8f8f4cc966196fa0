#include "tlc/cvc.hpp"

#include <algorithm>

namespace tlc {

namespace {

struct CvcSearch {
  const std::vector<Mask>& adj;
  Mask all;
  int target;
  std::optional<Mask> best;

  void offer(Mask s) {
    if (!mask_connected(adj, s)) return;
    if (!best || lex_less(s, *best)) best = s;
  }

  // Every superset of `cover` with exactly `target` vertices, drawn from pool.
  void extend(Mask cover, Mask pool, int missing) {
    if (missing == 0) {
      offer(cover);
      return;
    }
    for (Mask p = pool; p != 0; p &= p - 1) {
      if (popcount(p) < missing) return;
      Mask b = p & -p;
      extend(cover | b, (p & ~b), missing - 1);
    }
  }

  // Branch on the lowest vertex with an uncovered edge: take it, or take all
  // of its uncovered neighbours. Every vertex cover contains one of the two.
  void branch(Mask cover) {
    int size = popcount(cover);
    if (size > target) return;
    int pivot = -1;
    Mask open = 0;
    for (Mask rest = all & ~cover; rest != 0; rest &= rest - 1) {
      int v = lowest(rest);
      Mask nb = adj[static_cast<std::size_t>(v)] & ~cover;
      if (nb != 0) {
        pivot = v;
        open = nb;
        break;
      }
    }
    if (pivot < 0) {
      extend(cover, all & ~cover, target - size);
      return;
    }
    branch(cover | bit(pivot));
    branch(cover | open);
  }
};

}  // namespace

std::optional<Mask> min_cvc_mask(const std::vector<Mask>& adj, int budget) {
  int n = static_cast<int>(adj.size());
  Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  if (!mask_connected(adj, all)) throw InputError("connected vertex cover needs a connected graph");
  for (int s = 0; s <= std::min(budget, n); ++s) {
    CvcSearch search{adj, all, s, std::nullopt};
    search.branch(0);
    if (search.best) return search.best;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> min_connected_vertex_cover(const Graph& g, int budget) {
  if (budget < 0) return std::nullopt;
  DenseGraph d = DenseGraph::from(g);
  auto m = min_cvc_mask(d.adj, budget);
  if (!m) return std::nullopt;
  return d.to_vertices(*m);
}

std::vector<Vertex> boundary(const Graph& g, std::span<const Vertex> x) {
  std::vector<Vertex> inside(x.begin(), x.end());
  std::sort(inside.begin(), inside.end());
  std::vector<Vertex> out;
  for (Vertex v : inside) {
    for (Vertex w : g.neighbors(v)) {
      if (!std::binary_search(inside.begin(), inside.end(), w)) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

std::optional<Shatter> min_shatter(const Graph& g, std::span<const Vertex> x, int budget) {
  if (x.empty()) throw InputError("min_shatter needs a nonempty set");
  if (!induces_connected(g, x)) throw InputError("min_shatter needs G[x] connected");
  if (x.size() == 1) {
    if (budget < 1) return std::nullopt;
    return Shatter{{x.front()}, {}};
  }
  // G[x] plus a pendant on every boundary vertex; pendants take ids above
  // everything in g so they sort last and never win a tie.
  Graph aux = g.induced(x);
  Vertex next = g.max_vertex() + 1;
  for (Vertex v : boundary(g, x)) {
    aux.add_vertex(next);
    aux.add_edge(v, next);
    ++next;
  }
  auto cover = min_connected_vertex_cover(aux, budget);
  if (!cover) return std::nullopt;
  Shatter s;
  s.core = *cover;
  for (Vertex v : x) {
    if (!std::binary_search(s.core.begin(), s.core.end(), v)) s.singletons.push_back(v);
  }
  std::sort(s.singletons.begin(), s.singletons.end());
  return s;
}

}  // namespace tlc
