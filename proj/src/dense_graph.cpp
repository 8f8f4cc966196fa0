#include "tlc/dense_graph.hpp"

#include <algorithm>

namespace tlc {

DenseGraph DenseGraph::from(const Graph& g) {
  if (g.num_vertices() > kMaxVertices) {
    throw SizeError("graph has " + std::to_string(g.num_vertices()) +
                    " vertices; the bitmask kernels support at most 64");
  }
  DenseGraph d;
  d.ids = g.vertices();
  d.adj.assign(d.ids.size(), 0);
  for (int i = 0; i < d.size(); ++i) {
    for (Vertex w : g.neighbors(d.ids[static_cast<std::size_t>(i)])) {
      d.adj[static_cast<std::size_t>(i)] |= bit(d.index_of(w));
    }
  }
  return d;
}

int DenseGraph::index_of(Vertex v) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v));
  return static_cast<int>(it - ids.begin());
}

std::vector<Vertex> DenseGraph::to_vertices(Mask m) const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (; m != 0; m &= m - 1) out.push_back(ids[static_cast<std::size_t>(lowest(m))]);
  return out;
}

Mask DenseGraph::to_mask(std::span<const Vertex> vs) const {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(index_of(v));
  return m;
}

bool mask_connected(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return true;
  Mask seen = set & -set;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(lowest(f))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

}  // namespace tlc
