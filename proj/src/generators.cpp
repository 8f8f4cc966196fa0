#include "tlc/generators.hpp"

#include <random>

namespace tlc {

Instance gen_hardness_gadget(const Graph& g, int k, int ell) {
  if (g.empty() || !is_connected(g)) throw InputError("gadget needs a connected base graph");
  if (ell < 1) throw InputError("gadget needs ell >= 1");
  if (k < 1) throw InputError("gadget needs k >= 1");
  Instance out{g, k, ell};
  const Vertex hub = g.vertices().front();
  Vertex next = g.max_vertex() + 1;
  for (int c = 0; c < ell; ++c) {
    Vertex prev = hub;
    for (int i = 0; i <= k; ++i) {
      out.graph.add_vertex(next);
      out.graph.add_edge(prev, next);
      prev = next++;
    }
    out.graph.add_edge(prev, hub);
  }
  return out;
}

Instance gen_random_instance(int n, double edge_prob, int k, int ell, std::uint64_t seed) {
  if (n < 1) throw InputError("random instance needs n >= 1");
  if (n > 200) throw SizeError("random instance capped at 200 vertices");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw InputError("edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Graph g = Graph::with_vertices(n);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return Instance{std::move(g), k, ell};
  }
  throw InputError("no connected sample after " + std::to_string(kAttempts) + " attempts; raise edge_prob");
}

}  // namespace tlc
