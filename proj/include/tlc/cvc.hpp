#pragma once

#include <optional>
#include <vector>

#include "tlc/dense_graph.hpp"
#include "tlc/graph.hpp"

namespace tlc {

/// A component X split into one connected cover (the core) plus singletons.
struct Shatter {
  std::vector<Vertex> core;
  std::vector<Vertex> singletons;
};

/// Minimum connected vertex cover of size <= budget, ties broken by the
/// lexicographically smallest sorted id list. A graph without edges has the
/// empty cover, except that a single vertex graph returns {} as well.
/// Throws InputError on a disconnected graph, SizeError above 64 vertices.
std::optional<std::vector<Vertex>> min_connected_vertex_cover(const Graph& g, int budget);

/// Dense core of the above, over local indices. Exposed for min_shatter and tests.
std::optional<Mask> min_cvc_mask(const std::vector<Mask>& adj, int budget);

/// Vertices of x with at least one neighbor outside x.
std::vector<Vertex> boundary(const Graph& g, std::span<const Vertex> x);

/// Minimum shatter of x whose core has at most `budget` vertices. The core
/// always contains the boundary of x. Throws InputError if G[x] is disconnected.
std::optional<Shatter> min_shatter(const Graph& g, std::span<const Vertex> x, int budget);

}  // namespace tlc
