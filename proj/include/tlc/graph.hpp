#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlc {

using Vertex = int;

/// Raised for malformed input: unknown vertices or edges, bad parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds the desk-scale caps of an exhaustive routine.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::vector<Edge>;  // sorted, duplicate free

/// Sorts and deduplicates an edge list in place.
void normalize(EdgeSet& edges);

/// Simple undirected graph over stable vertex ids.
///
/// Ids are arbitrary integers and survive every operation in the library;
/// contraction names a merged vertex after the smallest id in its group.
class Graph {
 public:
  Graph() = default;
  Graph(std::span<const Vertex> vertices, std::span<const Edge> edges);

  /// Vertices 1..n with the given edges.
  static Graph with_vertices(int n, std::span<const Edge> edges = {});

  void add_vertex(Vertex v);
  /// Adds uv; self-loops are rejected, an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_vertex(Vertex v);
  void remove_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const { return adj_.contains(v); }
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const;

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  bool empty() const { return adj_.empty(); }

  std::vector<Vertex> vertices() const;
  EdgeSet edges() const;
  Vertex max_vertex() const;

  Graph induced(std::span<const Vertex> keep) const;
  Graph without(std::span<const Vertex> drop) const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<Vertex, std::vector<Vertex>> adj_;  // sorted neighbor lists
  int num_edges_ = 0;
};

/// Graph together with the edge budget and excess parameter.
struct Instance {
  Graph graph;
  int k = 0;
  int ell = 0;
};

/// Original vertex id -> contracted vertex id.
using MergeMap = std::map<Vertex, Vertex>;

struct Contraction {
  Graph graph;
  MergeMap merge;
};

/// Contracts every edge of `f`; groups are named by their smallest member.
/// Throws InputError if an edge of `f` is not in `g`.
Contraction contract_edges(const Graph& g, std::span<const Edge> f);

/// Composes `inner` (original -> intermediate) with `outer`
/// (intermediate -> final). Ids absent from `outer` map to themselves.
MergeMap compose(const MergeMap& inner, const MergeMap& outer);

bool is_connected(const Graph& g);

/// Connected and |E| <= |V| - 1 + ell. The empty graph is not a member.
bool is_in_t_ell(const Graph& g, int ell);

/// Number of edges beyond a spanning forest: |E| - |V| + #components.
int cyclomatic_number(const Graph& g);

struct ConnectivityInfo {
  std::vector<std::vector<Vertex>> components;  // each sorted, ordered by min
  std::vector<Vertex> cut_vertices;             // sorted
  bool is_two_connected = false;
};

ConnectivityInfo analyze_connectivity(const Graph& g);

/// Whether g[set] is connected (the empty set counts as connected).
bool induces_connected(const Graph& g, std::span<const Vertex> set);

/// BFS spanning forest edges of g[set], rooted at the smallest vertex of
/// each component, neighbors visited in increasing id order.
EdgeSet spanning_forest(const Graph& g, std::span<const Vertex> set);

/// 2*ceil(sqrt(ell)) + 2, the color budget for members of T_ell.
int t_ell_color_bound(int ell);

/// Integer ceil(sqrt(x)) for x >= 0.
int ceil_sqrt(int x);

using Coloring = std::map<Vertex, int>;  // colors are 0-based

/// Proper coloring of a T_ell member with at most t_ell_color_bound(ell)
/// colors. Excess-edge endpoints get an optimal coloring of the subgraph
/// they induce; everything else is 2-colored by tree parity with two fresh
/// colors. Throws InputError if g is not in T_ell.
Coloring proper_color_t_ell(const Graph& g, int ell);

bool is_proper_coloring(const Graph& g, const Coloring& c);

std::string to_string(const Edge& e);

}  // namespace tlc
