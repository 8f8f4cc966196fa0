// Brute-force helpers shared by the unit tests and the acceptance binary.
// Everything here is deliberately independent of the library algorithms it
// is used to check.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tlc/graph.hpp"

namespace tlc::testing {

/// Upper-triangle adjacency bits under the best relabelling; equal codes
/// mean isomorphic graphs. Works up to 11 vertices.
std::uint64_t canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// All connected graphs on vertices 1..n, one per isomorphism class
/// (n <= 8). 1, 1, 2, 6, 21, 112, 853, 11117 graphs for n = 1..8.
const std::vector<Graph>& connected_graphs(int n);

/// Streams one graph per isomorphism class on n <= 9 vertices without
/// keeping them (261080 classes at n = 9). Returns the class count.
std::size_t for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

/// All connected graphs with 1..max_n vertices.
std::vector<Graph> connected_graphs_up_to(int max_n);

/// Random connected graph on 1..n (resampled), with edge probability p.
Graph random_connected(int n, double p, std::mt19937_64& rng);

/// Minimum connected vertex cover by plain subset enumeration; ties go to
/// the lexicographically smallest sorted id list.
std::vector<Vertex> brute_min_cvc(const Graph& g);

/// Direct |E| <= |V| - 1 + ell check after contracting f with a fresh
/// union-find, no library contraction code involved.
bool brute_contracts_into(const Graph& g, const EdgeSet& f, int ell);

/// Minimum |F| with G/F in T_ell, by subset enumeration (small graphs).
std::optional<int> brute_opt(const Graph& g, int ell, int k_max);

/// All minimum-size solutions (for tie-break and lemma checks).
std::vector<EdgeSet> all_min_solutions(const Graph& g, int ell, int k_max);

/// Graph on 1..n from an edge list.
Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);
Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph star(int leaves);                  // center 1
Graph complete_bipartite(int a, int b);  // side A = 1..a

}  // namespace tlc::testing
