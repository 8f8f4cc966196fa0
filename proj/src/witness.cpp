#include "tlc/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tlc {

void WitnessStructure::canonicalize() {
  for (auto& bag : bags) std::sort(bag.begin(), bag.end());
  std::sort(bags.begin(), bags.end());
}

int WitnessStructure::cost() const {
  int total = 0;
  for (const auto& bag : bags) total += static_cast<int>(bag.size()) - 1;
  return total;
}

std::string_view to_string(WitnessReason r) {
  switch (r) {
    case WitnessReason::ok:
      return "ok";
    case WitnessReason::not_partition:
      return "not-partition";
    case WitnessReason::disconnected_bag:
      return "disconnected-bag";
    case WitnessReason::quotient_outside_class:
      return "quotient-outside-class";
    case WitnessReason::over_budget:
      return "over-budget";
  }
  return "unknown";
}

WitnessStructure witness_from_solution(const Graph& g, std::span<const Edge> f) {
  Contraction c = contract_edges(g, f);
  std::map<Vertex, std::vector<Vertex>> groups;
  for (const auto& [orig, merged] : c.merge) groups[merged].push_back(orig);
  WitnessStructure w;
  for (auto& [_, bag] : groups) w.bags.push_back(std::move(bag));
  w.canonicalize();
  return w;
}

namespace {

// Bag index per vertex, or nullopt if w is not a partition of V(g).
std::optional<std::map<Vertex, int>> bag_index(const Graph& g, const WitnessStructure& w) {
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < w.bags.size(); ++i) {
    if (w.bags[i].empty()) return std::nullopt;
    for (Vertex v : w.bags[i]) {
      if (!g.has_vertex(v) || !index.emplace(v, static_cast<int>(i)).second) return std::nullopt;
    }
  }
  if (static_cast<int>(index.size()) != g.num_vertices()) return std::nullopt;
  return index;
}

Graph build_quotient(const Graph& g, const WitnessStructure& w, const std::map<Vertex, int>& index) {
  std::vector<Vertex> names;
  names.reserve(w.bags.size());
  for (const auto& bag : w.bags) names.push_back(*std::min_element(bag.begin(), bag.end()));
  Graph q;
  for (Vertex name : names) q.add_vertex(name);
  for (const Edge& e : g.edges()) {
    int a = index.at(e.u);
    int b = index.at(e.v);
    if (a != b) q.add_edge(names[static_cast<std::size_t>(a)], names[static_cast<std::size_t>(b)]);
  }
  return q;
}

}  // namespace

Graph quotient(const Graph& g, const WitnessStructure& w) {
  auto index = bag_index(g, w);
  if (!index) throw InputError("witness structure is not a partition of the vertex set");
  for (const auto& bag : w.bags) {
    if (!induces_connected(g, bag)) throw InputError("witness structure has a disconnected bag");
  }
  return build_quotient(g, w, *index);
}

WitnessCheck verify_witness(const Graph& g, const WitnessStructure& w, int ell, int k) {
  WitnessCheck check;
  auto index = bag_index(g, w);
  if (!index) {
    check.reason = WitnessReason::not_partition;
    return check;
  }
  check.cost = w.cost();
  for (const auto& bag : w.bags) {
    if (!induces_connected(g, bag)) {
      check.reason = WitnessReason::disconnected_bag;
      return check;
    }
  }
  if (!is_in_t_ell(build_quotient(g, w, *index), ell)) {
    check.reason = WitnessReason::quotient_outside_class;
    return check;
  }
  if (check.cost > k) {
    check.reason = WitnessReason::over_budget;
    return check;
  }
  check.valid = true;
  return check;
}

EdgeSet solution_edges(const Graph& g, const WitnessStructure& w) {
  EdgeSet out;
  for (const auto& bag : w.bags) {
    EdgeSet tree = spanning_forest(g, bag);
    out.insert(out.end(), tree.begin(), tree.end());
  }
  normalize(out);
  return out;
}

WitnessStructure normalize_leaves(const Graph& g, const WitnessStructure& input) {
  WitnessStructure w = input;
  w.canonicalize();
  Graph q = quotient(g, w);
  if (q.num_vertices() < 3) {
    throw InputError("leaf normalization needs a quotient with at least 3 vertices");
  }
  for (;;) {
    std::map<Vertex, int> index;
    for (std::size_t i = 0; i < w.bags.size(); ++i) {
      for (Vertex v : w.bags[i]) index[v] = static_cast<int>(i);
    }
    // Bags are sorted by smallest member, so the first hit is the lowest-id leaf.
    int leaf = -1;
    for (std::size_t i = 0; i < w.bags.size(); ++i) {
      if (w.bags[i].size() >= 2 && q.degree(w.bags[i].front()) == 1) {
        leaf = static_cast<int>(i);
        break;
      }
    }
    if (leaf < 0) return w;

    const auto& bag = w.bags[static_cast<std::size_t>(leaf)];
    Vertex neighbor_name = q.neighbors(bag.front()).front();
    int neighbor = index.at(neighbor_name);

    Vertex anchor = -1;  // u*: touches the neighbouring bag
    for (Vertex v : bag) {
      for (Vertex x : g.neighbors(v)) {
        if (index.at(x) == neighbor) {
          anchor = v;
          break;
        }
      }
      if (anchor >= 0) break;
    }
    EdgeSet tree = spanning_forest(g, bag);
    std::map<Vertex, int> tree_degree;
    for (const Edge& e : tree) {
      ++tree_degree[e.u];
      ++tree_degree[e.v];
    }
    Vertex kept = -1;  // v*: a spanning-tree leaf other than u*
    for (Vertex v : bag) {
      if (v != anchor && tree_degree[v] == 1) {
        kept = v;
        break;
      }
    }

    std::vector<Vertex> moved;
    for (Vertex v : bag) {
      if (v != kept) moved.push_back(v);
    }
    auto& target = w.bags[static_cast<std::size_t>(neighbor)];
    target.insert(target.end(), moved.begin(), moved.end());
    w.bags[static_cast<std::size_t>(leaf)] = {kept};
    w.canonicalize();
    q = quotient(g, w);
  }
}

}  // namespace tlc
