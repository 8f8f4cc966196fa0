#include "tlc/fpt_solver.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <random>
#include <stdexcept>

#include "tlc/cvc.hpp"

namespace tlc {

std::string_view to_string(ComponentTag tag) {
  switch (tag) {
    case ComponentTag::contract_all:
      return "contract-all";
    case ComponentTag::all_singletons:
      return "all-singletons";
    case ComponentTag::shatter:
      return "shatter";
  }
  return "unknown";
}

std::vector<std::vector<Vertex>> monochromatic_components(const Graph& g, const Coloring& c) {
  std::map<Vertex, bool> seen;
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    int color = c.at(s);
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w] && c.at(w) == color) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // seeds are visited in id order, so already sorted by minimum
}

namespace {

using ComponentOf = std::map<Vertex, int>;

ComponentOf index_components(const std::vector<std::vector<Vertex>>& comps) {
  ComponentOf of;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) of[v] = static_cast<int>(i);
  }
  return of;
}

ComponentCase classify(const Graph& g, const ComponentOf& comp_of, std::span<const Vertex> x) {
  ComponentCase out;
  out.component.assign(x.begin(), x.end());
  std::sort(out.component.begin(), out.component.end());
  if (out.component.size() == 1) return out;

  int self = comp_of.at(out.component.front());
  auto inside = [&](Vertex w) { return comp_of.at(w) == self; };
  std::vector<Vertex> ends;
  int internal_edges_twice = 0;
  bool path_shaped = true;
  for (Vertex v : out.component) {
    int d = 0;
    for (Vertex w : g.neighbors(v)) d += inside(w) ? 1 : 0;
    internal_edges_twice += d;
    if (d == 1) ends.push_back(v);
    if (d > 2 || (d == 2 && g.degree(v) != 2)) path_shaped = false;
  }
  path_shaped = path_shaped && internal_edges_twice / 2 == static_cast<int>(out.component.size()) - 1 && ends.size() == 2;
  if (!path_shaped) {
    out.tag = ComponentTag::shatter;
    out.boundary = boundary(g, out.component);
    return out;
  }
  auto outside_components = [&](Vertex v) {
    std::vector<int> ids;
    for (Vertex w : g.neighbors(v)) {
      if (!inside(w)) ids.push_back(comp_of.at(w));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  auto a = outside_components(ends[0]);
  auto b = outside_components(ends[1]);
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  out.tag = common.empty() ? ComponentTag::all_singletons : ComponentTag::contract_all;
  return out;
}

}  // namespace

ComponentCase classify_component(const Graph& g, const Coloring& c, std::span<const Vertex> x) {
  if (x.empty()) throw InputError("classify_component needs a nonempty set");
  return classify(g, index_components(monochromatic_components(g, c)), x);
}

std::optional<Refinement> refine_coloring(const Graph& g, const Coloring& c, int k, int ell) {
  auto comps = monochromatic_components(g, c);
  ComponentOf comp_of = index_components(comps);
  WitnessStructure w;
  int spent = 0;
  std::vector<const std::vector<Vertex>*> deferred;
  for (const auto& comp : comps) {
    ComponentCase cc = classify(g, comp_of, comp);
    switch (cc.tag) {
      case ComponentTag::contract_all:
        w.bags.push_back(comp);
        spent += static_cast<int>(comp.size()) - 1;
        break;
      case ComponentTag::all_singletons:
        for (Vertex v : comp) w.bags.push_back({v});
        break;
      case ComponentTag::shatter:
        deferred.push_back(&comp);
        break;
    }
  }
  if (spent > k) return std::nullopt;
  for (const auto* comp : deferred) {
    auto s = min_shatter(g, *comp, k - spent + 1);
    if (!s) return std::nullopt;
    spent += static_cast<int>(s->core.size()) - 1;
    w.bags.push_back(s->core);
    for (Vertex v : s->singletons) w.bags.push_back({v});
  }
  w.canonicalize();
  WitnessCheck check = verify_witness(g, w, ell, k);
  if (!check.valid) return std::nullopt;
  return Refinement{std::move(w), check.cost};
}

std::uint64_t default_iterations(int n, int k, int ell) {
  auto q = static_cast<std::uint64_t>(t_ell_color_bound(ell));
  std::uint64_t bound = saturating_pow(q, 6 * std::max(k, 0) + 8 * ell);
  std::uint64_t all = saturating_pow(q, n);
  std::uint64_t capped = all > UINT64_MAX / 10 ? UINT64_MAX : all * 10;
  return std::min(bound, capped);
}

namespace {

struct Context {
  const SolveOptions& options;
  std::mt19937_64 rng;
  std::map<Vertex, int> position;  // family mode: rank in the top-level graph
  std::map<std::vector<int>, std::optional<EdgeSet>> memo;
};

Context make_context(const Graph& top, const SolveOptions& options) {
  Context ctx{options, std::mt19937_64{}, {}, {}};
  if (const auto* r = std::get_if<RandomColorings>(&options.source)) ctx.rng.seed(r->seed);
  if (const auto* f = std::get_if<FamilyColorings>(&options.source)) {
    if (f->family == nullptr) throw InputError("family mode needs a function family");
    if (f->family->n() != top.num_vertices()) {
      throw InputError("family is over " + std::to_string(f->family->n()) + " elements but the graph has " +
                       std::to_string(top.num_vertices()) + " vertices");
    }
    int i = 0;
    for (Vertex v : top.vertices()) ctx.position[v] = i++;
  }
  return ctx;
}

Coloring to_coloring(const std::vector<Vertex>& verts, const std::vector<int>& colors) {
  Coloring c;
  for (std::size_t i = 0; i < verts.size(); ++i) c.emplace_hint(c.end(), verts[i], colors[i]);
  return c;
}

// Pulls colorings from `next` in blocks and returns the first one (in stream
// order) that refines into a verified witness. Blocks are evaluated in
// parallel under Execution::parallel; the winner is the lowest index either way.
template <class Next>
std::optional<Refinement> first_refinement(const Graph& g, int k, int ell, Next&& next, Execution exec) {
  constexpr std::size_t kBlock = 256;
  const std::vector<Vertex> verts = g.vertices();
  std::vector<std::vector<int>> block;
  std::vector<int> colors;
  for (;;) {
    block.clear();
    while (block.size() < kBlock && next(colors)) block.push_back(colors);
    if (block.empty()) return std::nullopt;
    if (exec == Execution::serial) {
      for (const auto& b : block) {
        if (auto r = refine_coloring(g, to_coloring(verts, b), k, ell)) return r;
      }
    } else {
      std::vector<std::optional<Refinement>> results(block.size());
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (std::size_t i = 0; i < block.size(); ++i) {
        try {
          results[i] = refine_coloring(g, to_coloring(verts, block[i]), k, ell);
        } catch (...) {
#pragma omp critical
          failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
      for (auto& r : results) {
        if (r) return r;
      }
    }
    if (block.size() < kBlock) return std::nullopt;
  }
}

std::optional<Refinement> search_colorings(Context& ctx, const Graph& g, int k, int ell) {
  const int n = g.num_vertices();
  const int q = t_ell_color_bound(ell);
  const Execution exec = ctx.options.exec;

  if (const auto* r = std::get_if<RandomColorings>(&ctx.options.source)) {
    std::uint64_t left = r->iterations ? *r->iterations : default_iterations(n, k, ell);
    std::uniform_int_distribution<int> pick(0, q - 1);
    auto next = [&](std::vector<int>& out) {
      if (left == 0) return false;
      --left;
      out.resize(static_cast<std::size_t>(n));
      for (int& x : out) x = pick(ctx.rng);
      return true;
    };
    return first_refinement(g, k, ell, next, exec);
  }

  if (std::holds_alternative<ExhaustiveColorings>(ctx.options.source)) {
    // Restricted growth strings with at most q blocks: one representative per
    // set partition, in lexicographic order. refine_coloring only sees which
    // vertices share a color, so this covers all q^n colorings.
    bool started = false;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    auto next = [&](std::vector<int>& out) {
      if (!started) {
        started = true;
        out = cur;
        return true;
      }
      for (int i = n - 1; i >= 1; --i) {
        int cap = std::min(q - 1, prefix_max[static_cast<std::size_t>(i - 1)] + 1);
        if (cur[static_cast<std::size_t>(i)] < cap) {
          ++cur[static_cast<std::size_t>(i)];
          prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], cur[static_cast<std::size_t>(i)]);
          for (int j = i + 1; j < n; ++j) {
            cur[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
          }
          out = cur;
          return true;
        }
      }
      return false;
    };
    return first_refinement(g, k, ell, next, exec);
  }

  const FunctionFamily& fam = *std::get<FamilyColorings>(ctx.options.source).family;
  if (fam.q() < q) {
    throw InputError("family has " + std::to_string(fam.q()) + " colors; ell = " + std::to_string(ell) + " needs " +
                     std::to_string(q));
  }
  std::vector<int> pos;
  for (Vertex v : g.vertices()) {
    auto it = ctx.position.find(v);
    if (it == ctx.position.end()) throw InputError("vertex " + std::to_string(v) + " is outside the family's universe");
    pos.push_back(it->second);
  }
  std::size_t f = 0;
  auto next = [&](std::vector<int>& out) {
    if (f == fam.size()) return false;
    out.resize(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) out[i] = fam.at(f, pos[i]) % q;
    ++f;
    return true;
  };
  return first_refinement(g, k, ell, next, exec);
}

// Spanning tree minus the edge at its highest-id leaf: contracts g to K2.
EdgeSet contract_to_edge(const Graph& g) {
  std::vector<Vertex> all = g.vertices();
  EdgeSet tree = spanning_forest(g, all);
  std::map<Vertex, int> deg;
  for (const Edge& e : tree) {
    ++deg[e.u];
    ++deg[e.v];
  }
  Vertex leaf = -1;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    if (deg[*it] == 1) {
      leaf = *it;
      break;
    }
  }
  std::erase_if(tree, [&](const Edge& e) { return e.u == leaf || e.v == leaf; });
  return tree;
}

std::optional<EdgeSet> two_connected(Context& ctx, const Graph& g, int k, int ell) {
  if (is_in_t_ell(g, ell)) return EdgeSet{};
  if (k <= 0) return std::nullopt;
  if (g.num_vertices() > DenseGraph::kMaxVertices) {
    throw SizeError("2-connected piece with " + std::to_string(g.num_vertices()) + " vertices is beyond the solver");
  }
  if (auto r = search_colorings(ctx, g, k, ell)) return solution_edges(g, r->witness);
  // Colorings only target quotients with >= 3 vertices; a 2-vertex quotient
  // costs |V| - 2 and is always in T_ell.
  if (k >= g.num_vertices() - 2) return contract_to_edge(g);
  return std::nullopt;
}

std::optional<EdgeSet> solve_rec(Context& ctx, const Graph& g, int k, int ell);

EdgeSet unite(EdgeSet a, const EdgeSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  normalize(a);
  return a;
}

// Smallest t <= k with a tree contraction of g of size t.
std::optional<std::pair<int, EdgeSet>> tree_contraction(Context& ctx, const Graph& g, int k) {
  for (int t = 0; t <= k; ++t) {
    if (auto f = solve_rec(ctx, g, t, 0)) return std::make_pair(t, *f);
  }
  return std::nullopt;
}

std::optional<EdgeSet> solve_uncached(Context& ctx, const Graph& g, int k, int ell) {
  // A solution for a smaller excess is a solution here too.
  if (ell > 0) {
    if (auto r = solve_rec(ctx, g, k, ell - 1)) return r;
  }

  // Degree-1 vertices never need contracting. g has a cycle at this point, so
  // peeling leaves stops at its nonempty 2-core.
  Graph core = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : core.vertices()) {
      if (core.degree(v) == 1) {
        core.remove_vertex(v);
        changed = true;
      }
    }
  }
  if (core.num_vertices() != g.num_vertices()) return solve_rec(ctx, core, k, ell);

  ConnectivityInfo info = analyze_connectivity(g);
  if (info.cut_vertices.empty()) return two_connected(ctx, g, k, ell);

  Vertex cut = *std::min_element(info.cut_vertices.begin(), info.cut_vertices.end());
  ConnectivityInfo rest = analyze_connectivity(g.without(std::vector<Vertex>{cut}));
  // Components come out ordered by smallest member.
  std::vector<Vertex> side = *std::min_element(rest.components.begin(), rest.components.end());
  std::vector<Vertex> g1_vertices = side;
  g1_vertices.push_back(cut);
  Graph g1 = g.induced(g1_vertices);
  Graph g2 = g.without(side);

  // Both sides keep some excess.
  for (int ell1 = 1; ell1 < ell; ++ell1) {
    for (int k1 = 0; k1 <= k; ++k1) {
      auto f1 = solve_rec(ctx, g1, k1, ell1);
      if (!f1) continue;
      // Answers are monotone in the budget, so the first k1 that works leaves
      // the most for the other side.
      if (auto f2 = solve_rec(ctx, g2, k - k1, ell - ell1)) return unite(*f1, *f2);
      break;
    }
  }
  // One side becomes a tree.
  if (auto t1 = tree_contraction(ctx, g1, k)) {
    if (auto f2 = solve_rec(ctx, g2, k - t1->first, ell)) return unite(t1->second, *f2);
  }
  if (auto t2 = tree_contraction(ctx, g2, k)) {
    if (auto f1 = solve_rec(ctx, g1, k - t2->first, ell)) return unite(*f1, t2->second);
  }
  return std::nullopt;
}

std::vector<int> memo_key(const Graph& g, int k, int ell) {
  std::vector<int> key{k, ell, g.num_vertices()};
  for (Vertex v : g.vertices()) key.push_back(v);
  for (const Edge& e : g.edges()) {
    key.push_back(e.u);
    key.push_back(e.v);
  }
  return key;
}

std::optional<EdgeSet> solve_rec(Context& ctx, const Graph& g, int k, int ell) {
  if (k < 0) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  if (is_in_t_ell(g, ell)) return EdgeSet{};
  if (k == 0) return std::nullopt;
  std::vector<int> key = memo_key(g, k, ell);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
  auto result = solve_uncached(ctx, g, k, ell);
  ctx.memo.emplace(std::move(key), result);
  return result;
}

ContractionSolution checked(const Graph& g, int k, int ell, EdgeSet f) {
  WitnessCheck check = verify_witness(g, witness_from_solution(g, f), ell, k);
  if (!check.valid || static_cast<int>(f.size()) != check.cost) {
    throw std::logic_error("solver produced a solution that does not verify: " + std::string(to_string(check.reason)));
  }
  return ContractionSolution{std::move(f)};
}

}  // namespace

std::optional<ContractionSolution> solve_2connected(const Graph& g, int k, int ell, const SolveOptions& options) {
  Context ctx = make_context(g, options);
  auto f = two_connected(ctx, g, k, ell);
  if (!f) return std::nullopt;
  return checked(g, k, ell, std::move(*f));
}

std::optional<ContractionSolution> solve(const Instance& instance, const SolveOptions& options) {
  if (instance.ell < 0) throw InputError("ell must be nonnegative");
  Context ctx = make_context(instance.graph, options);
  auto f = solve_rec(ctx, instance.graph, instance.k, instance.ell);
  if (!f) return std::nullopt;
  return checked(instance.graph, instance.k, instance.ell, std::move(*f));
}

}  // namespace tlc
