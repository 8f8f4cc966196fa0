#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "tlc/derand.hpp"
#include "tlc/execution.hpp"
#include "tlc/graph.hpp"
#include "tlc/witness.hpp"

namespace tlc {

/// Maximal connected monochromatic sets, ordered by smallest member.
std::vector<std::vector<Vertex>> monochromatic_components(const Graph& g, const Coloring& c);

enum class ComponentTag { contract_all, all_singletons, shatter };

std::string_view to_string(ComponentTag tag);

struct ComponentCase {
  ComponentTag tag = ComponentTag::all_singletons;
  std::vector<Vertex> component;
  std::vector<Vertex> boundary;  // filled for the shatter case
};

/// Sorts x into one of the three cases. "Other components" are the
/// monochromatic components of c other than the one holding x.
ComponentCase classify_component(const Graph& g, const Coloring& c, std::span<const Vertex> x);

struct Refinement {
  WitnessStructure witness;
  int cost = 0;
};

/// Builds a witness from the monochromatic components of c: contract-all
/// components become one bag, all-singleton components stay split, and the
/// rest get a minimum shatter within the remaining budget. Returns it only
/// if it verifies for (ell, k).
std::optional<Refinement> refine_coloring(const Graph& g, const Coloring& c, int k, int ell);

struct RandomColorings {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> iterations;  // default min(q^(6k+8ell), 10 q^n)
};

/// Every coloring up to renaming of colors, in lexicographic order.
struct ExhaustiveColorings {};

/// Colorings drawn from a universal family over the vertices of the top-level
/// graph, taken in sorted id order. Colors are reduced mod q when a recursive
/// call needs fewer colors than the family provides.
struct FamilyColorings {
  const FunctionFamily* family = nullptr;
};

using ColoringSource = std::variant<RandomColorings, ExhaustiveColorings, FamilyColorings>;

struct SolveOptions {
  ColoringSource source = ExhaustiveColorings{};
  Execution exec = Execution::serial;
};

/// Default random-mode iteration count.
std::uint64_t default_iterations(int n, int k, int ell);

/// Coloring-driven search on a 2-connected graph. Never returns an invalid
/// solution. When every target quotient would have at most two vertices the
/// answer is a spanning tree minus one leaf edge.
std::optional<ContractionSolution> solve_2connected(const Graph& g, int k, int ell, const SolveOptions& options = {});

/// Full recursion: reduction rules, cut-vertex splitting and branching, and
/// solve_2connected on 2-connected pieces. Every returned solution verifies.
std::optional<ContractionSolution> solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace tlc
