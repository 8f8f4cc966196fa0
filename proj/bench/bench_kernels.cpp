// Serial reference vs OpenMP path for the three parallel kernels: the oracle
// subset search, family verification and the coloring sweep.
#include <benchmark/benchmark.h>

#include "tlc/derand.hpp"
#include "tlc/fpt_solver.hpp"
#include "tlc/generators.hpp"
#include "tlc/oracle.hpp"

namespace {

using tlc::Execution;

Execution exec_of(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

// Wheel on 9 vertices: 16 edges, tree-contraction optimum 4 sits well inside
// the subset search.
tlc::Graph wheel(int rim) {
  tlc::Graph g = tlc::Graph::with_vertices(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(1, 2 + i);
    g.add_edge(2 + i, 2 + (i + 1) % rim);
  }
  return g;
}

void BM_oracle(benchmark::State& state) {
  tlc::Graph g = wheel(8);
  for (auto _ : state) benchmark::DoNotOptimize(tlc::exact_opt(g, 0, 6, exec_of(state)));
}
BENCHMARK(BM_oracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_verify_family(benchmark::State& state) {
  tlc::FunctionFamily fam = tlc::build_universal_greedy(12, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tlc::verify_family(fam, exec_of(state)));
}
BENCHMARK(BM_verify_family)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_coloring_sweep(benchmark::State& state) {
  // No-instance, so every coloring of the restricted-growth sweep is tried.
  tlc::Graph g = wheel(8);
  tlc::SolveOptions options{tlc::ExhaustiveColorings{}, exec_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(tlc::solve_2connected(g, 3, 1, options));
}
BENCHMARK(BM_coloring_sweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_random_colorings(benchmark::State& state) {
  tlc::Instance inst = tlc::gen_random_instance(14, 0.3, 2, 1, 5);
  tlc::SolveOptions options{tlc::RandomColorings{1, 4096}, exec_of(state)};
  for (auto _ : state) benchmark::DoNotOptimize(tlc::solve(inst, options));
}
BENCHMARK(BM_random_colorings)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
