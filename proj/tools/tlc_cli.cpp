// Command line front end: one instance per invocation, exit 0/1/2 for
// yes/no/error.
#include <iostream>

#include <CLI11.hpp>

#include "tlc/graph.hpp"
#include "tlc/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Contract a graph into T_ell: exact, randomized, derandomized and kernel pipelines"};
  tlc::RunConfig config;
  std::string mode;
  std::vector<std::string> positional;
  bool serial = false;

  app.add_option("--mode", mode, "exact|rand|exhaustive|derand|kernel|lift|verify|family");
  app.add_option("action", positional, "kernelize | lift | verify | family build | family verify");
  app.add_option("--k", config.k, "contraction budget");
  app.add_option("--ell", config.ell, "allowed excess edges");
  app.add_option("--alpha", config.alpha, "approximation factor for the lossy kernel (> 1)");
  app.add_option("--seed", config.seed, "seed for random colorings");
  app.add_option("--iters", config.iters, "random-mode iterations per 2-connected piece");
  app.add_option("--in", config.in, "input graph file");
  app.add_option("--out", config.out, "output file (witness, reduced graph or family)");
  app.add_option("--trace", config.trace, "kernel trace file");
  app.add_option("--family-file", config.family_file, "function family file");
  app.add_option("--solution", config.solution, "witness file (verify) or reduced edge list (lift)");
  app.add_option("--n", config.n, "family domain size");
  app.add_option("--q", config.q, "family range size");
  app.add_option("--construction", config.construction, "interval|hash|greedy|compose|complete|solver");
  app.add_flag("--serial", serial, "use the serial reference paths");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::size_t used = 0;
    if (!positional.empty() && mode.empty()) {
      mode = positional[0];
      used = 1;
    }
    if (mode.empty()) mode = "exact";
    config.mode = tlc::parse_mode(mode);
    if (config.mode == tlc::Mode::family && used < positional.size()) config.action = positional[used++];
    if (used != positional.size()) throw tlc::InputError("unexpected argument '" + positional[used] + "'");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  config.exec = serial ? tlc::Execution::serial : tlc::Execution::parallel;
  return tlc::run(config, std::cout, std::cerr);
}
