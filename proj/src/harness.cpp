#include "tlc/harness.hpp"

#include <climits>
#include <ostream>
#include <sstream>

#include "tlc/fpt_solver.hpp"
#include "tlc/io.hpp"
#include "tlc/kernel.hpp"
#include "tlc/oracle.hpp"

namespace tlc {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::exact:
      return "exact";
    case Mode::rand:
      return "rand";
    case Mode::exhaustive:
      return "exhaustive";
    case Mode::derand:
      return "derand";
    case Mode::kernel:
      return "kernel";
    case Mode::lift:
      return "lift";
    case Mode::verify:
      return "verify";
    case Mode::family:
      return "family";
  }
  return "unknown";
}

Mode parse_mode(std::string_view text) {
  for (Mode m : {Mode::exact, Mode::rand, Mode::exhaustive, Mode::derand, Mode::kernel, Mode::lift, Mode::verify,
                 Mode::family}) {
    if (text == to_string(m)) return m;
  }
  if (text == "kernelize") return Mode::kernel;
  throw InputError("unknown mode '" + std::string(text) + "'");
}

namespace {

std::string join_edges(const EdgeSet& f) {
  std::string s;
  for (const Edge& e : f) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

struct Record {
  bool yes = false;
  int cost = 0;
  std::string extra;
};

void emit(std::ostream& out, const RunConfig& c, const Record& r) {
  out << "result decision=" << (r.yes ? "yes" : "no") << " cost=" << r.cost << " mode=" << to_string(c.mode)
      << " seed=" << c.seed << r.extra << '\n';
}

Graph load_graph(const RunConfig& c) {
  if (c.in.empty()) throw InputError("--in <graph file> is required");
  return parse_graph(read_file(c.in));
}

void require_params(const RunConfig& c) {
  if (c.k < 0) throw InputError("--k must be nonnegative");
  if (c.ell < 0) throw InputError("--ell must be nonnegative");
}

// Shared tail of every solving mode: re-verify, write the witness, report.
Record report_solution(const RunConfig& c, const Graph& g, const std::optional<EdgeSet>& f) {
  Record r;
  if (!f) {
    r.cost = c.k + 1;
    return r;
  }
  WitnessStructure w = witness_from_solution(g, *f);
  WitnessCheck check = verify_witness(g, w, c.ell, c.k);
  if (!check.valid) throw std::logic_error("solver output failed verification: " + std::string(to_string(check.reason)));
  if (!c.out.empty()) write_file(c.out, serialize_witness(w));
  r.yes = true;
  r.cost = static_cast<int>(f->size());
  r.extra = " edges=" + join_edges(*f);
  return r;
}

Record run_solver(const RunConfig& c) {
  require_params(c);
  Graph g = load_graph(c);
  Instance inst{g, c.k, c.ell};
  if (c.mode == Mode::exact) return report_solution(c, g, exact_opt(g, c.ell, c.k, c.exec));

  SolveOptions options;
  options.exec = c.exec;
  std::optional<FunctionFamily> fam;
  if (c.mode == Mode::rand) {
    options.source = RandomColorings{c.seed, c.iters};
  } else if (c.mode == Mode::exhaustive) {
    options.source = ExhaustiveColorings{};
  } else {
    fam = c.family_file.empty() ? build_solver_family(g.num_vertices(), c.k, c.ell)
                                : parse_family(read_file(c.family_file));
    options.source = FamilyColorings{&*fam};
  }
  auto s = solve(inst, options);
  return report_solution(c, g, s ? std::optional<EdgeSet>(s->edges) : std::nullopt);
}

Record run_verify(const RunConfig& c) {
  Graph g = load_graph(c);
  if (c.solution.empty()) throw InputError("--solution <witness file> is required");
  WitnessStructure w = parse_witness(read_file(c.solution));
  WitnessCheck check = verify_witness(g, w, c.ell, c.k);
  return Record{check.valid, check.cost, " reason=" + std::string(to_string(check.reason))};
}

Record run_kernel(const RunConfig& c) {
  require_params(c);
  Graph g = load_graph(c);
  KernelResult kr = kernelize(Instance{g, c.k, c.ell}, c.alpha);
  Relabeling rl = relabel_consecutive(kr.reduced.graph);
  if (!c.out.empty()) write_file(c.out, serialize_graph(rl.graph));
  if (!c.trace.empty()) write_file(c.trace, serialize_trace(TraceFile{kr.trace, rl.old_of_new}));
  std::ostringstream extra;
  extra << " reduced_n=" << kr.reduced.graph.num_vertices() << " reduced_m=" << kr.reduced.graph.num_edges()
        << " reduced_k=" << kr.reduced.k << " steps=" << kr.trace.steps.size();
  // "yes" here means the kernel did not settle the instance as no.
  return Record{!kr.trace.decided_no, kr.trace.decided_no ? c.k + 1 : 0, extra.str()};
}

Record run_lift(const RunConfig& c) {
  require_params(c);
  Graph g = load_graph(c);
  if (c.trace.empty()) throw InputError("--trace <trace file> is required");
  if (c.solution.empty()) throw InputError("--solution <edge list of the reduced graph> is required");
  TraceFile tf = parse_trace(read_file(c.trace));
  EdgeSet reduced;
  for (const Edge& e : parse_edge_list(read_file(c.solution))) {
    auto u = tf.ids.find(e.u);
    auto v = tf.ids.find(e.v);
    if (u == tf.ids.end() || v == tf.ids.end()) throw InputError("solution edge " + to_string(e) + " is not in the map");
    reduced.push_back(Edge{std::min(u->second, v->second), std::max(u->second, v->second)});
  }
  normalize(reduced);
  Instance original{g, c.k, c.ell};
  EdgeSet lifted = lift_solution(original, tf.trace, reduced);
  WitnessStructure w = witness_from_solution(g, lifted);
  WitnessCheck check = verify_witness(g, w, c.ell, INT_MAX);
  if (!check.valid) throw InputError("lifted solution does not contract into T_ell: " + std::string(to_string(check.reason)));
  if (!c.out.empty()) write_file(c.out, serialize_witness(w));
  ContractionSolution sol{lifted};
  return Record{sol.size() <= c.k, sol.capped_value(c.k), " edges=" + join_edges(lifted)};
}

FunctionFamily build_named(const RunConfig& c) {
  const std::string& how = c.construction;
  if (how == "interval") return build_interval_splitter(c.n, c.k, c.q);
  if (how == "hash") return build_hash_splitter(c.n, c.k);
  if (how == "greedy") return build_universal_greedy(c.n, c.k, c.q);
  if (how == "compose") return compose_universal(c.n, c.k, c.q);
  if (how == "complete") return build_complete_family(c.n, c.k, c.q);
  if (how == "solver") return build_solver_family(c.n, c.k, c.ell);
  throw InputError("unknown construction '" + how + "'");
}

Record run_family(const RunConfig& c) {
  if (c.action == "build") {
    FunctionFamily fam = build_named(c);
    std::string text = serialize_family(fam);
    if (!c.out.empty()) write_file(c.out, text);
    std::ostringstream extra;
    extra << " kind=" << to_string(fam.kind()) << " n=" << fam.n() << " q=" << fam.q() << " k=" << fam.k();
    return Record{true, static_cast<int>(fam.size()), extra.str()};
  }
  if (c.action == "verify") {
    if (c.family_file.empty()) throw InputError("--family-file is required");
    FunctionFamily fam = parse_family(read_file(c.family_file));
    bool ok = verify_family(fam, c.exec);
    return Record{ok, static_cast<int>(fam.size()), " kind=" + std::string(to_string(fam.kind()))};
  }
  throw InputError("family needs an action: build or verify");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Record r;
    switch (config.mode) {
      case Mode::exact:
      case Mode::rand:
      case Mode::exhaustive:
      case Mode::derand:
        r = run_solver(config);
        break;
      case Mode::verify:
        r = run_verify(config);
        break;
      case Mode::kernel:
        r = run_kernel(config);
        break;
      case Mode::lift:
        r = run_lift(config);
        break;
      case Mode::family:
        r = run_family(config);
        break;
    }
    emit(out, config, r);
    return r.yes ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace tlc
