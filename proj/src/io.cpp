#include "tlc/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace tlc {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (parsed.words.empty() || parsed.words[0] == "c" || parsed.words[0].starts_with('#')) continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

long long to_int(const Line& l, std::size_t i) {
  if (i >= l.words.size()) fail(l.number, "missing field");
  std::string_view w = l.words[i];
  long long value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc{} || ptr != w.data() + w.size()) fail(l.number, "expected an integer, got '" + std::string(w) + "'");
  return value;
}

// Text of the first "c ..." line, which family files use for provenance.
std::string first_comment(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("c ")) return line.substr(2);
  }
  return {};
}

void expect_fields(const Line& l, std::size_t n) {
  if (l.words.size() != n) fail(l.number, "expected " + std::to_string(n) + " fields");
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty graph file");
  const Line& header = lines[0];
  if (header.words[0] != "p") fail(header.number, "expected 'p <n> <m>' header");
  std::size_t first = header.words.size() == 4 ? 2 : 1;  // "p edge n m"
  expect_fields(header, first + 2);
  long long n = to_int(header, first);
  long long m = to_int(header, first + 1);
  if (n < 0 || m < 0) fail(header.number, "negative size");
  if (n > 10'000'000) fail(header.number, "graph too large");
  Graph g = Graph::with_vertices(static_cast<int>(n));
  long long seen = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.words[0] != "e") fail(l.number, "expected an 'e <u> <v>' line");
    expect_fields(l, 3);
    long long u = to_int(l, 1);
    long long v = to_int(l, 2);
    if (u < 1 || u > n || v < 1 || v > n) fail(l.number, "endpoint outside 1.." + std::to_string(n));
    if (u == v) fail(l.number, "self-loop");
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) fail(l.number, "duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen;
  }
  if (seen != m) throw InputError("header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::vector<Vertex> vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != static_cast<Vertex>(i + 1)) throw InputError("serialize_graph needs vertex ids 1..n");
  }
  std::ostringstream out;
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

Relabeling relabel_consecutive(const Graph& g) {
  std::map<Vertex, Vertex> new_of_old;
  Relabeling r;
  Vertex next = 1;
  for (Vertex v : g.vertices()) {
    new_of_old[v] = next;
    r.old_of_new[next] = v;
    ++next;
  }
  EdgeSet edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge{new_of_old[e.u], new_of_old[e.v]});
  r.graph = Graph::with_vertices(g.num_vertices(), edges);
  return r;
}

WitnessStructure parse_witness(std::string_view text) {
  WitnessStructure w;
  for (const Line& l : tokenize(text)) {
    std::vector<Vertex> bag;
    for (std::size_t i = 0; i < l.words.size(); ++i) bag.push_back(static_cast<Vertex>(to_int(l, i)));
    w.bags.push_back(std::move(bag));
  }
  w.canonicalize();
  return w;
}

std::string serialize_witness(const WitnessStructure& w) {
  std::ostringstream out;
  for (const auto& bag : w.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) out << (i ? " " : "") << bag[i];
    out << '\n';
  }
  return out.str();
}

EdgeSet parse_edge_list(std::string_view text) {
  EdgeSet out;
  for (const Line& l : tokenize(text)) {
    if (l.words[0] != "e") fail(l.number, "expected an 'e <u> <v>' line");
    expect_fields(l, 3);
    auto u = static_cast<Vertex>(to_int(l, 1));
    auto v = static_cast<Vertex>(to_int(l, 2));
    if (u == v) fail(l.number, "self-loop");
    out.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  normalize(out);
  return out;
}

FunctionFamily parse_family(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty family file");
  const Line& h = lines[0];
  if (h.words[0] != "family") fail(h.number, "expected 'family <n> <q> <kind> <k>' header");
  expect_fields(h, 5);
  long long n = to_int(h, 1);
  long long q = to_int(h, 2);
  long long k = to_int(h, 4);
  if (n < 1 || q < 1 || q > 65536 || k < 0) fail(h.number, "bad family parameters");
  FunctionFamily fam(static_cast<int>(n), static_cast<int>(q), parse_family_kind(h.words[3]), static_cast<int>(k),
                     first_comment(text));
  std::vector<std::uint16_t> f(static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_fields(l, static_cast<std::size_t>(n));
    for (std::size_t x = 0; x < f.size(); ++x) {
      long long v = to_int(l, x);
      if (v < 1 || v > q) fail(l.number, "value outside 1.." + std::to_string(q));
      f[x] = static_cast<std::uint16_t>(v - 1);
    }
    fam.add(std::span<const std::uint16_t>(f));
  }
  return fam;
}

std::string serialize_family(const FunctionFamily& fam) {
  std::ostringstream out;
  out << "family " << fam.n() << ' ' << fam.q() << ' ' << to_string(fam.kind()) << ' ' << fam.k() << '\n';
  if (!fam.meta().empty()) out << "c " << fam.meta() << '\n';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto f = fam.function(i);
    for (std::size_t x = 0; x < f.size(); ++x) out << (x ? " " : "") << f[x] + 1;
    out << '\n';
  }
  return out.str();
}

TraceFile parse_trace(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InputError("empty trace file");
  const Line& h = lines[0];
  if (h.words[0] != "trace") fail(h.number, "expected 'trace <k> <ell> <alpha> <d>' header");
  expect_fields(h, 5);
  TraceFile file;
  file.trace.k = static_cast<int>(to_int(h, 1));
  file.trace.ell = static_cast<int>(to_int(h, 2));
  try {
    file.trace.alpha = std::stod(std::string(h.words[3]));
  } catch (const std::exception&) {
    fail(h.number, "bad alpha");
  }
  file.trace.d = static_cast<int>(to_int(h, 4));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::string_view tag = l.words[0];
    if (tag == "decided-no") {
      file.trace.decided_no = true;
    } else if (tag == "map") {
      expect_fields(l, 3);
      file.ids[static_cast<Vertex>(to_int(l, 1))] = static_cast<Vertex>(to_int(l, 2));
    } else if (tag == "leaf" || tag == "twin") {
      expect_fields(l, 3);
      ReductionStep s{tag == "leaf" ? StepKind::leaf : StepKind::twin, static_cast<int>(to_int(l, 1)),
                      static_cast<Vertex>(to_int(l, 2)), {}, -1};
      file.trace.steps.push_back(std::move(s));
    } else if (tag == "longpath" || tag == "common") {
      if (l.words.size() < 5 || (l.words.size() - 3) % 2 != 0) fail(l.number, "expected '<k> <merged> <u> <v> ...'");
      ReductionStep s{tag == "longpath" ? StepKind::long_path : StepKind::common, static_cast<int>(to_int(l, 1)),
                      -1, {}, static_cast<Vertex>(to_int(l, 2))};
      for (std::size_t j = 3; j + 1 < l.words.size(); j += 2) {
        auto u = static_cast<Vertex>(to_int(l, j));
        auto v = static_cast<Vertex>(to_int(l, j + 1));
        if (u == v) fail(l.number, "self-loop");
        s.contracted.push_back(Edge{std::min(u, v), std::max(u, v)});
      }
      normalize(s.contracted);
      file.trace.steps.push_back(std::move(s));
    } else {
      fail(l.number, "unknown trace record '" + std::string(tag) + "'");
    }
  }
  return file;
}

std::string serialize_trace(const TraceFile& file) {
  std::ostringstream out;
  const KernelTrace& t = file.trace;
  out << "trace " << t.k << ' ' << t.ell << ' ' << t.alpha << ' ' << t.d << '\n';
  for (const ReductionStep& s : t.steps) {
    out << to_string(s.kind) << ' ' << s.k_before;
    if (s.kind == StepKind::leaf || s.kind == StepKind::twin) {
      out << ' ' << s.vertex;
    } else {
      out << ' ' << s.merged;
      for (const Edge& e : s.contracted) out << ' ' << e.u << ' ' << e.v;
    }
    out << '\n';
  }
  if (t.decided_no) out << "decided-no\n";
  for (const auto& [fresh, old] : file.ids) out << "map " << fresh << ' ' << old << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

}  // namespace tlc
