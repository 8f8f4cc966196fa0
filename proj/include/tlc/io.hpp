#pragma once

#include <map>
#include <string>
#include <string_view>

#include "tlc/derand.hpp"
#include "tlc/graph.hpp"
#include "tlc/kernel.hpp"
#include "tlc/witness.hpp"

namespace tlc {

/// "p <n> <m>" (DIMACS "p edge <n> <m>" is accepted too), then m lines
/// "e <u> <v>" over ids 1..n; "c" lines are comments. Errors name the line.
Graph parse_graph(std::string_view text);

/// Requires vertex ids exactly 1..n; see relabel_consecutive otherwise.
std::string serialize_graph(const Graph& g);

struct Relabeling {
  Graph graph;                          // ids 1..n
  std::map<Vertex, Vertex> old_of_new;  // new id -> original id
};

/// Renames vertices to 1..n in increasing id order.
Relabeling relabel_consecutive(const Graph& g);

/// One bag per line, ids separated by spaces. Parsing canonicalizes.
WitnessStructure parse_witness(std::string_view text);
std::string serialize_witness(const WitnessStructure& w);

/// Lines "e <u> <v>"; blank and "c" lines are skipped.
EdgeSet parse_edge_list(std::string_view text);

/// "family <n> <q> <kind> <k>" then one function per line with values 1..q.
/// The first "c <text>" line, if any, carries the family's meta string.
FunctionFamily parse_family(std::string_view text);
std::string serialize_family(const FunctionFamily& fam);

/// A trace as written next to a relabelled reduced graph: `ids` maps the
/// reduced file's ids back to the original graph's ids.
struct TraceFile {
  KernelTrace trace;
  std::map<Vertex, Vertex> ids;
};

TraceFile parse_trace(std::string_view text);
std::string serialize_trace(const TraceFile& file);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace tlc
