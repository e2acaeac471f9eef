#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qgraph/graph.hpp"

namespace qgraph {

/// Reads the YAML graph document:
///
///   vertices: [a, b]
///   edges:
///     - {id: e1, tail: a, head: b, label: [1], length: 1, multiplicity: 2}
///   boundary: [a]
///   weights: {mode: explicit, vertex: {a: 1/2, b: 1}, edge: {e1: 1}}
///
/// id defaults to e<position>; label, length, multiplicity, boundary and
/// weights are optional. Numbers may be integers, decimals or "p/q".
/// Structural problems throw ValidationError carrying the 1-based line.
/// Graph-level checks (unknown endpoints, duplicates) are left to
/// build_graph, which sees the recorded lines.
GraphSpec parse_graph(std::string_view text);
GraphSpec load_graph(const std::filesystem::path& file);

/// Canonical YAML: defaults omitted, fractions written as p/q, so
/// parse_graph(serialize_graph(s)) reproduces s up to line numbers.
std::string serialize_graph(const GraphSpec& spec);

/// Copy of s without line information, for comparisons.
GraphSpec strip_lines(GraphSpec s);

}  // namespace qgraph
