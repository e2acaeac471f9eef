#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgraph/rational.hpp"

namespace qgraph {

using VertexId = std::size_t;
using EdgeId = std::size_t;

enum class WeightMode { Standard, Explicit };

/// Oriented edge tail -> head. tail == head is a self-loop.
struct Edge {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;
  Rational length{1};

  bool is_loop() const { return tail == head; }
  /// Endpoint opposite to v (v itself for a loop).
  VertexId opposite(VertexId v) const { return v == tail ? head : tail; }
};

// ---------------------------------------------------------------------------
// Parsed-but-unvalidated graph description, produced by the file reader.

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
  std::vector<std::int64_t> label;  // empty means "all zero"
  Rational length{1};
  int multiplicity = 1;
  std::optional<int> line;

  bool operator==(const EdgeSpec&) const = default;
};

struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::optional<int>> vertex_lines;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> boundary;
  WeightMode weight_mode = WeightMode::Standard;
  std::map<std::string, Rational> vertex_weights;
  std::map<std::string, Rational> edge_weights;

  bool operator==(const GraphSpec&) const = default;
};

// ---------------------------------------------------------------------------

/// Finite discrete graph G=(V,E,∂) with vertex and edge weights and an
/// optional boundary vertex set. Multi-edges and self-loops are allowed.
/// Immutable once built.
class WeightedGraph {
 public:
  /// Standard weights m(v) = deg v, m_e = 1. An isolated vertex gets m(v) = 1
  /// so that its (zero) Laplacian is well defined.
  static WeightedGraph standard(std::vector<std::string> vertices, std::vector<Edge> edges,
                                std::vector<VertexId> boundary = {});

  static WeightedGraph weighted(std::vector<std::string> vertices, std::vector<Edge> edges,
                                std::vector<Rational> vertex_weights,
                                std::vector<Rational> edge_weights,
                                std::vector<VertexId> boundary = {});

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  VertexId vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  const Rational& vertex_weight(VertexId v) const { return vertex_weights_.at(v); }
  const Rational& edge_weight(EdgeId e) const { return edge_weights_.at(e); }
  WeightMode mode() const { return mode_; }

  /// Boundary vertices ∂V, ascending.
  const std::vector<VertexId>& boundary() const { return boundary_; }
  bool is_boundary(VertexId v) const { return is_boundary_.at(v); }
  /// V \ ∂V, ascending.
  std::vector<VertexId> inner_vertices() const;

  /// |E_v|; a self-loop counts twice.
  std::size_t degree(VertexId v) const { return degree_.at(v); }
  /// Edges at v; a self-loop appears once here.
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incident_.at(v); }
  std::size_t loop_count(VertexId v) const;

  bool all_lengths_one() const;

  /// Same graph, new boundary set.
  WeightedGraph with_boundary(std::vector<VertexId> boundary) const;

 private:
  WeightedGraph() = default;
  void index_and_validate();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Rational> vertex_weights_;
  std::vector<Rational> edge_weights_;
  std::vector<VertexId> boundary_;
  std::vector<bool> is_boundary_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<EdgeId>> incident_;
  WeightMode mode_ = WeightMode::Standard;
};

struct Partition {
  std::vector<VertexId> class_a;
  std::vector<VertexId> class_b;
  /// side[v] == 0 for v in class_a, 1 for class_b.
  std::vector<std::uint8_t> side;
};

/// Validate a parsed description and assign dense indices. Labels are
/// ignored here (see periodic.hpp); multiplicity m expands to m edges named
/// id, id#2, ..., id#m.
WeightedGraph build_graph(const GraphSpec& spec);

/// Merge parallel edges: one edge per unordered vertex pair carrying the
/// summed weight (|E(v,w)| in standard mode); parallel loops merge into one
/// loop. Vertex weights are kept, so the Laplacian matrix is unchanged.
WeightedGraph simplify_multi_edges(const WeightedGraph& g);

/// Drop self-loops, keeping vertex weights (m(v) stays the original degree).
/// The Laplacian matrix is unchanged; ρ(v) drops below 1 at looped vertices.
WeightedGraph eliminate_self_loops(const WeightedGraph& g);

/// Throws PreconditionError on an empty vertex set.
bool is_connected(const WeightedGraph& g);

/// Two-colouring if one exists. Any self-loop rules it out. Requires a
/// connected graph (PreconditionError otherwise).
std::optional<Partition> is_bipartite(const WeightedGraph& g);

/// ρ(v) = m(v)^{-1} Σ_{e∈E_v} m_e, loops counted twice.
Rational relative_weight(const WeightedGraph& g, VertexId v);

}  // namespace qgraph
