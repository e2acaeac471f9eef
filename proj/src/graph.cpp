#include "qgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

WeightedGraph WeightedGraph::standard(std::vector<std::string> vertices, std::vector<Edge> edges,
                                      std::vector<VertexId> boundary) {
  WeightedGraph g;
  g.names_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.boundary_ = std::move(boundary);
  g.mode_ = WeightMode::Standard;
  g.edge_weights_.assign(g.edges_.size(), Rational(1));
  g.vertex_weights_.assign(g.names_.size(), Rational(1));
  g.index_and_validate();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree_[v] > 0) g.vertex_weights_[v] = Rational(static_cast<std::int64_t>(g.degree_[v]));
  }
  return g;
}

WeightedGraph WeightedGraph::weighted(std::vector<std::string> vertices, std::vector<Edge> edges,
                                      std::vector<Rational> vertex_weights,
                                      std::vector<Rational> edge_weights,
                                      std::vector<VertexId> boundary) {
  WeightedGraph g;
  g.names_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.boundary_ = std::move(boundary);
  g.mode_ = WeightMode::Explicit;
  g.vertex_weights_ = std::move(vertex_weights);
  g.edge_weights_ = std::move(edge_weights);
  if (g.vertex_weights_.size() != g.names_.size() || g.edge_weights_.size() != g.edges_.size())
    throw ValidationError("weight vector size does not match graph");
  g.index_and_validate();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.vertex_weights_[v].sign() <= 0)
      throw ValidationError("non-positive weight at vertex '" + g.names_[v] + "'");
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge_weights_[e].sign() <= 0)
      throw ValidationError("non-positive weight at edge '" + g.edges_[e].name + "'");
  return g;
}

void WeightedGraph::index_and_validate() {
  const std::size_t n = names_.size();
  {
    std::set<std::string_view> seen;
    for (const auto& name : names_)
      if (!seen.insert(name).second) throw ValidationError("duplicate vertex id '" + name + "'");
  }
  {
    std::set<std::string_view> seen;
    for (const auto& e : edges_) {
      if (!seen.insert(e.name).second) throw ValidationError("duplicate edge id '" + e.name + "'");
      if (e.tail >= n || e.head >= n)
        throw ValidationError("edge '" + e.name + "' references an unknown vertex");
      if (e.length.sign() <= 0) throw ValidationError("non-positive length at edge '" + e.name + "'");
    }
  }
  std::sort(boundary_.begin(), boundary_.end());
  if (std::adjacent_find(boundary_.begin(), boundary_.end()) != boundary_.end())
    throw ValidationError("duplicate boundary vertex");
  is_boundary_.assign(n, false);
  for (VertexId v : boundary_) {
    if (v >= n) throw ValidationError("boundary references an unknown vertex");
    is_boundary_[v] = true;
  }
  degree_.assign(n, 0);
  incident_.assign(n, {});
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    degree_[e.tail] += 1;
    degree_[e.head] += 1;
    incident_[e.tail].push_back(id);
    if (!e.is_loop()) incident_[e.head].push_back(id);
  }
}

std::optional<VertexId> WeightedGraph::find_vertex(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId WeightedGraph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw ValidationError("unknown vertex '" + std::string(name) + "'");
}

std::vector<VertexId> WeightedGraph::inner_vertices() const {
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < vertex_count(); ++v)
    if (!is_boundary_[v]) inner.push_back(v);
  return inner;
}

std::size_t WeightedGraph::loop_count(VertexId v) const {
  return static_cast<std::size_t>(std::count_if(incident_.at(v).begin(), incident_.at(v).end(),
                                                [&](EdgeId e) { return edges_[e].is_loop(); }));
}

bool WeightedGraph::all_lengths_one() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.length == Rational(1); });
}

WeightedGraph WeightedGraph::with_boundary(std::vector<VertexId> boundary) const {
  WeightedGraph g = *this;
  g.boundary_ = std::move(boundary);
  g.index_and_validate();
  return g;
}

// ---------------------------------------------------------------------------

WeightedGraph build_graph(const GraphSpec& spec) {
  std::unordered_map<std::string, VertexId> index;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    std::optional<int> line = i < spec.vertex_lines.size() ? spec.vertex_lines[i] : std::nullopt;
    if (spec.vertices[i].empty()) throw ValidationError("empty vertex id", line);
    if (!index.emplace(spec.vertices[i], i).second)
      throw ValidationError("duplicate vertex id '" + spec.vertices[i] + "'", line);
  }

  std::vector<Edge> edges;
  std::vector<Rational> edge_weights;
  std::set<std::string> edge_ids;
  for (const EdgeSpec& es : spec.edges) {
    auto tail = index.find(es.tail);
    auto head = index.find(es.head);
    if (tail == index.end())
      throw ValidationError("edge '" + es.id + "' has unknown tail '" + es.tail + "'", es.line);
    if (head == index.end())
      throw ValidationError("edge '" + es.id + "' has unknown head '" + es.head + "'", es.line);
    if (es.multiplicity < 1)
      throw ValidationError("edge '" + es.id + "' has multiplicity < 1", es.line);
    if (es.length.sign() <= 0)
      throw ValidationError("edge '" + es.id + "' has non-positive length", es.line);
    Rational weight(1);
    if (spec.weight_mode == WeightMode::Explicit) {
      auto w = spec.edge_weights.find(es.id);
      if (w == spec.edge_weights.end())
        throw ValidationError("missing weight for edge '" + es.id + "'", es.line);
      weight = w->second;
      if (weight.sign() <= 0) throw ValidationError("non-positive weight at edge '" + es.id + "'", es.line);
    }
    for (int copy = 1; copy <= es.multiplicity; ++copy) {
      std::string name = copy == 1 ? es.id : es.id + "#" + std::to_string(copy);
      if (!edge_ids.insert(name).second) throw ValidationError("duplicate edge id '" + name + "'", es.line);
      edges.push_back(Edge{name, tail->second, head->second, es.length});
      edge_weights.push_back(weight);
    }
  }

  std::vector<VertexId> boundary;
  for (const auto& b : spec.boundary) {
    auto it = index.find(b);
    if (it == index.end()) throw ValidationError("boundary references unknown vertex '" + b + "'");
    boundary.push_back(it->second);
  }

  if (spec.weight_mode == WeightMode::Standard)
    return WeightedGraph::standard(spec.vertices, std::move(edges), std::move(boundary));

  std::vector<Rational> vertex_weights;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    auto w = spec.vertex_weights.find(spec.vertices[i]);
    std::optional<int> line = i < spec.vertex_lines.size() ? spec.vertex_lines[i] : std::nullopt;
    if (w == spec.vertex_weights.end())
      throw ValidationError("missing weight for vertex '" + spec.vertices[i] + "'", line);
    if (w->second.sign() <= 0)
      throw ValidationError("non-positive weight at vertex '" + spec.vertices[i] + "'", line);
    vertex_weights.push_back(w->second);
  }
  return WeightedGraph::weighted(spec.vertices, std::move(edges), std::move(vertex_weights),
                                 std::move(edge_weights), std::move(boundary));
}

WeightedGraph simplify_multi_edges(const WeightedGraph& g) {
  std::map<std::pair<VertexId, VertexId>, std::pair<Rational, Rational>> merged;  // weight, length
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    auto key = std::minmax(e.tail, e.head);
    auto [it, fresh] = merged.try_emplace(key, Rational(0), e.length);
    it->second.first += g.edge_weight(id);
  }
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (const auto& [key, value] : merged) {
    edges.push_back(Edge{g.vertex_name(key.first) + "~" + g.vertex_name(key.second), key.first,
                         key.second, value.second});
    weights.push_back(value.first);
  }
  std::vector<Rational> vertex_weights;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_weights.push_back(g.vertex_weight(v));
  return WeightedGraph::weighted(g.vertex_names(), std::move(edges), std::move(vertex_weights),
                                 std::move(weights), g.boundary());
}

WeightedGraph eliminate_self_loops(const WeightedGraph& g) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (g.edge(id).is_loop()) continue;
    edges.push_back(g.edge(id));
    weights.push_back(g.edge_weight(id));
  }
  std::vector<Rational> vertex_weights;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertex_weights.push_back(g.vertex_weight(v));
  return WeightedGraph::weighted(g.vertex_names(), std::move(edges), std::move(vertex_weights),
                                 std::move(weights), g.boundary());
}

bool is_connected(const WeightedGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("connectivity of an empty graph is undefined");
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident_edges(v)) {
      VertexId w = g.edge(id).opposite(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

std::optional<Partition> is_bipartite(const WeightedGraph& g) {
  if (!is_connected(g)) throw PreconditionError("bipartiteness test requires a connected graph");
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<VertexId> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : g.incident_edges(v)) {
      const Edge& e = g.edge(id);
      if (e.is_loop()) return std::nullopt;
      VertexId w = e.opposite(v);
      if (colour[w] < 0) {
        colour[w] = 1 - colour[v];
        stack.push_back(w);
      } else if (colour[w] == colour[v]) {
        return std::nullopt;
      }
    }
  }
  Partition p;
  p.side.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    p.side[v] = static_cast<std::uint8_t>(colour[v]);
    (colour[v] == 0 ? p.class_a : p.class_b).push_back(v);
  }
  return p;
}

Rational relative_weight(const WeightedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) throw ValidationError("unknown vertex index " + std::to_string(v));
  Rational sum(0);
  for (EdgeId id : g.incident_edges(v)) {
    sum += g.edge_weight(id);
    if (g.edge(id).is_loop()) sum += g.edge_weight(id);
  }
  return sum / g.vertex_weight(v);
}

}  // namespace qgraph
