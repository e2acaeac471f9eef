#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/periodic.hpp"

namespace qgt {

using qgraph::Edge;
using qgraph::WeightedGraph;

// Edges given as (tail, head) vertex indices; vertices are named v0, v1, ...
inline WeightedGraph graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& e,
                           std::vector<std::size_t> boundary = {}) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < e.size(); ++i) edges.push_back(Edge{"e" + std::to_string(i), e[i].first, e[i].second});
  return WeightedGraph::standard(names, edges, std::move(boundary));
}

inline WeightedGraph k2() { return graph(2, {{0, 1}}); }
inline WeightedGraph triangle() { return graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline WeightedGraph cycle4() { return graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
inline WeightedGraph path3() { return graph(3, {{0, 1}, {1, 2}}); }

// Multi-edge domain: path a-b=c-a' with r parallel middle edges.
inline WeightedGraph multi_path(int r) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}};
  for (int i = 0; i < r; ++i) e.push_back({1, 2});
  e.push_back({2, 3});
  return graph(4, e, {0, 3});
}

// Looped domain: a-m-a' with r loops at m.
inline WeightedGraph looped_path(int r) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}};
  for (int i = 0; i < r; ++i) e.push_back({1, 1});
  return graph(3, e, {0, 2});
}

// Multi-edge quotient {a,b,c}: a-b, r parallel b-c, c->a with label 1.
inline qgraph::PeriodicGraph multi_quotient(int r) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}};
  std::vector<qgraph::Label> labels{{0}};
  for (int i = 0; i < r; ++i) {
    e.push_back({1, 2});
    labels.push_back({0});
  }
  e.push_back({2, 0});
  labels.push_back({1});
  return qgraph::make_periodic(graph(3, e), labels);
}

// Looped quotient {a,m}: a-m, m->a with label 1, r loops at m.
inline qgraph::PeriodicGraph looped_quotient(int r) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 0}};
  std::vector<qgraph::Label> labels{{0}, {1}};
  for (int i = 0; i < r; ++i) {
    e.push_back({1, 1});
    labels.push_back({0});
  }
  return qgraph::make_periodic(graph(2, e), labels);
}

// ℤ as a graph: one vertex, one loop with label 1.
inline qgraph::PeriodicGraph line_quotient() { return qgraph::make_periodic(graph(1, {{0, 0}}), {{1}}); }

inline bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace qgt
