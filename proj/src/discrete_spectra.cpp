#include "qgraph/discrete_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

/// Exact unnormalised pieces: per vertex the non-loop incident weight, per
/// unordered pair the summed edge weight.
struct ExactPieces {
  std::vector<Rational> diagonal;  // ρ(v) - m(v)^{-1}Σ_{E(v,v)} m_e
  std::map<std::pair<VertexId, VertexId>, Rational> coupling;
};

ExactPieces exact_pieces(const WeightedGraph& g) {
  ExactPieces p;
  p.diagonal.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rational loops(0);
    for (EdgeId id : g.incident_edges(v))
      if (g.edge(id).is_loop()) loops += g.edge_weight(id) * Rational(2);
    p.diagonal.push_back(relative_weight(g, v) - loops / g.vertex_weight(v));
  }
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) continue;
    auto [it, fresh] = p.coupling.try_emplace(std::minmax(e.tail, e.head), Rational(0));
    it->second += g.edge_weight(id);
  }
  return p;
}

double coupling_entry(const WeightedGraph& g, VertexId v, VertexId w, const Rational& sum) {
  const Rational mm = g.vertex_weight(v) * g.vertex_weight(w);
  return -sum.to_double() / std::sqrt(mm.to_double());
}

}  // namespace

SymmetricMatrix laplacian_matrix(const WeightedGraph& g) {
  const ExactPieces p = exact_pieces(g);
  SymmetricMatrix m(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) m.set(v, v, p.diagonal[v].to_double());
  for (const auto& [key, sum] : p.coupling) m.set(key.first, key.second, coupling_entry(g, key.first, key.second, sum));
  return m;
}

SymmetricMatrix dirichlet_laplacian_matrix(const WeightedGraph& g) {
  const std::vector<VertexId> inner = g.inner_vertices();
  std::vector<std::size_t> row(g.vertex_count(), inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) row[inner[i]] = i;

  const ExactPieces p = exact_pieces(g);
  SymmetricMatrix m(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) m.set(i, i, p.diagonal[inner[i]].to_double());
  for (const auto& [key, sum] : p.coupling) {
    if (g.is_boundary(key.first) || g.is_boundary(key.second)) continue;
    m.set(row[key.first], row[key.second], coupling_entry(g, key.first, key.second, sum));
  }
  return m;
}

SymmetricMatrix unoriented_laplacian_matrix(const WeightedGraph& g) {
  const ExactPieces p = exact_pieces(g);
  SymmetricMatrix m(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    m.set(v, v, (Rational(2) * relative_weight(g, v) - p.diagonal[v]).to_double());
  for (const auto& [key, sum] : p.coupling) m.set(key.first, key.second, -coupling_entry(g, key.first, key.second, sum));
  return m;
}

Spectrum spectrum_of(const WeightedGraph& g, bool dirichlet, double tol) {
  if (!is_connected(g)) throw PreconditionError("spectrum_of requires a connected graph");
  const SymmetricMatrix m = dirichlet ? dirichlet_laplacian_matrix(g) : laplacian_matrix(g);
  const std::vector<double> values = jacobi_eigenvalues(m);
  return group_multiplicities(values, tol);
}

bool check_bipartite_symmetry(const Spectrum& s) {
  const std::size_t n = s.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    const SpectralValue& lo = s.values[i];
    const SpectralValue& hi = s.values[n - 1 - i];
    if (lo.multiplicity != hi.multiplicity) return false;
    if (std::abs((2.0 - lo.value) - hi.value) > s.tolerance * 2.0) return false;
  }
  return true;
}

std::vector<double> vertex_function(const WeightedGraph& g, const std::vector<double>& x, bool dirichlet) {
  std::vector<double> f(g.vertex_count(), 0.0);
  if (dirichlet) {
    const std::vector<VertexId> inner = g.inner_vertices();
    for (std::size_t i = 0; i < inner.size(); ++i) f[inner[i]] = x.at(i) / std::sqrt(g.vertex_weight(inner[i]).to_double());
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) f[v] = x.at(v) / std::sqrt(g.vertex_weight(v).to_double());
  }
  return f;
}

}  // namespace qgraph
