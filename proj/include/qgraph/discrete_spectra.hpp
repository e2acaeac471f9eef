#pragma once

#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/numerics.hpp"

namespace qgraph {

/// Matrix of the weighted Laplacian in the orthonormal basis
/// φ_v = m(v)^{-1/2} δ_v:
///   L_vv = ρ(v) - m(v)^{-1} Σ_{e∈E(v,v)} m_e      (loops counted twice)
///   L_vw = -(m(v) m(w))^{-1/2} Σ_{e∈E(v,w)} m_e   (v ≠ w)
/// Rows follow the dense vertex order.
SymmetricMatrix laplacian_matrix(const WeightedGraph& g);

/// Principal submatrix of laplacian_matrix(g) on the inner vertices
/// V \ ∂V (inner vertices keep their full weights). Order |V \ ∂V|, possibly 0.
SymmetricMatrix dirichlet_laplacian_matrix(const WeightedGraph& g);

/// Matrix of the unoriented Laplacian 2ρ - Δ.
SymmetricMatrix unoriented_laplacian_matrix(const WeightedGraph& g);

/// Grouped spectrum of the Kirchhoff (dirichlet = false) or Dirichlet
/// Laplacian. Rejects disconnected graphs with PreconditionError.
Spectrum spectrum_of(const WeightedGraph& g, bool dirichlet, double tol = kMultiplicityTolerance);

/// True iff {2 - μ} equals the spectrum as a multiset.
bool check_bipartite_symmetry(const Spectrum& s);

/// Vertex function F(v) = x_v / sqrt(m(v)) for a coefficient vector x in the
/// φ basis. With dirichlet = true, x is indexed by inner vertices and F
/// vanishes on ∂V.
std::vector<double> vertex_function(const WeightedGraph& g, const std::vector<double>& x, bool dirichlet);

}  // namespace qgraph
