#pragma once

#include <cstddef>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/numerics.hpp"

namespace qgraph {

/// Coefficients η_e, one per edge in edge order.
using OneChain = std::vector<Rational>;

struct BettiReport {
  std::size_t b0 = 0;       // oriented
  std::size_t b1 = 0;
  std::size_t b0_bar = 0;   // unoriented
  std::size_t b1_bar = 0;
  bool relative = false;    // computed relative to g.boundary()
  int beta = 0;             // 1 iff bipartite
};

/// Boundary map C_1 -> C_0. Rows are V (or the inner vertices, ascending,
/// when relative), columns are edges. Oriented: ∂e = ∂₊e − ∂₋e, so a loop
/// column is zero. Unoriented: ∂̄e = ∂₊e + ∂₋e, a loop contributes 2.
RationalMatrix boundary_matrix(const WeightedGraph& g, bool oriented, bool relative);

/// Exact ranks of both boundary maps. relative = true uses g.boundary() as ∂V.
/// Requires a connected graph.
BettiReport betti_numbers(const WeightedGraph& g, bool relative);

/// Compare rank-computed numbers against the closed forms, absolute and (if
/// ∂V is nonempty) relative.
bool verify_betti_formula(const WeightedGraph& g);

/// Basis of ker ∂ (or ker ∂̄), integer coefficients with content 1 and the
/// first nonzero entry positive.
std::vector<OneChain> cycle_basis(const WeightedGraph& g, bool oriented, bool relative);

/// True iff ∂c = 0 exactly.
bool is_cycle(const WeightedGraph& g, const OneChain& c, bool oriented, bool relative);

}  // namespace qgraph
