#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/numerics.hpp"

namespace qgraph {

inline constexpr int kDefaultNMax = 4;

/// A0: trivial eigenvalue n²π² at the bottom of K_n. A: image of a discrete
/// eigenvalue in (0,2). B: topological eigenvalue (n+1)²π² at the top.
enum class CaseTag { A0, A, B };
std::string to_string(CaseTag t);

struct MetricEigenvalue {
  double lambda = 0.0;
  std::size_t multiplicity = 0;
  int band = 0;  // n, with λ ∈ K_n = [n²π², (n+1)²π²]
  CaseTag tag = CaseTag::A;
};

struct MetricSpectrum {
  /// Ascending by (band, λ); each band carries exactly |E| eigenvalues.
  std::vector<MetricEigenvalue> values;
  bool dirichlet = false;

  /// Σ multiplicities within K_n.
  std::size_t count_in_band(int n) const;
  /// Values of K_n, each repeated by multiplicity.
  std::vector<double> band_values(int n) const;
  /// Equal λ from neighbouring bands merged (exceptional values appear at the
  /// top of K_{n-1} and the bottom of K_n).
  Spectrum merged(double tol = kMultiplicityTolerance) const;
};

/// μ(λ) = 1 − cos√λ. Throws PreconditionError for λ < 0.
double mu_of_lambda(double lambda);

/// The unique λ in the interior of K_n with μ(λ) = μ. Requires 0 < μ < 2.
double lambda_branch(double mu, int n);

/// Lower and upper end n²π², (n+1)²π² of K_n.
double band_floor(int n);
double band_ceiling(int n);

/// Spectrum of the equilateral (all lengths 1) metric graph with standard
/// conditions, for K_0..K_{n_max}. dirichlet = true imposes Dirichlet
/// conditions on g.boundary() (Kirchhoff if that set is empty). Exceptional
/// multiplicities come from exact Betti ranks.
MetricSpectrum equilateral_spectrum(const WeightedGraph& g, bool dirichlet, int n_max = kDefaultNMax);

/// f_e(x) = α cos(ωx) + η sin(ωx), or for ω = 0 the linear α + ηx.
/// Interpolants record the vertex data they were built from.
struct EdgeFunction {
  enum class Kind { Trig, Interpolant };
  Kind kind = Kind::Trig;
  double alpha = 0.0;
  double eta = 0.0;
  double omega = 0.0;
  double start = 0.0;   // F(∂₋e), interpolants only
  double end = 0.0;     // F(∂₊e)
  double lambda = 0.0;

  double value(double x) const;
  double derivative(double x) const;
};

struct MetricFunction {
  std::vector<EdgeFunction> edges;
};

/// Φ_λ: on each edge the solution of −f'' = λf with the given end values,
/// F(∂₋e) sin√λ(1−x)/sin√λ + F(∂₊e) sin√λx/sin√λ; linear for λ = 0.
/// Throws PreconditionError when sin√λ = 0 with λ > 0.
MetricFunction vertex_eigenfunction(const WeightedGraph& g, const std::vector<double>& F, double lambda);

/// f_e = η_e sin(nπx) for n ≥ 1. c must lie in the kernel of the oriented (n
/// even) or unoriented (n odd) boundary map, relative to g.boundary() when
/// relative is set; PreconditionError otherwise.
MetricFunction topological_eigenfunction(const WeightedGraph& g, const OneChain& c, int n, bool relative);

/// φ_n = cos(nπx). For odd n the graph must be bipartite; the sign α_e = ±1
/// stands in for reorienting every edge from class A to class B.
MetricFunction trivial_eigenfunction(const WeightedGraph& g, int n);

/// Worst defect of the vertex conditions: continuity and the sum of inward
/// derivatives at inner vertices, |f(v)| at Dirichlet vertices (g.boundary()
/// when dirichlet is set).
double kirchhoff_residual(const MetricFunction& f, const WeightedGraph& g, bool dirichlet);

/// τ_n(λ) = ((2n+1)π − √λ)², the reflection of K_n. Throws for λ ∉ K_n.
double tau_symmetry(double lambda, int n);

/// τ_n maps the spectrum in K_n onto itself for every n ≤ n_max. Interior
/// values are compared with their K_n multiplicities; the end points n²π²,
/// (n+1)²π² by total multiplicity, for n ≥ 1 (at n = 0 the value 0 is simple
/// while π² also carries the topological eigenvalues) and only when K_{n+1}
/// is part of s, since the top end point shares its multiplicity with it.
bool check_tau_symmetry(const MetricSpectrum& s, int n_max, double tol = 1e-9);

}  // namespace qgraph
