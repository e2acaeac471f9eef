#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/numerics.hpp"

namespace qgraph {

inline constexpr int kDefaultGrid = 64;
inline constexpr double kFlatBandWidth = 1e-9;
inline constexpr double kBracketTolerance = 1e-9;

using Label = std::vector<std::int64_t>;

/// ℤ^r-periodic graph given by its quotient G₀ (standard weights) and one
/// translation label per edge: the edge t -> h of G₀ joins t in tile 0 to h
/// in tile γ_e.
struct PeriodicGraph {
  WeightedGraph quotient;
  int rank = 1;
  std::vector<Label> labels;  // one per quotient edge, each of length rank
};

/// Validates label arity (empty labels mean zero), a connected quotient and
/// at least one nonzero label. Throws ValidationError.
PeriodicGraph make_periodic(WeightedGraph quotient, std::vector<Label> labels);
PeriodicGraph build_periodic(const GraphSpec& spec);

/// True if some edge of the description carries a nonzero label.
bool has_nonzero_label(const GraphSpec& spec);

struct FundamentalDomain {
  WeightedGraph graph;  // standard weights, boundary = ∂V
  std::vector<VertexId> origin;  // quotient vertex behind each vertex of the domain
  std::vector<Label> shift;      // tile of each vertex of the domain (zero for originals)
};

/// One boundary copy w^γ per (head w, nonzero label γ); those edges are
/// redirected to the copy and w together with its copies form ∂V. Quotient
/// vertices left without edges are dropped, so the domain may be
/// disconnected.
FundamentalDomain derive_fundamental_domain(const PeriodicGraph& pg);

/// Laplacian on θ-equivariant functions, f(x+γ) = e^{iθ·γ} f(x), as a
/// |V₀|×|V₀| Hermitian matrix in the orthonormal vertex basis.
HermitianMatrix twisted_laplacian(const PeriodicGraph& pg, std::span<const double> theta);

/// Ascending eigenvalues of twisted_laplacian.
std::vector<double> twisted_eigenvalues(const PeriodicGraph& pg, std::span<const double> theta);

/// Calls fn(theta) for every point of the uniform grid {2πj/G}^r.
void for_each_grid_point(int rank, int grid, const std::function<void(std::span<const double>)>& fn);

struct Band {
  std::size_t index = 0;  // k, 1-based
  double lo = 0.0;
  double hi = 0.0;
  bool flat = false;
};

/// k-th band = [min, max] over the grid of the k-th twisted eigenvalue.
std::vector<Band> floquet_bands(const PeriodicGraph& pg, int grid = kDefaultGrid);

/// dim ker d_θ* for the twisted derivative (d_θ f)_e = ρ(γ_e) f(∂₊e) ∓ f(∂₋e)
/// (minus for oriented), counted as eigenvalues of d_θ d_θ* below 1e-9.
std::size_t twisted_nullity(const PeriodicGraph& pg, std::span<const double> theta, bool oriented);

struct BracketViolation {
  std::vector<double> theta;
  std::size_t k = 0;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct BracketReport {
  std::size_t samples = 0;
  std::size_t checks = 0;
  double worst_lower_margin = 0.0;  // min over samples of λ_k^θ − μ_k
  double worst_upper_margin = 0.0;  // min over samples of μ_k^{∂V} − λ_k^θ
  std::vector<BracketViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks μ_k(H) ≤ λ_k^θ ≤ μ_k^{∂V}(H) (with μ_k^{∂V} = 2 beyond |V̊|) for all
/// k ≤ |V₀| and all grid points. Violations are collected, not thrown.
BracketReport verify_bracketing(const PeriodicGraph& pg, int grid = kDefaultGrid);

/// Band of the equilateral metric periodic graph inside K_n.
struct MetricBand {
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
  bool flat = false;
  bool topological = false;  // flat band at (n+1)²π² from the cycle space
};

/// Images of the discrete bands under the branch of μ ↦ λ on each K_n
/// (closed, so μ = 0, 2 land on the end points of K_n), plus |E₀| − |V₀|
/// flat topological bands at (n+1)²π².
std::vector<MetricBand> metric_bands(const PeriodicGraph& pg, const std::vector<Band>& bands, int n_max);

/// λ(μ) on K_n extended to the closed range μ ∈ [0,2].
double closed_branch(double mu, int n);

std::string label_string(const Label& label);

}  // namespace qgraph
