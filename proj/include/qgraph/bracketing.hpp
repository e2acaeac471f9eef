#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/interval_union.hpp"
#include "qgraph/metric_spectra.hpp"
#include "qgraph/periodic.hpp"

namespace qgraph {

inline constexpr double kDegenerateWidth = 1e-9;

/// First letter: case of the Kirchhoff eigenvalue, second: of the Dirichlet
/// one. A0B only occurs when every vertex is a boundary vertex.
enum class KDCase { A0A, AA, AB, BB, A0B };
std::string to_string(KDCase c);

struct KDTableRow {
  std::size_t k = 0;  // 1-based, global index
  int n = 0;          // K_n block for metric rows, 0 for discrete ones
  Interval interval;
  KDCase tag = KDCase::AA;
  bool degenerate = false;
};

struct KDTable {
  std::vector<KDTableRow> rows;
  bool metric = false;
  bool bipartite = false;
  /// Set when the tables do not apply (no inner vertex, or H disconnected);
  /// rows are still listed but their counts were not checked.
  bool review = false;
  std::string review_reason;

  std::map<KDCase, std::size_t> counts(int n = -1) const;
};

/// J_k = [μ_k, μ_k^{∂V}] for k = 1..|V|, with μ_k^{∂V} = 2 past |V \ ∂V|.
/// Throws PreconditionError for ∂V = ∅ and TheoremViolation if some
/// μ_k > μ_k^{∂V}.
std::vector<Interval> kd_intervals_discrete(const WeightedGraph& h);

/// I_k = [λ_k, λ_k^{∂V}] for the equilateral metric graph, |E| per K_n.
std::vector<Interval> kd_intervals_metric(const WeightedGraph& h, int n_max = kDefaultNMax);

/// Tags each row from the data (Kirchhoff letter from μ_k ∈ {0}, (0,2), {2};
/// Dirichlet letter from k ≤ |V \ ∂V|) and checks the counts against the
/// tables. Mismatch or a degenerate A0A/AB row throws TheoremViolation.
KDTable classify_kd_intervals(const WeightedGraph& h);
KDTable classify_kd_intervals_metric(const WeightedGraph& h, int n_max = kDefaultNMax);

/// Expected row counts. Discrete: n is ignored.
std::map<KDCase, std::size_t> expected_kd_counts(bool bipartite, bool metric, int n, std::size_t vertices,
                                                 std::size_t edges, std::size_t boundary);

IntervalUnion kd_union(const KDTable& t);

/// Ĵ = (2 − J) ∩ J, or Î = ⋃_n τ_n(I ∩ K_n) ∩ (I ∩ K_n) for n ≤ n_max.
/// Returns J unchanged when bipartite is false.
IntervalUnion symmetrized_kd(const IntervalUnion& J, bool bipartite, bool metric, int n_max = kDefaultNMax);

/// The covering of pg is bipartite iff the quotient has a 2-colouring
/// compatible with some character ℤ^r → ℤ/2 of the labels.
bool covering_is_bipartite(const PeriodicGraph& pg);

struct GapOptions {
  bool metric = false;
  int n_max = kDefaultNMax;
  int grid = kDefaultGrid;
  bool bands = true;
  bool amenable = true;
};

struct GapReport {
  bool metric = false;
  int n_max = 0;
  Interval range;
  bool bipartite = false;
  KDTable table;
  IntervalUnion kd;
  std::optional<IntervalUnion> symmetrized;
  std::vector<Gap> kd_gaps;
  std::vector<Gap> certified_gaps;  // gaps of Ĵ (Î) when bipartite, else of J (I)
  std::vector<double> pinned;       // degenerate KD rows that are in the spectrum for every θ
  bool bands_computed = false;
  std::vector<Band> bands;
  std::vector<MetricBand> metric_bands;
  std::vector<Gap> band_gaps;
  std::optional<std::size_t> component_lower_bound;
  std::vector<std::string> notes;
};

/// Full pipeline from a periodic description (domain derived, bands
/// sampled on request) or from a fundamental domain alone.
GapReport gap_report(const PeriodicGraph& pg, const GapOptions& opt = {});
GapReport gap_report(const WeightedGraph& h, const GapOptions& opt = {});

}  // namespace qgraph
