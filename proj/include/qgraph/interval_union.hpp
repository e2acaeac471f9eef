#pragma once

#include <span>
#include <vector>

namespace qgraph {

inline constexpr double kIntervalMergeTolerance = 1e-12;

/// Closed interval [lo, hi]; lo == hi is a point.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Gap in a closed set: an open interval unless an end coincides with the
/// edge of the surrounding range and that edge is not covered.
struct Gap {
  double lo = 0.0;
  double hi = 0.0;
  bool open_lo = true;
  bool open_hi = true;
};

/// Sorted, pairwise disjoint closed intervals. Components closer than the
/// merge tolerance (absolute) are joined, so [1-a,1] ∪ [1,1+a] is one piece.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  /// Throws std::invalid_argument if some lo > hi.
  explicit IntervalUnion(std::span<const Interval> intervals, double merge_tol = kIntervalMergeTolerance);

  const std::vector<Interval>& components() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  bool contains(double x, double tol = 0.0) const;
  /// True if [lo,hi] lies inside a single component (up to tol).
  bool contains(const Interval& iv, double tol = 0.0) const;

  IntervalUnion unite(const IntervalUnion& other) const;
  IntervalUnion intersect(const IntervalUnion& other) const;
  /// Image under x ↦ pivot - x (the discrete bipartite symmetry is pivot = 2).
  IntervalUnion reflect(double pivot) const;

 private:
  std::vector<Interval> parts_;
  double merge_tol_ = kIntervalMergeTolerance;
};

IntervalUnion interval_union(std::span<const Interval> intervals);

/// Closure of range \ u, in canonical form.
IntervalUnion complement_gaps(const IntervalUnion& u, Interval range);

/// The open gaps of u inside range with positive width (> min_width).
std::vector<Gap> open_gaps(const IntervalUnion& u, Interval range, double min_width = kIntervalMergeTolerance);

}  // namespace qgraph
