#include "qgraph/interval_union.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qgraph {

IntervalUnion::IntervalUnion(std::span<const Interval> intervals, double merge_tol) : merge_tol_(merge_tol) {
  std::vector<Interval> sorted(intervals.begin(), intervals.end());
  for (const auto& iv : sorted)
    if (iv.lo > iv.hi)
      throw std::invalid_argument("interval with lo > hi: [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]");
  std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& iv : sorted) {
    if (!parts_.empty() && iv.lo <= parts_.back().hi + merge_tol_) {
      parts_.back().hi = std::max(parts_.back().hi, iv.hi);
    } else {
      parts_.push_back(iv);
    }
  }
}

bool IntervalUnion::contains(double x, double tol) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& p) { return x >= p.lo - tol && x <= p.hi + tol; });
}

bool IntervalUnion::contains(const Interval& iv, double tol) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Interval& p) { return iv.lo >= p.lo - tol && iv.hi <= p.hi + tol; });
}

IntervalUnion IntervalUnion::unite(const IntervalUnion& other) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return IntervalUnion(all, merge_tol_);
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (lo <= hi) {
        out.push_back({lo, hi});
      } else if (lo <= hi + merge_tol_) {
        out.push_back({hi, hi});
      }
    }
  }
  return IntervalUnion(out, merge_tol_);
}

IntervalUnion IntervalUnion::reflect(double pivot) const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back({pivot - p.hi, pivot - p.lo});
  return IntervalUnion(out, merge_tol_);
}

IntervalUnion interval_union(std::span<const Interval> intervals) { return IntervalUnion(intervals); }

IntervalUnion complement_gaps(const IntervalUnion& u, Interval range) {
  if (range.lo > range.hi) throw std::invalid_argument("empty range");
  std::vector<Interval> out;
  double cursor = range.lo;
  for (const auto& p : u.components()) {
    if (p.hi < range.lo || p.lo > range.hi) continue;
    if (p.lo > cursor) out.push_back({cursor, p.lo});
    cursor = std::max(cursor, p.hi);
  }
  if (cursor < range.hi) out.push_back({cursor, range.hi});
  return IntervalUnion(out);
}

std::vector<Gap> open_gaps(const IntervalUnion& u, Interval range, double min_width) {
  std::vector<Gap> out;
  double cursor = range.lo;
  bool cursor_covered = false;
  for (const auto& p : u.components()) {
    if (p.hi < range.lo || p.lo > range.hi) continue;
    if (p.lo - cursor > min_width) out.push_back({cursor, p.lo, cursor_covered, true});
    if (p.hi >= cursor) {
      cursor = p.hi;
      cursor_covered = true;
    }
  }
  if (range.hi - cursor > min_width) out.push_back({cursor, range.hi, cursor_covered, false});
  return out;
}

}  // namespace qgraph
