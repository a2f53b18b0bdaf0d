#pragma once

// Finite unions of closed real intervals and the analytic slice-region
// inversions built on them.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace boltzslice {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted, pairwise-separated closed intervals. Every constructor normalizes:
// input intervals are sorted and any that overlap, touch or sit closer than
// kMergeGap are merged. Zero-length intervals are kept.
class IntervalUnion {
 public:
  static constexpr double kMergeGap = 1e-14;

  IntervalUnion() = default;
  // Throws ArgumentError if any interval has lo > hi or a NaN endpoint.
  explicit IntervalUnion(std::vector<Interval> intervals);
  IntervalUnion(std::initializer_list<Interval> intervals);

  static IntervalUnion single(double lo, double hi);

  std::span<const Interval> intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const noexcept { return intervals_[i]; }

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Interval> intervals_;
};

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);

// {x : lo <= x^2 <= hi}.
IntervalUnion invert_square_band(double lo, double hi);

enum class CosineSide { ge, le };

// Solution set of cos(omega*x + phi) >= t (or <= t) restricted to `domain`.
// t is clamped into [-1, 1] first, so |t| > 1 gives the full or empty set.
IntervalUnion solve_cosine(double omega, double phi, double t, CosineSide side, Interval domain);

double total_length(const IntervalUnion& u) noexcept;
bool contains(const IntervalUnion& u, double x) noexcept;

}  // namespace boltzslice
