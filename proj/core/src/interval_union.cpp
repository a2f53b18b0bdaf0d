#include "boltzslice/interval_union.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "boltzslice/errors.hpp"

namespace boltzslice {

namespace {

std::vector<Interval> normalize(std::vector<Interval> in) {
  for (const auto& iv : in) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || iv.lo > iv.hi) {
      throw ArgumentError("interval with lo > hi or NaN endpoint");
    }
  }
  std::sort(in.begin(), in.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  std::vector<Interval> out;
  out.reserve(in.size());
  for (const auto& iv : in) {
    if (!out.empty() && iv.lo - out.back().hi < IntervalUnion::kMergeGap) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<Interval> intervals)
    : intervals_(normalize(std::move(intervals))) {}

IntervalUnion::IntervalUnion(std::initializer_list<Interval> intervals)
    : intervals_(normalize(std::vector<Interval>(intervals))) {}

IntervalUnion IntervalUnion::single(double lo, double hi) { return IntervalUnion{{lo, hi}}; }

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> out;
  const auto ia = a.intervals();
  const auto ib = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ia.size() && j < ib.size()) {
    const double lo = std::max(ia[i].lo, ib[j].lo);
    const double hi = std::min(ia[i].hi, ib[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (ia[i].hi < ib[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalUnion(std::move(out));
}

IntervalUnion invert_square_band(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw ArgumentError("invert_square_band: requires lo <= hi");
  }
  if (hi < 0.0) return {};
  const double r_hi = std::sqrt(hi);
  if (lo <= 0.0) return IntervalUnion::single(-r_hi, r_hi);
  const double r_lo = std::sqrt(lo);
  return IntervalUnion{{-r_hi, -r_lo}, {r_lo, r_hi}};
}

IntervalUnion solve_cosine(double omega, double phi, double t, CosineSide side, Interval domain) {
  if (omega == 0.0 || !std::isfinite(omega)) throw ArgumentError("solve_cosine: omega must be non-zero");
  if (!(domain.lo < domain.hi)) throw ArgumentError("solve_cosine: empty domain");

  constexpr double kPi = std::numbers::pi;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const auto full = IntervalUnion::single(domain.lo, domain.hi);

  // In terms of theta = omega*x + phi the solution set is the union over k of
  // [centre_k - half, centre_k + half] with centre_k = 2 pi k + offset.
  double offset = 0.0;
  double half = 0.0;
  if (side == CosineSide::ge) {
    if (t <= -1.0) return full;
    if (t > 1.0) return {};
    half = std::acos(std::clamp(t, -1.0, 1.0));
  } else {
    if (t >= 1.0) return full;
    if (t < -1.0) return {};
    offset = kPi;
    half = kPi - std::acos(std::clamp(t, -1.0, 1.0));
  }

  const double theta_a = omega * domain.lo + phi;
  const double theta_b = omega * domain.hi + phi;
  const double theta_lo = std::min(theta_a, theta_b);
  const double theta_hi = std::max(theta_a, theta_b);
  const auto k_first = static_cast<long long>(std::floor((theta_lo - half - offset) / kTwoPi));
  const auto k_last = static_cast<long long>(std::ceil((theta_hi + half - offset) / kTwoPi));

  std::vector<Interval> pieces;
  pieces.reserve(static_cast<std::size_t>(k_last - k_first + 1));
  for (long long k = k_first; k <= k_last; ++k) {
    const double centre = kTwoPi * static_cast<double>(k) + offset;
    double x_a = (centre - half - phi) / omega;
    double x_b = (centre + half - phi) / omega;
    if (x_a > x_b) std::swap(x_a, x_b);
    const double lo = std::max(x_a, domain.lo);
    const double hi = std::min(x_b, domain.hi);
    if (lo <= hi) pieces.push_back({lo, hi});
  }
  return IntervalUnion(std::move(pieces));
}

double total_length(const IntervalUnion& u) noexcept {
  double sum = 0.0;
  for (const auto& iv : u.intervals()) sum += iv.length();
  return sum;
}

bool contains(const IntervalUnion& u, double x) noexcept {
  const auto ivs = u.intervals();
  auto it = std::upper_bound(ivs.begin(), ivs.end(), x,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == ivs.begin()) return false;
  --it;
  return x <= it->hi;
}

}  // namespace boltzslice
