#include "boltzslice/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "boltzslice/errors.hpp"

namespace boltzslice {

RngStream::RngStream(std::array<std::uint64_t, 4> state, std::uint64_t stream_id) noexcept
    : s_(state), stream_id_(stream_id) {
  // xoshiro must not start from the all-zero state.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGoldenGamma;
}

std::uint64_t RngStream::next_u64() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double RngStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() noexcept {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

RngStream derive_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 sm(splitmix64_mix(seed ^ (index * kGoldenGamma)));
  std::array<std::uint64_t, 4> state{};
  for (auto& w : state) w = sm.next();
  return RngStream(state, index);
}

double normal_cdf(double z) noexcept { return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0); }

double normal_sf(double z) noexcept { return 0.5 * std::erfc(z * std::numbers::sqrt2 / 2.0); }

double log_normal_sf(double z) noexcept {
  if (z < -5.0) return std::log1p(-normal_cdf(z));
  if (z < 30.0) return std::log(normal_sf(z));
  // Mills-ratio asymptotic series; the omitted term is below 1e-12 here.
  const double r = 1.0 / (z * z);
  const double series = r * (-1.0 + r * (3.0 + r * (-15.0 + r * 105.0)));
  return -0.5 * z * z - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log1p(series);
}

namespace {

constexpr double kA[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                         1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                         6.680131188771972e+01, -1.328068155288572e+01};
constexpr double kC[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                         -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                         3.754408661907416e+00};
constexpr double kLowBreak = 0.02425;

// Quantile for p in (0, 0.5].
double lower_quantile(double p) noexcept {
  double x = 0.0;
  if (p < kLowBreak) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((kC[0] * q + kC[1]) * q + kC[2]) * q + kC[3]) * q + kC[4]) * q + kC[5]) /
        ((((kD[0] * q + kD[1]) * q + kD[2]) * q + kD[3]) * q + 1.0);
  } else {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * q /
        (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
  }
  // Halley refinement against the erfc-based CDF.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("normal_quantile: p must lie in (0, 1)");
  if (p <= 0.5) return lower_quantile(p);
  return -lower_quantile(1.0 - p);
}

double sample_normal(RngStream& rng) noexcept { return normal_quantile(rng.uniform_open()); }

double uniform_union_at(const IntervalUnion& u, double q, DrawCounters* counters) {
  if (u.empty()) throw EmptySliceError("uniform draw from an empty interval union");
  const double length = total_length(u);
  if (!(length > 0.0)) {
    if (counters) ++counters->degenerate_slices;
    const auto& first = u[0];
    return first.lo + 0.5 * (first.hi - first.lo);
  }
  double pos = q * length;
  const auto ivs = u.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const double len = ivs[i].length();
    if (pos < len || i + 1 == ivs.size()) return std::clamp(ivs[i].lo + pos, ivs[i].lo, ivs[i].hi);
    pos -= len;
  }
  return ivs.back().hi;
}

double sample_uniform_union(const IntervalUnion& u, RngStream& rng, DrawCounters* counters) {
  return uniform_union_at(u, rng.uniform(), counters);
}

namespace {

// Beyond this many standard deviations normal_sf drops below ~1e-300.
constexpr double kTailSwitch = 37.0;

// log P(a <= Z <= b) for standard normal Z.
double log_interval_mass(double a, double b) noexcept {
  if (!(a < b)) return -std::numeric_limits<double>::infinity();
  if (a >= 0.0) {
    const double la = log_normal_sf(a);
    const double lb = log_normal_sf(b);
    return la + std::log1p(-std::exp(lb - la));
  }
  if (b <= 0.0) return log_interval_mass(-b, -a);
  return std::log1p(-normal_sf(b) - normal_sf(-a));
}

// Z | a <= Z <= b with 0 <= a < b.
double right_tail_draw(double a, double b, RngStream& rng) {
  if (a < kTailSwitch) {
    const double pa = normal_sf(a);
    const double pb = normal_sf(b);
    const double p = pa - rng.uniform() * (pa - pb);
    if (!(p > 0.0)) return a;
    return std::clamp(-normal_quantile(std::min(p, 0.5)), a, b);
  }
  // Density on [a, b] is proportional to exp(-a t) exp(-t^2 / 2) with t = z - a:
  // propose t from the truncated Exp(a) and accept with exp(-t^2 / 2).
  const double width_mass = -std::expm1(-a * (b - a));
  for (;;) {
    const double t = -std::log1p(-rng.uniform() * width_mass) / a;
    if (rng.uniform() < std::exp(-0.5 * t * t)) return std::min(a + t, b);
  }
}

// Z | a <= Z <= b for any a < b.
double standard_interval_draw(double a, double b, RngStream& rng) {
  if (a >= 0.0) return right_tail_draw(a, b, rng);
  if (b <= 0.0) return -right_tail_draw(-b, -a, rng);
  const double pa = normal_sf(-a);        // Phi(a)
  const double pb = 1.0 - normal_sf(b);   // Phi(b)
  const double p = pa + rng.uniform() * (pb - pa);
  if (!(p > 0.0 && p < 1.0)) return std::clamp(0.0, a, b);
  return std::clamp(normal_quantile(p), a, b);
}

double closest_point(const IntervalUnion& u, double target) noexcept {
  double best = u[0].lo;
  double best_dist = std::abs(best - target);
  for (const auto& iv : u.intervals()) {
    const double c = std::clamp(target, iv.lo, iv.hi);
    const double d = std::abs(c - target);
    if (d < best_dist) {
      best = c;
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

double sample_truncated_normal_union(double mu, double sigma2, const IntervalUnion& u,
                                     RngStream& rng, DrawCounters* counters) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw ArgumentError("truncated normal: sigma2 must be finite and > 0");
  }
  if (u.empty()) throw EmptySliceError("truncated normal draw on an empty interval union");

  const double sigma = std::sqrt(sigma2);
  const auto ivs = u.intervals();
  std::vector<double> log_mass(ivs.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    log_mass[i] = log_interval_mass((ivs[i].lo - mu) / sigma, (ivs[i].hi - mu) / sigma);
    max_log = std::max(max_log, log_mass[i]);
  }
  if (!std::isfinite(max_log)) {
    if (counters) ++counters->tail_fallbacks;
    return closest_point(u, mu);
  }

  double total = 0.0;
  for (auto& lm : log_mass) {
    lm = std::exp(lm - max_log);
    total += lm;
  }
  double pick = rng.uniform() * total;
  std::size_t chosen = ivs.size() - 1;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (log_mass[i] > 0.0 && pick < log_mass[i]) {
      chosen = i;
      break;
    }
    pick -= log_mass[i];
  }
  while (log_mass[chosen] == 0.0) --chosen;  // rounding pushed past the last weighted piece

  const auto& iv = ivs[chosen];
  const double z = standard_interval_draw((iv.lo - mu) / sigma, (iv.hi - mu) / sigma, rng);
  return std::clamp(mu + sigma * z, iv.lo, iv.hi);
}

double shifted_exponential_at(double rate, double lower, double q) noexcept {
  return lower - std::log1p(-q) / rate;
}

double sample_shifted_exponential(double rate, double lower, RngStream& rng) noexcept {
  return shifted_exponential_at(rate, lower, rng.uniform());
}

}  // namespace boltzslice
