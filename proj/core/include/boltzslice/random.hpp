#pragma once

// Reproducible random streams and the elementary draws used by the samplers.
//
// Generator: xoshiro256** (Blackman & Vigna, 2018), state seeded from
// splitmix64. A stream is derived from (seed, index) by
//
//   mixed = splitmix64_mix(seed ^ (index * 0x9E3779B97F4A7C15))
//
// and then filling the four state words with successive splitmix64 outputs
// started from `mixed`. splitmix64_mix is the splitmix64 finalizer:
//
//   z += 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z = z ^ (z >> 31)
//
// Only integer arithmetic is involved up to the uniform draw, so identical
// (seed, index) reproduce identical sequences on every platform.

#include <array>
#include <cstdint>
#include <limits>

#include "boltzslice/interval_union.hpp"

namespace boltzslice {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    const std::uint64_t out = splitmix64_mix(state_);
    state_ += kGoldenGamma;
    return out;
  }

 private:
  std::uint64_t state_;
};

class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::array<std::uint64_t, 4> state, std::uint64_t stream_id) noexcept;

  std::uint64_t next_u64() noexcept;
  result_type operator()() noexcept { return next_u64(); }
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  // 53-bit uniform on [0, 1).
  double uniform() noexcept;
  // 53-bit uniform on the open interval (0, 1).
  double uniform_open() noexcept;

  std::uint64_t stream_id() const noexcept { return stream_id_; }
  const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::array<std::uint64_t, 4> s_;
  std::uint64_t stream_id_;
};

RngStream derive_stream(std::uint64_t seed, std::uint64_t index) noexcept;

// Standard normal CDF via erfc.
double normal_cdf(double z) noexcept;
// Upper tail 1 - normal_cdf(z), accurate far into the right tail.
double normal_sf(double z) noexcept;
// log(normal_sf(z)) without underflow for large z.
double log_normal_sf(double z) noexcept;
// Acklam's rational approximation followed by one Halley step.
// Throws ArgumentError outside (0, 1).
double normal_quantile(double p);

// Counters for the degenerate paths of the union samplers.
struct DrawCounters {
  std::uint64_t degenerate_slices = 0;  // zero-length uniform unions
  std::uint64_t tail_fallbacks = 0;     // zero Gaussian mass on the union

  DrawCounters& operator+=(const DrawCounters& o) noexcept {
    degenerate_slices += o.degenerate_slices;
    tail_fallbacks += o.tail_fallbacks;
    return *this;
  }
};

double sample_normal(RngStream& rng) noexcept;

// Length-weighted uniform draw over u, using q in [0, 1) as the uniform
// variate. A union of zero total length yields its first point and bumps
// counters->degenerate_slices. Throws EmptySliceError on an empty union.
double uniform_union_at(const IntervalUnion& u, double q, DrawCounters* counters = nullptr);
double sample_uniform_union(const IntervalUnion& u, RngStream& rng,
                            DrawCounters* counters = nullptr);

// Exact draw from N(mu, sigma2) conditioned on u. Each interval's mass is
// computed in log space; one interval is picked proportionally and the draw
// is inverted inside it (an exponential-proposal rejection step takes over
// beyond 37 standard deviations where the CDF underflows). If every
// interval has zero mass (only degenerate intervals), the point of u
// closest to mu is returned and counters->tail_fallbacks is bumped.
double sample_truncated_normal_union(double mu, double sigma2, const IntervalUnion& u,
                                     RngStream& rng, DrawCounters* counters = nullptr);

// lower - log(1 - q) / rate for q in [0, 1).
double shifted_exponential_at(double rate, double lower, double q) noexcept;
double sample_shifted_exponential(double rate, double lower, RngStream& rng) noexcept;

}  // namespace boltzslice
