#pragma once

// Invariant suites behind `boltzslice validate`. The reference sides
// (rejection sampling, discretised Boltzmann grids, quadratic-form
// expansion) are computed independently of the code paths they check.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "boltzslice/experiment.hpp"

namespace boltzslice::cli {

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  // Context that is reported but not asserted.
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  bool passed() const noexcept;
};

nlohmann::ordered_json report_json(const SuiteReport& report);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|. Inputs are
// copied and sorted.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct TruncConfig {
  std::string name;
  double mu = 0.0;
  double sigma2 = 1.0;
  IntervalUnion region;
};

// The five fixed configurations of the trunc suite.
std::vector<TruncConfig> trunc_configs();

inline constexpr std::size_t kKernelSamples = 100000;
inline constexpr double kKsThreshold = 0.02;
inline constexpr double kExpMeanRelTol = 0.01;

// Truncated normal on unions vs rejection from std::normal_distribution;
// shifted-exponential sample means vs lower + 1/rate.
SuiteReport validate_trunc(std::uint64_t seed);

// Himmelblau kappa = 0.1: 2e5 post-burn-in samples against the 200x200
// discretised Boltzmann grid on [-6, 6]^2.
inline constexpr double kGridTvKappa = 0.1;
inline constexpr std::uint64_t kGridTvSamples = 200000;
inline constexpr std::uint64_t kGridTvBurnin = 1000;
inline constexpr int kGridTvCells = 200;
inline constexpr double kGridTvThreshold = 0.05;

ExperimentConfig grid_tv_config(std::uint64_t seed);
SuiteReport grid_tv_report(const RunResult& run, std::uint64_t seed);
SuiteReport validate_grid_tv(std::uint64_t seed);

// Every sampler at every default energy level: zero audit violations, and
// zero empty-slice repairs for the four inversion samplers.
inline constexpr std::uint64_t kMembershipSteps = 10000;
SuiteReport validate_membership(std::uint64_t seed);

// Booth quadratic form at 100 random points, Booth(1,3) == 0 and a zero
// gradient there.
SuiteReport validate_booth(std::uint64_t seed);

}  // namespace boltzslice::cli
