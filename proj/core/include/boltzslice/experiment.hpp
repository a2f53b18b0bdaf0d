#pragma once

// Chain orchestration (single runs and energy-level sweeps) and the
// validation statistics built on them: discretised Boltzmann reference grids,
// empirical histograms and total-variation distance.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "boltzslice/core_model.hpp"
#include "boltzslice/objectives.hpp"
#include "boltzslice/samplers.hpp"

namespace boltzslice {

inline constexpr std::uint64_t kDefaultIterations = 1000;
inline constexpr std::uint64_t kDefaultBurnin = 100;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentConfig {
  ObjectiveId objective = ObjectiveId::rosenbrock;
  std::vector<double> kappas;
  std::uint64_t iterations = kDefaultIterations;
  std::uint64_t burnin = kDefaultBurnin;
  std::uint64_t seed = kDefaultSeed;
  std::optional<Point> start;  // nullopt: default_start(objective)
  SamplerKind sampler = SamplerKind::slice;
  double metropolis_sigma = 0.0;
  // Re-check slice membership after every step (counts land in
  // RunResult::slice_violations).
  bool audit = true;

  // Throws ConfigError: empty or non-positive kappas, duplicates,
  // iterations == 0, burnin >= iterations, bad Metropolis sigma.
  void validate() const;
};

// Rosenbrock starts at (-1, 1); every other objective at its box centre.
Point default_start(ObjectiveId id);

// Stream index of a chain: the IEEE-754 bit pattern of its kappa. Keying by
// value keeps every chain's randomness independent of which other kappas
// share the sweep and of their order.
std::uint64_t stream_index(double kappa) noexcept;

struct RunResult {
  ObjectiveId objective = ObjectiveId::rosenbrock;
  SamplerKind sampler = SamplerKind::slice;
  double kappa = 0.0;
  std::uint64_t seed = 0;
  Point start;
  Trace trace;
  BestPoint best;
  Point ergodic_mean;
  std::optional<Occupancy> occupancy;
  StepDiagnostics diagnostics;
  std::uint64_t slice_violations = 0;
  double wall_time_seconds = 0.0;
};

// Runs config.iterations steps at the config's single kappa. Throws
// ConfigError if the config is invalid or lists more than one kappa.
RunResult run_chain(const ExperimentConfig& config);

// One independent chain per kappa, executed concurrently and returned sorted
// by kappa. The input order of kappas does not matter.
std::vector<RunResult> run_sweep(const ExperimentConfig& config);

// Row-major n1 x n2 grid of cell probabilities over a box; cell (i, j)
// covers x1 bin i and x2 bin j.
struct ProbabilityGrid {
  DomainBox box;
  int n = 0;
  std::vector<double> p;

  double at(int i, int j) const { return p[static_cast<std::size_t>(i) * n + j]; }
  // Cell index of x, or nullopt when x lies outside the box.
  std::optional<std::size_t> cell_of(Point x) const noexcept;
};

// Cell masses proportional to exp(-kappa f(cell centre)), normalised with
// max-subtraction.
ProbabilityGrid grid_reference(ObjectiveId id, EnergyLevel kappa, const DomainBox& box, int n);
ProbabilityGrid grid_reference(const std::function<double(Point)>& f, EnergyLevel kappa,
                               const DomainBox& box, int n);

// Normalised histogram of the entries that fall inside the box.
ProbabilityGrid empirical_grid(std::span<const TraceEntry> entries, const DomainBox& box, int n);

// (1/2) sum |p - q|. Throws ArgumentError on shape mismatch or if either
// side does not sum to 1 within 1e-9.
double tv_distance(std::span<const double> p, std::span<const double> q);
double tv_distance(const ProbabilityGrid& p, const ProbabilityGrid& q);

// Normalised 1-D histogram over [lo, hi]; values outside are dropped.
std::vector<double> histogram_1d(std::span<const double> values, double lo, double hi, int bins);

}  // namespace boltzslice
