#include "boltzslice/experiment.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "boltzslice/errors.hpp"

namespace boltzslice {

void ExperimentConfig::validate() const {
  if (kappas.empty()) throw ConfigError("at least one energy level is required");
  for (double k : kappas) {
    if (!std::isfinite(k) || k <= 0.0) throw ConfigError("energy levels must be finite and > 0");
  }
  auto sorted = kappas;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("energy levels must be distinct");
  }
  if (iterations == 0) throw ConfigError("iterations must be positive");
  if (burnin >= iterations) throw ConfigError("burn-in must be smaller than iterations");
  if (sampler == SamplerKind::metropolis &&
      (!(metropolis_sigma > 0.0) || !std::isfinite(metropolis_sigma))) {
    throw ConfigError("metropolis step size must be > 0");
  }
  if (start && !is_finite(*start)) throw ConfigError("start point must be finite");
}

Point default_start(ObjectiveId id) {
  if (id == ObjectiveId::rosenbrock) return {-1.0, 1.0};
  return objective_spec(id).box.center();
}

std::uint64_t stream_index(double kappa) noexcept { return std::bit_cast<std::uint64_t>(kappa); }

namespace {

RunResult run_single(const ExperimentConfig& config, double kappa_value) {
  const EnergyLevel kappa(kappa_value);
  const Point start = config.start.value_or(default_start(config.objective));
  auto sampler =
      make_sampler(config.objective, config.sampler, kappa, start, config.metropolis_sigma);
  auto rng = derive_stream(config.seed, stream_index(kappa_value));

  RunResult result;
  result.objective = config.objective;
  result.sampler = config.sampler;
  result.kappa = kappa_value;
  result.seed = config.seed;
  result.start = start;
  result.trace = Trace(static_cast<std::size_t>(config.burnin));
  result.trace.reserve(static_cast<std::size_t>(config.iterations));

  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t g = 0; g < config.iterations; ++g) {
    const Point x = sampler->step(rng, result.diagnostics);
    if (config.audit && !sampler->audit()) ++result.slice_violations;
    result.trace.append(x, evaluate(config.objective, x));
  }
  result.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  result.best = best_point(result.trace);
  result.ergodic_mean = ergodic_mean(result.trace);
  if (auto modes = objective_modes(config.objective)) {
    result.occupancy = mode_occupancy(result.trace, *modes);
  }
  return result;
}

}  // namespace

RunResult run_chain(const ExperimentConfig& config) {
  config.validate();
  if (config.kappas.size() != 1) throw ConfigError("run_chain expects exactly one energy level");
  return run_single(config, config.kappas.front());
}

std::vector<RunResult> run_sweep(const ExperimentConfig& config) {
  config.validate();
  auto kappas = config.kappas;
  std::sort(kappas.begin(), kappas.end());

  std::vector<std::future<RunResult>> pending;
  pending.reserve(kappas.size());
  for (double k : kappas) {
    pending.push_back(std::async(std::launch::async, [&config, k] { return run_single(config, k); }));
  }
  std::vector<RunResult> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

std::optional<std::size_t> ProbabilityGrid::cell_of(Point x) const noexcept {
  if (!box.contains(x)) return std::nullopt;
  const double w1 = (box.x1_hi - box.x1_lo) / n;
  const double w2 = (box.x2_hi - box.x2_lo) / n;
  const int i = std::min(n - 1, static_cast<int>((x.x1 - box.x1_lo) / w1));
  const int j = std::min(n - 1, static_cast<int>((x.x2 - box.x2_lo) / w2));
  return static_cast<std::size_t>(i) * n + j;
}

ProbabilityGrid grid_reference(const std::function<double(Point)>& f, EnergyLevel kappa,
                               const DomainBox& box, int n) {
  if (n < 2) throw ArgumentError("reference grid needs n >= 2");
  box.validate();
  ProbabilityGrid grid{box, n, {}};
  const auto un = static_cast<std::size_t>(n);
  grid.p.resize(un * un);
  const double w1 = (box.x1_hi - box.x1_lo) / n;
  const double w2 = (box.x2_hi - box.x2_lo) / n;
  double max_log = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Point centre{box.x1_lo + (i + 0.5) * w1, box.x2_lo + (j + 0.5) * w2};
      const double lp = -kappa.value() * f(centre);
      grid.p[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = lp;
      max_log = std::max(max_log, lp);
    }
  }
  double total = 0.0;
  for (auto& v : grid.p) {
    v = std::exp(v - max_log);
    total += v;
  }
  for (auto& v : grid.p) v /= total;
  return grid;
}

ProbabilityGrid grid_reference(ObjectiveId id, EnergyLevel kappa, const DomainBox& box, int n) {
  return grid_reference([id](Point x) { return evaluate(id, x); }, kappa, box, n);
}

ProbabilityGrid empirical_grid(std::span<const TraceEntry> entries, const DomainBox& box, int n) {
  if (n < 1) throw ArgumentError("histogram grid needs n >= 1");
  box.validate();
  ProbabilityGrid grid{box, n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  std::size_t inside = 0;
  for (const auto& e : entries) {
    if (auto cell = grid.cell_of(e.point)) {
      grid.p[*cell] += 1.0;
      ++inside;
    }
  }
  if (inside > 0) {
    for (auto& v : grid.p) v /= static_cast<double>(inside);
  }
  return grid;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ArgumentError("tv_distance: shape mismatch");
  double sp = 0.0;
  double sq = 0.0;
  double diff = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sp += p[i];
    sq += q[i];
    diff += std::abs(p[i] - q[i]);
  }
  if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
    throw ArgumentError("tv_distance: inputs must each sum to 1");
  }
  return 0.5 * diff;
}

double tv_distance(const ProbabilityGrid& p, const ProbabilityGrid& q) {
  if (p.n != q.n) throw ArgumentError("tv_distance: grid shape mismatch");
  return tv_distance(p.p, q.p);
}

std::vector<double> histogram_1d(std::span<const double> values, double lo, double hi, int bins) {
  if (bins < 1 || !(lo < hi)) throw ArgumentError("histogram_1d: bad range or bin count");
  std::vector<double> h(static_cast<std::size_t>(bins), 0.0);
  const double width = (hi - lo) / bins;
  std::size_t inside = 0;
  for (double v : values) {
    if (!(v >= lo && v <= hi)) continue;
    const int b = std::min(bins - 1, static_cast<int>((v - lo) / width));
    h[static_cast<std::size_t>(b)] += 1.0;
    ++inside;
  }
  if (inside > 0) {
    for (auto& v : h) v /= static_cast<double>(inside);
  }
  return h;
}

}  // namespace boltzslice
