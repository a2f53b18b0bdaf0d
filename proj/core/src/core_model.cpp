#include "boltzslice/core_model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "boltzslice/errors.hpp"

namespace boltzslice {

bool is_finite(Point p) noexcept { return std::isfinite(p.x1) && std::isfinite(p.x2); }

double distance(Point a, Point b) noexcept { return std::hypot(a.x1 - b.x1, a.x2 - b.x2); }

EnergyLevel::EnergyLevel(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa) || kappa <= 0.0) {
    throw ArgumentError("energy level must be finite and > 0, got " + std::to_string(kappa));
  }
}

std::string_view to_string(ObjectiveId id) noexcept {
  switch (id) {
    case ObjectiveId::rosenbrock: return "rosenbrock";
    case ObjectiveId::himmelblau: return "himmelblau";
    case ObjectiveId::rastrigin: return "rastrigin";
    case ObjectiveId::shubert: return "shubert";
    case ObjectiveId::booth: return "booth";
    case ObjectiveId::michalewicz: return "michalewicz";
  }
  return "unknown";
}

std::optional<ObjectiveId> parse_objective(std::string_view name) noexcept {
  for (ObjectiveId id : kAllObjectives) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Phase phase) noexcept {
  return phase == Phase::burnin ? "burnin" : "sample";
}

const TraceEntry& Trace::append(Point point, double f) {
  const auto iter = static_cast<std::uint64_t>(entries_.size()) + 1;
  const Phase phase = entries_.size() < burnin_ ? Phase::burnin : Phase::sample;
  entries_.push_back({iter, phase, point, f});
  return entries_.back();
}

std::span<const TraceEntry> Trace::samples() const noexcept {
  if (entries_.size() <= burnin_) return {};
  return std::span<const TraceEntry>(entries_).subspan(burnin_);
}

ModeSet::ModeSet(std::vector<Point> modes, double radius)
    : modes_(std::move(modes)), radius_(radius) {
  if (!std::isfinite(radius_) || radius_ <= 0.0) {
    throw ConfigError("mode radius must be finite and > 0");
  }
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (!is_finite(modes_[i])) throw ConfigError("mode coordinates must be finite");
    for (std::size_t j = i + 1; j < modes_.size(); ++j) {
      if (distance(modes_[i], modes_[j]) <= 2.0 * radius_) {
        throw ConfigError("modes " + std::to_string(i) + " and " + std::to_string(j) +
                          " are within twice the assignment radius");
      }
    }
  }
}

std::optional<std::size_t> ModeSet::assign(Point p) const noexcept {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (distance(p, modes_[i]) <= radius_) return i;
  }
  return std::nullopt;
}

Point ergodic_mean(const Trace& trace) {
  const auto samples = trace.samples();
  if (samples.empty()) throw EmptyTraceError("ergodic_mean: trace has no sample-phase entries");
  double s1 = 0.0;
  double s2 = 0.0;
  for (const auto& e : samples) {
    s1 += e.point.x1;
    s2 += e.point.x2;
  }
  const auto n = static_cast<double>(samples.size());
  return {s1 / n, s2 / n};
}

BestPoint best_point(const Trace& trace) {
  if (trace.empty()) throw EmptyTraceError("best_point: empty trace");
  const TraceEntry* best = &trace.entries().front();
  for (const auto& e : trace.entries()) {
    if (e.f < best->f) best = &e;
  }
  return {best->point, best->f, best->iter};
}

Occupancy mode_occupancy(const Trace& trace, const ModeSet& modes) {
  const auto samples = trace.samples();
  if (samples.empty()) throw EmptyTraceError("mode_occupancy: trace has no sample-phase entries");
  std::vector<std::size_t> counts(modes.modes().size(), 0);
  std::size_t unassigned = 0;
  for (const auto& e : samples) {
    if (auto idx = modes.assign(e.point)) {
      ++counts[*idx];
    } else {
      ++unassigned;
    }
  }
  const auto n = static_cast<double>(samples.size());
  Occupancy occ;
  occ.per_mode.reserve(counts.size());
  for (auto c : counts) occ.per_mode.push_back(static_cast<double>(c) / n);
  occ.unassigned = static_cast<double>(unassigned) / n;
  return occ;
}

}  // namespace boltzslice
