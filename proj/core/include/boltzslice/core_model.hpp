#pragma once

// Domain types shared by every module, plus summary statistics over a
// chain trace (ergodic mean, best visited point, mode occupancy).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace boltzslice {

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

bool is_finite(Point p) noexcept;
double distance(Point a, Point b) noexcept;

// Inverse temperature of the Boltzmann density exp(-kappa f(x)).
// Always finite and strictly positive.
class EnergyLevel {
 public:
  explicit EnergyLevel(double kappa);

  double value() const noexcept { return kappa_; }

  friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
  friend auto operator<=>(const EnergyLevel&, const EnergyLevel&) = default;

 private:
  double kappa_;
};

enum class ObjectiveId { rosenbrock, himmelblau, rastrigin, shubert, booth, michalewicz };

inline constexpr ObjectiveId kAllObjectives[] = {
    ObjectiveId::rosenbrock, ObjectiveId::himmelblau, ObjectiveId::rastrigin,
    ObjectiveId::shubert,    ObjectiveId::booth,      ObjectiveId::michalewicz,
};

std::string_view to_string(ObjectiveId id) noexcept;
std::optional<ObjectiveId> parse_objective(std::string_view name) noexcept;

enum class Phase { burnin, sample };

std::string_view to_string(Phase phase) noexcept;

struct TraceEntry {
  std::uint64_t iter = 0;
  Phase phase = Phase::sample;
  Point point;
  double f = 0.0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Ordered chain record. Iterations are numbered from 1 and the first
// `burnin` entries are tagged Phase::burnin; both are assigned on append so
// the invariants cannot be broken from outside.
class Trace {
 public:
  explicit Trace(std::size_t burnin = 0) : burnin_(burnin) {}

  void reserve(std::size_t n) { entries_.reserve(n); }
  const TraceEntry& append(Point point, double f);

  std::span<const TraceEntry> entries() const noexcept { return entries_; }
  std::span<const TraceEntry> samples() const noexcept;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t burnin() const noexcept { return burnin_; }

  friend bool operator==(const Trace&, const Trace&) = default;

 private:
  std::size_t burnin_;
  std::vector<TraceEntry> entries_;
};

// Known minima with an assignment radius. Construction rejects mode sets in
// which two modes are within 2*radius of each other.
class ModeSet {
 public:
  static constexpr double kDefaultRadius = 0.6;

  explicit ModeSet(std::vector<Point> modes, double radius = kDefaultRadius);

  std::span<const Point> modes() const noexcept { return modes_; }
  double radius() const noexcept { return radius_; }

  // Index of the unique mode within radius of p, if any.
  std::optional<std::size_t> assign(Point p) const noexcept;

 private:
  std::vector<Point> modes_;
  double radius_;
};

struct BestPoint {
  Point point;
  double f = 0.0;
  std::uint64_t iter = 0;
};

struct Occupancy {
  std::vector<double> per_mode;
  double unassigned = 0.0;
};

// Coordinate-wise mean over the sample phase.
Point ergodic_mean(const Trace& trace);

// Minimum-f entry over the whole trace, burn-in included. Ties go to the
// earliest iteration.
BestPoint best_point(const Trace& trace);

Occupancy mode_occupancy(const Trace& trace, const ModeSet& modes);

}  // namespace boltzslice
