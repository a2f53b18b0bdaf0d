#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "boltzslice/core_model.hpp"
#include "boltzslice/errors.hpp"
#include "boltzslice/objectives.hpp"

using namespace boltzslice;

namespace {

Trace trace_of(std::initializer_list<Point> pts, std::size_t burnin = 0, ObjectiveId id = ObjectiveId::rosenbrock) {
  Trace t(burnin);
  for (Point p : pts) t.append(p, evaluate(id, p));
  return t;
}

}  // namespace

TEST_SUITE("core-model") {

TEST_CASE("energy level must be finite and positive") {
  CHECK(EnergyLevel(0.1).value() == 0.1);
  CHECK_THROWS_AS(EnergyLevel(0.0), ArgumentError);
  CHECK_THROWS_AS(EnergyLevel(-1.0), ArgumentError);
  CHECK_THROWS_AS(EnergyLevel(std::numeric_limits<double>::infinity()), ArgumentError);
  CHECK_THROWS_AS(EnergyLevel(std::nan("")), ArgumentError);
}

TEST_CASE("objective ids round-trip through their names") {
  for (ObjectiveId id : kAllObjectives) {
    auto back = parse_objective(to_string(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(parse_objective("ackley").has_value());
}

TEST_CASE("boltzmann log density examples") {
  CHECK(boltzmann_log_density(ObjectiveId::rosenbrock, EnergyLevel(1.0), {1.0, 1.0}) == 0.0);
  CHECK(boltzmann_log_density(ObjectiveId::himmelblau, EnergyLevel(0.5), {3.0, 2.0}) == 0.0);
  CHECK(boltzmann_log_density(ObjectiveId::rastrigin, EnergyLevel(2.0), {0.0, 0.0}) == 0.0);
}

TEST_CASE("boltzmann log density is exactly -kappa f") {
  std::mt19937_64 gen(7);
  for (ObjectiveId id : kAllObjectives) {
    const auto& box = objective_spec(id).box;
    std::uniform_real_distribution<double> u1(box.x1_lo, box.x1_hi), u2(box.x2_lo, box.x2_hi);
    for (double k : {0.1, 0.5, 1.0, 5.0}) {
      for (int i = 0; i < 100; ++i) {
        const Point x{u1(gen), u2(gen)};
        CHECK(boltzmann_log_density(id, EnergyLevel(k), x) == -k * evaluate(id, x));
      }
    }
  }
}

TEST_CASE("non-finite evaluation is a domain error") {
  CHECK_THROWS_AS(boltzmann_log_density(ObjectiveId::rosenbrock, EnergyLevel(1.0), {1e200, 0.0}),
                  DomainError);
}

TEST_CASE("argmin of f equals argmax of the log density") {
  std::mt19937_64 gen(11);
  for (ObjectiveId id : kAllObjectives) {
    const auto& box = objective_spec(id).box;
    std::uniform_real_distribution<double> u1(box.x1_lo, box.x1_hi), u2(box.x2_lo, box.x2_hi);
    std::size_t argmin = 0, argmax = 0;
    double fmin = std::numeric_limits<double>::infinity();
    double lmax = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 500; ++i) {
      const Point x{u1(gen), u2(gen)};
      const double f = evaluate(id, x);
      const double l = boltzmann_log_density(id, EnergyLevel(0.5), x);
      if (f < fmin) fmin = f, argmin = i;
      if (l > lmax) lmax = l, argmax = i;
    }
    CHECK(argmin == argmax);
  }
}

TEST_CASE("trace numbering and phases are assigned on append") {
  Trace t(2);
  for (int i = 0; i < 5; ++i) t.append({0.0, 0.0}, 1.0);
  const auto e = t.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    CHECK(e[i].iter == i + 1);
    CHECK(e[i].phase == (i < 2 ? Phase::burnin : Phase::sample));
  }
  CHECK(t.samples().size() == 3);
}

TEST_CASE("ergodic mean examples") {
  CHECK(ergodic_mean(trace_of({{2.0, 3.0}})) == Point{2.0, 3.0});
  CHECK(ergodic_mean(trace_of({{0.0, 0.0}, {2.0, 2.0}})) == Point{1.0, 1.0});
  CHECK(ergodic_mean(trace_of({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}})) == Point{1.0, 1.0});
  // burn-in entries are excluded
  CHECK(ergodic_mean(trace_of({{100.0, 100.0}, {0.0, 0.0}, {2.0, 2.0}}, 1)) == Point{1.0, 1.0});
}

TEST_CASE("ergodic mean without samples throws") {
  CHECK_THROWS_AS(ergodic_mean(trace_of({{0.0, 0.0}, {1.0, 1.0}}, 2)), EmptyTraceError);
  CHECK_THROWS_AS(ergodic_mean(Trace{}), EmptyTraceError);
}

TEST_CASE("ergodic mean is translation equivariant") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> n(0.0, 2.0);
  Trace a(10), b(10);
  const Point v{0.25, -1.5};
  for (int i = 0; i < 200; ++i) {
    const Point p{n(gen), n(gen)};
    a.append(p, 0.0);
    b.append({p.x1 + v.x1, p.x2 + v.x2}, 0.0);
  }
  const Point ma = ergodic_mean(a), mb = ergodic_mean(b);
  CHECK(mb.x1 == doctest::Approx(ma.x1 + v.x1).epsilon(1e-12));
  CHECK(mb.x2 == doctest::Approx(ma.x2 + v.x2).epsilon(1e-12));
}

TEST_CASE("best point scans burn-in and keeps the earliest tie") {
  const auto t = trace_of({{0.0, 0.0}, {1.0, 1.0}, {-1.0, 1.0}}, 2);
  const auto b = best_point(t);
  CHECK(b.point == Point{1.0, 1.0});
  CHECK(b.f == 0.0);
  CHECK(b.iter == 2);

  Trace tie;
  tie.append({5.0, 5.0}, 3.0);
  tie.append({1.0, 2.0}, 1.0);
  tie.append({2.0, 1.0}, 1.0);
  CHECK(best_point(tie).iter == 2);
  CHECK_THROWS_AS(best_point(Trace{}), EmptyTraceError);
}

TEST_CASE("mode set rejects ambiguous modes") {
  CHECK_THROWS_AS(ModeSet({{0.0, 0.0}, {1.0, 0.0}}, 0.6), ConfigError);
  CHECK_THROWS_AS(ModeSet({{0.0, 0.0}}, 0.0), ConfigError);
  CHECK_NOTHROW(ModeSet({{0.0, 0.0}, {1.3, 0.0}}, 0.6));
}

TEST_CASE("mode occupancy examples") {
  const ModeSet modes({{0.0, 0.0}, {5.0, 0.0}, {0.0, 5.0}, {5.0, 5.0}});

  auto all_first = mode_occupancy(trace_of({{0.1, 0.0}, {0.0, -0.2}, {0.0, 0.0}}), modes);
  CHECK(all_first.per_mode == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(all_first.unassigned == 0.0);

  auto alternating = mode_occupancy(trace_of({{0.0, 0.0}, {5.0, 0.0}, {0.0, 0.0}, {5.0, 0.0}}), modes);
  CHECK(alternating.per_mode[0] == 0.5);
  CHECK(alternating.per_mode[1] == 0.5);

  auto none = mode_occupancy(trace_of({{2.5, 2.5}, {-3.0, 0.0}}), modes);
  CHECK(none.unassigned == 1.0);
}

TEST_CASE("mode occupancy fractions sum to one") {
  const auto modes = *objective_modes(ObjectiveId::himmelblau);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int rep = 0; rep < 20; ++rep) {
    Trace t(3);
    for (int i = 0; i < 97; ++i) {
      // mix of near-mode and random points
      const Point m = modes.modes()[static_cast<std::size_t>(i) % 4];
      t.append(i % 3 ? Point{m.x1 + 0.1 * u(gen) / 6.0, m.x2} : Point{u(gen), u(gen)}, 0.0);
    }
    const auto occ = mode_occupancy(t, modes);
    double s = occ.unassigned;
    for (double p : occ.per_mode) s += p;
    CHECK(std::abs(s - 1.0) <= 1e-12);
  }
}

}  // TEST_SUITE
