#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "boltzslice/errors.hpp"
#include "boltzslice/interval_union.hpp"

using namespace boltzslice;

namespace {

constexpr double kPi = std::numbers::pi;

IntervalUnion random_union(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_real_distribution<double> pos(-10.0, 10.0);
  std::uniform_real_distribution<double> len(0.0, 3.0);
  std::bernoulli_distribution degenerate(0.1);
  std::vector<Interval> v;
  const int n = count(gen);
  for (int i = 0; i < n; ++i) {
    const double lo = pos(gen);
    v.push_back({lo, degenerate(gen) ? lo : lo + len(gen)});
  }
  return IntervalUnion(v);
}

bool subset_of(const IntervalUnion& a, const IntervalUnion& b) {
  for (const auto& iv : a.intervals()) {
    bool covered = false;
    for (const auto& jv : b.intervals()) covered |= (jv.lo <= iv.lo && iv.hi <= jv.hi);
    if (!covered) return false;
  }
  return true;
}

bool normalized(const IntervalUnion& u) {
  const auto v = u.intervals();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i].lo <= v[i].hi)) return false;
    if (i + 1 < v.size() && !(v[i].hi < v[i + 1].lo)) return false;
  }
  return true;
}

// Checks solve_cosine against direct evaluation on a grid of m points. A
// point may disagree only if it is within one grid spacing of a boundary.
void check_cosine_against_grid(double omega, double phi, double t, CosineSide side, Interval dom) {
  const auto u = solve_cosine(omega, phi, t, side, dom);
  CHECK(normalized(u));
  const int m = 100000;
  const double h = (dom.hi - dom.lo) / (m - 1);
  int misclassified_far = 0;
  for (int i = 0; i < m; ++i) {
    const double x = dom.lo + i * h;
    const double c = std::cos(omega * x + phi);
    const bool truth = side == CosineSide::ge ? c >= t : c <= t;
    if (truth == contains(u, x)) continue;
    double gap = 1e300;
    for (const auto& iv : u.intervals()) gap = std::min({gap, std::abs(x - iv.lo), std::abs(x - iv.hi)});
    if (gap > h) ++misclassified_far;
  }
  CHECK(misclassified_far == 0);
}

}  // namespace

TEST_SUITE("interval-algebra") {

TEST_CASE("construction normalizes") {
  IntervalUnion u({{2.0, 3.0}, {0.0, 1.0}, {0.5, 1.5}, {3.0, 4.0}});
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Interval{0.0, 1.5});
  CHECK(u[1] == Interval{2.0, 4.0});

  // gaps below 1e-14 merge, larger ones do not
  CHECK(IntervalUnion({{0.0, 1.0}, {1.0 + 5e-15, 2.0}}).size() == 1);
  CHECK(IntervalUnion({{0.0, 1.0}, {1.0 + 1e-12, 2.0}}).size() == 2);

  CHECK(IntervalUnion({{1.0, 1.0}}).size() == 1);
  CHECK_THROWS_AS(IntervalUnion({{2.0, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(IntervalUnion({{std::nan(""), 1.0}}), ArgumentError);
}

TEST_CASE("intersect examples") {
  CHECK(intersect({{0.0, 2.0}}, {{1.0, 3.0}}) == IntervalUnion{{1.0, 2.0}});
  CHECK(intersect({{0.0, 1.0}, {2.0, 3.0}}, {{0.5, 2.5}}) == IntervalUnion{{0.5, 1.0}, {2.0, 2.5}});
  CHECK(intersect({{0.0, 1.0}}, IntervalUnion{}).empty());
  // touching closed intervals share a point
  CHECK(intersect({{0.0, 1.0}}, {{1.0, 2.0}}) == IntervalUnion{{1.0, 1.0}});
}

TEST_CASE("invert_square_band examples") {
  CHECK(invert_square_band(-1.0, 4.0) == IntervalUnion{{-2.0, 2.0}});
  CHECK(invert_square_band(1.0, 4.0) == IntervalUnion{{-2.0, -1.0}, {1.0, 2.0}});
  CHECK(invert_square_band(-3.0, -1.0).empty());
  CHECK(invert_square_band(0.0, 0.0) == IntervalUnion{{0.0, 0.0}});
  CHECK_THROWS_AS(invert_square_band(2.0, 1.0), ArgumentError);

  const auto u = invert_square_band(0.9, 1.1);
  REQUIRE(u.size() == 2);
  for (const auto& iv : u.intervals()) {
    for (double e : {iv.lo, iv.hi}) {
      const double e2 = e * e;
      CHECK(std::min(std::abs(e2 - 0.9), std::abs(e2 - 1.1)) <= 1e-12);
    }
  }
}

TEST_CASE("invert_square_band endpoints lie in the band") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> d(-5.0, 20.0);
  for (int i = 0; i < 10000; ++i) {
    double lo = d(gen), hi = d(gen);
    if (lo > hi) std::swap(lo, hi);
    if (hi == lo) continue;
    const auto u = invert_square_band(lo, hi);
    for (const auto& iv : u.intervals()) {
      for (double e : {iv.lo, iv.hi}) {
        CHECK(e * e >= lo - 1e-12);
        CHECK(e * e <= hi + 1e-12);
      }
    }
  }
}

TEST_CASE("solve_cosine examples") {
  const Interval rast{-5.12, 5.12};
  CHECK(solve_cosine(2 * kPi, 0.0, -1.0, CosineSide::ge, rast) == IntervalUnion{{-5.12, 5.12}});
  CHECK(solve_cosine(2 * kPi, 0.0, -1.5, CosineSide::ge, rast) == IntervalUnion{{-5.12, 5.12}});
  CHECK(solve_cosine(2 * kPi, 0.0, 1.5, CosineSide::ge, rast).empty());
  CHECK(solve_cosine(2 * kPi, 0.0, 1.5, CosineSide::le, rast) == IntervalUnion{{-5.12, 5.12}});
  CHECK(solve_cosine(2 * kPi, 0.0, -1.5, CosineSide::le, rast).empty());

  const auto half = solve_cosine(2 * kPi, 0.0, 0.0, CosineSide::ge, {0.0, 1.0});
  REQUIRE(half.size() == 2);
  CHECK(half[0].lo == 0.0);
  CHECK(half[0].hi == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(half[1].lo == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(half[1].hi == 1.0);

  const auto sixth = solve_cosine(2 * kPi, 0.0, 0.5, CosineSide::ge, {0.0, 1.0});
  REQUIRE(sixth.size() == 2);
  CHECK(sixth[0].hi == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(sixth[1].lo == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
  check_cosine_against_grid(2 * kPi, 0.0, 0.5, CosineSide::ge, {0.0, 1.0});

  CHECK_THROWS_AS(solve_cosine(0.0, 0.0, 0.5, CosineSide::ge, {0.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(solve_cosine(1.0, 0.0, 0.5, CosineSide::ge, {1.0, 1.0}), ArgumentError);
}

TEST_CASE("solve_cosine agrees with a membership grid") {
  const Interval rast{-5.12, 5.12};
  const Interval shub{-10.0, 10.0};
  for (double t : {-0.99, -0.3, 0.0, 0.42, 0.97}) {
    check_cosine_against_grid(2 * kPi, 0.0, t, CosineSide::ge, rast);
    check_cosine_against_grid(2 * kPi, 0.0, t, CosineSide::le, rast);
  }
  for (int j = 1; j <= 5; ++j) {
    check_cosine_against_grid(j + 1.0, j, 0.3, CosineSide::ge, shub);
    check_cosine_against_grid(j + 1.0, j, -0.6, CosineSide::le, shub);
  }
  check_cosine_against_grid(-3.0, 0.7, 0.1, CosineSide::ge, {-2.0, 4.0});
}

TEST_CASE("total_length and contains examples") {
  CHECK(total_length(IntervalUnion{}) == 0.0);
  CHECK(total_length({{0.0, 1.0}, {2.0, 3.0}}) == 2.0);
  CHECK(total_length({{1.0, 1.0}}) == 0.0);

  CHECK(contains({{0.0, 1.0}}, 1.0));
  CHECK(contains({{0.0, 1.0}}, 0.0));
  CHECK_FALSE(contains({{0.0, 1.0}, {2.0, 3.0}}, 1.5));
  CHECK_FALSE(contains(IntervalUnion{}, 0.0));
  CHECK(contains({{1.0, 1.0}}, 1.0));
}

TEST_CASE("randomized algebraic properties") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> probe(-12.0, 16.0);
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_union(gen);
    const auto b = random_union(gen);
    const auto c = random_union(gen);
    REQUIRE(normalized(a));

    CHECK(IntervalUnion(std::vector<Interval>(a.intervals().begin(), a.intervals().end())) == a);

    const auto ab = intersect(a, b);
    CHECK(normalized(ab));
    CHECK(ab == intersect(b, a));
    CHECK(intersect(ab, c) == intersect(a, intersect(b, c)));
    CHECK(subset_of(ab, a));
    CHECK(subset_of(ab, b));
    CHECK(total_length(ab) <= std::min(total_length(a), total_length(b)) + 1e-12);

    for (int k = 0; k < 4; ++k) {
      const double x = probe(gen);
      CHECK(contains(ab, x) == (contains(a, x) && contains(b, x)));
    }
  }
}

}  // TEST_SUITE
