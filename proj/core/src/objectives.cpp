#include "boltzslice/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "boltzslice/errors.hpp"

namespace boltzslice {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sq(double v) noexcept { return v * v; }

double michalewicz_term(int i, double x) noexcept {
  const double s = std::sin(static_cast<double>(i) * x * x / kPi);
  return -std::sin(x) * std::pow(s, 2 * kMichalewiczM);
}

double shubert_term(int j, double x) noexcept {
  return j * std::cos((j + 1) * x + j);
}

ObjectiveSpec make_spec(ObjectiveId id) {
  const std::vector<double> standard_kappas{0.1, 0.5, 1.0, 5.0};
  switch (id) {
    case ObjectiveId::rosenbrock:
      return {id, {-2.0, 2.0, -1.0, 3.0}, false, {{{1.0, 1.0}, 0.0}}, {1.0, 5.0, 50.0, 5000.0}};
    case ObjectiveId::himmelblau:
      return {id,
              {-6.0, 6.0, -6.0, 6.0},
              false,
              {{{3.0, 2.0}, 0.0},
               {{-2.805, 3.131}, 0.0},
               {{-3.779, -3.282}, 0.0},
               {{3.584, -1.848}, 0.0}},
              standard_kappas};
    case ObjectiveId::rastrigin:
      return {id, {-5.12, 5.12, -5.12, 5.12}, true, {{{0.0, 0.0}, 0.0}}, standard_kappas};
    case ObjectiveId::shubert:
      return {id, {-10.0, 10.0, -10.0, 10.0}, true, {}, standard_kappas};
    case ObjectiveId::booth:
      return {id, {-10.0, 10.0, -10.0, 10.0}, true, {{{1.0, 3.0}, 0.0}}, standard_kappas};
    case ObjectiveId::michalewicz:
      return {id, {0.0, kPi, 0.0, kPi}, true, {{{2.20319, 1.57049}, -1.801}}, standard_kappas};
  }
  throw UnsupportedError("unknown objective");
}

}  // namespace

void DomainBox::validate() const {
  const bool ok = std::isfinite(x1_lo) && std::isfinite(x1_hi) && std::isfinite(x2_lo) &&
                  std::isfinite(x2_hi) && x1_lo < x1_hi && x2_lo < x2_hi;
  if (!ok) throw ArgumentError("domain box must be finite with lo < hi on both axes");
}

bool DomainBox::contains(Point p) const noexcept {
  return p.x1 >= x1_lo && p.x1 <= x1_hi && p.x2 >= x2_lo && p.x2 <= x2_hi;
}

Point DomainBox::center() const noexcept {
  return {0.5 * (x1_lo + x1_hi), 0.5 * (x2_lo + x2_hi)};
}

const ObjectiveSpec& objective_spec(ObjectiveId id) {
  static const std::array<ObjectiveSpec, 6> specs{
      make_spec(ObjectiveId::rosenbrock), make_spec(ObjectiveId::himmelblau),
      make_spec(ObjectiveId::rastrigin),  make_spec(ObjectiveId::shubert),
      make_spec(ObjectiveId::booth),      make_spec(ObjectiveId::michalewicz),
  };
  return specs[static_cast<std::size_t>(id)];
}

double shubert_c(double x) noexcept {
  double sum = 0.0;
  for (int j = 1; j <= 5; ++j) sum += shubert_term(j, x);
  return sum;
}

double evaluate(ObjectiveId id, Point x) noexcept {
  const double a = x.x1;
  const double b = x.x2;
  switch (id) {
    case ObjectiveId::rosenbrock:
      return sq(1.0 - a) + kRosenbrockC * sq(b - a * a);
    case ObjectiveId::himmelblau:
      return sq(a * a + b - 11.0) + sq(a + b * b - 7.0);
    case ObjectiveId::rastrigin:
      return 2.0 * kRastriginA + (a * a - kRastriginA * std::cos(kTwoPi * a)) +
             (b * b - kRastriginA * std::cos(kTwoPi * b));
    case ObjectiveId::shubert:
      return shubert_c(a) * shubert_c(b);
    case ObjectiveId::booth:
      return sq(a + 2.0 * b - 7.0) + sq(2.0 * a + b - 5.0);
    case ObjectiveId::michalewicz:
      return michalewicz_term(1, a) + michalewicz_term(2, b);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<double> components(ObjectiveId id, Point x) {
  const double a = x.x1;
  const double b = x.x2;
  switch (id) {
    case ObjectiveId::rosenbrock:
      return {sq(1.0 - a), kRosenbrockC * sq(b - a * a)};
    case ObjectiveId::himmelblau:
      return {sq(a * a + b - 11.0), sq(a + b * b - 7.0)};
    case ObjectiveId::rastrigin:
      return {a * a + b * b, kRastriginA * (1.0 - std::cos(kTwoPi * a)),
              kRastriginA * (1.0 - std::cos(kTwoPi * b))};
    case ObjectiveId::shubert: {
      std::vector<double> out;
      out.reserve(10);
      for (int j = 1; j <= 5; ++j) out.push_back(shubert_term(j, a));
      for (int j = 1; j <= 5; ++j) out.push_back(shubert_term(j, b));
      return out;
    }
    case ObjectiveId::booth:
      return {sq(a + 2.0 * b - 7.0), sq(2.0 * a + b - 5.0)};
    case ObjectiveId::michalewicz:
      return {michalewicz_term(1, a), michalewicz_term(2, b)};
  }
  throw UnsupportedError("objective has no declared decomposition");
}

bool is_additive(ObjectiveId id) noexcept { return id != ObjectiveId::shubert; }

double recombine(ObjectiveId id, std::span<const double> terms) {
  if (id == ObjectiveId::shubert) {
    if (terms.size() != 10) throw ArgumentError("shubert recombination needs 10 terms");
    double ca = 0.0;
    double cb = 0.0;
    for (std::size_t j = 0; j < 5; ++j) {
      ca += terms[j];
      cb += terms[5 + j];
    }
    return ca * cb;
  }
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

std::vector<ComponentFn> component_functions(ObjectiveId id) {
  if (!is_additive(id)) {
    throw UnsupportedError(std::string(to_string(id)) + " is not an additive objective");
  }
  const std::size_t k = components(id, {0.0, 0.0}).size();
  std::vector<ComponentFn> fns;
  fns.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    fns.emplace_back([id, i](Point x) { return components(id, x)[i]; });
  }
  return fns;
}

double boltzmann_log_density(ObjectiveId id, EnergyLevel kappa, Point x) {
  const double f = evaluate(id, x);
  if (!std::isfinite(f)) {
    throw DomainError(std::string(to_string(id)) + " evaluated to a non-finite value");
  }
  return -kappa.value() * f;
}

std::optional<ModeSet> objective_modes(ObjectiveId id) {
  const auto& spec = objective_spec(id);
  if (spec.known_minima.empty()) return std::nullopt;
  std::vector<Point> modes;
  modes.reserve(spec.known_minima.size());
  for (const auto& m : spec.known_minima) modes.push_back(m.point);
  return ModeSet(std::move(modes));
}

std::vector<GridSample> contour_grid(ObjectiveId id, const DomainBox& box, int n) {
  if (n < 2) throw ArgumentError("contour grid needs n >= 2");
  box.validate();
  const auto un = static_cast<std::size_t>(n);
  std::vector<GridSample> grid;
  grid.reserve(un * un);
  const double step1 = (box.x1_hi - box.x1_lo) / (n - 1);
  const double step2 = (box.x2_hi - box.x2_lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    const double x1 = i == n - 1 ? box.x1_hi : box.x1_lo + i * step1;
    for (int j = 0; j < n; ++j) {
      const double x2 = j == n - 1 ? box.x2_hi : box.x2_lo + j * step2;
      grid.push_back({x1, x2, evaluate(id, {x1, x2})});
    }
  }
  return grid;
}

namespace {

Matrix2 inverse(const Matrix2& m) {
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

double quadratic_form(Point mu, const Matrix2& q, Point x) noexcept {
  const Matrix2 qi = inverse(q);
  const double d1 = x.x1 - mu.x1;
  const double d2 = x.x2 - mu.x2;
  return d1 * (qi[0][0] * d1 + qi[0][1] * d2) + d2 * (qi[1][0] * d1 + qi[1][1] * d2);
}

std::string format_sign(double v) { return v < 0 ? "-4" : "4"; }

}  // namespace

BoothFactorization booth_factorization() {
  const Point mu{1.0, 3.0};
  // Magnitudes (1/9)(5, 4; 4, 5); try every off-diagonal sign pattern and
  // keep the one whose quadratic form reproduces the evaluator.
  const Point probes[] = {{0.0, 0.0}, {2.5, -1.0}, {-3.0, 4.0}, {7.0, 2.0}, {-1.5, -6.0}};
  for (double s01 : {-1.0, 1.0}) {
    for (double s10 : {-1.0, 1.0}) {
      const Matrix2 q{{{5.0 / 9.0, s01 * 4.0 / 9.0}, {s10 * 4.0 / 9.0, 5.0 / 9.0}}};
      bool matches = true;
      for (Point p : probes) {
        const double f = evaluate(ObjectiveId::booth, p);
        if (std::abs(quadratic_form(mu, q, p) - f) > 1e-9 * std::max(1.0, std::abs(f))) {
          matches = false;
          break;
        }
      }
      if (matches) {
        return {mu, q, "(1/9)(5," + format_sign(s01) + ";" + format_sign(s10) + ",5)"};
      }
    }
  }
  throw DomainError("no sign pattern of Q reproduces the Booth function");
}

double booth_quadratic_form(const BoothFactorization& fac, Point x) noexcept {
  return quadratic_form(fac.mu, fac.q, x);
}

}  // namespace boltzslice
