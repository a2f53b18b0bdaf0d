#pragma once

// Test-function catalogue: evaluators, additive/factor decompositions,
// reference boxes and known minima, contour grids and the Booth quadratic
// form.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boltzslice/core_model.hpp"

namespace boltzslice {

inline constexpr double kRosenbrockC = 100.0;
inline constexpr double kRastriginA = 10.0;
inline constexpr int kMichalewiczM = 10;

struct DomainBox {
  double x1_lo = 0.0;
  double x1_hi = 0.0;
  double x2_lo = 0.0;
  double x2_hi = 0.0;

  // Throws ArgumentError unless both sides have lo < hi (finite).
  void validate() const;
  bool contains(Point p) const noexcept;
  Point center() const noexcept;

  friend bool operator==(const DomainBox&, const DomainBox&) = default;
};

struct KnownMinimum {
  Point point;
  double f = 0.0;
};

struct ObjectiveSpec {
  ObjectiveId id;
  DomainBox box;
  // True when the objective is only defined on `box` (proposals outside it
  // are rejected); otherwise `box` is a plotting/reference region.
  bool bounded = false;
  std::vector<KnownMinimum> known_minima;
  std::vector<double> default_kappas;
};

const ObjectiveSpec& objective_spec(ObjectiveId id);

double evaluate(ObjectiveId id, Point x) noexcept;

// C(x) = sum_{j=1}^{5} j cos((j+1) x + j); Shubert is f(x) = C(x1) C(x2).
double shubert_c(double x) noexcept;

// Decomposition terms. For the additive objectives (rosenbrock, himmelblau,
// rastrigin, booth, michalewicz) the terms sum to f. For shubert the ten
// terms are a_j = j cos((j+1) x1 + j) followed by b_j (same with x2) and
// f = (sum a)(sum b).
std::vector<double> components(ObjectiveId id, Point x);
double recombine(ObjectiveId id, std::span<const double> terms);
bool is_additive(ObjectiveId id) noexcept;

using ComponentFn = std::function<double(Point)>;
// One evaluator per additive term. Throws UnsupportedError for shubert.
std::vector<ComponentFn> component_functions(ObjectiveId id);

// Unnormalised log Boltzmann density -kappa f(x). Throws DomainError if f(x)
// is not finite.
double boltzmann_log_density(ObjectiveId id, EnergyLevel kappa, Point x);

// Modes for occupancy statistics (radius ModeSet::kDefaultRadius), or
// nullopt when the minima are not catalogued (shubert).
std::optional<ModeSet> objective_modes(ObjectiveId id);

struct GridSample {
  double x1 = 0.0;
  double x2 = 0.0;
  double f = 0.0;
};

// Row-major n x n evaluations over box with corners included: x1 varies
// slowest. Throws ArgumentError for n < 2 or a degenerate box.
std::vector<GridSample> contour_grid(ObjectiveId id, const DomainBox& box, int n);

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct BoothFactorization {
  Point mu;
  Matrix2 q;
  std::string sign_convention;  // e.g. "(1/9)(5,-4;-4,5)"
};

// Booth written as (x - mu)' Q^{-1} (x - mu). The off-diagonal signs of Q
// are resolved by matching the expanded form against the evaluator.
BoothFactorization booth_factorization();
double booth_quadratic_form(const BoothFactorization& fac, Point x) noexcept;

}  // namespace boltzslice
