#pragma once

// One-step transition kernels targeting pi_kappa(x) ~ exp(-kappa f(x)):
// the four function-specific slice/Gibbs samplers, a generic exponential
// slice sampler for additive objectives, and a random-walk Metropolis
// baseline.
//
// Slice variables are stored on the log scale (log u instead of u) so that
// sharp energy levels cannot underflow them. Every step leaves the stored
// auxiliaries consistent with the stored point; satisfies_slice() re-checks
// that from scratch.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "boltzslice/core_model.hpp"
#include "boltzslice/interval_union.hpp"
#include "boltzslice/objectives.hpp"
#include "boltzslice/random.hpp"

namespace boltzslice {

struct StepDiagnostics : DrawCounters {
  std::uint64_t empty_slice_repairs = 0;
  std::uint64_t metropolis_proposals = 0;
  std::uint64_t metropolis_accepted = 0;
  bool last_accepted = false;

  StepDiagnostics& operator+=(const StepDiagnostics& o) noexcept;
};

// Relative slack allowed when re-checking slice inequalities in floating point.
inline constexpr double kSliceAuditTolerance = 1e-9;

// Rosenbrock: log_u <= -kappa c (x2 - x1^2)^2.
struct RosenbrockState {
  Point point;
  double log_u = 0.0;
};

// Himmelblau: log_u1 <= -kappa g1^2 and log_u2 <= -kappa g2^2 with
// g1 = x1^2 + x2 - 11, g2 = x1 + x2^2 - 7.
struct HimmelblauState {
  Point point;
  double log_u1 = 0.0;
  double log_u2 = 0.0;
};

// Rastrigin: y_j >= -kappa A cos(2 pi x_j).
struct RastriginState {
  Point point;
  std::array<double, 2> y{};
};

// Shubert, for j = 1..5: y_x1[j-1] >= C(x2') j cos((j+1) x1 + j), where x2'
// is the x2 held during the x1 half-sweep (c_for_x1 = C(x2')), and the
// mirror condition for y_x2 against the current x1.
struct ShubertState {
  Point point;
  std::array<double, 5> y_x1{};
  std::array<double, 5> y_x2{};
  double c_for_x1 = 0.0;
};

// Generic additive: f_i(x) <= y_i for every component.
struct GenericState {
  Point point;
  std::vector<double> y;
};

struct MetropolisState {
  Point point;
};

// x1 slice region of the Rosenbrock sampler: {x1 : |x2 - x1^2| <= s} with
// s = sqrt(-log_u / (kappa c)).
IntervalUnion rosenbrock_x1_region(double x2, double log_u, EnergyLevel kappa);

// Himmelblau coordinate regions given the slice half-widths s1, s2
// (s_i = sqrt(-log u_i / kappa)).
IntervalUnion himmelblau_x1_region(double x2, double s1, double s2);
IntervalUnion himmelblau_x2_region(double x1, double s1, double s2);

// {x in [-5.12, 5.12] : cos(2 pi x) >= -y / (A kappa)}.
IntervalUnion rastrigin_region(double y, EnergyLevel kappa);

// Region for one Shubert coordinate given C(other coordinate) and the five
// slice variables; the full box when c_other == 0.
IntervalUnion shubert_region(double c_other, std::span<const double, 5> y);

RosenbrockState rosenbrock_step(const RosenbrockState& state, EnergyLevel kappa, RngStream& rng,
                                StepDiagnostics& diag);
HimmelblauState himmelblau_step(const HimmelblauState& state, EnergyLevel kappa, RngStream& rng,
                                StepDiagnostics& diag);
RastriginState rastrigin_step(const RastriginState& state, EnergyLevel kappa, RngStream& rng,
                              StepDiagnostics& diag);
ShubertState shubert_step(const ShubertState& state, EnergyLevel kappa, RngStream& rng,
                          StepDiagnostics& diag);

inline constexpr std::uint64_t kGenericProposalCap = 100000;

// Throws ConfigError when the box is not bounded.
GenericState generic_additive_slice_step(std::span<const ComponentFn> components,
                                         const DomainBox& box, EnergyLevel kappa,
                                         const GenericState& state, RngStream& rng,
                                         StepDiagnostics& diag);

// kappa may be 0 here (uniform target on the domain); it must not be
// negative. Proposals leaving a bounded objective's box are rejected.
MetropolisState metropolis_step(ObjectiveId objective, double kappa, double step_sigma,
                                const MetropolisState& state, RngStream& rng,
                                StepDiagnostics& diag);

bool satisfies_slice(const RosenbrockState& s, EnergyLevel kappa) noexcept;
bool satisfies_slice(const HimmelblauState& s, EnergyLevel kappa) noexcept;
bool satisfies_slice(const RastriginState& s, EnergyLevel kappa) noexcept;
bool satisfies_slice(const ShubertState& s) noexcept;
bool satisfies_slice(const GenericState& s, std::span<const ComponentFn> components) noexcept;

enum class SamplerKind { slice, metropolis, generic };

std::string_view to_string(SamplerKind kind) noexcept;

// Type-erased chain kernel owning its state. Built by make_sampler.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual Point step(RngStream& rng, StepDiagnostics& diag) = 0;
  virtual Point point() const = 0;
  // Slice-membership audit of the current state; always true for Metropolis.
  virtual bool audit() const = 0;
};

// `slice` selects the bespoke sampler where one exists (rosenbrock,
// himmelblau, rastrigin, shubert) and the generic sampler otherwise.
// Throws ConfigError for unsupported combinations or a non-positive
// Metropolis step size.
std::unique_ptr<Sampler> make_sampler(ObjectiveId objective, SamplerKind kind, EnergyLevel kappa,
                                      Point start, double metropolis_sigma = 0.0);

}  // namespace boltzslice
