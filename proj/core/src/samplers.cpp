#include "boltzslice/samplers.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "boltzslice/errors.hpp"

namespace boltzslice {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sq(double v) noexcept { return v * v; }

double himmelblau_g1(Point p) noexcept { return p.x1 * p.x1 + p.x2 - 11.0; }
double himmelblau_g2(Point p) noexcept { return p.x1 + p.x2 * p.x2 - 7.0; }

// lhs <= rhs up to kSliceAuditTolerance relative slack.
bool holds_le(double lhs, double rhs) noexcept {
  return lhs <= rhs + kSliceAuditTolerance * (1.0 + std::abs(rhs));
}

Interval box_x1(const DomainBox& b) noexcept { return {b.x1_lo, b.x1_hi}; }

// Lower bound of the j-th Shubert slice variable: the j-th term of
// C(x_other) C(x) as a function of x.
double shubert_lower(double c_other, int j, double x) noexcept {
  return c_other * j * std::cos((j + 1) * x + j);
}

}  // namespace

StepDiagnostics& StepDiagnostics::operator+=(const StepDiagnostics& o) noexcept {
  DrawCounters::operator+=(o);
  empty_slice_repairs += o.empty_slice_repairs;
  metropolis_proposals += o.metropolis_proposals;
  metropolis_accepted += o.metropolis_accepted;
  last_accepted = o.last_accepted;
  return *this;
}

// ---------------------------------------------------------------------------
// Slice regions

IntervalUnion rosenbrock_x1_region(double x2, double log_u, EnergyLevel kappa) {
  const double s = std::sqrt(-log_u / (kappa.value() * kRosenbrockC));
  return invert_square_band(x2 - s, x2 + s);
}

IntervalUnion himmelblau_x1_region(double x2, double s1, double s2) {
  const double centre = 7.0 - x2 * x2;
  return intersect(invert_square_band(11.0 - x2 - s1, 11.0 - x2 + s1),
                   IntervalUnion::single(centre - s2, centre + s2));
}

IntervalUnion himmelblau_x2_region(double x1, double s1, double s2) {
  const double centre = 11.0 - x1 * x1;
  return intersect(invert_square_band(7.0 - x1 - s2, 7.0 - x1 + s2),
                   IntervalUnion::single(centre - s1, centre + s1));
}

IntervalUnion rastrigin_region(double y, EnergyLevel kappa) {
  const auto& box = objective_spec(ObjectiveId::rastrigin).box;
  return solve_cosine(kTwoPi, 0.0, -y / (kRastriginA * kappa.value()), CosineSide::ge, box_x1(box));
}

IntervalUnion shubert_region(double c_other, std::span<const double, 5> y) {
  const Interval domain = box_x1(objective_spec(ObjectiveId::shubert).box);
  IntervalUnion region = IntervalUnion::single(domain.lo, domain.hi);
  if (c_other == 0.0) return region;
  // c j cos(.) <= y  <=>  cos(.) <= y / (j c) for c > 0, >= for c < 0.
  const CosineSide side = c_other > 0.0 ? CosineSide::le : CosineSide::ge;
  for (int j = 1; j <= 5 && !region.empty(); ++j) {
    const double t = y[static_cast<std::size_t>(j - 1)] / (j * c_other);
    region = intersect(region, solve_cosine(j + 1, j, t, side, domain));
  }
  return region;
}

// ---------------------------------------------------------------------------
// Rosenbrock: x2 | x1 with u integrated out, then u | x1, x2, then x1 | x2, u.

RosenbrockState rosenbrock_step(const RosenbrockState& state, EnergyLevel kappa, RngStream& rng,
                                StepDiagnostics& diag) {
  const double kc = kappa.value() * kRosenbrockC;
  RosenbrockState next = state;
  Point& p = next.point;

  p.x2 = p.x1 * p.x1 + std::sqrt(1.0 / (2.0 * kc)) * sample_normal(rng);

  auto draw_u = [&] { next.log_u = std::log(rng.uniform_open()) - kc * sq(p.x2 - p.x1 * p.x1); };
  draw_u();

  auto region = rosenbrock_x1_region(p.x2, next.log_u, kappa);
  if (region.empty()) {
    ++diag.empty_slice_repairs;
    draw_u();
    region = rosenbrock_x1_region(p.x2, next.log_u, kappa);
  }
  if (!region.empty()) {
    p.x1 = sample_truncated_normal_union(1.0, 1.0 / (2.0 * kappa.value()), region, rng, &diag);
  }
  return next;
}

// ---------------------------------------------------------------------------
// Himmelblau: u1, u2 | x, then x1 | x2, u, then x2 | x1, u.

HimmelblauState himmelblau_step(const HimmelblauState& state, EnergyLevel kappa, RngStream& rng,
                                StepDiagnostics& diag) {
  const double k = kappa.value();
  HimmelblauState next = state;
  Point& p = next.point;

  auto draw_u = [&] {
    next.log_u1 = std::log(rng.uniform_open()) - k * sq(himmelblau_g1(p));
    next.log_u2 = std::log(rng.uniform_open()) - k * sq(himmelblau_g2(p));
  };
  auto s1 = [&] { return std::sqrt(-next.log_u1 / k); };
  auto s2 = [&] { return std::sqrt(-next.log_u2 / k); };

  draw_u();

  auto region = himmelblau_x1_region(p.x2, s1(), s2());
  if (region.empty()) {
    ++diag.empty_slice_repairs;
    draw_u();
    region = himmelblau_x1_region(p.x2, s1(), s2());
  }
  if (!region.empty()) p.x1 = sample_uniform_union(region, rng, &diag);

  region = himmelblau_x2_region(p.x1, s1(), s2());
  if (region.empty()) {
    ++diag.empty_slice_repairs;
    draw_u();
    region = himmelblau_x2_region(p.x1, s1(), s2());
  }
  if (!region.empty()) p.x2 = sample_uniform_union(region, rng, &diag);
  return next;
}

// ---------------------------------------------------------------------------
// Rastrigin: for each coordinate, y_j | x_j (rate-1 exponential above
// -kappa A cos(2 pi x_j)), then x_j | y_j ~ N(0, 1/(2 kappa)) on the slice.

RastriginState rastrigin_step(const RastriginState& state, EnergyLevel kappa, RngStream& rng,
                              StepDiagnostics& diag) {
  const double k = kappa.value();
  RastriginState next = state;
  for (std::size_t j = 0; j < 2; ++j) {
    double& x = j == 0 ? next.point.x1 : next.point.x2;
    auto draw_y = [&] {
      next.y[j] = sample_shifted_exponential(1.0, -k * kRastriginA * std::cos(kTwoPi * x), rng);
    };
    draw_y();
    auto region = rastrigin_region(next.y[j], kappa);
    if (region.empty()) {
      ++diag.empty_slice_repairs;
      draw_y();
      region = rastrigin_region(next.y[j], kappa);
    }
    if (!region.empty()) x = sample_truncated_normal_union(0.0, 1.0 / (2.0 * k), region, rng, &diag);
  }
  return next;
}

// ---------------------------------------------------------------------------
// Shubert: five rate-kappa exponential slices per coordinate, then a uniform
// draw on the intersection of the cosine regions.

ShubertState shubert_step(const ShubertState& state, EnergyLevel kappa, RngStream& rng,
                          StepDiagnostics& diag) {
  const double k = kappa.value();
  ShubertState next = state;

  auto half_sweep = [&](double& x, double c_other, std::array<double, 5>& y) {
    auto draw_y = [&] {
      for (int j = 1; j <= 5; ++j) {
        y[static_cast<std::size_t>(j - 1)] =
            sample_shifted_exponential(k, shubert_lower(c_other, j, x), rng);
      }
    };
    draw_y();
    auto region = shubert_region(c_other, y);
    if (region.empty()) {
      ++diag.empty_slice_repairs;
      draw_y();
      region = shubert_region(c_other, y);
    }
    if (!region.empty()) x = sample_uniform_union(region, rng, &diag);
  };

  next.c_for_x1 = shubert_c(next.point.x2);
  half_sweep(next.point.x1, next.c_for_x1, next.y_x1);
  half_sweep(next.point.x2, shubert_c(next.point.x1), next.y_x2);
  return next;
}

// ---------------------------------------------------------------------------

GenericState generic_additive_slice_step(std::span<const ComponentFn> components,
                                         const DomainBox& box, EnergyLevel kappa,
                                         const GenericState& state, RngStream& rng,
                                         StepDiagnostics& diag) {
  try {
    box.validate();
  } catch (const ArgumentError&) {
    throw ConfigError("generic slice sampler needs a bounded, non-degenerate box");
  }
  GenericState next = state;
  next.y.resize(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    next.y[i] = sample_shifted_exponential(kappa.value(), components[i](state.point), rng);
  }
  const double w1 = box.x1_hi - box.x1_lo;
  const double w2 = box.x2_hi - box.x2_lo;
  for (std::uint64_t attempt = 0; attempt < kGenericProposalCap; ++attempt) {
    const Point proposal{box.x1_lo + w1 * rng.uniform(), box.x2_lo + w2 * rng.uniform()};
    bool inside = true;
    for (std::size_t i = 0; i < components.size() && inside; ++i) {
      inside = components[i](proposal) <= next.y[i];
    }
    if (inside) {
      next.point = proposal;
      return next;
    }
  }
  ++diag.empty_slice_repairs;
  return next;
}

MetropolisState metropolis_step(ObjectiveId objective, double kappa, double step_sigma,
                                const MetropolisState& state, RngStream& rng,
                                StepDiagnostics& diag) {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw ArgumentError("metropolis: kappa must be >= 0");
  if (!(step_sigma > 0.0) || !std::isfinite(step_sigma)) {
    throw ArgumentError("metropolis: step_sigma must be > 0");
  }
  const auto& spec = objective_spec(objective);
  const Point proposal{state.point.x1 + step_sigma * sample_normal(rng),
                       state.point.x2 + step_sigma * sample_normal(rng)};
  // The acceptance uniform is drawn unconditionally so the stream position
  // does not depend on the proposal.
  const double u = rng.uniform();
  ++diag.metropolis_proposals;
  diag.last_accepted = false;
  if (spec.bounded && !spec.box.contains(proposal)) return state;
  const double delta = evaluate(objective, proposal) - evaluate(objective, state.point);
  if (delta <= 0.0 || u < std::exp(-kappa * delta)) {
    ++diag.metropolis_accepted;
    diag.last_accepted = true;
    return {proposal};
  }
  return state;
}

// ---------------------------------------------------------------------------
// Audits

bool satisfies_slice(const RosenbrockState& s, EnergyLevel kappa) noexcept {
  const Point p = s.point;
  return is_finite(p) &&
         holds_le(s.log_u, -kappa.value() * kRosenbrockC * sq(p.x2 - p.x1 * p.x1));
}

bool satisfies_slice(const HimmelblauState& s, EnergyLevel kappa) noexcept {
  const Point p = s.point;
  return is_finite(p) && holds_le(s.log_u1, -kappa.value() * sq(himmelblau_g1(p))) &&
         holds_le(s.log_u2, -kappa.value() * sq(himmelblau_g2(p)));
}

bool satisfies_slice(const RastriginState& s, EnergyLevel kappa) noexcept {
  const auto& box = objective_spec(ObjectiveId::rastrigin).box;
  if (!is_finite(s.point) || !box.contains(s.point)) return false;
  const double k = kappa.value();
  return holds_le(-k * kRastriginA * std::cos(kTwoPi * s.point.x1), s.y[0]) &&
         holds_le(-k * kRastriginA * std::cos(kTwoPi * s.point.x2), s.y[1]);
}

bool satisfies_slice(const ShubertState& s) noexcept {
  const auto& box = objective_spec(ObjectiveId::shubert).box;
  if (!is_finite(s.point) || !box.contains(s.point)) return false;
  const double c_for_x2 = shubert_c(s.point.x1);
  for (int j = 1; j <= 5; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    if (!holds_le(shubert_lower(s.c_for_x1, j, s.point.x1), s.y_x1[i])) return false;
    if (!holds_le(shubert_lower(c_for_x2, j, s.point.x2), s.y_x2[i])) return false;
  }
  return true;
}

bool satisfies_slice(const GenericState& s, std::span<const ComponentFn> components) noexcept {
  if (!is_finite(s.point) || s.y.size() != components.size()) return false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!holds_le(components[i](s.point), s.y[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SamplerKind kind) noexcept {
  switch (kind) {
    case SamplerKind::slice: return "slice";
    case SamplerKind::metropolis: return "metropolis";
    case SamplerKind::generic: return "generic";
  }
  return "unknown";
}

namespace {

template <class State, class StepFn, class AuditFn>
class KernelSampler final : public Sampler {
 public:
  KernelSampler(State state, StepFn step, AuditFn audit)
      : state_(std::move(state)), step_(std::move(step)), audit_(std::move(audit)) {}

  Point step(RngStream& rng, StepDiagnostics& diag) override {
    state_ = step_(state_, rng, diag);
    return state_.point;
  }
  Point point() const override { return state_.point; }
  bool audit() const override { return audit_(state_); }

 private:
  State state_;
  StepFn step_;
  AuditFn audit_;
};

template <class State, class StepFn, class AuditFn>
std::unique_ptr<Sampler> wrap(State state, StepFn step, AuditFn audit) {
  return std::make_unique<KernelSampler<State, StepFn, AuditFn>>(std::move(state), std::move(step),
                                                                 std::move(audit));
}

std::unique_ptr<Sampler> make_generic(ObjectiveId objective, EnergyLevel kappa, Point start) {
  if (!is_additive(objective)) {
    throw ConfigError("generic sampler requires an additive objective; " +
                      std::string(to_string(objective)) + " is not");
  }
  const auto& spec = objective_spec(objective);
  auto fns = std::make_shared<const std::vector<ComponentFn>>(component_functions(objective));
  GenericState init{start, {}};
  for (const auto& fn : *fns) init.y.push_back(fn(start));
  const DomainBox box = spec.box;
  return wrap(
      std::move(init),
      [fns, box, kappa](const GenericState& s, RngStream& rng, StepDiagnostics& d) {
        return generic_additive_slice_step(*fns, box, kappa, s, rng, d);
      },
      [fns](const GenericState& s) { return satisfies_slice(s, *fns); });
}

}  // namespace

std::unique_ptr<Sampler> make_sampler(ObjectiveId objective, SamplerKind kind, EnergyLevel kappa,
                                      Point start, double metropolis_sigma) {
  const auto& spec = objective_spec(objective);
  if (!is_finite(start)) throw ConfigError("start point must be finite");
  if (spec.bounded && !spec.box.contains(start)) {
    throw ConfigError("start point lies outside the " + std::string(to_string(objective)) +
                      " domain");
  }
  const double k = kappa.value();

  if (kind == SamplerKind::metropolis) {
    if (!(metropolis_sigma > 0.0) || !std::isfinite(metropolis_sigma)) {
      throw ConfigError("metropolis step size must be > 0");
    }
    return wrap(
        MetropolisState{start},
        [objective, k, metropolis_sigma](const MetropolisState& s, RngStream& rng,
                                         StepDiagnostics& d) {
          return metropolis_step(objective, k, metropolis_sigma, s, rng, d);
        },
        [](const MetropolisState&) { return true; });
  }
  if (kind == SamplerKind::generic) return make_generic(objective, kappa, start);

  switch (objective) {
    case ObjectiveId::rosenbrock:
      return wrap(
          RosenbrockState{start, -k * kRosenbrockC * sq(start.x2 - start.x1 * start.x1)},
          [kappa](const RosenbrockState& s, RngStream& rng, StepDiagnostics& d) {
            return rosenbrock_step(s, kappa, rng, d);
          },
          [kappa](const RosenbrockState& s) { return satisfies_slice(s, kappa); });
    case ObjectiveId::himmelblau:
      return wrap(
          HimmelblauState{start, -k * sq(himmelblau_g1(start)), -k * sq(himmelblau_g2(start))},
          [kappa](const HimmelblauState& s, RngStream& rng, StepDiagnostics& d) {
            return himmelblau_step(s, kappa, rng, d);
          },
          [kappa](const HimmelblauState& s) { return satisfies_slice(s, kappa); });
    case ObjectiveId::rastrigin:
      return wrap(
          RastriginState{start,
                         {-k * kRastriginA * std::cos(kTwoPi * start.x1),
                          -k * kRastriginA * std::cos(kTwoPi * start.x2)}},
          [kappa](const RastriginState& s, RngStream& rng, StepDiagnostics& d) {
            return rastrigin_step(s, kappa, rng, d);
          },
          [kappa](const RastriginState& s) { return satisfies_slice(s, kappa); });
    case ObjectiveId::shubert: {
      ShubertState init{start, {}, {}, shubert_c(start.x2)};
      const double c1 = shubert_c(start.x1);
      for (int j = 1; j <= 5; ++j) {
        init.y_x1[static_cast<std::size_t>(j - 1)] = shubert_lower(init.c_for_x1, j, start.x1);
        init.y_x2[static_cast<std::size_t>(j - 1)] = shubert_lower(c1, j, start.x2);
      }
      return wrap(
          init,
          [kappa](const ShubertState& s, RngStream& rng, StepDiagnostics& d) {
            return shubert_step(s, kappa, rng, d);
          },
          [](const ShubertState& s) { return satisfies_slice(s); });
    }
    case ObjectiveId::booth:
    case ObjectiveId::michalewicz:
      return make_generic(objective, kappa, start);
  }
  throw ConfigError("unsupported objective");
}

}  // namespace boltzslice
