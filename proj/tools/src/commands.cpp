#include "boltzslice_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "boltzslice/errors.hpp"
#include "boltzslice/experiment.hpp"
#include "boltzslice_cli/formats.hpp"
#include "boltzslice_cli/validation.hpp"

namespace boltzslice::cli {
namespace {

namespace fs = std::filesystem;

// Bad flag values; maps to kExitUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ObjectiveId parse_function(const std::string& name) {
  if (auto id = parse_objective(name)) return *id;
  throw UsageError("unknown function '" + name + "'");
}

double parse_number(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError("invalid number '" + std::string(text) + "' in " + std::string(what));
  }
  return v;
}

std::vector<double> parse_list(const std::string& text, std::string_view what) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_number(rest.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

Point parse_start(const std::string& text) {
  const auto v = parse_list(text, "--start");
  if (v.size() != 2) throw UsageError("--start expects x1,x2");
  return {v[0], v[1]};
}

void require_positive(double v, const char* flag) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(flag) + " must be > 0");
}

struct ChainFlags {
  std::string function;
  double kappa = 0.0;
  std::uint64_t iters = kDefaultIterations;
  std::uint64_t burnin = kDefaultBurnin;
  std::uint64_t seed = kDefaultSeed;
  std::string start;
  std::string trace;
  std::string summary;
  double sigma = 0.0;
};

void add_chain_flags(CLI::App* cmd, ChainFlags& f) {
  cmd->add_option("--function", f.function, "objective id")->required();
  cmd->add_option("--kappa", f.kappa, "energy level")->required();
  cmd->add_option("--iters", f.iters, "total iterations")->capture_default_str();
  cmd->add_option("--burnin", f.burnin, "burn-in iterations")->capture_default_str();
  cmd->add_option("--seed", f.seed, "master seed")->capture_default_str();
  cmd->add_option("--start", f.start, "start point x1,x2");
  cmd->add_option("--trace", f.trace, "trace CSV path");
  cmd->add_option("--summary", f.summary, "summary JSON path");
}

int do_chain(const ChainFlags& f, SamplerKind kind, std::ostream& out) {
  const ObjectiveId id = parse_function(f.function);
  require_positive(f.kappa, "--kappa");
  if (kind == SamplerKind::metropolis) require_positive(f.sigma, "--sigma");

  ExperimentConfig cfg;
  cfg.objective = id;
  cfg.kappas = {f.kappa};
  cfg.iterations = f.iters;
  cfg.burnin = f.burnin;
  cfg.seed = f.seed;
  if (!f.start.empty()) cfg.start = parse_start(f.start);
  cfg.sampler = kind;
  cfg.metropolis_sigma = f.sigma;

  const RunResult run = run_chain(cfg);
  std::string stem = output_stem(id, f.kappa);
  if (kind == SamplerKind::metropolis) stem += "_metropolis";
  const fs::path trace = f.trace.empty() ? fs::path(stem + ".csv") : fs::path(f.trace);
  const fs::path summary = f.summary.empty() ? fs::path(stem + ".json") : fs::path(f.summary);
  write_file(trace, trace_csv(run.trace));
  write_file(summary, summary_json(run).dump(2) + "\n");
  out << "wrote " << trace.string() << " and " << summary.string() << "\n";
  return kExitOk;
}

struct SweepFlags {
  std::string function;
  std::string kappas;
  std::string outdir;
  std::uint64_t iters = kDefaultIterations;
  std::uint64_t burnin = kDefaultBurnin;
  std::uint64_t seed = kDefaultSeed;
  std::string start;
};

int do_sweep(const SweepFlags& f, std::ostream& out) {
  const ObjectiveId id = parse_function(f.function);
  ExperimentConfig cfg;
  cfg.objective = id;
  cfg.kappas = f.kappas.empty() ? objective_spec(id).default_kappas : parse_list(f.kappas, "--kappas");
  for (double k : cfg.kappas) require_positive(k, "--kappas");
  cfg.iterations = f.iters;
  cfg.burnin = f.burnin;
  cfg.seed = f.seed;
  if (!f.start.empty()) cfg.start = parse_start(f.start);

  const auto runs = run_sweep(cfg);
  const fs::path dir(f.outdir);
  fs::create_directories(dir);

  ordered_json index;
  index["function"] = std::string(to_string(id));
  index["seed"] = cfg.seed;
  index["iterations"] = cfg.iterations;
  index["burnin"] = cfg.burnin;
  auto entries = ordered_json::array();
  for (const auto& run : runs) {
    const std::string stem = output_stem(id, run.kappa);
    write_file(dir / (stem + ".csv"), trace_csv(run.trace));
    write_file(dir / (stem + ".json"), summary_json(run).dump(2) + "\n");
    entries.push_back({{"kappa", run.kappa},
                       {"trace", stem + ".csv"},
                       {"summary", stem + ".json"},
                       {"best_x1", run.best.point.x1},
                       {"best_x2", run.best.point.x2},
                       {"best_f", run.best.f}});
  }
  index["runs"] = std::move(entries);
  write_file(dir / "sweep_index.json", index.dump(2) + "\n");
  out << "wrote " << runs.size() << " runs to " << dir.string() << "\n";
  return kExitOk;
}

struct ContourFlags {
  std::string function;
  int n = 200;
  std::optional<double> x1_lo, x1_hi, x2_lo, x2_hi;
  std::string out;
};

int do_contour(const ContourFlags& f, std::ostream& out) {
  const ObjectiveId id = parse_function(f.function);
  if (f.n < 2) throw UsageError("--n must be >= 2");
  DomainBox box = objective_spec(id).box;
  if (f.x1_lo) box.x1_lo = *f.x1_lo;
  if (f.x1_hi) box.x1_hi = *f.x1_hi;
  if (f.x2_lo) box.x2_lo = *f.x2_lo;
  if (f.x2_hi) box.x2_hi = *f.x2_hi;
  try {
    box.validate();
  } catch (const ArgumentError& e) {
    throw UsageError(std::string("bad box override: ") + e.what());
  }
  const auto grid = contour_grid(id, box, f.n);
  write_file(f.out, contour_csv(grid));
  out << "wrote " << grid.size() << " grid points to " << f.out << "\n";
  return kExitOk;
}

int do_validate(const std::string& suite, std::uint64_t seed, std::ostream& out) {
  SuiteReport report;
  if (suite == "trunc") {
    report = validate_trunc(seed);
  } else if (suite == "grid-tv") {
    report = validate_grid_tv(seed);
  } else if (suite == "membership") {
    report = validate_membership(seed);
  } else {
    report = validate_booth(seed);
  }
  out << report_json(report).dump(2) << "\n";
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global minimisation by slice sampling the Boltzmann distribution", "boltzslice"};
  app.require_subcommand(1);

  ChainFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "one slice-sampler chain");
  add_chain_flags(run_cmd, run_flags);

  SweepFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "one chain per energy level");
  sweep_cmd->add_option("--function", sweep_flags.function, "objective id")->required();
  sweep_cmd->add_option("--kappas", sweep_flags.kappas, "comma-separated energy levels");
  sweep_cmd->add_option("--outdir", sweep_flags.outdir, "output directory")->required();
  sweep_cmd->add_option("--iters", sweep_flags.iters, "iterations per chain")->capture_default_str();
  sweep_cmd->add_option("--burnin", sweep_flags.burnin, "burn-in iterations")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_flags.seed, "master seed")->capture_default_str();
  sweep_cmd->add_option("--start", sweep_flags.start, "start point x1,x2");

  ContourFlags contour_flags;
  auto* contour_cmd = app.add_subcommand("contour", "objective values on a grid");
  contour_cmd->add_option("--function", contour_flags.function, "objective id")->required();
  contour_cmd->add_option("--n", contour_flags.n, "points per axis")->capture_default_str();
  contour_cmd->add_option("--x1-lo", contour_flags.x1_lo, "x1 lower bound");
  contour_cmd->add_option("--x1-hi", contour_flags.x1_hi, "x1 upper bound");
  contour_cmd->add_option("--x2-lo", contour_flags.x2_lo, "x2 lower bound");
  contour_cmd->add_option("--x2-hi", contour_flags.x2_hi, "x2 upper bound");
  contour_cmd->add_option("--out", contour_flags.out, "output CSV")->required();

  std::string suite;
  std::uint64_t validate_seed = kDefaultSeed;
  auto* validate_cmd = app.add_subcommand("validate", "run an invariant suite");
  validate_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"trunc", "grid-tv", "membership", "booth"}));
  validate_cmd->add_option("--seed", validate_seed, "master seed")->capture_default_str();

  ChainFlags baseline_flags;
  auto* baseline_cmd = app.add_subcommand("baseline", "random-walk Metropolis chain");
  add_chain_flags(baseline_cmd, baseline_flags);
  baseline_cmd->add_option("--sigma", baseline_flags.sigma, "proposal step size")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return do_chain(run_flags, SamplerKind::slice, out);
    if (baseline_cmd->parsed()) return do_chain(baseline_flags, SamplerKind::metropolis, out);
    if (sweep_cmd->parsed()) return do_sweep(sweep_flags, out);
    if (contour_cmd->parsed()) return do_contour(contour_flags, out);
    return do_validate(suite, validate_seed, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace boltzslice::cli
