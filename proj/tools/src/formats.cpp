#include "boltzslice_cli/formats.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace boltzslice::cli {

std::string format_float(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return {buf.data(), end};
}

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return {buf.data(), end};
}

std::string trace_csv(const Trace& trace) {
  std::string out = "iter,phase,x1,x2,f\n";
  out.reserve(trace.size() * 72);
  for (const auto& e : trace.entries()) {
    out += std::to_string(e.iter);
    out += ',';
    out += to_string(e.phase);
    out += ',';
    out += format_float(e.point.x1);
    out += ',';
    out += format_float(e.point.x2);
    out += ',';
    out += format_float(e.f);
    out += '\n';
  }
  return out;
}

std::string contour_csv(std::span<const GridSample> grid) {
  std::string out = "x1,x2,f\n";
  out.reserve(grid.size() * 64);
  for (const auto& g : grid) {
    out += format_float(g.x1);
    out += ',';
    out += format_float(g.x2);
    out += ',';
    out += format_float(g.f);
    out += '\n';
  }
  return out;
}

ordered_json summary_json(const RunResult& run) {
  ordered_json j;
  j["function"] = std::string(to_string(run.objective));
  j["kappa"] = run.kappa;
  j["iterations"] = run.trace.size();
  j["burnin"] = run.trace.burnin();
  j["seed"] = run.seed;
  j["start"] = {run.start.x1, run.start.x2};
  j["best_x1"] = run.best.point.x1;
  j["best_x2"] = run.best.point.x2;
  j["best_f"] = run.best.f;
  j["mean_x1"] = run.ergodic_mean.x1;
  j["mean_x2"] = run.ergodic_mean.x2;
  if (run.occupancy) {
    auto occ = ordered_json::array();
    for (double p : run.occupancy->per_mode) occ.push_back(p);
    occ.push_back(run.occupancy->unassigned);
    j["occupancy"] = std::move(occ);
  } else {
    j["occupancy"] = nullptr;
  }
  j["empty_slice_repairs"] = run.diagnostics.empty_slice_repairs;
  j["tail_fallbacks"] = run.diagnostics.tail_fallbacks;
  return j;
}

std::string output_stem(ObjectiveId id, double kappa) {
  return std::string(to_string(id)) + "_kappa" + format_shortest(kappa);
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace boltzslice::cli
