#pragma once

// File formats of the command-line tool. Everything here is
// locale-independent so identical runs give byte-identical files.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "boltzslice/experiment.hpp"
#include "boltzslice/objectives.hpp"

namespace boltzslice::cli {

using ordered_json = nlohmann::ordered_json;

// 17 significant digits, enough to round-trip any double.
std::string format_float(double v);
// Shortest representation that round-trips (used in file names).
std::string format_shortest(double v);

// Header iter,phase,x1,x2,f then one LF-terminated row per entry.
std::string trace_csv(const Trace& trace);
// Header x1,x2,f then one row per grid sample.
std::string contour_csv(std::span<const GridSample> grid);

ordered_json summary_json(const RunResult& run);

// "<function>_kappa<value>"
std::string output_stem(ObjectiveId id, double kappa);

// Writes bytes verbatim. Throws std::runtime_error when the file cannot be
// written.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace boltzslice::cli
