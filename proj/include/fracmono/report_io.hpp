#pragma once

#include "fracmono/suites.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace fracmono {

/// Parse a JSON suite configuration. Every key is optional except that the
/// suites list must end up nonempty after command-line overrides (checked by
/// SuiteConfig::validate). Unknown keys are rejected. Throws config_error.
///
///   {
///     "suites": ["gromov", "sir"],
///     "grid_size": 41,
///     "output_dir": "verify-out",
///     "seed": 20240601,
///     "monte_carlo_samples": 1000000,
///     "tolerances": {"abs_tol": 1e-10, "rel_tol": 1e-9, "max_depth": 40,
///                    "min_intervals": 4, "tau_strict": 1e-9, "tau_zero": 1e-8},
///     "cases": [{"rule": "gromov", "f": "exp", "g": "one", "n": 3,
///                "interval": [0, 1], "c": 0, "expected": "strictly_increasing"}]
///   }
SuiteConfig parse_config(std::string_view json_text);

/// Read and parse a configuration file; an unreadable file is a config_error too.
SuiteConfig load_config(const std::filesystem::path& path);

/// The configuration as a JSON document (round-trips through parse_config).
std::string config_to_json(const SuiteConfig& cfg);

/// Formats a value with 17 significant digits; NaN becomes an empty string.
std::string format_value(double v);

/// One CSV per curve under dir/<suite>/<name>.csv and dir/summary.csv with one
/// row per case. Throws io_error.
void emit_csv(const RunReport& report, const std::filesystem::path& dir);

/// Full report (including wall times) as JSON.
std::string report_to_json(const RunReport& report);

/// emit_csv plus dir/report.json. Throws io_error.
void write_report(const RunReport& report, const std::filesystem::path& dir);

} // namespace fracmono
