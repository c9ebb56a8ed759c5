#pragma once

#include "fracmono/monotone.hpp"
#include "fracmono/quadrature.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracmono {

enum class SuiteKind { calculus_oracles, gromov, lhopital, zero_sets, mean_corollaries, sir, radial };

std::string_view to_string(SuiteKind s) noexcept;
std::optional<SuiteKind> suite_from_string(std::string_view name) noexcept;
std::span<const SuiteKind> all_suites() noexcept;

/// A fraction-rule case built from battery names (see battery::by_name).
struct UserCase {
    SuiteKind rule = SuiteKind::gromov; ///< gromov or lhopital
    std::string f;
    std::string g;
    int n = 1;
    double lo = 0.0;
    double hi = 1.0;
    double c = 0.0;
    std::optional<Verdict> expected; ///< declared verdict of the hypothesis ratio
};

struct SuiteConfig {
    std::vector<SuiteKind> suites;
    QuadConfig quad;
    Resolution res;
    std::size_t grid_size = 41;
    std::filesystem::path output_dir = "verify-out";
    std::uint64_t seed = 20240601;
    std::uint64_t mc_samples = 1'000'000;
    std::vector<UserCase> cases;

    /// Throws config_error: empty or repeated suites, grid_size < 8,
    /// mc_samples < 10^4, bad tolerances or malformed user cases.
    void validate() const;
};

/// One sampled curve. NaN cells are written as empty CSV fields.
struct Curve {
    std::string suite;
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct CaseRecord {
    std::string suite;
    std::string id;
    std::string hypothesis; ///< verdict name, or empty when not a monotonicity check
    std::string conclusion;
    double max_violation = 0.0; ///< largest contract miss or error observed
    double wall_seconds = 0.0;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string version;
    SuiteConfig config;
    std::vector<CaseRecord> cases;
    std::vector<Curve> curves;

    bool pass() const noexcept;
};

/// Run the selected suites over the standard battery plus the user cases.
/// Case failures and errors raised while evaluating a case are recorded in
/// the report, not thrown. Cases of a suite run in parallel; the report
/// lists them in a fixed order.
RunReport run_suites(const SuiteConfig& cfg);

/// run_suites followed by write_report into cfg.output_dir.
RunReport run(const SuiteConfig& cfg);

/// Tool version string.
std::string_view version() noexcept;

} // namespace fracmono
