// verify: batch runner for the fracmono verification suites.

#include "fracmono/errors.hpp"
#include "fracmono/report_io.hpp"
#include "fracmono/suites.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

enum exit_code : int { pass = 0, case_failure = 1, config_failure = 2, io_failure = 3 };

void print_summary(const fracmono::RunReport& report)
{
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
    std::vector<std::string> order;
    for (const auto& c : report.cases) {
        auto [it, fresh] = per_suite.try_emplace(c.suite, 0, 0);
        if (fresh)
            order.push_back(c.suite);
        ++it->second.first;
        it->second.second += c.pass ? 0 : 1;
    }
    for (const auto& suite : order) {
        const auto [total, failed] = per_suite[suite];
        std::printf("%-18s %5zu cases  %5zu failed\n", suite.c_str(), total, failed);
    }
    for (const auto& c : report.cases)
        if (!c.pass)
            std::printf("FAIL %s/%s: %s\n", c.suite.c_str(), c.id.c_str(), c.detail.c_str());
    std::printf("%s\n", report.pass() ? "overall: pass" : "overall: FAIL");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Run the fracmono verification suites and write CSV/JSON reports"};
    std::string config_path;
    std::vector<std::string> suites;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> grid;
    bool list_suites = false;
    bool show_version = false;

    app.add_option("--config", config_path, "JSON suite configuration");
    app.add_option("--suite", suites, "suite to run (repeatable; replaces the configured list)");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "Monte Carlo root seed");
    app.add_option("--grid", grid, "grid size for the monotonicity suites (>= 8)");
    app.add_flag("--list-suites", list_suites, "print the suite names and exit");
    app.add_flag("--version", show_version, "print the tool version and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? pass : config_failure;
    }

    if (show_version) {
        std::printf("verify %s\n", std::string(fracmono::version()).c_str());
        return pass;
    }
    if (list_suites) {
        for (auto s : fracmono::all_suites())
            std::printf("%s\n", std::string(fracmono::to_string(s)).c_str());
        return pass;
    }

    try {
        fracmono::SuiteConfig cfg = config_path.empty() ? fracmono::SuiteConfig{} : fracmono::load_config(config_path);
        if (!suites.empty()) {
            cfg.suites.clear();
            for (const auto& name : suites) {
                const auto s = fracmono::suite_from_string(name);
                if (!s)
                    throw fracmono::config_error("unknown suite '" + name + "'");
                cfg.suites.push_back(*s);
            }
        }
        if (out_dir)
            cfg.output_dir = *out_dir;
        if (seed)
            cfg.seed = *seed;
        if (grid)
            cfg.grid_size = *grid;
        cfg.validate();

        const auto report = fracmono::run(cfg);
        print_summary(report);
        std::printf("reports written to %s\n", cfg.output_dir.string().c_str());
        return report.pass() ? pass : case_failure;
    } catch (const fracmono::config_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return config_failure;
    } catch (const fracmono::io_error& e) {
        std::fprintf(stderr, "I/O error: %s\n", e.what());
        return io_failure;
    }
}
