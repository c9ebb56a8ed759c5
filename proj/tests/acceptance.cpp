// Acceptance criteria 1-11: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "fracmono/battery.hpp"
#include "fracmono/calculus.hpp"
#include "fracmono/radial.hpp"
#include "fracmono/sir.hpp"
#include "fracmono/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace fracmono;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %s  %-34s %s [%.2f s]\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
    std::fflush(stdout);
    failures += out.pass ? 0 : 1;
}

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double oracle_tol(double v)
{
    return std::max(1e-7, 1e-6 * std::abs(v));
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Worst err/tol ratio of a pairwise check over the battery.
template <class Check>
double worst_ratio(Check&& check, std::size_t& count)
{
    double worst = 0.0;
    for (const auto& iv : battery::intervals())
        for (const auto& x : make_grid(iv, 20, false).points)
            check(iv, x, worst, count);
    return worst;
}

struct SuiteTally {
    std::size_t cases = 0, failed = 0;
    std::map<std::string, std::size_t> by_verdict;
    RunReport report;
};

SuiteTally run_one(SuiteKind kind)
{
    SuiteConfig cfg;
    cfg.suites = {kind};
    SuiteTally t;
    t.report = run_suites(cfg);
    for (const auto& c : t.report.cases) {
        ++t.cases;
        t.failed += c.pass ? 0 : 1;
        if (!c.hypothesis.empty())
            ++t.by_verdict[c.hypothesis];
    }
    return t;
}

std::string tally_detail(const SuiteTally& t)
{
    std::string s = std::to_string(t.cases - t.failed) + "/" + std::to_string(t.cases) + " cases pass";
    for (const auto& [v, n] : t.by_verdict)
        s += ", " + std::to_string(n) + " " + v;
    return s;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> csv_tree(const fs::path& root)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root))
        if (e.is_regular_file() && e.path().extension() == ".csv")
            out[fs::relative(e.path(), root).string()] = slurp(e.path());
    return out;
}

} // namespace

int main()
{
    criterion(1, "oracle equivalence", [] {
        const auto t0 = std::chrono::steady_clock::now();
        std::size_t count = 0;
        const double worst = worst_ratio(
            [](const Interval& iv, double x, double& w, std::size_t& n) {
                for (const auto& e : battery::standard(iv.c()))
                    for (int order : {2, 3}) {
                        const AntiderivSpec spec{order, e.fn, iv};
                        const double a = antideriv_cauchy(spec, x);
                        const double b = antideriv_repeated(spec, x);
                        w = std::max(w, std::abs(a - b) / oracle_tol(a));
                        ++n;
                    }
            },
            count);
        const double secs = seconds_since(t0);
        return Outcome{worst <= 1.0 && secs < 30.0, std::to_string(count) + " points, worst err/tol " +
                                                        fmt("%.3g", worst) + ", " + fmt("%.2f s (< 30 s)", secs)};
    });

    criterion(2, "closed form of A_{n,1,c}", [] {
        double worst = 0.0;
        std::size_t count = 0;
        for (const auto& iv : battery::intervals())
            for (int n = 1; n <= 6; ++n)
                for (double x : make_grid(iv, 41, false).points) {
                    const double a = antideriv_cauchy({n, battery::constant(1.0), iv}, x);
                    worst = std::max(worst, std::abs(a - std::pow(x - iv.c(), n) / factorial(n)));
                    ++count;
                }
        return Outcome{worst <= 1e-10, std::to_string(count) + " points, max error " + fmt("%.3g (<= 1e-10)", worst)};
    });

    criterion(3, "semigroup identity", [] {
        std::size_t count = 0;
        const double worst = worst_ratio(
            [](const Interval& iv, double x, double& w, std::size_t& n) {
                for (const auto& e : battery::standard(iv.c()))
                    for (int order : {2, 3})
                        for (int k = 1; k < order; ++k) {
                            const auto [a, b] = antideriv_semigroup_check({order, e.fn, iv}, k, x);
                            w = std::max(w, std::abs(a - b) / oracle_tol(a));
                            ++n;
                        }
            },
            count);
        return Outcome{worst <= 1.0, std::to_string(count) + " points, worst err/tol " + fmt("%.3g", worst)};
    });

    criterion(4, "remainder integral form", [] {
        std::size_t count = 0;
        const double worst = worst_ratio(
            [](const Interval& iv, double x, double& w, std::size_t& n) {
                for (const auto& e : battery::smooth(iv.c()))
                    for (int order = 1; order <= 3; ++order) {
                        const auto [r, a] = remainder_integral_check(order, e.fn, iv.c(), x);
                        w = std::max(w, std::abs(r - a) / oracle_tol(r));
                        ++n;
                    }
            },
            count);
        return Outcome{worst <= 1.0, std::to_string(count) + " points, worst err/tol " + fmt("%.3g", worst)};
    });

    criterion(5, "integral fraction rule", [] {
        const auto t = run_one(SuiteKind::gromov);
        return Outcome{t.cases > 0 && t.failed == 0, tally_detail(t)};
    });

    criterion(6, "differential fraction rule", [] {
        const auto t = run_one(SuiteKind::lhopital);
        std::size_t first_order = 0;
        for (const auto& c : t.report.cases)
            first_order += c.id.find("_n1_") != std::string::npos;
        return Outcome{t.cases > 0 && first_order > 0 && t.failed == 0,
                       tally_detail(t) + ", " + std::to_string(first_order) + " first-order chord matches"};
    });

    criterion(7, "zero sets of A and R derivatives", [] {
        const auto t = run_one(SuiteKind::zero_sets);
        std::size_t a = 0, r = 0;
        for (const auto& c : t.report.cases)
            (c.id.rfind("antideriv_", 0) == 0 ? a : r) += 1;
        return Outcome{a > 0 && r > 0 && t.failed == 0, tally_detail(t) + " (" + std::to_string(a) + " A, " +
                                                            std::to_string(r) + " R)"};
    });

    criterion(8, "mean monotonicity and convexity", [] {
        const auto t = run_one(SuiteKind::mean_corollaries);
        std::size_t mono = 0, convex = 0;
        for (const auto& c : t.report.cases)
            (c.id.rfind("monotone_", 0) == 0 ? mono : convex) += 1;
        return Outcome{mono > 0 && convex > 0 && t.failed == 0,
                       tally_detail(t) + " (" + std::to_string(mono) + " monotone, " + std::to_string(convex) +
                           " convex)"};
    });

    criterion(9, "SIR conservation, final size, bound", [] {
        const auto t0 = std::chrono::steady_clock::now();
        double drift = 0.0, size_gap = 0.0;
        bool apriori = true;
        int cases = 0;
        for (double r0 : {1.5, 2.0, 4.0})
            for (double s0 : {0.9, 0.99})
                for (double i0 : {0.01, 0.1}) {
                    if (s0 + i0 > 1.0)
                        continue;
                    const SirParams p{r0, s0, i0};
                    const auto traj = sir_integrate(p);
                    drift = std::max(drift, max_invariant_drift(r0, traj));
                    size_gap = std::max(size_gap, std::abs(sir_final_size(p).formula - traj.back().s));
                    apriori = apriori && sir_apriori_check(p, traj, 0, true);
                    ++cases;
                }
        const auto suite = run_one(SuiteKind::sir);
        const double secs = seconds_since(t0);
        const bool ok = drift <= 1e-8 && size_gap <= 1e-5 && apriori && suite.failed == 0 && secs < 60.0;
        return Outcome{ok, std::to_string(cases) + " orbits, drift " + fmt("%.3g", drift) + ", final size gap " +
                               fmt("%.3g", size_gap) + ", strict bound " + (apriori ? "holds" : "FAILS") + ", suite " +
                               std::to_string(suite.cases - suite.failed) + "/" + std::to_string(suite.cases) + ", " +
                               fmt("%.2f s (< 60 s)", secs)};
    });

    criterion(10, "radial reduction", [] {
        const double disk = radial_integral(2, battery::constant(1.0), 1.0);
        const double ball = radial_integral(3, battery::constant(1.0), 1.0);
        const double tol = std::max(QuadConfig{}.abs_tol, QuadConfig{}.rel_tol * 4.0 * std::numbers::pi / 3.0);
        const double err = std::max(std::abs(disk - std::numbers::pi), std::abs(ball - 4.0 * std::numbers::pi / 3.0));
        const auto t = run_one(SuiteKind::radial);
        return Outcome{err <= tol && t.failed == 0,
                       "constants error " + fmt("%.3g", err) + ", " + tally_detail(t) + " (MC at 10^6 samples)"};
    });

    criterion(11, "deterministic CLI output", [] {
        const fs::path root = fs::temp_directory_path() / "fracmono_acceptance_determinism";
        fs::remove_all(root);
        fs::create_directories(root);
        const fs::path config = root / "config.json";
        std::ofstream(config) << R"({"suites": ["calculus_oracles", "gromov", "lhopital", "zero_sets",
            "mean_corollaries", "sir", "radial"], "seed": 777})";
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            const std::string cmd = std::string(VERIFY_EXE) + " --config " + config.string() + " --out " +
                                    (root / ("run" + std::to_string(k))).string() + " >/dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            codes[k] = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        }
        const auto a = csv_tree(root / "run0");
        const auto b = csv_tree(root / "run1");
        const bool same = !a.empty() && a == b;
        fs::remove_all(root);
        return Outcome{same && codes[0] == 0 && codes[1] == 0,
                       std::to_string(a.size()) + " CSV files, " + (same ? "byte-identical" : "DIFFER") +
                           ", exit codes " + std::to_string(codes[0]) + "/" + std::to_string(codes[1])};
    });

    std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
