#include "fracmono/suites.hpp"

#include "fracmono/battery.hpp"
#include "fracmono/calculus.hpp"
#include "fracmono/errors.hpp"
#include "fracmono/radial.hpp"
#include "fracmono/report_io.hpp"
#include "fracmono/sir.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>
#include <utility>

namespace fracmono {

namespace {

constexpr std::array<SuiteKind, 7> suite_list{SuiteKind::calculus_oracles, SuiteKind::gromov,
                                              SuiteKind::lhopital,         SuiteKind::zero_sets,
                                              SuiteKind::mean_corollaries, SuiteKind::sir,
                                              SuiteKind::radial};

} // namespace

std::string_view to_string(SuiteKind s) noexcept
{
    switch (s) {
    case SuiteKind::calculus_oracles: return "calculus_oracles";
    case SuiteKind::gromov: return "gromov";
    case SuiteKind::lhopital: return "lhopital";
    case SuiteKind::zero_sets: return "zero_sets";
    case SuiteKind::mean_corollaries: return "mean_corollaries";
    case SuiteKind::sir: return "sir";
    case SuiteKind::radial: return "radial";
    }
    return "unknown";
}

std::optional<SuiteKind> suite_from_string(std::string_view name) noexcept
{
    for (SuiteKind s : suite_list)
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

std::span<const SuiteKind> all_suites() noexcept
{
    return suite_list;
}

std::string_view version() noexcept
{
    return FRACMONO_VERSION;
}

void SuiteConfig::validate() const
{
    if (suites.empty())
        throw config_error("no suites selected");
    for (std::size_t i = 0; i < suites.size(); ++i)
        for (std::size_t j = i + 1; j < suites.size(); ++j)
            if (suites[i] == suites[j])
                throw config_error("suite '" + std::string(to_string(suites[i])) + "' listed twice");
    if (grid_size < 8)
        throw config_error("grid_size must be at least 8");
    if (mc_samples < 10000)
        throw config_error("monte_carlo_samples must be at least 10000");
    try {
        quad.validate();
    } catch (const error& e) {
        throw config_error(e.what());
    }
    if (!(res.strict_scale > 0.0) || !(res.zero_scale > 0.0) || !std::isfinite(res.strict_scale) ||
        !std::isfinite(res.zero_scale))
        throw config_error("tau_strict and tau_zero must be positive");
    for (const auto& uc : cases) {
        if (uc.rule != SuiteKind::gromov && uc.rule != SuiteKind::lhopital)
            throw config_error("user cases must use rule 'gromov' or 'lhopital'");
        if (uc.n < 1 || uc.n > 4)
            throw config_error("user case order n must lie in 1..4");
        try {
            Interval(uc.lo, uc.hi, uc.c);
            battery::by_name(uc.f, uc.c);
            battery::by_name(uc.g, uc.c);
        } catch (const error& e) {
            throw config_error(std::string("user case: ") + e.what());
        }
    }
}

bool RunReport::pass() const noexcept
{
    return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& r) { return r.pass; });
}

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t oracle_points = 20;

struct skip_case {};

// Records and curves produced by one task.
struct Sink {
    std::string suite;
    std::vector<CaseRecord> records;
    std::vector<Curve> curves;

    // Runs body on a fresh record; throwing skip_case drops the record and its curves.
    template <class F>
    void check(std::string id, F&& body)
    {
        CaseRecord rec;
        rec.suite = suite;
        rec.id = std::move(id);
        const std::size_t curve_mark = curves.size();
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(rec);
        } catch (const skip_case&) {
            curves.resize(curve_mark);
            return;
        } catch (const std::exception& e) {
            rec.pass = false;
            rec.detail = std::string("error: ") + e.what();
        }
        rec.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        records.push_back(std::move(rec));
    }

    void curve(std::string name, std::vector<std::string> columns, std::vector<std::vector<double>> rows)
    {
        curves.push_back({suite, std::move(name), std::move(columns), std::move(rows)});
    }
};

struct Task {
    std::string label;
    std::function<void(Sink&)> body;
};

void run_tasks(std::string_view suite, std::vector<Task>& tasks, RunReport& report)
{
    std::vector<Sink> sinks(tasks.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), std::size_t{1}, std::max<std::size_t>(tasks.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    Sink& sink = sinks[i];
                    sink.suite = std::string(suite);
                    try {
                        tasks[i].body(sink);
                    } catch (const std::exception& e) {
                        CaseRecord rec;
                        rec.suite = sink.suite;
                        rec.id = tasks[i].label;
                        rec.detail = std::string("error: ") + e.what();
                        sink.records.push_back(std::move(rec));
                    }
                }
            });
    }
    for (auto& s : sinks) {
        std::move(s.records.begin(), s.records.end(), std::back_inserter(report.cases));
        std::move(s.curves.begin(), s.curves.end(), std::back_inserter(report.curves));
    }
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string on(const Interval& iv)
{
    return "on_" + num(iv.lo()) + "_" + num(iv.hi()) + "_c" + num(iv.c());
}

std::string oracle_detail(double worst, double worst_tol)
{
    return "max error " + num(worst) + " (tolerance there " + num(worst_tol) + ")";
}

double oracle_tol(double value)
{
    return std::max(1e-7, 1e-6 * std::abs(value));
}

struct Signed {
    std::string name;
    RealFn fn;
};

// Battery members with both signs; the negated copies are prefixed "minus_".
std::vector<Signed> both_signs(const std::vector<battery::Entry>& entries)
{
    std::vector<Signed> out;
    for (const auto& e : entries) {
        out.push_back({e.name, e.fn});
        out.push_back({"minus_" + e.name, e.fn.negated()});
    }
    return out;
}

// Hypothesis and conclusion samples merged by abscissa.
std::vector<std::vector<double>> merge(const std::vector<Sample>& a, const std::vector<Sample>& b)
{
    std::map<double, std::pair<double, double>> rows;
    for (const auto& s : a)
        rows[s.x] = {s.value, nan};
    for (const auto& s : b) {
        auto [it, fresh] = rows.try_emplace(s.x, nan, s.value);
        if (!fresh)
            it->second.second = s.value;
    }
    std::vector<std::vector<double>> out;
    out.reserve(rows.size());
    for (const auto& [x, v] : rows)
        out.push_back({x, v.first, v.second});
    return out;
}

void fill_fraction(CaseRecord& rec, const FractionReports& r, const std::optional<Verdict>& expected)
{
    rec.hypothesis = std::string(to_string(r.hypothesis.verdict));
    rec.conclusion = std::string(to_string(r.conclusion.verdict));
    rec.max_violation = r.conclusion.max_violation();
    rec.pass = inherits(r.hypothesis.verdict, r.conclusion.verdict);
    if (!rec.pass)
        rec.detail = "conclusion does not inherit the hypothesis verdict";
    if (expected && *expected != r.hypothesis.verdict) {
        rec.pass = false;
        rec.detail = "hypothesis verdict differs from the declared " + std::string(to_string(*expected));
    }
}

// ---------------------------------------------------------------- calculus

void calculus_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    const QuadConfig quad = cfg.quad;
    for (const auto& iv : battery::intervals()) {
        const Grid grid = make_grid(iv, oracle_points, false);

        for (int n = 1; n <= 4; ++n) {
            const std::string id = "closed_form_one_n" + std::to_string(n) + "_" + on(iv);
            tasks.push_back({id, [=](Sink& sink) {
                sink.check(id, [&](CaseRecord& rec) {
                    std::vector<std::vector<double>> rows;
                    double worst = 0.0;
                    for (double x : grid.points) {
                        const double a = antideriv_cauchy({n, battery::constant(1.0), iv}, x, quad);
                        const double exact = std::pow(x - iv.c(), n) / factorial(n);
                        worst = std::max(worst, std::abs(a - exact));
                        rows.push_back({x, a, exact});
                    }
                    rec.max_violation = worst;
                    rec.pass = worst <= 1e-10;
                    rec.detail = "max |A - (x-c)^n/n!| " + num(worst);
                    sink.curve(id, {"x", "antideriv", "closed_form"}, std::move(rows));
                });
            }});
        }

        for (const auto& entry : battery::standard(iv.c())) {
            for (int n : {2, 3}) {
                const std::string id = "oracle_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        const AntiderivSpec spec{n, entry.fn, iv};
                        std::vector<std::vector<double>> rows;
                        double worst = 0.0, worst_tol = 0.0;
                        rec.pass = true;
                        for (double x : grid.points) {
                            const double a = antideriv_cauchy(spec, x, quad);
                            const double b = antideriv_repeated(spec, x, quad);
                            const double err = std::abs(a - b);
                            if (err > oracle_tol(a))
                                rec.pass = false;
                            if (err >= worst) {
                                worst = err;
                                worst_tol = oracle_tol(a);
                            }
                            rows.push_back({x, a, b});
                        }
                        rec.max_violation = worst;
                        rec.detail = oracle_detail(worst, worst_tol);
                        sink.curve(id, {"x", "cauchy", "repeated"}, std::move(rows));
                    });
                }});

                for (int k = 1; k < n; ++k) {
                    const std::string sid = "semigroup_" + entry.name + "_n" + std::to_string(n) + "_k" +
                                            std::to_string(k) + "_" + on(iv);
                    tasks.push_back({sid, [=](Sink& sink) {
                        sink.check(sid, [&](CaseRecord& rec) {
                            const AntiderivSpec spec{n, entry.fn, iv};
                            double worst = 0.0, worst_tol = 0.0;
                            rec.pass = true;
                            for (double x : grid.points) {
                                const auto [direct, composed] = antideriv_semigroup_check(spec, k, x, quad);
                                const double err = std::abs(direct - composed);
                                if (err > oracle_tol(direct))
                                    rec.pass = false;
                                if (err >= worst) {
                                    worst = err;
                                    worst_tol = oracle_tol(direct);
                                }
                            }
                            rec.max_violation = worst;
                            rec.detail = oracle_detail(worst, worst_tol);
                        });
                    }});
                }
            }
        }

        for (const auto& entry : battery::smooth(iv.c())) {
            for (int n = 1; n <= 3; ++n) {
                const std::string id = "remainder_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        std::vector<std::vector<double>> rows;
                        double worst = 0.0, worst_tol = 0.0;
                        rec.pass = true;
                        for (double x : grid.points) {
                            const auto [r, a] = remainder_integral_check(n, entry.fn, iv.c(), x, quad);
                            const double err = std::abs(r - a);
                            if (err > oracle_tol(r))
                                rec.pass = false;
                            if (err >= worst) {
                                worst = err;
                                worst_tol = oracle_tol(r);
                            }
                            rows.push_back({x, r, a});
                        }
                        rec.max_violation = worst;
                        rec.detail = oracle_detail(worst, worst_tol);
                        sink.curve(id, {"x", "remainder", "integral_form"}, std::move(rows));
                    });
                }});
            }
        }
    }
}

// ---------------------------------------------------------- fraction rules

std::string fraction_id(const std::string& f, const std::string& g, int n, const Interval& iv)
{
    return f + "_over_" + g + "_n" + std::to_string(n) + "_" + on(iv);
}

void gromov_task(const SuiteConfig& cfg, std::vector<Task>& tasks, std::string id, RealFn f, RealFn g, int n,
                 Interval iv, std::optional<Verdict> expected, bool user)
{
    const QuadConfig quad = cfg.quad;
    const Resolution res = cfg.res;
    const std::size_t grid = cfg.grid_size;
    tasks.push_back({id, [=](Sink& sink) {
        sink.check(id, [&](CaseRecord& rec) {
            FractionReports r;
            try {
                r = verify_gromov({f, g, n, iv, expected}, quad, grid, res);
            } catch (const hypothesis_error&) {
                if (!user)
                    throw skip_case{};
                throw;
            }
            fill_fraction(rec, r, expected);
            sink.curve(id, {"x", "ratio_hyp", "ratio_concl"}, merge(r.hypothesis.samples, r.conclusion.samples));
        });
    }});
}

void lhopital_task(const SuiteConfig& cfg, std::vector<Task>& tasks, std::string id, RealFn f, RealFn g, int n,
                   Interval iv, std::optional<Verdict> expected, bool user)
{
    const Resolution res = cfg.res;
    const std::size_t grid = cfg.grid_size;
    tasks.push_back({id, [=](Sink& sink) {
        sink.check(id, [&](CaseRecord& rec) {
            FractionReports r;
            try {
                r = verify_lhopital({f, g, n, iv, expected}, grid, res);
            } catch (const hypothesis_error&) {
                if (!user)
                    throw skip_case{};
                throw;
            } catch (const order_error&) {
                if (!user)
                    throw skip_case{};
                throw;
            }
            fill_fraction(rec, r, expected);
            if (n == 1) {
                // First-order remainders are plain differences: compare against direct chord ratios.
                const double c = iv.c();
                double worst = 0.0;
                for (const auto& s : r.conclusion.samples) {
                    const double direct = (f(s.x) - f(c)) / (g(s.x) - g(c));
                    worst = std::max(worst, std::abs(s.value - direct) / std::max(1.0, std::abs(direct)));
                }
                if (worst > 1e-12) {
                    rec.pass = false;
                    rec.detail = "chord ratios differ from direct evaluation by " + num(worst);
                }
            }
            sink.curve(id, {"x", "ratio_hyp", "ratio_concl"}, merge(r.hypothesis.samples, r.conclusion.samples));
        });
    }});
}

void user_tasks(const SuiteConfig& cfg, SuiteKind rule, std::vector<Task>& tasks)
{
    for (std::size_t k = 0; k < cfg.cases.size(); ++k) {
        const auto& uc = cfg.cases[k];
        if (uc.rule != rule)
            continue;
        const Interval iv(uc.lo, uc.hi, uc.c);
        const std::string id = "user" + std::to_string(k) + "_" + fraction_id(uc.f, uc.g, uc.n, iv);
        const RealFn f = battery::by_name(uc.f, uc.c);
        const RealFn g = battery::by_name(uc.g, uc.c);
        if (rule == SuiteKind::gromov)
            gromov_task(cfg, tasks, id, f, g, uc.n, iv, uc.expected, true);
        else
            lhopital_task(cfg, tasks, id, f, g, uc.n, iv, uc.expected, true);
    }
}

void gromov_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    for (const auto& iv : battery::intervals())
        for (int n = 1; n <= 3; ++n) {
            const auto entries = battery::standard(iv.c());
            for (const auto& f : entries)
                for (const auto& g : both_signs(entries))
                    gromov_task(cfg, tasks, fraction_id(f.name, g.name, n, iv), f.fn, g.fn, n, iv, std::nullopt, false);
        }
    user_tasks(cfg, SuiteKind::gromov, tasks);
}

void lhopital_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    for (const auto& iv : battery::intervals())
        for (int n = 1; n <= 3; ++n) {
            const auto entries = battery::smooth(iv.c());
            for (const auto& f : entries)
                for (const auto& g : both_signs(entries))
                    lhopital_task(cfg, tasks, fraction_id(f.name, g.name, n, iv), f.fn, g.fn, n, iv, std::nullopt,
                                  false);
        }
    user_tasks(cfg, SuiteKind::lhopital, tasks);
}

// ---------------------------------------------------------------- zero sets

void zero_set_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    const QuadConfig quad = cfg.quad;
    const Resolution res = cfg.res;
    for (const auto& iv : battery::intervals()) {
        const Grid grid = make_grid(iv, cfg.grid_size, false);
        for (const auto& entry : battery::standard(iv.c()))
            for (int n = 1; n <= 3; ++n) {
                const std::string id = "antideriv_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        try {
                            rec.pass = zero_set_check_A({n, entry.fn, iv}, grid, quad, res);
                        } catch (const hypothesis_error&) {
                            throw skip_case{};
                        }
                        if (!rec.pass)
                            rec.detail = "A vanishes away from c or not at c";
                    });
                }});
            }
        for (const auto& entry : battery::smooth(iv.c()))
            for (int n = 1; n <= 3; ++n) {
                const std::string id = "remainder_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        try {
                            rec.pass = zero_set_check_R(n, entry.fn, iv, grid, res);
                        } catch (const hypothesis_error&) {
                            throw skip_case{};
                        }
                        if (!rec.pass)
                            rec.detail = "a remainder derivative vanishes away from c or not at c";
                    });
                }});
            }
    }
}

// ---------------------------------------------------------------- means

void mean_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    const QuadConfig quad = cfg.quad;
    const Resolution res = cfg.res;
    const std::size_t grid_size = cfg.grid_size;
    for (const auto& iv : battery::intervals()) {
        for (const auto& entry : battery::standard(iv.c()))
            for (int n = 1; n <= 3; ++n) {
                const std::string id = "monotone_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        MonotonicityReport means;
                        try {
                            means = verify_mean_monotone(n, entry.fn, iv, quad, grid_size, res);
                        } catch (const hypothesis_error&) {
                            throw skip_case{};
                        }
                        const RealFn* guards[] = {&entry.fn};
                        const auto fr = monotonicity_of(
                            sample_on(make_grid(iv, grid_size, false), entry.fn, guards, iv.base_gap()), res);
                        rec.hypothesis = std::string(to_string(fr.verdict));
                        rec.conclusion = std::string(to_string(means.verdict));
                        rec.max_violation = means.max_violation();
                        rec.pass = inherits(fr.verdict, means.verdict);
                        if (!rec.pass)
                            rec.detail = "mean does not inherit the monotonicity of f";
                        sink.curve(id, {"x", "f", "mean"}, merge(fr.samples, means.samples));
                    });
                }});
            }
        for (const auto& entry : battery::standard(iv.c())) {
            if (!battery::is_convex_on(entry.name, iv))
                continue;
            for (int n = 1; n <= 3; ++n) {
                const std::string id = "convex_" + entry.name + "_n" + std::to_string(n) + "_" + on(iv);
                tasks.push_back({id, [=](Sink& sink) {
                    sink.check(id, [&](CaseRecord& rec) {
                        const auto cr = mean_convexity(n, entry.fn, iv, quad, grid_size, res);
                        rec.conclusion = std::string(to_string(cr.chord.verdict));
                        rec.max_violation = cr.worst_slope_drop;
                        rec.pass = cr.holds();
                        if (!cr.convex)
                            rec.detail = "consecutive mean slopes drop by " + num(cr.worst_slope_drop);
                        else if (!rec.pass)
                            rec.detail = "chord ratio from c is not nondecreasing";
                        std::vector<std::vector<double>> rows;
                        for (const auto& s : cr.mean_samples)
                            rows.push_back({s.x, s.value});
                        sink.curve(id, {"x", "mean"}, std::move(rows));
                    });
                }});
            }
        }
    }
}

// ---------------------------------------------------------------- SIR

struct SirCase {
    double r0, s0, i0;
    bool degenerate;
};

std::vector<SirCase> sir_battery()
{
    std::vector<SirCase> out;
    for (double r0 : {1.5, 2.0, 4.0})
        for (double s0 : {0.9, 0.99})
            for (double i0 : {0.01, 0.1})
                if (s0 + i0 <= 1.0)
                    out.push_back({r0, s0, i0, false});
    out.push_back({2.0, 0.4, 1e-12, true});
    return out;
}

void sir_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    const QuadConfig quad = cfg.quad;
    const Resolution res = cfg.res;
    for (const auto& sc : sir_battery()) {
        const std::string label = "r0_" + num(sc.r0) + "_s0_" + num(sc.s0) + "_i0_" + num(sc.i0);
        tasks.push_back({label, [=](Sink& sink) {
            const SirParams p{sc.r0, sc.s0, sc.i0};
            const Trajectory traj = sir_integrate(p);
            const double v0 = sir_invariant(p.r0, traj.front().s, traj.front().i);

            sink.check(label + "/conservation", [&](CaseRecord& rec) {
                std::vector<std::vector<double>> rows;
                rows.reserve(traj.size());
                for (const auto& st : traj)
                    rows.push_back({st.t, st.s, st.i, st.r, sir_invariant(p.r0, st.s, st.i) - v0});
                rec.max_violation = max_invariant_drift(p.r0, traj);
                rec.pass = rec.max_violation <= 1e-8;
                rec.detail = "max invariant drift " + num(rec.max_violation);
                sink.curve("trajectory_" + label, {"t", "S", "I", "R", "invariant_drift"}, std::move(rows));
            });

            sink.check(label + "/final_size", [&](CaseRecord& rec) {
                const auto fs = sir_final_size(p);
                rec.max_violation = std::abs(fs.formula - traj.back().s);
                rec.pass = rec.max_violation <= 1e-5;
                rec.detail = "closed form " + num(fs.formula) + ", ODE " + num(traj.back().s);
            });

            // The near-equilibrium orbit only admits the weak inequalities.
            const bool strict = !sc.degenerate;
            sink.check(label + "/apriori_c0", [&](CaseRecord& rec) {
                rec.pass = sir_apriori_check(p, traj, 0, strict, res);
                rec.max_violation = std::max(0.0, -sir_apriori_margin(p, traj, 0));
                rec.detail = "smallest margin " + num(sir_apriori_margin(p, traj, 0));
            });

            if (!sc.degenerate) {
                const std::size_t last = active_window_end(traj);
                for (std::size_t k = 0; k < 5; ++k) {
                    const std::size_t c_index = k * last / 5;
                    sink.check(label + "/chord_c" + num(traj[c_index].t), [&](CaseRecord& rec) {
                        const auto report = sir_chord_report(traj, c_index, 1e-6, res);
                        rec.conclusion = std::string(to_string(report.verdict));
                        rec.max_violation = report.max_violation();
                        rec.pass = report.verdict == Verdict::strictly_increasing;
                    });
                }
            }

            for (int n = 1; n <= 3; ++n) {
                sink.check(label + "/mean_apriori_n" + std::to_string(n), [&](CaseRecord& rec) {
                    const auto samples = sir_mean_bound_samples(p, traj, n, 0, quad);
                    rec.pass = sir_mean_apriori_check(p, traj, n, 0, quad, strict, 41, res);
                    std::vector<std::vector<double>> rows;
                    double worst = std::numeric_limits<double>::infinity();
                    for (const auto& m : samples) {
                        rows.push_back({m.t, m.mean_s, m.mean_i, m.bound});
                        worst = std::min(worst, m.bound - m.mean_i);
                    }
                    rec.max_violation = std::max(0.0, -worst);
                    rec.detail = "smallest margin " + num(worst);
                    sink.curve("mean_bound_n" + std::to_string(n) + "_" + label, {"t", "mean_S", "mean_I", "bound"},
                               std::move(rows));
                });
            }
        }});
    }
}

// ---------------------------------------------------------------- radial

struct RadialPair {
    std::string f, g;
};

void radial_tasks(const SuiteConfig& cfg, std::vector<Task>& tasks)
{
    const QuadConfig quad = cfg.quad;
    const Resolution res = cfg.res;
    const std::size_t grid_size = cfg.grid_size;
    const std::uint64_t samples = cfg.mc_samples;
    const double r_max = 1.0;

    const double exact[] = {2.0, std::numbers::pi, 4.0 * std::numbers::pi / 3.0};
    for (int dim = 1; dim <= 3; ++dim) {
        const std::string id = "unit_ball_dim" + std::to_string(dim);
        const double want = exact[dim - 1];
        const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(dim);
        tasks.push_back({id, [=](Sink& sink) {
            sink.check(id, [&](CaseRecord& rec) {
                const RealFn one = battery::constant(1.0);
                const double v = radial_integral(dim, one, 1.0, quad);
                const double tol = std::max(quad.abs_tol, quad.rel_tol * want);
                const auto mc = monte_carlo_ball(dim, one, 1.0, samples, seed);
                rec.max_violation = std::abs(v - want);
                rec.pass = rec.max_violation <= tol && std::abs(mc.value - want) <= 3.0 * mc.std_error;
                rec.detail = "reduction " + num(v) + ", Monte Carlo " + num(mc.value) + " +- " + num(mc.std_error);
            });
        }});
    }

    const std::vector<RadialPair> pairs{{"identity", "one"}, {"-identity", "one"}, {"exp", "one"},
                                        {"one", "one"},      {"lorentzian", "one"}, {"square", "exp"}};
    std::uint64_t k = 0;
    for (int dim = 1; dim <= 3; ++dim)
        for (const auto& pr : pairs) {
            ++k;
            const std::string name = (pr.f[0] == '-' ? "minus_" + pr.f.substr(1) : pr.f) + "_over_" + pr.g + "_dim" +
                                     std::to_string(dim);
            const std::uint64_t seed = cfg.seed + 1000 * k;
            tasks.push_back({name, [=](Sink& sink) {
                const RadialCase rc{dim, battery::by_name(pr.f, 0.0), battery::by_name(pr.g, 0.0), r_max};
                sink.check(name + "/monotone", [&](CaseRecord& rec) {
                    const auto r = verify_radial_monotone(rc, quad, make_grid(Interval(0.0, r_max, 0.0), grid_size, false),
                                                          res);
                    rec.hypothesis = std::string(to_string(r.hypothesis.verdict));
                    rec.conclusion = std::string(to_string(r.conclusion.verdict));
                    rec.max_violation = r.conclusion.max_violation();
                    rec.pass = inherits(r.hypothesis.verdict, r.conclusion.verdict) && r.max_relative_gap <= 1e-12;
                    rec.detail = "ball ratio vs reduced ratio relative gap " + num(r.max_relative_gap);
                    sink.curve(name, {"r", "ratio_hyp", "ratio_concl"}, merge(r.hypothesis.samples, r.conclusion.samples));
                });
                sink.check(name + "/monte_carlo", [&](CaseRecord& rec) {
                    const double v = radial_integral(rc, r_max, quad);
                    const auto mc = monte_carlo_ball(rc, r_max, samples, seed);
                    rec.max_violation = std::abs(v - mc.value);
                    rec.pass = rec.max_violation <= 3.0 * mc.std_error;
                    rec.detail = "reduction " + num(v) + ", Monte Carlo " + num(mc.value) + " +- " + num(mc.std_error);
                });
            }});
        }
}

} // namespace

RunReport run_suites(const SuiteConfig& cfg)
{
    cfg.validate();
    RunReport report;
    report.version = std::string(version());
    report.config = cfg;
    for (SuiteKind suite : cfg.suites) {
        std::vector<Task> tasks;
        switch (suite) {
        case SuiteKind::calculus_oracles: calculus_tasks(cfg, tasks); break;
        case SuiteKind::gromov: gromov_tasks(cfg, tasks); break;
        case SuiteKind::lhopital: lhopital_tasks(cfg, tasks); break;
        case SuiteKind::zero_sets: zero_set_tasks(cfg, tasks); break;
        case SuiteKind::mean_corollaries: mean_tasks(cfg, tasks); break;
        case SuiteKind::sir: sir_tasks(cfg, tasks); break;
        case SuiteKind::radial: radial_tasks(cfg, tasks); break;
        }
        run_tasks(to_string(suite), tasks, report);
    }
    return report;
}

RunReport run(const SuiteConfig& cfg)
{
    RunReport report = run_suites(cfg);
    write_report(report, cfg.output_dir);
    return report;
}

} // namespace fracmono
