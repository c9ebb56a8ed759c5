#include "fracmono/monotone.hpp"

#include "fracmono/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracmono {

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::strictly_increasing:
        return "strictly_increasing";
    case Verdict::nondecreasing:
        return "nondecreasing";
    case Verdict::strictly_decreasing:
        return "strictly_decreasing";
    case Verdict::nonincreasing:
        return "nonincreasing";
    case Verdict::none:
        break;
    }
    return "none";
}

std::string_view to_string(Sign s) noexcept
{
    switch (s) {
    case Sign::positive:
        return "positive";
    case Sign::negative:
        return "negative";
    case Sign::mixed:
        break;
    }
    return "mixed";
}

Verdict flipped(Verdict v) noexcept
{
    switch (v) {
    case Verdict::strictly_increasing:
        return Verdict::strictly_decreasing;
    case Verdict::strictly_decreasing:
        return Verdict::strictly_increasing;
    case Verdict::nondecreasing:
        return Verdict::nonincreasing;
    case Verdict::nonincreasing:
        return Verdict::nondecreasing;
    case Verdict::none:
        break;
    }
    return Verdict::none;
}

bool inherits(Verdict hypothesis, Verdict conclusion) noexcept
{
    if (hypothesis == Verdict::none)
        return false;
    const bool same_direction = (is_increasing(hypothesis) && is_increasing(conclusion)) ||
                                (is_decreasing(hypothesis) && is_decreasing(conclusion));
    return same_direction && (!is_strict(hypothesis) || is_strict(conclusion));
}

double MonotonicityReport::max_violation() const noexcept
{
    double worst = 0.0;
    for (const auto& v : violations)
        worst = std::max(worst, std::abs(v.v2 - v.v1));
    return worst;
}

MonotonicityReport monotonicity_of(std::span<const Sample> samples, const Resolution& res)
{
    if (samples.size() < 3)
        throw too_few_samples_error("monotonicity needs at least 3 samples, got " + std::to_string(samples.size()));

    MonotonicityReport report;
    report.samples.assign(samples.begin(), samples.end());

    double max_abs = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i].value))
            throw domain_error("non-finite sample value at x = " + std::to_string(samples[i].x));
        if (i > 0 && !(samples[i].x > samples[i - 1].x))
            throw domain_error("sample abscissae must be strictly increasing");
        max_abs = std::max(max_abs, std::abs(samples[i].value));
    }
    const double tau = res.strict_scale * (1.0 + max_abs);
    report.tau = tau;

    bool all_up = true, all_down = true, no_drop = true, no_rise = true;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double d = samples[i + 1].value - samples[i].value;
        all_up = all_up && d > tau;
        all_down = all_down && d < -tau;
        no_drop = no_drop && d >= -tau;
        no_rise = no_rise && d <= tau;
    }

    auto collect = [&](auto&& pred) {
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            const auto& a = samples[i];
            const auto& b = samples[i + 1];
            if (pred(b.value - a.value))
                report.violations.push_back({a.x, b.x, a.value, b.value});
        }
    };

    if (all_up) {
        report.verdict = Verdict::strictly_increasing;
    } else if (all_down) {
        report.verdict = Verdict::strictly_decreasing;
    } else if (no_drop) {
        report.verdict = Verdict::nondecreasing;
        collect([tau](double d) { return d <= tau; });
    } else if (no_rise) {
        report.verdict = Verdict::nonincreasing;
        collect([tau](double d) { return d >= -tau; });
    } else {
        report.verdict = Verdict::none;
        collect([tau](double d) { return std::abs(d) > tau; });
    }
    return report;
}

Sign sign_check(const RealFn& g, const Interval& iv, const Grid& grid)
{
    bool any_pos = false, any_neg = false;
    for (double x : grid.points) {
        if (g.is_excluded(x, iv.base_gap()))
            continue;
        const double v = g(x);
        if (v > 0.0)
            any_pos = true;
        else if (v < 0.0)
            any_neg = true;
        else
            return Sign::mixed; // zero or NaN
    }
    if (any_pos == any_neg)
        return Sign::mixed;
    return any_pos ? Sign::positive : Sign::negative;
}

namespace {

void require_grid_inside(const Interval& iv, const Grid& grid)
{
    for (double x : grid.points)
        if (!iv.contains(x))
            throw domain_error("grid point " + std::to_string(x) + " outside the interval");
}

// d^k/dx^k of R_{m,f,c} at x: f^(k)(x) - sum_{j=k}^{m} f^(j)(c) / (j-k)! (x-c)^{j-k}.
double remainder_derivative(int m, int k, const RealFn& f, double c, double x)
{
    const double h = x - c;
    double poly = 0.0, power = 1.0;
    for (int j = k; j <= m; ++j) {
        poly += f.derivative(static_cast<std::size_t>(j), c) / factorial(j - k) * power;
        power *= h;
    }
    return f.derivative(static_cast<std::size_t>(k), x) - poly;
}

} // namespace

std::vector<Sample> sample_on(const Grid& grid, const ScalarFn& fn, std::span<const RealFn* const> guards,
                              double gap)
{
    std::vector<Sample> out;
    out.reserve(grid.points.size());
    for (double x : grid.points) {
        const bool skip =
            std::any_of(guards.begin(), guards.end(), [&](const RealFn* g) { return g->is_excluded(x, gap); });
        if (!skip)
            out.push_back({x, fn(x)});
    }
    return out;
}

FractionReports verify_gromov(const TheoremCase& tc, const QuadConfig& cfg, std::size_t grid_size,
                              const Resolution& res, bool force)
{
    const Grid full = make_grid(tc.iv, grid_size, false);
    if (sign_check(tc.g, tc.iv, full) == Sign::mixed && !force)
        throw hypothesis_error("g does not keep a strict sign on the grid");

    const RealFn* guards[] = {&tc.f, &tc.g};
    FractionReports out;
    out.hypothesis = monotonicity_of(
        sample_on(full, [&](double x) { return tc.f(x) / tc.g(x); }, guards, tc.iv.base_gap()), res);
    if (out.hypothesis.verdict == Verdict::none && !force)
        throw hypothesis_error("f/g is not monotone on the grid");

    const AntiderivSpec sf{tc.n, tc.f, tc.iv};
    const AntiderivSpec sg{tc.n, tc.g, tc.iv};
    const Grid punctured = make_grid(tc.iv, grid_size, true);
    std::vector<Sample> concl;
    concl.reserve(punctured.points.size());
    for (double x : punctured.points)
        concl.push_back({x, antideriv_cauchy(sf, x, cfg) / antideriv_cauchy(sg, x, cfg)});
    out.conclusion = monotonicity_of(concl, res);
    return out;
}

FractionReports verify_lhopital(const TheoremCase& tc, std::size_t grid_size, const Resolution& res, bool force)
{
    if (tc.n < 1)
        throw order_error("derivative order must be >= 1");
    const auto n = static_cast<std::size_t>(tc.n);
    if (tc.f.order() < n || tc.g.order() < n)
        throw order_error("f and g need derivative stacks of length >= " + std::to_string(n));

    const Grid full = make_grid(tc.iv, grid_size, false);
    const RealFn gn = tc.g.nth_derivative(n);
    if (sign_check(gn.with_exclusions({}), tc.iv, full) == Sign::mixed)
        throw hypothesis_error("g^(" + std::to_string(n) + ") vanishes or changes sign on the grid");

    FractionReports out;
    std::vector<Sample> hyp;
    hyp.reserve(full.points.size());
    for (double x : full.points)
        hyp.push_back({x, tc.f.derivative(n, x) / tc.g.derivative(n, x)});
    out.hypothesis = monotonicity_of(hyp, res);
    if (out.hypothesis.verdict == Verdict::none && !force)
        throw hypothesis_error("f^(n)/g^(n) is not monotone on the grid");

    const double c = tc.iv.c();
    const Grid punctured = make_grid(tc.iv, grid_size, true);
    std::vector<Sample> concl;
    concl.reserve(punctured.points.size());
    for (double x : punctured.points)
        concl.push_back({x, taylor_remainder(tc.n - 1, tc.f, c, x) / taylor_remainder(tc.n - 1, tc.g, c, x)});
    out.conclusion = monotonicity_of(concl, res);
    return out;
}

bool zero_set_check_A(const AntiderivSpec& spec, const Grid& grid, const QuadConfig& cfg, const Resolution& res)
{
    require_grid_inside(spec.iv, grid);
    if (sign_check(spec.f, spec.iv, grid) == Sign::mixed)
        throw hypothesis_error("f does not keep a strict sign on the grid");
    if (antideriv_cauchy(spec, spec.c(), cfg) != 0.0)
        return false;

    std::vector<double> values;
    for (double x : grid.points)
        if (std::abs(x - spec.c()) > spec.iv.base_gap())
            values.push_back(antideriv_cauchy(spec, x, cfg));
    double max_abs = 0.0;
    for (double v : values)
        max_abs = std::max(max_abs, std::abs(v));
    const double tau_zero = res.zero_scale * (1.0 + max_abs);
    return std::all_of(values.begin(), values.end(), [tau_zero](double v) { return std::abs(v) > tau_zero; });
}

bool zero_set_check_R(int n, const RealFn& f, const Interval& iv, const Grid& grid, const Resolution& res)
{
    if (n < 1)
        throw order_error("remainder order n must be >= 1");
    if (f.order() < static_cast<std::size_t>(n))
        throw order_error("f needs a derivative stack of length >= " + std::to_string(n));
    require_grid_inside(iv, grid);
    if (sign_check(f.nth_derivative(static_cast<std::size_t>(n)), iv, grid) == Sign::mixed)
        throw hypothesis_error("f^(" + std::to_string(n) + ") vanishes or changes sign on the grid");

    const double c = iv.c();
    for (int k = 0; k < n; ++k) {
        if (remainder_derivative(n - 1, k, f, c, c) != 0.0)
            return false;
        std::vector<double> values;
        for (double x : grid.points)
            if (std::abs(x - c) > iv.base_gap())
                values.push_back(remainder_derivative(n - 1, k, f, c, x));
        double max_abs = 0.0;
        for (double v : values)
            max_abs = std::max(max_abs, std::abs(v));
        const double tau_zero = res.zero_scale * (1.0 + max_abs);
        if (!std::all_of(values.begin(), values.end(), [tau_zero](double v) { return std::abs(v) > tau_zero; }))
            return false;
    }
    return true;
}

MonotonicityReport verify_mean_monotone(int n, const RealFn& f, const Interval& iv, const QuadConfig& cfg,
                                        std::size_t grid_size, const Resolution& res)
{
    const Grid full = make_grid(iv, grid_size, false);
    const RealFn* guards[] = {&f};
    const auto f_report = monotonicity_of(sample_on(full, f, guards, iv.base_gap()), res);
    if (f_report.verdict == Verdict::none)
        throw hypothesis_error("f is not monotone on the grid");

    const Grid punctured = make_grid(iv, grid_size, true);
    std::vector<Sample> means;
    means.reserve(punctured.points.size());
    for (double x : punctured.points)
        means.push_back({x, mean(n, f, iv, x, cfg)});
    return monotonicity_of(means, res);
}

ConvexityReport mean_convexity(int n, const RealFn& f, const Interval& iv, const QuadConfig& cfg,
                               std::size_t grid_size, const Resolution& res)
{
    const double c = iv.c();
    const double fc = f(c);
    const Grid punctured = make_grid(iv, grid_size, true);

    ConvexityReport out;
    std::vector<Sample> chord;
    chord.reserve(punctured.points.size());
    out.mean_samples.reserve(punctured.points.size() + 1);
    for (double x : punctured.points) {
        const double m = mean(n, f, iv, x, cfg);
        out.mean_samples.push_back({x, m});
        chord.push_back({x, (m - fc) / (x - c)});
    }
    auto pos = std::lower_bound(out.mean_samples.begin(), out.mean_samples.end(), c,
                                [](const Sample& s, double v) { return s.x < v; });
    out.mean_samples.insert(pos, Sample{c, fc});

    const auto& ms = out.mean_samples;
    std::vector<double> slopes;
    slopes.reserve(ms.size());
    for (std::size_t i = 0; i + 1 < ms.size(); ++i)
        slopes.push_back((ms[i + 1].value - ms[i].value) / (ms[i + 1].x - ms[i].x));
    double max_abs = 0.0;
    for (double s : slopes)
        max_abs = std::max(max_abs, std::abs(s));
    const double tau = res.strict_scale * (1.0 + max_abs);
    out.convex = true;
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i) {
        const double drop = slopes[i] - slopes[i + 1];
        out.worst_slope_drop = std::max(out.worst_slope_drop, drop);
        if (drop > tau)
            out.convex = false;
    }
    out.chord = monotonicity_of(chord, res);
    return out;
}

} // namespace fracmono
