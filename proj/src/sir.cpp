#include "fracmono/sir.hpp"

#include "fracmono/calculus.hpp"
#include "fracmono/errors.hpp"
#include "fracmono/interpolation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace fracmono {

void SirParams::validate() const
{
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(r0) || !finite(s0) || !finite(i0) || !finite(rec0) || !finite(dt) || !finite(t_end))
        throw domain_error("SIR parameters must be finite");
    if (!(r0 > 1.0))
        throw domain_error("basic reproduction number must exceed 1");
    if (!(s0 > 0.0 && s0 < 1.0) || !(i0 > 0.0 && i0 < 1.0))
        throw domain_error("initial S and I fractions must lie in (0, 1)");
    if (!(rec0 >= 0.0 && rec0 < 1.0))
        throw domain_error("initial R fraction must lie in [0, 1)");
    if (s0 + i0 + rec0 > 1.0 + 1e-12)
        throw domain_error("initial fractions sum above 1");
    if (!(dt > 0.0) || !(t_end > 0.0))
        throw domain_error("dt and t_end must be positive");
}

namespace {

using State = std::array<double, 3>;

State rhs(double r0, const State& y)
{
    const double infection = r0 * y[0] * y[1];
    return {-infection, infection - y[1], y[1]};
}

State axpy(const State& y, double a, const State& k)
{
    return {y[0] + a * k[0], y[1] + a * k[1], y[2] + a * k[2]};
}

constexpr double cube_slack = 1e-9;

} // namespace

Trajectory sir_integrate(const SirParams& p)
{
    p.validate();
    const auto steps = static_cast<std::size_t>(std::llround(p.t_end / p.dt));
    if (steps == 0)
        throw domain_error("t_end shorter than one step");

    Trajectory traj;
    traj.reserve(steps + 1);
    State y{p.s0, p.i0, p.rec0};
    traj.push_back({0.0, y[0], y[1], y[2]});
    const double h = p.dt;
    for (std::size_t k = 1; k <= steps; ++k) {
        const State k1 = rhs(p.r0, y);
        const State k2 = rhs(p.r0, axpy(y, 0.5 * h, k1));
        const State k3 = rhs(p.r0, axpy(y, 0.5 * h, k2));
        const State k4 = rhs(p.r0, axpy(y, h, k3));
        for (int j = 0; j < 3; ++j)
            y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        for (double v : y)
            if (!(v >= -cube_slack && v <= 1.0 + cube_slack))
                throw instability_error("SIR state left [0,1]^3 at step " + std::to_string(k));
        traj.push_back({static_cast<double>(k) * h, y[0], y[1], y[2]});
    }
    return traj;
}

double sir_invariant(double r0, double s, double i) noexcept
{
    return i + s - std::log(s) / r0;
}

double max_invariant_drift(double r0, const Trajectory& traj)
{
    if (traj.empty())
        return 0.0;
    const double v0 = sir_invariant(r0, traj.front().s, traj.front().i);
    double worst = 0.0;
    for (const auto& st : traj)
        worst = std::max(worst, std::abs(sir_invariant(r0, st.s, st.i) - v0));
    return worst;
}

double lambert_w0(double x)
{
    const double branch = -std::exp(-1.0);
    const double slack = 4.0 * std::numeric_limits<double>::epsilon() * -branch;
    if (!std::isfinite(x) || x > 0.0 || x < branch - slack)
        throw domain_error("lambert_w0 argument " + std::to_string(x) + " outside [-1/e, 0]");
    if (x == 0.0)
        return 0.0;
    if (x <= branch)
        return -1.0;

    // w e^w - x is increasing on [-1, 0], negative at -1 and positive at 0.
    auto residual = [x](double w) { return w * std::exp(w) - x; };
    double lo = -1.0, hi = 0.0;
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (residual(mid) < 0.0 ? lo : hi) = mid;
    }
    double w = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (f == 0.0)
            break;
        (f < 0.0 ? lo : hi) = w;
        const double f1 = ew * (w + 1.0);
        const double f2 = ew * (w + 2.0);
        double next = w - f / (f1 - 0.5 * f * f2 / f1);
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        if (std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w) || next == w) {
            w = next;
            break;
        }
        w = next;
    }
    return w;
}

FinalSize sir_final_size(const SirParams& p)
{
    p.validate();
    const double arg = -p.r0 * p.s0 * std::exp(-p.r0 * (p.s0 + p.i0));
    const double formula = -lambert_w0(arg) / p.r0;
    if (!(formula > 0.0 && formula < 1.0 / p.r0))
        throw domain_error("final size " + std::to_string(formula) + " outside (0, 1/R0)");
    return {formula, sir_integrate(p).back().s};
}

namespace {

void require_index(const Trajectory& traj, std::size_t c_index)
{
    if (c_index >= traj.size())
        throw domain_error("base index " + std::to_string(c_index) + " outside the trajectory");
}

double tangent_slope(double r0, double s_c)
{
    return 1.0 / (r0 * s_c) - 1.0;
}

} // namespace

double sir_apriori_margin(const SirParams& p, const Trajectory& traj, std::size_t c_index)
{
    require_index(traj, c_index);
    const auto& base = traj[c_index];
    const double slope = tangent_slope(p.r0, base.s);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < traj.size(); ++k) {
        if (k == c_index)
            continue;
        const double bound = base.i + slope * (traj[k].s - base.s);
        worst = std::min(worst, bound - traj[k].i);
    }
    return worst;
}

bool sir_apriori_check(const SirParams& p, const Trajectory& traj, std::size_t c_index, bool strict,
                       const Resolution& res)
{
    require_index(traj, c_index);
    const auto& base = traj[c_index];
    const double slope = tangent_slope(p.r0, base.s);
    double max_abs = 0.0;
    for (const auto& st : traj)
        max_abs = std::max({max_abs, std::abs(st.i), std::abs(base.i + slope * (st.s - base.s))});
    const double tau = res.strict_scale * (1.0 + max_abs);
    const double margin = sir_apriori_margin(p, traj, c_index);
    return strict ? margin > tau : margin >= -tau;
}

std::size_t active_window_end(const Trajectory& traj, double i_floor)
{
    for (std::size_t k = traj.size(); k-- > 0;)
        if (traj[k].i >= i_floor)
            return k;
    throw domain_error("infected fraction never reaches the activity floor");
}

MonotonicityReport sir_chord_report(const Trajectory& traj, std::size_t c_index, double i_floor,
                                    const Resolution& res)
{
    require_index(traj, c_index);
    const std::size_t last = active_window_end(traj, i_floor);
    if (c_index > last)
        throw domain_error("base index lies past the active part of the orbit");
    const auto& base = traj[c_index];
    std::vector<Sample> chords;
    chords.reserve(last + 1);
    for (std::size_t k = 0; k <= last; ++k)
        if (k != c_index)
            chords.push_back({traj[k].t, (traj[k].i - base.i) / (traj[k].s - base.s)});
    return monotonicity_of(chords, res);
}

TrajectoryFns interpolate_trajectory(const Trajectory& traj)
{
    std::vector<double> t, s, i;
    t.reserve(traj.size());
    s.reserve(traj.size());
    i.reserve(traj.size());
    for (const auto& st : traj) {
        t.push_back(st.t);
        s.push_back(st.s);
        i.push_back(st.i);
    }
    MonotoneCubic s_interp(t, std::move(s));
    MonotoneCubic i_interp(std::move(t), std::move(i));
    return {RealFn([s_interp](double x) { return s_interp(x); }), RealFn([i_interp](double x) { return i_interp(x); })};
}

std::vector<MeanBoundSample> sir_mean_bound_samples(const SirParams& p, const Trajectory& traj, int n,
                                                    std::size_t c_index, const QuadConfig& cfg, std::size_t checks)
{
    require_index(traj, c_index);
    const auto fns = interpolate_trajectory(traj);
    const auto& base = traj[c_index];
    const Interval span(traj.front().t, traj.back().t, base.t);
    const double slope = tangent_slope(p.r0, base.s);

    std::vector<MeanBoundSample> out;
    for (double t : make_grid(span, checks, true).points) {
        const double ms = mean(n, fns.s, span, t, cfg);
        const double mi = mean(n, fns.i, span, t, cfg);
        out.push_back({t, ms, mi, base.i + slope * (ms - base.s)});
    }
    return out;
}

bool sir_mean_apriori_check(const SirParams& p, const Trajectory& traj, int n, std::size_t c_index,
                            const QuadConfig& cfg, bool strict, std::size_t checks, const Resolution& res)
{
    const auto samples = sir_mean_bound_samples(p, traj, n, c_index, cfg, checks);
    double max_abs = 0.0;
    for (const auto& m : samples)
        max_abs = std::max({max_abs, std::abs(m.mean_i), std::abs(m.bound)});
    const double tau = res.strict_scale * (1.0 + max_abs);
    return std::all_of(samples.begin(), samples.end(), [&](const MeanBoundSample& m) {
        const double margin = m.bound - m.mean_i;
        return strict ? margin > tau : margin >= -tau;
    });
}

} // namespace fracmono
