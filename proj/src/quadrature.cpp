#include "fracmono/quadrature.hpp"

#include "fracmono/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace fracmono {

void QuadConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw domain_error("quadrature tolerances must be positive");
    if (max_depth < 1 || max_depth > 60)
        throw domain_error("max_depth must lie in [1, 60]");
    if (min_intervals < 1)
        throw domain_error("min_intervals must be positive");
}

namespace {

class Integrator {
public:
    Integrator(const RealFn& f, const QuadConfig& cfg) : f_(f), cfg_(cfg) {}

    double simpson(double a, double b, double tol) const
    {
        const double fa = f_(a), fb = f_(b), m = 0.5 * (a + b), fm = f_(m);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        return simpson_rec(a, fa, m, fm, b, fb, whole, tol, 0);
    }

    // [a, b] with f undefined at a (excluded_at_a) or at b. Everything below is
    // oriented from the excluded end toward the other end.
    double open_sided(double a, double b, bool excluded_at_a, double tol) const
    {
        const double orientation = excluded_at_a ? 1.0 : -1.0;
        double total = 0.0;
        double near = excluded_at_a ? a : b;
        double far = excluded_at_a ? b : a;
        double level_tol = tol;
        for (int depth = 0; depth <= cfg_.max_depth; ++depth) {
            const double len = far - near; // signed
            const double mid = near + 0.5 * len;
            const double m1 = len * f_(mid);
            const double m2 = 0.5 * len * (f_(near + 0.25 * len) + f_(near + 0.75 * len));
            const double err = std::abs(m2 - m1) / 3.0;
            if (err <= 0.5 * level_tol)
                return orientation * (total + m2 + (m2 - m1) / 3.0);
            // Keep the evaluable half, continue toward the excluded point.
            total += excluded_at_a ? simpson(mid, far, 0.5 * level_tol) : -simpson(far, mid, 0.5 * level_tol);
            far = mid;
            level_tol *= 0.5;
        }
        throw convergence_error("quadrature did not converge next to excluded point " + std::to_string(near));
    }

private:
    double simpson_rec(double a, double fa, double m, double fm, double b, double fb, double whole, double tol,
                       int depth) const
    {
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f_(lm), frm = f_(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (std::abs(delta) <= 15.0 * tol)
            return left + right + delta / 15.0;
        if (depth >= cfg_.max_depth || !(lm > a && m > lm && rm > m && b > rm)) {
            throw convergence_error("adaptive Simpson reached max depth on [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "] with error estimate " +
                                    std::to_string(std::abs(delta) / 15.0));
        }
        return simpson_rec(a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1) +
               simpson_rec(m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1);
    }

    const RealFn& f_;
    const QuadConfig& cfg_;
};

struct Panel {
    double a;
    double b;
    bool open_a;
    bool open_b;
};

} // namespace

double integrate(const RealFn& f, double a, double b, const QuadConfig& cfg)
{
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b))
        throw domain_error("integration limits must be finite");
    if (a == b)
        return 0.0;
    if (b < a)
        return -integrate(f, b, a, cfg);

    std::vector<double> cuts;
    const int n0 = cfg.min_intervals;
    for (int i = 0; i <= n0; ++i)
        cuts.push_back(i == n0 ? b : a + (b - a) * static_cast<double>(i) / n0);
    for (double e : f.exclusions())
        if (e > a && e < b)
            cuts.push_back(e);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Panel> panels;
    panels.reserve(cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        panels.push_back({lo, hi, f.is_excluded(lo), f.is_excluded(hi)});
    }

    // Coarse open (midpoint) estimate only sets the scale of the relative tolerance.
    double coarse = 0.0;
    for (const auto& p : panels)
        coarse += (p.b - p.a) * f(0.5 * (p.a + p.b));
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(coarse));

    Integrator integ(f, cfg);
    double total = 0.0;
    for (const auto& p : panels) {
        const double share = tol * (p.b - p.a) / (b - a);
        if (!p.open_a && !p.open_b) {
            total += integ.simpson(p.a, p.b, share);
        } else if (p.open_a && p.open_b) {
            const double m = 0.5 * (p.a + p.b);
            total += integ.open_sided(p.a, m, true, 0.5 * share) + integ.open_sided(m, p.b, false, 0.5 * share);
        } else {
            total += integ.open_sided(p.a, p.b, p.open_a, share);
        }
    }
    return total;
}

} // namespace fracmono
