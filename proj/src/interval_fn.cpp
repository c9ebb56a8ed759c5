#include "fracmono/interval_fn.hpp"

#include "fracmono/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fracmono {

Interval::Interval(double lo, double hi, double c) : lo_(lo), hi_(hi), c_(c)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(c))
        throw domain_error("interval bounds and base point must be finite");
    if (!(lo < hi))
        throw domain_error("interval must be nondegenerate (lo < hi)");
    if (c < lo || c > hi)
        throw domain_error("base point " + std::to_string(c) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
}

RealFn::RealFn(ScalarFn eval, std::vector<ScalarFn> derivs, std::vector<double> exclusions)
    : eval_(std::move(eval)), derivs_(std::move(derivs)), exclusions_(std::move(exclusions))
{
    if (!eval_)
        throw domain_error("RealFn needs an evaluation callable");
    for (const auto& d : derivs_)
        if (!d)
            throw domain_error("empty derivative callable in stack");
    std::sort(exclusions_.begin(), exclusions_.end());
    exclusions_.erase(std::unique(exclusions_.begin(), exclusions_.end()), exclusions_.end());
}

double RealFn::derivative(std::size_t k, double x) const
{
    if (k == 0)
        return eval_(x);
    if (k > derivs_.size())
        throw order_error("derivative of order " + std::to_string(k) + " requested, stack has " +
                          std::to_string(derivs_.size()));
    return derivs_[k - 1](x);
}

bool RealFn::is_excluded(double x, double gap) const noexcept
{
    auto it = std::lower_bound(exclusions_.begin(), exclusions_.end(), x - gap);
    return it != exclusions_.end() && *it <= x + gap;
}

RealFn RealFn::nth_derivative(std::size_t k) const
{
    if (k == 0)
        return *this;
    if (k > derivs_.size())
        throw order_error("derivative of order " + std::to_string(k) + " requested, stack has " +
                          std::to_string(derivs_.size()));
    std::vector<ScalarFn> rest(derivs_.begin() + static_cast<std::ptrdiff_t>(k), derivs_.end());
    return RealFn(derivs_[k - 1], std::move(rest), exclusions_);
}

RealFn RealFn::negated() const
{
    auto neg = [](ScalarFn f) -> ScalarFn { return [f = std::move(f)](double x) { return -f(x); }; };
    std::vector<ScalarFn> ds;
    ds.reserve(derivs_.size());
    for (const auto& d : derivs_)
        ds.push_back(neg(d));
    return RealFn(neg(eval_), std::move(ds), exclusions_);
}

RealFn RealFn::with_exclusions(std::vector<double> exclusions) const
{
    return RealFn(eval_, derivs_, std::move(exclusions));
}

Grid make_grid(const Interval& iv, std::size_t count, bool exclude_base)
{
    if (count < 2)
        throw domain_error("grid needs at least two points");
    Grid grid;
    grid.excludes_base = exclude_base;
    grid.points.reserve(count);
    const double step = iv.width() / static_cast<double>(count - 1);
    const double gap = iv.base_gap();
    for (std::size_t i = 0; i < count; ++i) {
        double x = (i + 1 == count) ? iv.hi() : iv.lo() + static_cast<double>(i) * step;
        if (exclude_base && std::abs(x - iv.c()) < gap)
            continue;
        grid.points.push_back(x);
    }
    if (grid.points.empty())
        throw empty_grid_error("every grid point fell inside the base-point gap");
    return grid;
}

double finite_diff(const RealFn& f, std::size_t k, double x, double h, const std::optional<Interval>& domain)
{
    if (k > 4)
        throw order_error("finite_diff supports orders up to 4");
    if (!(h > 0.0) || !std::isfinite(h))
        throw domain_error("finite-difference step must be positive");
    if (k == 0)
        return f(x);

    double half = (x + 0.5 * h) - x;
    if (half <= 0.0)
        throw domain_error("finite-difference step too small for x");
    const double reach = static_cast<double>(k) * half;
    if (domain && (x - reach < domain->lo() || x + reach > domain->hi()))
        throw domain_error("finite-difference stencil leaves the interval");

    // Stencil x + m*half for m = -k, -k+2, ..., k; repeated forward differences.
    std::vector<double> v(k + 1);
    for (std::size_t j = 0; j <= k; ++j) {
        const double m = 2.0 * static_cast<double>(j) - static_cast<double>(k);
        v[j] = f(x + m * half);
    }
    for (std::size_t level = 0; level < k; ++level)
        for (std::size_t j = 0; j + level < k; ++j)
            v[j] = v[j + 1] - v[j];
    return v[0] / std::pow(2.0 * half, static_cast<double>(k));
}

} // namespace fracmono
