#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace fracmono {

/// Bounded closed interval [lo, hi] carrying a distinguished base point c.
class Interval {
public:
    /// Throws domain_error unless lo < hi, lo <= c <= hi and all values are finite.
    Interval(double lo, double hi, double c);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double c() const noexcept { return c_; }
    double width() const noexcept { return hi_ - lo_; }

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }

    /// Half-width of the gap kept clear around c on sampling grids.
    double base_gap() const noexcept { return 1e-9 * width(); }

    /// Same bounds, different base point.
    Interval rebased(double c) const { return Interval(lo_, hi_, c); }

private:
    double lo_;
    double hi_;
    double c_;
};

using ScalarFn = std::function<double(double)>;

/// Real function of one variable with an optional stack of trusted analytic
/// derivatives (derivs[0] = f', derivs[1] = f'', ...) and a finite set of
/// points where evaluation is undefined.
///
/// Immutable after construction; evaluation is const and may be shared across
/// threads as long as the wrapped callables are themselves pure.
class RealFn {
public:
    explicit RealFn(ScalarFn eval, std::vector<ScalarFn> derivs = {},
                    std::vector<double> exclusions = {});

    double operator()(double x) const { return eval_(x); }

    /// f^(k)(x); k = 0 is f itself. Throws order_error if k exceeds order().
    double derivative(std::size_t k, double x) const;

    /// Length of the derivative stack.
    std::size_t order() const noexcept { return derivs_.size(); }

    /// Sorted, duplicate free.
    std::span<const double> exclusions() const noexcept { return exclusions_; }

    /// True when some exclusion point lies within `gap` of x.
    bool is_excluded(double x, double gap = 0.0) const noexcept;

    /// f^(k) as a function in its own right, carrying the rest of the stack.
    RealFn nth_derivative(std::size_t k) const;

    /// -f, with every derivative negated.
    RealFn negated() const;

    RealFn with_exclusions(std::vector<double> exclusions) const;

private:
    ScalarFn eval_;
    std::vector<ScalarFn> derivs_;
    std::vector<double> exclusions_;
};

/// Strictly increasing sample locations.
struct Grid {
    std::vector<double> points;
    bool excludes_base = false;
};

/// `count` uniformly spaced points over [lo, hi]; with `exclude_base` set,
/// points within iv.base_gap() of the base point are dropped.
/// Throws domain_error for count < 2 and empty_grid_error if nothing is left.
Grid make_grid(const Interval& iv, std::size_t count, bool exclude_base);

/// Central finite-difference estimate of f^(k)(x) on the (k+1)-point stencil
/// x + j*h - k*h/2, j = 0..k. Supports k <= 4.
///
/// When `domain` is given the stencil must stay inside it (domain_error
/// otherwise). The half-step is snapped so that x + h/2 is representable,
/// which makes the k-th difference of an affine function cancel exactly.
double finite_diff(const RealFn& f, std::size_t k, double x, double h,
                   const std::optional<Interval>& domain = std::nullopt);

} // namespace fracmono
