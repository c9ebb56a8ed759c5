#include "fracmono/calculus.hpp"

#include "fracmono/errors.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace fracmono {

namespace {

void require_order(int n)
{
    if (n < 1)
        throw order_error("antiderivative order must be >= 1, got " + std::to_string(n));
}

void require_inside(const Interval& iv, double x)
{
    if (!iv.contains(x))
        throw domain_error("evaluation point " + std::to_string(x) + " outside the interval");
}

double int_pow(double base, int e)
{
    double r = 1.0;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

// integral_0^1 f(c + s h) (1 - s)^{n-1} ds for h = x - c != 0.
double scaled_weighted_integral(int n, const RealFn& f, double c, double h, const QuadConfig& cfg)
{
    std::vector<double> mapped;
    for (double e : f.exclusions()) {
        const double s = (e - c) / h;
        if (s >= 0.0 && s <= 1.0)
            mapped.push_back(s);
    }
    RealFn integrand(
        [&f, c, h, n](double s) { return f(c + s * h) * int_pow(1.0 - s, n - 1); }, {}, std::move(mapped));
    return integrate(integrand, 0.0, 1.0, cfg);
}

double cauchy_value(int n, const RealFn& f, double c, double x, const QuadConfig& cfg)
{
    if (x == c)
        return 0.0;
    const double h = x - c;
    return int_pow(h, n) / factorial(n - 1) * scaled_weighted_integral(n, f, c, h, cfg);
}

} // namespace

double factorial(int n)
{
    if (n < 0 || n > 20)
        throw order_error("factorial supported for 0 <= n <= 20, got " + std::to_string(n));
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return static_cast<double>(r);
}

double antideriv_cauchy(const AntiderivSpec& spec, double x, const QuadConfig& cfg)
{
    require_order(spec.order);
    require_inside(spec.iv, x);
    return cauchy_value(spec.order, spec.f, spec.c(), x, cfg);
}

double antideriv_repeated(const AntiderivSpec& spec, double x, const QuadConfig& cfg)
{
    require_order(spec.order);
    if (spec.order > max_repeated_order)
        throw order_error("repeated-integral oracle capped at order " + std::to_string(max_repeated_order));
    require_inside(spec.iv, x);
    const double c = spec.c();
    if (x == c)
        return 0.0;

    RealFn level = spec.f;
    for (int k = 1; k < spec.order; ++k)
        level = RealFn([inner = level, c, cfg](double t) { return integrate(inner, c, t, cfg); });
    return integrate(level, c, x, cfg);
}

RealFn antideriv_fn(const AntiderivSpec& spec, const QuadConfig& cfg)
{
    require_order(spec.order);
    return RealFn([n = spec.order, f = spec.f, c = spec.c(), cfg](double x) { return cauchy_value(n, f, c, x, cfg); });
}

std::pair<double, double> antideriv_semigroup_check(const AntiderivSpec& spec, int k, double x,
                                                    const QuadConfig& cfg)
{
    if (spec.order < 2)
        throw order_error("semigroup identity needs order >= 2");
    if (k < 1 || k > spec.order - 1)
        throw order_error("semigroup split k must satisfy 1 <= k <= n - 1");
    require_inside(spec.iv, x);

    const double direct = cauchy_value(spec.order, spec.f, spec.c(), x, cfg);
    const RealFn inner = antideriv_fn({spec.order - k, spec.f, spec.iv}, cfg);
    const double composed = cauchy_value(k, inner, spec.c(), x, cfg);
    return {direct, composed};
}

double mean(int n, const RealFn& f, const Interval& iv, double x, const QuadConfig& cfg)
{
    require_order(n);
    require_inside(iv, x);
    if (std::abs(x - iv.c()) < iv.base_gap())
        throw base_point_error("mean is undefined at the base point");
    return n * scaled_weighted_integral(n, f, iv.c(), x - iv.c(), cfg);
}

double taylor_poly(int n, const RealFn& f, double c, double x)
{
    if (n < 0)
        throw order_error("Taylor order must be nonnegative");
    if (f.order() < static_cast<std::size_t>(n))
        throw order_error("Taylor polynomial of order " + std::to_string(n) + " needs " + std::to_string(n) +
                          " derivatives, stack has " + std::to_string(f.order()));
    const double h = x - c;
    double sum = 0.0;
    double power = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += f.derivative(static_cast<std::size_t>(k), c) / factorial(k) * power;
        power *= h;
    }
    return sum;
}

double taylor_remainder(int n, const RealFn& f, double c, double x)
{
    const double t = taylor_poly(n, f, c, x);
    if (x == c)
        return 0.0;
    return f(x) - t;
}

std::pair<double, double> remainder_integral_check(int n, const RealFn& f, double c, double x, const QuadConfig& cfg)
{
    require_order(n);
    const double remainder = taylor_remainder(n - 1, f, c, x);
    const RealFn top = f.nth_derivative(static_cast<std::size_t>(n));
    return {remainder, cauchy_value(n, top, c, x, cfg)};
}

} // namespace fracmono
