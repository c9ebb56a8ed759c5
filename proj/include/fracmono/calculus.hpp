#pragma once

#include "fracmono/interval_fn.hpp"
#include "fracmono/quadrature.hpp"

#include <utility>

namespace fracmono {

/// Order-n antiderivative of f anchored at the interval's base point.
struct AntiderivSpec {
    int order;
    RealFn f;
    Interval iv;

    double c() const noexcept { return iv.c(); }
};

/// n! as a double, exact for n <= 20 (integer product); throws order_error beyond.
double factorial(int n);

/// Largest order accepted by antideriv_repeated.
inline constexpr int max_repeated_order = 4;

/// A_{n,f,c}(x) = 1/(n-1)! * integral_c^x f(t) (x - t)^{n-1} dt, evaluated as a
/// single weighted integral. Exactly 0 at x = c.
///
/// The integral is mapped onto [0, 1] via t = c + s (x - c), which gives
///   A_{n,f,c}(x) = (x - c)^n / (n-1)! * integral_0^1 f(c + s(x-c)) (1-s)^{n-1} ds
/// so the quadrature tolerances act on a scale-free quantity.
double antideriv_cauchy(const AntiderivSpec& spec, double x, const QuadConfig& cfg = {});

/// Same quantity computed as n nested integrals from c; independent oracle for
/// antideriv_cauchy. Throws order_error for n > max_repeated_order.
double antideriv_repeated(const AntiderivSpec& spec, double x, const QuadConfig& cfg = {});

/// x -> A_{n,f,c}(x) wrapped as a function (no derivative stack, no exclusions).
RealFn antideriv_fn(const AntiderivSpec& spec, const QuadConfig& cfg = {});

/// (A_{n,f,c}(x), A_{k, A_{n-k,f,c}, c}(x)); the second entry integrates the
/// wrapped inner antiderivative. Requires n >= 2 and 1 <= k <= n - 1.
std::pair<double, double> antideriv_semigroup_check(const AntiderivSpec& spec, int k, double x,
                                                    const QuadConfig& cfg = {});

/// Mean of order n: n / (x - c)^n * integral_c^x f(t) (x - t)^{n-1} dt.
/// The base point is iv.c(); throws base_point_error when |x - c| < iv.base_gap().
double mean(int n, const RealFn& f, const Interval& iv, double x, const QuadConfig& cfg = {});

/// sum_{k=0}^{n} f^(k)(c) / k! * (x - c)^k. Throws order_error when f's stack is shorter than n.
double taylor_poly(int n, const RealFn& f, double c, double x);

/// f(x) - taylor_poly(n, f, c, x); exactly zero at x = c.
double taylor_remainder(int n, const RealFn& f, double c, double x);

/// (R_{n-1,f,c}(x), A_{n,f^(n),c}(x)): Taylor remainder against the integral
/// form of the remainder. Requires n >= 1 and a stack of length >= n.
std::pair<double, double> remainder_integral_check(int n, const RealFn& f, double c, double x,
                                                   const QuadConfig& cfg = {});

} // namespace fracmono
