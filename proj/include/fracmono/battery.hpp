#pragma once

#include "fracmono/interval_fn.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fracmono::battery {

RealFn constant(double k);
RealFn affine(double slope, double intercept);
RealFn identity();
RealFn square();
RealFn cube();
RealFn exp_fn();
RealFn neg_exp();
RealFn lorentzian(); ///< 1 / (1 + t^2)

/// |t - c| with c declared as an exclusion point, standing in for the null
/// set where it vanishes. No derivative stack.
RealFn abs_shifted(double c);

struct Entry {
    std::string name;
    RealFn fn;
    bool smooth; ///< carries a derivative stack of length >= 4
};

/// {1, id, t^2, t^3, exp, -exp, 1/(1+t^2), |t-c|}; c only affects |t-c|.
std::vector<Entry> standard(double c);

/// Smooth members only.
std::vector<Entry> smooth(double c);

/// [0,2] with c in {0, 1} and [-1,1] with c in {-1, 0}.
std::vector<Interval> intervals();

/// Convexity of a battery member on iv, as known analytically.
bool is_convex_on(std::string_view name, const Interval& iv);

/// Battery member by name; a leading '-' negates it. Throws domain_error for unknown names.
RealFn by_name(std::string_view name, double c);

/// Names accepted by by_name (without the '-' prefix).
std::vector<std::string> names();

} // namespace fracmono::battery
