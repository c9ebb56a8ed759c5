#pragma once

#include "fracmono/interval_fn.hpp"

namespace fracmono {

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 40;    ///< bisection levels below each starting panel
    int min_intervals = 4; ///< starting panels over [a, b]

    /// Throws domain_error unless tolerances are positive and 1 <= max_depth <= 60.
    void validate() const;
};

/// Signed integral of f over [a, b] (b < a gives the negated integral).
///
/// Panels with evaluable endpoints use adaptive Simpson with the Richardson
/// correction; a panel touching one of f's exclusion points is integrated by
/// peeling off halves with adaptive Simpson and closing the remaining sliver
/// next to the excluded point with a two-level composite midpoint rule, so f
/// is never evaluated exactly at an excluded point.
///
/// The requested accuracy is max(abs_tol, rel_tol * |coarse estimate|).
/// Throws convergence_error if a panel reaches max_depth without meeting it.
double integrate(const RealFn& f, double a, double b, const QuadConfig& cfg = {});

} // namespace fracmono
