#pragma once

#include <vector>

namespace fracmono {

/// Piecewise cubic Hermite interpolant with Fritsch-Carlson slopes (PCHIP).
///
/// Interior slopes are the weighted harmonic mean of neighbouring secants and
/// vanish at local extrema of the data, so the interpolant is monotone on every
/// interval where the data are. Outside [x.front(), x.back()] it clamps to the
/// end values.
class MonotoneCubic {
public:
    /// Throws domain_error unless x is strictly increasing with x.size() == y.size() >= 2.
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;

    const std::vector<double>& slopes() const noexcept { return d_; }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> d_;
};

} // namespace fracmono
