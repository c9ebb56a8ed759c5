#include "fracmono/interpolation.hpp"

#include "fracmono/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fracmono {

namespace {

// One-sided three-point end slope, limited so it keeps the sign of the end secant.
double end_slope(double h0, double h1, double del0, double del1)
{
    double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if (std::signbit(d) != std::signbit(del0) || del0 == 0.0)
        d = 0.0;
    else if (std::signbit(del0) != std::signbit(del1) && std::abs(d) > 3.0 * std::abs(del0))
        d = 3.0 * del0;
    return d;
}

} // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y))
{
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw domain_error("interpolation needs matching abscissae and values, at least two of each");
    for (std::size_t k = 1; k < n; ++k)
        if (!(x_[k] > x_[k - 1]))
            throw domain_error("interpolation abscissae must be strictly increasing");

    std::vector<double> h(n - 1), del(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = x_[k + 1] - x_[k];
        del[k] = (y_[k + 1] - y_[k]) / h[k];
    }

    d_.assign(n, 0.0);
    if (n == 2) {
        d_[0] = d_[1] = del[0];
        return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (del[k - 1] * del[k] <= 0.0)
            continue;
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        d_[k] = (w1 + w2) / (w1 / del[k - 1] + w2 / del[k]);
    }
    d_[0] = end_slope(h[0], h[1], del[0], del[1]);
    d_[n - 1] = end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

double MonotoneCubic::operator()(double t) const
{
    if (t <= x_.front())
        return y_.front();
    if (t >= x_.back())
        return y_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), t);
    const auto k = static_cast<std::size_t>(it - x_.begin()) - 1;
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    // Hermite form around y_k, so flat data with zero slopes reproduces y_k exactly.
    return y_[k] + (y_[k + 1] - y_[k]) * (3.0 * s2 - 2.0 * s3) +
           h * (d_[k] * (s3 - 2.0 * s2 + s) + d_[k + 1] * (s3 - s2));
}

} // namespace fracmono
