#pragma once

#include "fracmono/interval_fn.hpp"
#include "fracmono/monotone.hpp"
#include "fracmono/quadrature.hpp"

#include <cstdint>

namespace fracmono {

inline constexpr int max_radial_dim = 6;

/// Radial profiles phi(r, x) = f(r - |x|) and psi(r, x) = g(r - |x|) on balls
/// B(0, r) in R^dim, for 0 < r <= r_max.
struct RadialCase {
    int dim;
    RealFn f;
    RealFn g;
    double r_max;
};

/// Gamma(m / 2) for 1 <= m <= 2 * max_radial_dim, built from Gamma(1/2) = sqrt(pi)
/// and Gamma(1) = 1 by Gamma(z + 1) = z Gamma(z).
double half_integer_gamma(int m);

/// Area of the unit sphere in R^dim: 2 pi^{dim/2} / Gamma(dim/2).
double sphere_area(int dim);

/// integral over B(0, r) of f(r - |x|) dx, reduced to
/// sphere_area(dim) * (dim - 1)! * A_{dim,f,0}(r).
double radial_integral(int dim, const RealFn& f, double r, const QuadConfig& cfg = {});

/// radial_integral of the case's f; throws domain_error for r outside (0, r_max].
double radial_integral(const RadialCase& rc, double r, const QuadConfig& cfg = {});

struct McEstimate {
    double value;
    double std_error;
};

/// Monte Carlo estimate of integral over B(0, r) of f(r - |x|) dx by uniform
/// sampling of the cube [-r, r]^dim. dim must be 1..3 and samples >= 10^4.
///
/// Samples are split into 64 fixed batches; batch b draws from std::mt19937_64
/// seeded with splitmix64(seed + (b + 1) * 0x9E3779B97F4A7C15), and each
/// coordinate is r * (2u - 1) with u = (draw >> 11) * 2^-53. Batches may run
/// on any number of threads; partial sums are combined in batch order, so the
/// result is bit-reproducible for a fixed seed.
McEstimate monte_carlo_ball(int dim, const RealFn& f, double r, std::uint64_t samples, std::uint64_t seed);

McEstimate monte_carlo_ball(const RadialCase& rc, double r, std::uint64_t samples, std::uint64_t seed);

struct RadialReports {
    MonotonicityReport hypothesis; ///< f/g on the grid
    MonotonicityReport conclusion; ///< ball-integral ratio over grid radii r > 0
    double max_relative_gap = 0.0; ///< ball ratio against A_{dim,f,0}/A_{dim,g,0}
};

/// Monotonicity of the ball-integral ratio against that of f/g. Grid points must
/// lie in [0, r_max]; r = 0 only enters the hypothesis.
/// Throws hypothesis_error if g has mixed sign or f/g is not monotone on the grid.
RadialReports verify_radial_monotone(const RadialCase& rc, const QuadConfig& cfg, const Grid& grid,
                                     const Resolution& res = {});

} // namespace fracmono
