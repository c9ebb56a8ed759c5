#include "fracmono/radial.hpp"

#include "fracmono/calculus.hpp"
#include "fracmono/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace fracmono {

double half_integer_gamma(int m)
{
    if (m < 1 || m > 2 * max_radial_dim)
        throw domain_error("half_integer_gamma supports Gamma(m/2) for 1 <= m <= " +
                           std::to_string(2 * max_radial_dim));
    // Start at Gamma(1/2) or Gamma(1) and step z -> z + 1.
    double z = (m % 2 == 1) ? 0.5 : 1.0;
    double value = (m % 2 == 1) ? std::sqrt(std::numbers::pi) : 1.0;
    while (z < 0.5 * m) {
        value *= z;
        z += 1.0;
    }
    return value;
}

double sphere_area(int dim)
{
    if (dim < 1 || dim > max_radial_dim)
        throw domain_error("radial dimension must lie in [1, " + std::to_string(max_radial_dim) + "]");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / half_integer_gamma(dim);
}

double radial_integral(int dim, const RealFn& f, double r, const QuadConfig& cfg)
{
    if (!(r > 0.0) || !std::isfinite(r))
        throw domain_error("ball radius must be positive");
    const double area = sphere_area(dim);
    const AntiderivSpec spec{dim, f, Interval(0.0, r, 0.0)};
    return area * factorial(dim - 1) * antideriv_cauchy(spec, r, cfg);
}

double radial_integral(const RadialCase& rc, double r, const QuadConfig& cfg)
{
    if (r > rc.r_max)
        throw domain_error("radius above r_max");
    return radial_integral(rc.dim, rc.f, r, cfg);
}

namespace {

constexpr std::size_t mc_batches = 64;

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct BatchSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

BatchSums run_batch(int dim, const RealFn& f, double r, std::uint64_t count, std::uint64_t batch_seed)
{
    std::mt19937_64 engine(batch_seed);
    BatchSums acc;
    for (std::uint64_t k = 0; k < count; ++k) {
        double norm_sq = 0.0;
        for (int j = 0; j < dim; ++j) {
            const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
            const double xj = r * (2.0 * u - 1.0);
            norm_sq += xj * xj;
        }
        const double norm = std::sqrt(norm_sq);
        if (norm < r) {
            const double v = f(r - norm);
            acc.sum += v;
            acc.sum_sq += v * v;
        }
    }
    return acc;
}

} // namespace

McEstimate monte_carlo_ball(int dim, const RealFn& f, double r, std::uint64_t samples, std::uint64_t seed)
{
    if (dim < 1 || dim > 3)
        throw domain_error("Monte Carlo ball oracle supports dimensions 1..3");
    if (samples < 10000)
        throw domain_error("Monte Carlo ball oracle needs at least 10^4 samples");
    if (!(r > 0.0) || !std::isfinite(r))
        throw domain_error("ball radius must be positive");

    std::vector<std::uint64_t> counts(mc_batches, samples / mc_batches);
    for (std::size_t b = 0; b < samples % mc_batches; ++b)
        ++counts[b];

    std::vector<BatchSums> partial(mc_batches);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), std::size_t{1}, mc_batches);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t b = w; b < mc_batches; b += workers)
                    partial[b] = run_batch(dim, f, r, counts[b], splitmix64(seed + (b + 1) * 0x9E3779B97F4A7C15ULL));
            });
        }
    }

    double sum = 0.0, sum_sq = 0.0;
    for (const auto& p : partial) {
        sum += p.sum;
        sum_sq += p.sum_sq;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    const double var = std::max(0.0, (sum_sq / n - mean * mean) * n / (n - 1.0));
    const double volume = std::pow(2.0 * r, dim);
    return {volume * mean, volume * std::sqrt(var / n)};
}

McEstimate monte_carlo_ball(const RadialCase& rc, double r, std::uint64_t samples, std::uint64_t seed)
{
    if (r > rc.r_max)
        throw domain_error("radius above r_max");
    return monte_carlo_ball(rc.dim, rc.f, r, samples, seed);
}

RadialReports verify_radial_monotone(const RadialCase& rc, const QuadConfig& cfg, const Grid& grid,
                                     const Resolution& res)
{
    const Interval domain(0.0, rc.r_max, 0.0);
    for (double r : grid.points)
        if (!domain.contains(r))
            throw domain_error("grid radius " + std::to_string(r) + " outside [0, r_max]");
    if (sign_check(rc.g, domain, grid) == Sign::mixed)
        throw hypothesis_error("g does not keep a strict sign on the grid");

    const RealFn* guards[] = {&rc.f, &rc.g};
    RadialReports out;
    out.hypothesis =
        monotonicity_of(sample_on(grid, [&](double r) { return rc.f(r) / rc.g(r); }, guards, domain.base_gap()), res);
    if (out.hypothesis.verdict == Verdict::none)
        throw hypothesis_error("f/g is not monotone on the grid");

    std::vector<Sample> ratios;
    for (double r : grid.points) {
        if (r <= domain.base_gap())
            continue;
        const double ball = radial_integral(rc.dim, rc.f, r, cfg) / radial_integral(rc.dim, rc.g, r, cfg);
        const Interval span(0.0, r, 0.0);
        const double reduced = antideriv_cauchy({rc.dim, rc.f, span}, r, cfg) / antideriv_cauchy({rc.dim, rc.g, span}, r, cfg);
        const double scale = std::max(std::abs(reduced), std::numeric_limits<double>::min());
        out.max_relative_gap = std::max(out.max_relative_gap, std::abs(ball - reduced) / scale);
        ratios.push_back({r, ball});
    }
    out.conclusion = monotonicity_of(ratios, res);
    return out;
}

} // namespace fracmono
