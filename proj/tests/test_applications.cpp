#include "fracmono/battery.hpp"
#include "fracmono/calculus.hpp"
#include "fracmono/errors.hpp"
#include "fracmono/interpolation.hpp"
#include "fracmono/radial.hpp"
#include "fracmono/sir.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

using namespace fracmono;

namespace {

RealFn exp_decay()
{
    return RealFn([](double t) { return std::exp(-t); });
}

} // namespace

TEST_SUITE("applications") {

TEST_CASE("Lambert W on the principal branch")
{
    CHECK(lambert_w0(0.0) == 0.0);
    CHECK(lambert_w0(-std::exp(-1.0)) == -1.0);
    const double w = lambert_w0(-0.1);
    CHECK(std::abs(w - oracle::lambert_w0_minus_0_1) <= 1e-15);
    CHECK(std::abs(w - oracle::lambert_bisect(-0.1)) <= 1e-15);
    CHECK_THROWS_AS(lambert_w0(0.1), domain_error);
    CHECK_THROWS_AS(lambert_w0(-0.5), domain_error);
    CHECK_THROWS_AS(lambert_w0(std::nan("")), domain_error);

    const double branch = -std::exp(-1.0);
    for (int k = 0; k < 100; ++k) {
        const double x = branch * (1.0 - k / 99.0);
        const double v = lambert_w0(x);
        CHECK(v >= -1.0);
        CHECK(v <= 0.0);
        CHECK(std::abs(v * std::exp(v) - x) <= 1e-14 * (1.0 + std::abs(x)));
        if (k > 0)
            CHECK(std::abs(v - oracle::lambert_bisect(x)) <= 1e-8);
    }
}

TEST_CASE("SIR parameter validation")
{
    CHECK_THROWS_AS((SirParams{1.0, 0.9, 0.1}.validate()), domain_error);
    CHECK_THROWS_AS((SirParams{2.0, 0.0, 0.1}.validate()), domain_error);
    CHECK_THROWS_AS((SirParams{2.0, 0.99, 0.1}.validate()), domain_error);
    CHECK_THROWS_AS((SirParams{2.0, 0.5, 0.1, 1.0}.validate()), domain_error);
    CHECK_THROWS_AS((SirParams{2.0, 0.5, 0.1, 0.0, -0.01}.validate()), domain_error);
    CHECK_NOTHROW((SirParams{2.0, 0.5, 0.1, 0.4}.validate()));
}

TEST_CASE("SIR trajectory")
{
    const SirParams p{2.0, 0.99, 0.01};
    const auto traj = sir_integrate(p);
    REQUIRE(traj.size() == 20001);
    CHECK(traj.back().t == doctest::Approx(200.0));
    CHECK(std::abs(sir_invariant(p.r0, traj.front().s, traj.front().i) - oracle::invariant_r2_s099_i001) <= 1e-15);
    // Strict while the outbreak is resolvable in double precision, weak in the flat tail.
    const std::size_t last = active_window_end(traj);
    for (std::size_t k = 1; k < traj.size(); ++k) {
        if (k <= last) {
            CHECK(traj[k].s < traj[k - 1].s);
            CHECK(traj[k].r > traj[k - 1].r);
        } else {
            CHECK(traj[k].s <= traj[k - 1].s);
            CHECK(traj[k].r >= traj[k - 1].r);
        }
    }
    for (const auto& st : traj) {
        CHECK(st.s > 0.0);
        CHECK(st.s < 1.0);
        CHECK(st.i > 0.0);
        CHECK(st.i < 1.0);
        CHECK(std::abs(st.s + st.i + st.r - 1.0) <= 1e-12);
    }
    CHECK(max_invariant_drift(p.r0, traj) <= 1e-8);
}

TEST_CASE("near-equilibrium orbit")
{
    const SirParams p{2.0, 0.4, 1e-12};
    const auto traj = sir_integrate(p);
    CHECK(std::abs(traj.back().s - 0.4) <= 1e-10);
    const auto fs = sir_final_size(p);
    CHECK(std::abs(fs.formula - oracle::final_size_r2_s04_i1e12) <= 1e-14);
    CHECK(std::abs(fs.formula - fs.ode) <= 1e-5);
    CHECK(sir_apriori_check(p, traj, 0, false));
    CHECK(sir_mean_apriori_check(p, traj, 1, 0, {}, false));
    CHECK(sir_mean_apriori_check(p, traj, 2, 0, {}, false));
}

TEST_CASE("final size")
{
    struct Row {
        double r0, s0, i0, frozen;
    };
    for (const Row& row : {Row{2.0, 0.99, 0.01, oracle::final_size_r2_s099_i001},
                           Row{1.5, 0.9, 0.01, oracle::final_size_r15_s09_i001},
                           Row{4.0, 0.9, 0.1, oracle::final_size_r4_s09_i01}}) {
        const SirParams p{row.r0, row.s0, row.i0};
        const auto fs = sir_final_size(p);
        CHECK(std::abs(fs.formula - row.frozen) <= 1e-14);
        CHECK(std::abs(fs.formula - oracle::final_size_bisect(row.r0, row.s0, row.i0)) <= 1e-12);
        CHECK(std::abs(fs.formula - fs.ode) <= 1e-5);
        CHECK(fs.formula > 0.0);
        CHECK(fs.formula < 1.0 / row.r0);
    }
}

TEST_CASE("a priori tangent bound and chord slopes")
{
    const SirParams p{2.0, 0.99, 0.01};
    const auto traj = sir_integrate(p);
    CHECK(sir_apriori_check(p, traj, 0, true));
    CHECK(sir_apriori_margin(p, traj, 0) > 0.0);
    const std::size_t last = active_window_end(traj);
    CHECK(traj[last].i >= 1e-6);
    CHECK(traj[last + 1].i < 1e-6);
    for (std::size_t k = 0; k < 10; ++k) {
        const std::size_t c = k * last / 10;
        if (k <= 3)
            CHECK(sir_apriori_check(p, traj, c, true));
        CHECK(sir_apriori_check(p, traj, c, false));
        CHECK(sir_apriori_margin(p, traj, c) > 0.0);
        CHECK(sir_chord_report(traj, c).verdict == Verdict::strictly_increasing);
    }
    CHECK_THROWS_AS(sir_chord_report(traj, last + 5), domain_error);
    CHECK_THROWS_AS(sir_apriori_check(p, traj, traj.size(), true), domain_error);
}

TEST_CASE("a priori bound for means")
{
    const SirParams p{2.0, 0.99, 0.01};
    const auto traj = sir_integrate(p);
    CHECK(sir_mean_apriori_check(p, traj, 1, 0, {}));
    CHECK(sir_mean_apriori_check(p, traj, 2, 0, {}));
    const auto samples = sir_mean_bound_samples(p, traj, 1, 0, {});
    CHECK(samples.size() == 40);
    for (const auto& m : samples) {
        CHECK(m.t > 0.0);
        CHECK(m.mean_s < p.s0);
    }
}

TEST_CASE("shape-preserving interpolation")
{
    const MonotoneCubic line({0.0, 1.0, 3.0, 4.0}, {1.0, 3.0, 7.0, 9.0});
    for (double t : {0.0, 0.5, 2.2, 3.9, 4.0})
        CHECK(std::abs(line(t) - (1.0 + 2.0 * t)) <= 1e-14);
    CHECK(line(-1.0) == 1.0);
    CHECK(line(5.0) == 9.0);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> x{0.0}, y{0.0};
    for (int k = 1; k < 40; ++k) {
        x.push_back(x.back() + 0.05 + u(rng));
        y.push_back(y.back() + (k % 7 == 0 ? 0.0 : u(rng) * u(rng) * 10.0));
    }
    const MonotoneCubic mono(x, y);
    double prev = mono(x.front());
    for (int k = 1; k <= 4000; ++k) {
        const double t = x.front() + (x.back() - x.front()) * k / 4000.0;
        const double v = mono(t);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    for (std::size_t k = 0; k < x.size(); ++k)
        CHECK(mono(x[k]) == doctest::Approx(y[k]).epsilon(1e-14));

    // A unimodal profile keeps its peak at the data maximum.
    const MonotoneCubic peak({0.0, 1.0, 2.0, 3.0, 4.0}, {0.0, 0.5, 1.0, 0.5, 0.0});
    for (int k = 0; k <= 400; ++k)
        CHECK(peak(4.0 * k / 400.0) <= 1.0);

    CHECK_THROWS_AS(MonotoneCubic({0.0}, {1.0}), domain_error);
    CHECK_THROWS_AS(MonotoneCubic({0.0, 0.0}, {1.0, 2.0}), domain_error);
    CHECK_THROWS_AS(MonotoneCubic({0.0, 1.0}, {1.0}), domain_error);
}

TEST_CASE("interpolated trajectory matches the samples")
{
    const auto traj = sir_integrate({2.0, 0.99, 0.01});
    const auto fns = interpolate_trajectory(traj);
    for (std::size_t k = 0; k < traj.size(); k += 997) {
        CHECK(fns.s(traj[k].t) == traj[k].s);
        CHECK(fns.i(traj[k].t) == traj[k].i);
    }
    double prev = fns.s(0.0);
    for (int k = 1; k <= 5000; ++k) {
        const double v = fns.s(200.0 * k / 5000.0 - 0.003);
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("half-integer gamma and sphere areas")
{
    CHECK(half_integer_gamma(1) == std::sqrt(std::numbers::pi));
    CHECK(half_integer_gamma(2) == 1.0);
    CHECK(half_integer_gamma(3) == std::sqrt(std::numbers::pi) / 2.0);
    for (int m = 1; m <= 12; ++m)
        CHECK(half_integer_gamma(m) == doctest::Approx(oracle::gamma_half(m)).epsilon(1e-14));
    CHECK_THROWS_AS(half_integer_gamma(0), domain_error);
    CHECK_THROWS_AS(half_integer_gamma(13), domain_error);

    CHECK(sphere_area(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-15));
    CHECK_THROWS_AS(sphere_area(7), domain_error);
}

TEST_CASE("radial reduction")
{
    const RealFn one = battery::constant(1.0);
    CHECK(std::abs(radial_integral(1, one, 1.0) - 2.0) <= 1e-12);
    CHECK(std::abs(radial_integral(2, one, 1.0) - std::numbers::pi) <= 1e-12);
    CHECK(std::abs(radial_integral(3, one, 1.0) - 4.0 * std::numbers::pi / 3.0) <= 1e-12);
    for (int d = 1; d <= 6; ++d)
        for (double r : {0.5, 1.0, 1.7}) {
            const double ball = std::pow(std::numbers::pi, 0.5 * d) / oracle::gamma_half(d + 2) * std::pow(r, d);
            CHECK(radial_integral(d, one, r) == doctest::Approx(ball).epsilon(1e-12));
        }
    CHECK(std::abs(radial_integral(2, battery::identity(), 1.0) - oracle::disk_of_identity) <= 1e-10);
    CHECK(std::abs(radial_integral(2, exp_decay(), 1.0) - oracle::disk_of_exp_decay) <= 1e-10);
    CHECK_THROWS_AS(radial_integral(2, one, 0.0), domain_error);
    CHECK_THROWS_AS(radial_integral({2, one, one, 1.0}, 1.5), domain_error);
}

TEST_CASE("Monte Carlo ball oracle")
{
    const RealFn one = battery::constant(1.0);
    auto mc = monte_carlo_ball(2, one, 1.0, 1'000'000, 42);
    CHECK(std::abs(mc.value - std::numbers::pi) <= 3.0 * mc.std_error);
    mc = monte_carlo_ball(3, one, 1.0, 1'000'000, 42);
    CHECK(std::abs(mc.value - 4.0 * std::numbers::pi / 3.0) <= 3.0 * mc.std_error);
    mc = monte_carlo_ball(2, exp_decay(), 1.0, 1'000'000, 42);
    CHECK(std::abs(mc.value - radial_integral(2, exp_decay(), 1.0)) <= 3.0 * mc.std_error);
    mc = monte_carlo_ball(2, battery::identity(), 1.0, 1'000'000, 43);
    CHECK(std::abs(mc.value - radial_integral(2, battery::identity(), 1.0)) <= 3.0 * mc.std_error);

    const auto a = monte_carlo_ball(3, exp_decay(), 0.7, 100'000, 9);
    const auto b = monte_carlo_ball(3, exp_decay(), 0.7, 100'000, 9);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(monte_carlo_ball(3, exp_decay(), 0.7, 100'000, 10).value != a.value);

    CHECK_THROWS_AS(monte_carlo_ball(4, one, 1.0, 100'000, 1), domain_error);
    CHECK_THROWS_AS(monte_carlo_ball(2, one, 1.0, 9'999, 1), domain_error);
}

TEST_CASE("ball ratios follow the profile ratio")
{
    const RealFn one = battery::constant(1.0);
    const Grid grid = make_grid(Interval(0.0, 1.0, 0.0), 41, false);
    auto r = verify_radial_monotone({2, battery::identity(), one, 1.0}, {}, grid);
    CHECK(r.hypothesis.verdict == Verdict::strictly_increasing);
    CHECK(r.conclusion.verdict == Verdict::strictly_increasing);
    CHECK(r.max_relative_gap <= 1e-12);
    CHECK(r.conclusion.samples.size() == 40);

    r = verify_radial_monotone({3, exp_decay(), exp_decay(), 1.0}, {}, grid);
    CHECK(r.conclusion.verdict == Verdict::nondecreasing);
    for (const auto& s : r.conclusion.samples)
        CHECK(std::abs(s.value - 1.0) <= 1e-14);

    r = verify_radial_monotone({3, battery::identity().negated(), one, 1.0}, {}, grid);
    CHECK(r.conclusion.verdict == Verdict::strictly_decreasing);

    CHECK_THROWS_AS(verify_radial_monotone({2, one, battery::affine(1.0, -0.5), 1.0}, {}, grid), hypothesis_error);
}

}
