#include "fracmono/battery.hpp"
#include "fracmono/errors.hpp"
#include "fracmono/interval_fn.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace fracmono;

TEST_SUITE("interval_fn") {

TEST_CASE("interval validation")
{
    CHECK_NOTHROW(Interval(0.0, 1.0, 0.0));
    CHECK_NOTHROW(Interval(-1.0, 1.0, 1.0));
    CHECK_THROWS_AS(Interval(1.0, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(Interval(2.0, 1.0, 1.5), domain_error);
    CHECK_THROWS_AS(Interval(0.0, 1.0, 1.5), domain_error);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity(), 0.0), domain_error);
    CHECK_THROWS_AS(Interval(std::nan(""), 1.0, 0.0), domain_error);

    const Interval iv(0.0, 2.0, 1.0);
    CHECK(iv.width() == 2.0);
    CHECK(iv.base_gap() == doctest::Approx(2e-9));
    CHECK(iv.contains(0.0));
    CHECK(iv.contains(2.0));
    CHECK_FALSE(iv.contains(2.0000001));
    CHECK(iv.rebased(0.0).c() == 0.0);
}

TEST_CASE("uniform grids")
{
    auto pts = make_grid(Interval(0.0, 1.0, 0.0), 3, false).points;
    CHECK(pts == std::vector<double>{0.0, 0.5, 1.0});

    pts = make_grid(Interval(0.0, 1.0, 0.0), 3, true).points;
    CHECK(pts == std::vector<double>{0.5, 1.0});

    pts = make_grid(Interval(-1.0, 1.0, 0.0), 5, true).points;
    CHECK(pts == std::vector<double>{-1.0, -0.5, 0.5, 1.0});

    CHECK_THROWS_AS(make_grid(Interval(0.0, 1.0, 0.0), 1, false), domain_error);
    CHECK(make_grid(Interval(0.0, 1.0, 0.0), 2, true).points == std::vector<double>{1.0});
}

TEST_CASE("grid invariants over random intervals")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_int_distribution<std::size_t> count(2, 200);
    for (int trial = 0; trial < 500; ++trial) {
        double a = u(rng), b = u(rng);
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        std::uniform_real_distribution<double> uc(a, b);
        const Interval iv(a, b, trial % 3 == 0 ? a : uc(rng));
        const std::size_t n = count(rng);
        for (bool exclude : {false, true}) {
            const Grid g = make_grid(iv, n, exclude);
            REQUIRE(!g.points.empty());
            CHECK(g.points.size() <= n);
            CHECK(g.points.back() == b);
            if (!exclude) {
                CHECK(g.points.size() == n);
                CHECK(g.points.front() == a);
            }
            for (std::size_t k = 0; k < g.points.size(); ++k) {
                CHECK(iv.contains(g.points[k]));
                if (k)
                    CHECK(g.points[k] > g.points[k - 1]);
                if (exclude)
                    CHECK(std::abs(g.points[k] - iv.c()) >= iv.base_gap());
            }
        }
    }
}

TEST_CASE("finite differences")
{
    CHECK(finite_diff(battery::square(), 1, 1.0, 1e-5) == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(std::abs(finite_diff(battery::exp_fn(), 2, 0.0, 1e-4) - 1.0) <= 1e-6);
    for (double x : {-3.0, 0.1, 0.7, 12.5})
        CHECK(std::abs(finite_diff(battery::identity(), 2, x, 1e-4)) <= 1e-8);
    CHECK(finite_diff(battery::cube(), 0, 2.0, 1e-3) == 8.0);

    const Interval unit(0.0, 1.0, 0.0);
    CHECK_THROWS_AS(finite_diff(battery::square(), 1, 0.0, 1e-3, unit), domain_error);
    CHECK_NOTHROW(finite_diff(battery::square(), 1, 0.5, 1e-3, unit));
    CHECK_THROWS_AS(finite_diff(battery::square(), 5, 0.5, 1e-3), order_error);
    CHECK_THROWS_AS(finite_diff(battery::square(), 1, 0.5, 0.0), domain_error);
}

TEST_CASE("derivative stacks agree with finite differences")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    const double steps[] = {1e-5, 1e-3, 1e-2};
    const double tols[] = {1e-6, 1e-5, 1e-3};
    for (const auto& e : battery::smooth(0.0)) {
        REQUIRE(e.fn.order() >= 4);
        for (int trial = 0; trial < 50; ++trial) {
            const double x = u(rng);
            for (std::size_t k = 1; k <= 3; ++k) {
                const double want = e.fn.derivative(k, x);
                const double got = finite_diff(e.fn.nth_derivative(k - 1), 1, x, steps[0]);
                CHECK_MESSAGE(std::abs(got - want) <= tols[0] * (1.0 + std::abs(want)), e.name, " k=", k, " x=", x);
                const double direct = finite_diff(e.fn, k, x, steps[k - 1]);
                CHECK_MESSAGE(std::abs(direct - want) <= tols[k - 1] * (1.0 + std::abs(want)), e.name, " k=", k);
            }
        }
    }
}

TEST_CASE("real functions")
{
    const RealFn f([](double x) { return x * x; }, {[](double x) { return 2 * x; }, [](double) { return 2.0; }},
                   {1.0, -1.0, 1.0});
    CHECK(f(3.0) == 9.0);
    CHECK(f.order() == 2);
    CHECK(f.derivative(0, 3.0) == 9.0);
    CHECK(f.derivative(1, 3.0) == 6.0);
    CHECK(f.derivative(2, 3.0) == 2.0);
    CHECK_THROWS_AS(f.derivative(3, 3.0), order_error);
    REQUIRE(f.exclusions().size() == 2);
    CHECK(f.exclusions()[0] == -1.0);
    CHECK(f.exclusions()[1] == 1.0);
    CHECK(f.is_excluded(1.0));
    CHECK_FALSE(f.is_excluded(1.1));
    CHECK(f.is_excluded(1.1, 0.2));

    const RealFn g = f.negated();
    CHECK(g(3.0) == -9.0);
    CHECK(g.derivative(1, 3.0) == -6.0);
    CHECK(g.exclusions().size() == 2);

    const RealFn d = f.nth_derivative(1);
    CHECK(d(3.0) == 6.0);
    CHECK(d.order() == 1);
    CHECK(d.derivative(1, 3.0) == 2.0);
    CHECK_THROWS_AS(f.nth_derivative(3), order_error);

    CHECK(f.with_exclusions({}).exclusions().empty());
}

TEST_CASE("battery members")
{
    const auto all = battery::standard(0.5);
    REQUIRE(all.size() == 8);
    CHECK(battery::smooth(0.5).size() == 7);
    const auto abs = battery::by_name("abs_shifted", 0.5);
    CHECK(abs(0.25) == 0.25);
    CHECK(abs.is_excluded(0.5));
    CHECK(abs.order() == 0);
    CHECK(battery::by_name("-exp", 0.0)(0.0) == -1.0);
    CHECK(battery::by_name("lorentzian", 0.0)(1.0) == 0.5);
    CHECK(battery::by_name("lorentzian", 0.0).derivative(1, 1.0) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(battery::by_name("sine", 0.0), domain_error);
    CHECK(battery::intervals().size() == 4);
}

}
