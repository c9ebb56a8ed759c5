#include "fracmono/battery.hpp"

#include "fracmono/errors.hpp"

#include <cmath>

namespace fracmono::battery {

namespace {

ScalarFn zero_fn()
{
    return [](double) { return 0.0; };
}

} // namespace

RealFn constant(double k)
{
    return RealFn([k](double) { return k; }, {zero_fn(), zero_fn(), zero_fn(), zero_fn()});
}

RealFn affine(double slope, double intercept)
{
    return RealFn([slope, intercept](double t) { return slope * t + intercept; },
                  {[slope](double) { return slope; }, zero_fn(), zero_fn(), zero_fn()});
}

RealFn identity()
{
    return affine(1.0, 0.0);
}

RealFn square()
{
    return RealFn([](double t) { return t * t; },
                  {[](double t) { return 2.0 * t; }, [](double) { return 2.0; }, zero_fn(), zero_fn()});
}

RealFn cube()
{
    return RealFn([](double t) { return t * t * t; }, {[](double t) { return 3.0 * t * t; },
                                                      [](double t) { return 6.0 * t; },
                                                      [](double) { return 6.0; }, zero_fn()});
}

RealFn exp_fn()
{
    ScalarFn e = [](double t) { return std::exp(t); };
    return RealFn(e, {e, e, e, e});
}

RealFn neg_exp()
{
    return exp_fn().negated();
}

RealFn lorentzian()
{
    return RealFn([](double t) { return 1.0 / (1.0 + t * t); },
                  {
                      [](double t) { return -2.0 * t / std::pow(1.0 + t * t, 2); },
                      [](double t) { return (6.0 * t * t - 2.0) / std::pow(1.0 + t * t, 3); },
                      [](double t) { return 24.0 * t * (1.0 - t * t) / std::pow(1.0 + t * t, 4); },
                      [](double t) { return 24.0 * (5.0 * t * t * t * t - 10.0 * t * t + 1.0) / std::pow(1.0 + t * t, 5); },
                  });
}

RealFn abs_shifted(double c)
{
    return RealFn([c](double t) { return std::abs(t - c); }, {}, {c});
}

std::vector<Entry> standard(double c)
{
    return {
        {"one", constant(1.0), true},       {"identity", identity(), true},     {"square", square(), true},
        {"cube", cube(), true},             {"exp", exp_fn(), true},            {"neg_exp", neg_exp(), true},
        {"lorentzian", lorentzian(), true}, {"abs_shifted", abs_shifted(c), false},
    };
}

std::vector<Entry> smooth(double c)
{
    std::vector<Entry> out;
    for (auto& e : standard(c))
        if (e.smooth)
            out.push_back(std::move(e));
    return out;
}

std::vector<Interval> intervals()
{
    return {Interval(0.0, 2.0, 0.0), Interval(0.0, 2.0, 1.0), Interval(-1.0, 1.0, -1.0), Interval(-1.0, 1.0, 0.0)};
}

bool is_convex_on(std::string_view name, const Interval& iv)
{
    if (name == "one" || name == "identity" || name == "square" || name == "exp" || name == "abs_shifted")
        return true;
    if (name == "cube")
        return iv.lo() >= 0.0;
    if (name == "lorentzian") // convex exactly where |t| >= 1/sqrt(3)
        return iv.lo() >= 1.0 / std::sqrt(3.0) || iv.hi() <= -1.0 / std::sqrt(3.0);
    return false;
}

RealFn by_name(std::string_view name, double c)
{
    if (!name.empty() && name.front() == '-')
        return by_name(name.substr(1), c).negated();
    for (auto& e : standard(c))
        if (e.name == name)
            return e.fn;
    throw domain_error("unknown battery function '" + std::string(name) + "'");
}

std::vector<std::string> names()
{
    std::vector<std::string> out;
    for (const auto& e : standard(0.0))
        out.push_back(e.name);
    return out;
}

} // namespace fracmono::battery
