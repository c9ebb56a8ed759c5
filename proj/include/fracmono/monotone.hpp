#pragma once

#include "fracmono/calculus.hpp"
#include "fracmono/interval_fn.hpp"
#include "fracmono/quadrature.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace fracmono {

enum class Verdict { strictly_increasing, nondecreasing, strictly_decreasing, nonincreasing, none };

std::string_view to_string(Verdict v) noexcept;

constexpr bool is_strict(Verdict v) noexcept
{
    return v == Verdict::strictly_increasing || v == Verdict::strictly_decreasing;
}

constexpr bool is_increasing(Verdict v) noexcept
{
    return v == Verdict::strictly_increasing || v == Verdict::nondecreasing;
}

constexpr bool is_decreasing(Verdict v) noexcept
{
    return v == Verdict::strictly_decreasing || v == Verdict::nonincreasing;
}

/// Verdict of the negated sequence. A weak verdict is returned as the weak
/// verdict of the other direction.
Verdict flipped(Verdict v) noexcept;

/// The inheritance contract: `conclusion` has the direction of `hypothesis` and
/// is strict whenever the hypothesis is.
bool inherits(Verdict hypothesis, Verdict conclusion) noexcept;

/// Sampling resolution. Thresholds scale with 1 + max |sampled value|.
struct Resolution {
    double strict_scale = 1e-9; ///< tau_strict
    double zero_scale = 1e-8;   ///< tau_zero
};

struct Sample {
    double x;
    double value;
};

/// A consecutive sample pair that breaks the reported verdict: a tie for weak
/// verdicts, or a step against a direction when no verdict holds.
struct Violation {
    double x1, x2, v1, v2;
};

struct MonotonicityReport {
    Verdict verdict = Verdict::none;
    std::vector<Violation> violations;
    std::vector<Sample> samples;
    double tau = 0.0;

    /// Largest |v2 - v1| among the violations (0 when there are none).
    double max_violation() const noexcept;
};

/// Classify a sampled sequence. Strict verdicts need every consecutive step to
/// exceed tau_strict; weak verdicts treat |step| <= tau_strict as a tie.
/// A constant sequence is reported nondecreasing.
MonotonicityReport monotonicity_of(std::span<const Sample> samples, const Resolution& res = {});

enum class Sign { positive, negative, mixed };

std::string_view to_string(Sign s) noexcept;

/// Common strict sign of g over the grid points (exclusion points skipped).
Sign sign_check(const RealFn& g, const Interval& iv, const Grid& grid);

/// Evaluate `fn` on the grid, skipping points within `gap` of an exclusion
/// point of any of `guards`.
std::vector<Sample> sample_on(const Grid& grid, const ScalarFn& fn, std::span<const RealFn* const> guards = {},
                              double gap = 0.0);

/// Hypothesis bundle shared by the integral and differential fraction rules.
struct TheoremCase {
    RealFn f;
    RealFn g;
    int n;
    Interval iv;
    std::optional<Verdict> expected; ///< declared verdict of the hypothesis ratio, if known
};

struct FractionReports {
    MonotonicityReport hypothesis; ///< f/g (or f^(n)/g^(n)) on the full grid
    MonotonicityReport conclusion; ///< transformed ratio on the grid without c
};

/// Integral fraction rule: monotonicity of f/g against A_{n,f,c}/A_{n,g,c}.
/// Throws hypothesis_error if g has mixed sign or f/g is not monotone on the
/// grid, unless `force` is set (for sharpness experiments).
FractionReports verify_gromov(const TheoremCase& tc, const QuadConfig& cfg, std::size_t grid_size,
                              const Resolution& res = {}, bool force = false);

/// Differential fraction rule: monotonicity of f^(n)/g^(n) against
/// R_{n-1,f,c}/R_{n-1,g,c}. No quadrature is involved. Throws order_error on a
/// short derivative stack and hypothesis_error when g^(n) vanishes or changes
/// sign on the grid (or f^(n)/g^(n) is not monotone, unless `force`).
FractionReports verify_lhopital(const TheoremCase& tc, std::size_t grid_size, const Resolution& res = {},
                                bool force = false);

/// A_{n,f,c} vanishes exactly at c among the grid points: A(c) == 0 and
/// |A(x)| > tau_zero for every grid point away from c.
/// Throws hypothesis_error when f has mixed sign on the grid.
bool zero_set_check_A(const AntiderivSpec& spec, const Grid& grid, const QuadConfig& cfg = {},
                      const Resolution& res = {});

/// For every k in 0..n-1, R_{n-1,f,c}^(k) vanishes at c and stays above
/// tau_zero in magnitude at every grid point away from c. The derivatives are
/// f^(k) - T_{n-1,f,c}^(k), built from the stack. Grid points must lie in iv.
/// Throws order_error on a short stack and hypothesis_error if f^(n) vanishes
/// or changes sign on the grid.
bool zero_set_check_R(int n, const RealFn& f, const Interval& iv, const Grid& grid, const Resolution& res = {});

/// Report for x -> M_{n,f,c}(x) on the grid without c.
/// Throws hypothesis_error unless f samples monotone on the full grid.
MonotonicityReport verify_mean_monotone(int n, const RealFn& f, const Interval& iv, const QuadConfig& cfg,
                                        std::size_t grid_size, const Resolution& res = {});

struct ConvexityReport {
    bool convex = false;                 ///< discrete convexity of M extended by f(c) at c
    MonotonicityReport chord;            ///< (M(x) - f(c)) / (x - c)
    double worst_slope_drop = 0.0;       ///< max(slope(x1,x2) - slope(x2,x3), 0)
    std::vector<Sample> mean_samples;    ///< includes (c, f(c))

    bool holds() const noexcept { return convex && is_increasing(chord.verdict); }
};

/// Convexity of the order-n mean of a convex f (convexity of f is the caller's claim).
ConvexityReport mean_convexity(int n, const RealFn& f, const Interval& iv, const QuadConfig& cfg,
                               std::size_t grid_size, const Resolution& res = {});

inline bool verify_mean_convex(int n, const RealFn& f, const Interval& iv, const QuadConfig& cfg,
                               std::size_t grid_size, const Resolution& res = {})
{
    return mean_convexity(n, f, iv, cfg, grid_size, res).holds();
}

} // namespace fracmono
