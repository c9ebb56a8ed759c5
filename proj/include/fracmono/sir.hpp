#pragma once

#include "fracmono/interval_fn.hpp"
#include "fracmono/monotone.hpp"
#include "fracmono/quadrature.hpp"

#include <cstddef>
#include <vector>

namespace fracmono {

/// Nondimensionalized single-outbreak SIR model:
///   S' = -R0 S I,  I' = -I + R0 S I,  R' = I.
struct SirParams {
    double r0;
    double s0;
    double i0;
    double rec0 = 0.0;
    double dt = 0.01;
    double t_end = 200.0; ///< stands in for t = infinity

    /// Throws domain_error unless r0 > 1, s0, i0 in (0,1), rec0 in [0,1),
    /// s0 + i0 + rec0 <= 1 and dt, t_end > 0.
    void validate() const;
};

struct SirState {
    double t;
    double s;
    double i;
    double r;
};

using Trajectory = std::vector<SirState>;

/// Classical fourth-order Runge-Kutta with fixed step from t = 0 to t_end.
/// Throws instability_error if a component leaves [0, 1] by more than 1e-9.
Trajectory sir_integrate(const SirParams& p);

/// I + S - ln(S) / R0, conserved along exact solutions.
double sir_invariant(double r0, double s, double i) noexcept;

/// max_k |V(state_k) - V(state_0)| along the trajectory.
double max_invariant_drift(double r0, const Trajectory& traj);

/// Principal branch of the Lambert W function on [-1/e, 0]: the w in [-1, 0]
/// with w e^w = x. Bracketed bisection on [-1, 0] polished by Halley steps.
/// Throws domain_error outside [-1/e, 0].
double lambert_w0(double x);

struct FinalSize {
    double formula; ///< -W(-R0 S(0) e^{-R0 (S(0) + I(0))}) / R0
    double ode;     ///< S(t_end) from sir_integrate
};

/// Final susceptible fraction in closed form and from the long-time ODE run.
/// Throws domain_error if the closed form falls outside (0, 1/R0).
FinalSize sir_final_size(const SirParams& p);

/// Tangent-line bound I(t) < I(c) + (1/(R0 S(c)) - 1)(S(t) - S(c)) at every
/// sample t != t_c. Strict mode needs a margin above tau_strict; weak mode
/// accepts margins down to -tau_strict.
bool sir_apriori_check(const SirParams& p, const Trajectory& traj, std::size_t c_index, bool strict,
                       const Resolution& res = {});

/// Smallest margin of the tangent-line bound over t != t_c (diagnostic).
double sir_apriori_margin(const SirParams& p, const Trajectory& traj, std::size_t c_index);

/// Last index of the active part of the orbit, where I(t) >= i_floor. Past it
/// S is flat to machine resolution and chord slopes stop being distinguishable.
std::size_t active_window_end(const Trajectory& traj, double i_floor = 1e-6);

/// Chord slopes (I(t_k) - I(t_c)) / (S(t_k) - S(t_c)) over the active window, k != c.
MonotonicityReport sir_chord_report(const Trajectory& traj, std::size_t c_index, double i_floor = 1e-6,
                                    const Resolution& res = {});

/// Shape-preserving (PCHIP) interpolants of S and I over the trajectory times.
struct TrajectoryFns {
    RealFn s;
    RealFn i;
};

TrajectoryFns interpolate_trajectory(const Trajectory& traj);

struct MeanBoundSample {
    double t;
    double mean_s;
    double mean_i;
    double bound; ///< I(c) + (1/(R0 S(c)) - 1)(M_{n,S,c}(t) - S(c))
};

/// Means of order n of S and I about t_c at `checks` uniformly spaced times
/// over [0, t_end] (t_c itself excluded), with the tangent-line bound.
std::vector<MeanBoundSample> sir_mean_bound_samples(const SirParams& p, const Trajectory& traj, int n,
                                                    std::size_t c_index, const QuadConfig& cfg,
                                                    std::size_t checks = 41);

/// M_{n,I,c}(t) < I(c) + (1/(R0 S(c)) - 1)(M_{n,S,c}(t) - S(c)) at every checked t.
bool sir_mean_apriori_check(const SirParams& p, const Trajectory& traj, int n, std::size_t c_index,
                            const QuadConfig& cfg, bool strict = true, std::size_t checks = 41,
                            const Resolution& res = {});

} // namespace fracmono
