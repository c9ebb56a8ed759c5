#pragma once

#include <stdexcept>
#include <string>

namespace fracmono {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad interval, stencil
/// leaving the interval, Lambert W argument out of range, ...).
class domain_error : public error {
public:
    using error::error;
};

class empty_grid_error : public error {
public:
    using error::error;
};

/// Adaptive quadrature hit its depth limit with the error estimate above tolerance.
class convergence_error : public error {
public:
    using error::error;
};

/// Derivative stack too short, or order above a supported cap.
class order_error : public error {
public:
    using error::error;
};

/// Evaluation requested inside the exclusion gap around the base point.
class base_point_error : public error {
public:
    using error::error;
};

/// A theorem hypothesis (sign preservation, monotone ratio, nonvanishing
/// derivative) does not hold on the sampled grid.
class hypothesis_error : public error {
public:
    using error::error;
};

class too_few_samples_error : public error {
public:
    using error::error;
};

/// ODE state left the unit cube.
class instability_error : public error {
public:
    using error::error;
};

class config_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace fracmono
