#pragma once

#include <stdexcept>
#include <string>

namespace kgwell {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A physical or numerical input is outside its admissible range.
class invalid_parameter : public error {
public:
    invalid_parameter(std::string field, const std::string& what)
        : error("invalid parameter '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// The trial energy lies outside the open window (-m, m).
class not_bound_state : public error {
public:
    using error::error;
};

/// A special function was evaluated at a pole or outside its supported domain.
class domain_error : public error {
public:
    using error::error;
};

/// A series or integration did not reach the requested accuracy.
/// Carries whatever partial value was available and an estimate of its error.
class accuracy_error : public error {
public:
    accuracy_error(const std::string& operation, const std::string& what,
                   double partial_value = 0.0, double error_estimate = 0.0)
        : error(operation + ": " + what),
          operation_(operation),
          partial_value_(partial_value),
          error_estimate_(error_estimate) {}

    const std::string& operation() const noexcept { return operation_; }
    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    std::string operation_;
    double partial_value_;
    double error_estimate_;
};

/// Measure-zero configurations such as a vanishing norm or singular parity system.
class degenerate_error : public error {
public:
    using error::error;
};

/// An identity that must hold analytically was violated; indicates a bug.
class internal_consistency : public error {
public:
    using error::error;
};

/// Solver configuration out of range (step size, grid size, window).
class config_error : public error {
public:
    using error::error;
};

} // namespace kgwell
