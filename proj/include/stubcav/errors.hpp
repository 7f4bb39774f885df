#pragma once

#include <stdexcept>
#include <string>

namespace stubcav {

// Invalid user-supplied parameter (wrong sign, non-finite, bad grid, ...).
// Messages name the offending field.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested stub frequency that no SQUID flux can reach.
struct UntunableError : ValidationError {
    using ValidationError::ValidationError;
};

// Failure inside the numerical machinery: bad bracket, pole crossing,
// non-finite evaluation. `x` holds the offending abscissa when known.
struct NumericsError : std::runtime_error {
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
    NumericsError(const std::string& msg, double offending_x)
        : std::runtime_error(msg), x(offending_x) {}
    double x = 0.0;
};

// The cavity is exactly (or numerically) decoupled from the waveguide;
// the requested quantity is singular or has zero width.
struct DecoupledError : std::runtime_error {
    DecoupledError(const std::string& msg, double detuning_radps)
        : std::runtime_error(msg), detuning(detuning_radps) {}
    double detuning;  // omega3 - omega2, rad/s
};

// The opposite failure: an operation that requires the decoupled point was
// called with a detuned boundary condition.
struct NotDecoupledError : std::runtime_error {
    NotDecoupledError(const std::string& msg, double detuning_radps)
        : std::runtime_error(msg), detuning(detuning_radps) {}
    double detuning;  // omega3 - omega2, rad/s
};

}  // namespace stubcav
