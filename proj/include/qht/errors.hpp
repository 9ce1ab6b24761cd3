#pragma once

#include <stdexcept>
#include <string>

namespace qht {

/// Thrown when a fraction or rational function is constructed with a zero
/// denominator.
struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("zero denominator") {}
};

/// Thrown when dividing by the zero rational function.
struct DivisionByZeroFunction : std::domain_error {
    DivisionByZeroFunction()
        : std::domain_error("division by the zero rational function") {}
};

/// Thrown when a rational function is evaluated at a root of its reduced
/// denominator.
struct EvalAtPole : std::domain_error {
    std::string location;
    explicit EvalAtPole(std::string at)
        : std::domain_error("evaluation at a pole: " + at), location(std::move(at)) {}
};

/// Thrown when a Mellin transform cannot be inverted to a radial symbol
/// (multiple pole, nonlinear denominator factor, improper degree, or a pole
/// that would require a negative exponent).
struct UnsupportedMellin : std::domain_error {
    explicit UnsupportedMellin(const std::string& why)
        : std::domain_error("not invertible to a radial symbol: " + why) {}
};

/// Thrown when adaptive quadrature exceeds its subdivision depth budget.
struct NoConvergence : std::runtime_error {
    int max_depth;
    explicit NoConvergence(int depth)
        : std::runtime_error("quadrature did not converge within subdivision depth " +
                             std::to_string(depth)),
          max_depth(depth) {}
};

} // namespace qht
