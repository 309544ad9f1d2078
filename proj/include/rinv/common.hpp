#pragma once

#include <stdexcept>
#include <string>

namespace rinv {

inline constexpr const char* kVersion = "0.1.0";

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Vector/matrix shape mismatch.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid argument value (out-of-range tolerance, non-positive alpha, ...).
struct ArgumentError : Error {
    using Error::Error;
};

/// Non-finite values or failed factorization residual.
struct NumericError : Error {
    using Error::Error;
};

/// Singular or near-singular forward operator; the iterate left the
/// admissible set of the forward problem.
struct SolvabilityError : Error {
    using Error::Error;
};

/// A pointwise denominator of an r-map fell below the configured floor.
struct DenominatorError : Error {
    using Error::Error;
};

/// Invalid configuration (unknown segment, bad partition spec, bad config file).
struct ConfigError : Error {
    using Error::Error;
};

/// Coefficient violates an admissibility bound (positivity, sign).
struct AdmissibilityError : Error {
    using Error::Error;
};

/// Spectral shift too close to a generalized eigenvalue of the base operator.
struct ResonanceError : Error {
    using Error::Error;
};

}  // namespace rinv
