#pragma once

#include <stdexcept>
#include <string>

namespace growdom {

/// Raised when a quadrature or special-function evaluation fails to converge.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an ensemble cannot produce a valid estimate (e.g. censored data
/// where the functional requires complete hitting times).
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed or out-of-range experiment configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace growdom
