#pragma once

#include <stdexcept>
#include <string>

namespace mimspec {

/// Configuration problems: unknown keys, missing blocks, invalid values.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failures: non-convergent quadrature, failed root brackets,
/// non-convergent fits. The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mimspec
