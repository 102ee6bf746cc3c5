#pragma once

#include <stdexcept>

namespace ctaea {

/// Violated precondition of a library operation (caller bug).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Invalid problem, algorithm or plan configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem or serialization failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ctaea
