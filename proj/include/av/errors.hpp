#pragma once

#include <stdexcept>
#include <string>

namespace av {

/// Invalid user input: malformed config, bad arguments, contract violations.
/// Maps to process exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Certified computation could not reach the requested tolerance within the
/// precision cap. Maps to process exit code 3.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitPrecisionError = 3;

}  // namespace av
