#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace erw {

// Thrown when an operation needs more observations than the path provides
// (most estimator quantities are undefined for n < 2).
class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a required runtime artifact is missing or unusable, e.g. a
// quantile table without the requested level or with too large a Monte
// Carlo standard error.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized input. Carries the 1-based line number for text
// formats (0 when not applicable).
class DataFormatError : public std::runtime_error {
public:
    DataFormatError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace erw
