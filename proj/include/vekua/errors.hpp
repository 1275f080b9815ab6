#pragma once

#include <stdexcept>
#include <string>

namespace vekua {

/// Invalid user input: bad configuration, malformed tables, violated preconditions.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation broke down (non-monotone travel time, strict-mode domain violation).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain a built object covers.
class DomainError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

} // namespace vekua
