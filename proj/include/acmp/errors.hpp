#pragma once

#include <stdexcept>
#include <string>

namespace acmp {

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Interior node set splits into more than one axis-connected component.
class DomainNotConnected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Field carries NaN or Inf where a finite value is required.
class InvalidField : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The energy or its gradient became non-finite during a solve.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace acmp
