#pragma once

#include <stdexcept>
#include <string>

namespace levyscale {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad arguments, unusable configuration, unsupported backend/route combinations.
/// The CLI maps these to exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Runtime numerical failures: coefficient checksum violations, failed root
/// brackets, truncation bounds exceeding the requested tolerance.
/// The CLI maps these to exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside an operation's stated domain (pole proximity, invalid
/// parameter region, precondition violations).
class DomainError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

} // namespace levyscale
