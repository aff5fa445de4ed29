#ifndef YANGIAN_ERRORS_HPP
#define YANGIAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace yangian {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Division by an exact zero (rational division, falling gamma_ratio, ...).
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& message) : Error(message) {}
};

/// Highest-weight data that does not describe a supported representation.
class InvalidWeightError : public Error {
public:
    explicit InvalidWeightError(const std::string& message) : Error(message) {}
};

/// Two tensor factors were combined with different values of eta.
class MismatchedEtaError : public Error {
public:
    explicit MismatchedEtaError(const std::string& message) : Error(message) {}
};

/// A weight block beyond the truncation cutoff of a Verma factor was requested.
class CutoffExceededError : public Error {
public:
    explicit CutoffExceededError(const std::string& message) : Error(message) {}
};

/// The requested operation is not defined for these arguments.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& message) : Error(message) {}
};

}  // namespace yangian

#endif  // YANGIAN_ERRORS_HPP
