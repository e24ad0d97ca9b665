#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace ggamma {

enum class ErrorKind {
    domain,       // argument outside the function's domain
    pole,         // evaluation point is a pole
    singular,     // a factor of a closed-form expression vanishes
    overflow,     // result exceeds the binary64 exponent range
    convergence,  // iterative method exhausted its budget
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class SingularPointError : public Error {
public:
    explicit SingularPointError(const std::string& what) : Error(ErrorKind::singular, what) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(ErrorKind::overflow, what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(ErrorKind::convergence, what) {}
};

/// Raised when an evaluation point coincides with a pole. For continuation
/// through B(s) the shift index and the offending root are carried along;
/// both are -1 / NaN when the pole came from a gamma-function argument.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what, int shift = -1, double root = std::numeric_limits<double>::quiet_NaN())
        : Error(ErrorKind::pole, what), shift_(shift), root_(root) {}

    int shift() const noexcept { return shift_; }
    double root() const noexcept { return root_; }

private:
    int shift_;
    double root_;
};

}  // namespace ggamma
