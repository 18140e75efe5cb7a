#pragma once

#include <stdexcept>
#include <string>

namespace wirtinger {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exponent triple that belongs to no admissibility class. The message
/// names the violated constraint.
class InadmissibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for failures of the numerics (as opposed to bad input).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// K(m) blows up as m -> 0; raised instead of returning a meaningless value.
class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace wirtinger
