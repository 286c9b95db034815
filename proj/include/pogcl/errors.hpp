#ifndef POGCL_ERRORS_HPP
#define POGCL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pogcl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input errors: the caller handed in something malformed. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : InputError("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NotHomogeneous : public InputError {
public:
    NotHomogeneous(int first_degree, int second_degree)
        : InputError("polynomial is not homogeneous: found monomials of degree " +
                     std::to_string(first_degree) + " and " + std::to_string(second_degree)),
          first_(first_degree),
          second_(second_degree) {}
    int first_degree() const noexcept { return first_; }
    int second_degree() const noexcept { return second_; }

private:
    int first_;
    int second_;
};

class SingularChange : public InputError {
public:
    SingularChange() : InputError("linear change of coordinates has zero determinant") {}
};

class RepeatedComponent : public InputError {
public:
    using InputError::InputError;
};

class SingularConic : public InputError {
public:
    using InputError::InputError;
};

class WrongDegree : public InputError {
public:
    using InputError::InputError;
};

class AlphaOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class ExcludedParameter : public InputError {
public:
    using InputError::InputError;
};

class IrrationalParameterUnsupported : public InputError {
public:
    using InputError::InputError;
};

class NonReducedInput : public InputError {
public:
    using InputError::InputError;
};

/// Two modular rank computations disagreed; retry with other primes or the exact backend.
class BackendDisagreement : public Error {
public:
    using Error::Error;
};

/// The degree budget ran out before the resolution data was complete.
class Truncated : public Error {
public:
    using Error::Error;
};

/// No generic projection found within the retry budget.
class GenericityFailure : public Error {
public:
    using Error::Error;
};

/// Two independently computed quantities that must agree do not (an internal cross-check failed).
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

/// A reproduced result differs from the expected one.
class ReproductionMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace pogcl

#endif
