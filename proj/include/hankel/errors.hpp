#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

// Base class for all library errors; CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic attempted across scalar modes, or an operation got the wrong mode.
class ModeError : public Error {
public:
    explicit ModeError(const std::string& what) : Error("mode error: " + what) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error("dimension error: " + what) {}
};

// Well-formed input outside an operation's domain (inconsistent system,
// zero form, unknown preset, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class NoSolutionError : public DomainError {
public:
    explicit NoSolutionError(const std::string& what, double residual)
        : DomainError("no-solution: " + what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

class NoSquarefreeKernelError : public DomainError {
public:
    explicit NoSquarefreeKernelError(const std::string& what)
        : DomainError("no-squarefree-kernel: " + what) {}
};

// A postcondition the library guarantees failed to hold: a bug trap,
// never a user-input condition.
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error("invariant violation: " + what) {}
};

// Malformed JSON or file I/O failure; CLI maps these to exit code 2.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace hankel
