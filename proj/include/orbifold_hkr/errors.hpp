#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbifold_hkr {

/// Malformed user input. The CLI maps this family to exit status 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BadRational : public InputError {
public:
    using InputError::InputError;
};

class NonSquareMatrix : public InputError {
public:
    using InputError::InputError;
};

class NotInvertible : public InputError {
public:
    using InputError::InputError;
};

/// JSON document does not match the job schema; `path` locates the field.
class SchemaError : public InputError {
public:
    SchemaError(std::string path, const std::string& what)
        : InputError(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A size guard tripped. The CLI maps this family to exit status 3.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceeded : public CapError {
public:
    using CapError::CapError;
};

class OrderCapExceeded : public CapError {
public:
    using CapError::CapError;
};

class BasisTooLarge : public CapError {
public:
    using CapError::CapError;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConductorMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace orbifold_hkr
