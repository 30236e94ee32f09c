#pragma once

#include <stdexcept>
#include <string>

namespace iblab {

/// Base class for all library errors. CLI maps subclasses to exit codes:
/// InputError -> 1, NumericalError -> 2.
class IbError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad block names, invalid pmf, bad files).
class InputError : public IbError {
public:
    using IbError::IbError;
};

/// A computation failed for numerical reasons (singular or indefinite matrices).
class NumericalError : public IbError {
public:
    using IbError::IbError;
};

class UnknownBlock : public InputError {
public:
    explicit UnknownBlock(const std::string& name)
        : InputError("unknown block: " + name) {}
};

class InvalidPmf : public InputError {
public:
    using InputError::InputError;
};

class ConstantColumn : public InputError {
public:
    explicit ConstantColumn(std::size_t col)
        : InputError("column " + std::to_string(col) + " is constant") {}
};

class NonFiniteInput : public InputError {
public:
    using InputError::InputError;
};

class UnsupportedPair : public InputError {
public:
    using InputError::InputError;
};

class DegenerateCovariance : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularConditioningBlock : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ComplexEigenvalue : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ZeroProbability : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace iblab
