#pragma once

#include <stdexcept>
#include <string>

namespace cmrep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A scalar argument lies outside its legal domain.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An object fails one of its structural invariants (Hermiticity, trace, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue below the clamping window was found in a PSD-only operation.
class PsdError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Unknown or duplicate subsystem label.
class LabelError : public Error {
public:
    using Error::Error;
};

/// A deterministic measurement asked for an outcome that cannot occur.
class ZeroProbabilityError : public Error {
public:
    using Error::Error;
};

/// The integrator drifted outside the density-matrix manifold.
class IntegrationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cmrep
