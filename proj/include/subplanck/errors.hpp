#pragma once

#include <stdexcept>
#include <string>

namespace subplanck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter set or argument violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The requested superposition has (numerically) zero norm.
class DegenerateState : public Error {
public:
    using Error::Error;
};

/// Closed-form assembly produced a value that cannot be a Wigner function
/// (non-negligible imaginary part). Indicates a bug, not a domain condition.
class AssemblyError : public Error {
public:
    using Error::Error;
};

/// A quadrature rule cannot resolve the integrand it was asked to handle.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Fewer sign changes than needed to infer a lattice period.
class NoLatticeError : public Error {
public:
    using Error::Error;
};

/// A sampled curve does not bracket an interior minimum.
class NoBracketError : public Error {
public:
    using Error::Error;
};

} // namespace subplanck
