#pragma once

#include <stdexcept>
#include <string>

namespace dsholo {

// Base for all library errors; everything thrown here derives from it so
// callers can catch one type at suite boundaries.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (e.g. 2F1 at z=1).
struct DomainError : Error {
    using Error::Error;
};

// A series or iteration hit its cap before reaching the tail tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// Gamma evaluated at a non-positive integer.
struct PoleError : Error {
    using Error::Error;
};

// Principal-branch power requested with the base on the negative real axis
// and no imaginary shift to resolve it.
struct BranchCutError : Error {
    using Error::Error;
};

// Evaluation requested for a sphere dimension outside the implemented set.
struct UnsupportedDimension : Error {
    using Error::Error;
};

// Operands built over incompatible grids (different dimension or node count).
struct GridMismatch : Error {
    using Error::Error;
};

// Richardson sequence failed to stabilize to the requested tolerance.
struct ExtrapolationError : Error {
    using Error::Error;
};

// Structurally invalid domain object (non-unit vector, nu below the gate, ...).
struct InvalidParameter : Error {
    using Error::Error;
};

// Bad run configuration (CLI or programmatic).
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem failure while writing reports or tables.
struct IoError : Error {
    using Error::Error;
};

}  // namespace dsholo
