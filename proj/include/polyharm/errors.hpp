// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (|z| > 1, radius
/// out of range, slope out of the admissible interval, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Finite-difference stencil would leave the unit disk.
struct StencilError : DomainError {
    using DomainError::DomainError;
};

/// Map-spec or config JSON that does not match the expected schema.
struct SpecParseError : Error {
    using Error::Error;
};

/// Unreadable or unwritable file.
struct IoError : Error {
    using Error::Error;
};

/// Polygonal curve too coarse for a reliable winding count, even after one
/// refinement pass.
struct CurveTooCoarseError : Error {
    using Error::Error;
};

/// Query point closer than 1e-10 to the polygonal curve; the winding count
/// would be ill-conditioned.
struct PointOnCurveError : Error {
    using Error::Error;
};

/// Denominator below the degeneracy floor (dilatation pole, phi quotient).
struct DegeneratePointError : Error {
    using Error::Error;
};

}  // namespace polyharm
