#pragma once

#include <stdexcept>
#include <string>

namespace pentaflow {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: too few vertices, non-finite coordinates, unparsable files.
struct InvalidInput : Error {
    using Error::Error;
};

/// Base for geometric degeneracies (distinct from bad input: the data was
/// well-formed but the configuration has no answer).
struct DegeneracyError : Error {
    using Error::Error;
};

/// A determinant denominator vanished: three relevant vertices are collinear.
struct DegeneratePosition : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};

/// The image polygon of the pentagram map failed validation.
struct DegenerateImage : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};

/// Two lines handed to line_intersection are (numerically) parallel.
struct ParallelLines : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};

/// A point handed to signed_length does not lie on the reference line.
struct NotCollinear : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};

/// det(gamma', gamma'') vanished where W was requested.
struct VanishingCurvature : DegeneracyError {
    using DegeneracyError::DegeneracyError;
};

/// Fewer than three data points handed to a convergence fit.
struct InsufficientData : Error {
    using Error::Error;
};

/// A residual fed to a log-log fit was zero or negative.
struct NonPositiveResidual : Error {
    using Error::Error;
};

} // namespace pentaflow
