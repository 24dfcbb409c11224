#pragma once

#include <stdexcept>
#include <string>

namespace kmlab {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File-system and parse failures: missing files, ragged rows, bad cells.
class IoError : public Error {
public:
    using Error::Error;
};

/// Caller passed something malformed: bad ranges, dimension mismatches.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The computation is undefined for this input: k > n, all-identical
/// datasets, coincident centroids.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

}  // namespace kmlab
