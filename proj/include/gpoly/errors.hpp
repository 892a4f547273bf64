#pragma once

#include <stdexcept>
#include <string>

namespace gpoly {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRational : Error {
    using Error::Error;
};

struct DuplicateAbscissa : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct NotSymmetric : Error {
    using Error::Error;
};

/// Permanent-type computations refuse matrices above the configured cap.
struct DimensionTooLarge : Error {
    using Error::Error;
};

struct MalformedGraph6 : Error {
    using Error::Error;
};

struct TooManyVertices : Error {
    using Error::Error;
};

struct NoSuchEdge : Error {
    using Error::Error;
};

struct ZeroGamma : Error {
    using Error::Error;
};

struct ZeroWeight : Error {
    using Error::Error;
};

struct MissingPairDeck : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

/// Structural problems in externally supplied deck/matrix/weight files.
struct MalformedInput : Error {
    using Error::Error;
};

}  // namespace gpoly
