#pragma once

#include <stdexcept>
#include <string>

namespace latpath {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// make_polygon: fewer than three distinct extreme points, or zero area.
struct DegeneratePolygon : Error {
    using Error::Error;
};

// make_polygon: input sequence is not the boundary of a convex polygon.
struct NonConvexInput : Error {
    using Error::Error;
};

// DirectionOrder with det(primary, tiebreak) == 0 is not injective on Z^2.
struct InvalidDirection : Error {
    using Error::Error;
};

// Path enumeration with an edge count outside [1, m].
struct InvalidLength : Error {
    using Error::Error;
};

// delta outside [0, m-1].
struct InvalidDelta : Error {
    using Error::Error;
};

// A path handed to a multiplicity engine does not run from p to q.
struct ContextMismatch : Error {
    using Error::Error;
};

// Sign sequence text that is not whitespace-separated pairs over {+,-}.
struct SignParseError : Error {
    using Error::Error;
};

// Sign sequence whose length differs from the path edge count.
struct SignLengthMismatch : Error {
    using Error::Error;
};

// Malformed registry file.
struct RegistryParseError : Error {
    using Error::Error;
};

// File system failure while reading or writing.
struct IoError : Error {
    using Error::Error;
};

} // namespace latpath
