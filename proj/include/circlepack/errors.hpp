#pragma once

#include <stdexcept>

namespace circlepack {

// Base for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed values outside an operation's domain.
struct InvalidInput : Error {
    using Error::Error;
};

// Three radii admit no circumscribing circle.
struct InvalidTriple : InvalidInput {
    using InvalidInput::InvalidInput;
};

// The inscribed-circle quadratic has no real root (the two given circles
// leave no room inside the circumscribing circle).
struct NoRealSolution : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Sector opening outside (0, pi).
struct InvalidAngle : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Bad integer range endpoints.
struct InvalidRange : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Two-distance placement constraints are inconsistent.
struct NoIntersection : Error {
    using Error::Error;
};

// Bracketed search found no radius satisfying the tangency system.
struct NoRoot : Error {
    using Error::Error;
};

// An internal cross-check (e.g. numeric root vs known closed form) failed.
struct InternalCheckFailed : Error {
    using Error::Error;
};

}  // namespace circlepack
