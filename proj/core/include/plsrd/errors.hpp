#pragma once

#include <stdexcept>
#include <string>

namespace plsrd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family parameter outside the documented range.
struct InvalidFamilyParams : Error {
    using Error::Error;
};

// Explicit edge list is cyclic, disconnected or otherwise not a tree.
struct NotATree : Error {
    using Error::Error;
};

// Input violates the basic graph invariants (loops, duplicates, bad indices).
struct InvalidGraph : Error {
    using Error::Error;
};

// Labeling length does not match the graph order.
struct LengthMismatch : Error {
    using Error::Error;
};

// Instance exceeds a hard enumeration guard.
struct TooLarge : Error {
    using Error::Error;
};

struct InvalidOptions : Error {
    using Error::Error;
};

// Bound requested on a graph that is not 3-regular.
struct NotCubic : Error {
    using Error::Error;
};

// Exact 2-packing search guard (subset search).
struct TooLargeForExact : Error {
    using Error::Error;
};

struct MinDegreeTooLow : Error {
    using Error::Error;
};

// Vertex set is not a 2-packing of the graph at hand.
struct NotAPacking : Error {
    using Error::Error;
};

struct UnsupportedFamily : Error {
    using Error::Error;
};

// A constructive labeler produced a labeling that fails validation; emitted
// instead of silently shipping a bad certificate.
struct CertificateInvalid : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace plsrd
