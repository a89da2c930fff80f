#pragma once

#include <stdexcept>
#include <string>

namespace arcomp {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Model evaluation / construction ------------------------------------------

struct VocabMismatch : Error {
    using Error::Error;
};

// Tabular model has no row and no default for a context, or a rule model is
// evaluated past the end of its prompt.
struct UnknownContext : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

// Composition ---------------------------------------------------------------

// Raised when a composed step has no normalizable mass. Carries the decode
// position (0-based) at which it occurred, -1 if not positional.
struct DegenerateStep : Error {
    explicit DegenerateStep(const std::string& what, int position = -1)
        : Error(what), position(position) {}
    int position;
};

// Enumeration / tables -------------------------------------------------------

struct EnumerationTooLarge : Error {
    using Error::Error;
};

struct EmptyIndexSet : Error {
    using Error::Error;
};

struct NotBijective : Error {
    using Error::Error;
};

struct EmptySupport : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// Factorization checks --------------------------------------------------------

struct NoValidPartition : Error {
    using Error::Error;
};

// Task arithmetic -------------------------------------------------------------

struct DimensionMismatch : Error {
    using Error::Error;
};

struct MaskOverlap : Error {
    using Error::Error;
};

struct SupportOverlap : Error {
    using Error::Error;
};

struct EvalFailure : Error {
    using Error::Error;
};

}  // namespace arcomp
