#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace invsemi {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A multiplication table failed to define an inverse semigroup.
/// `witness` holds the element indices exhibiting the violation
/// (unused slots are -1).
struct ValidationError : Error {
    enum class Kind {
        NotAssociative,   // (x y) z != x (y z) at witness {x, y, z}
        NotRegular,       // witness {x}: no s with x s x = x and s x s = s
        InverseNotUnique, // witness {x, s, t}: two distinct generalized inverses
        StarMismatch,     // witness {x}: supplied star[x] violates the laws
    };

    Kind kind;
    std::array<int, 3> witness;

    ValidationError(Kind k, std::array<int, 3> w, const std::string& msg)
        : Error(msg), kind(k), witness(w) {}
};

struct BaseMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotIdempotent : Error {
    using Error::Error;
};

struct SizeLimit : Error {
    using Error::Error;
};

struct NotAGroup : Error {
    using Error::Error;
};

struct NotRestricted : Error {
    using Error::Error;
};

struct ZeroNotKilled : Error {
    using Error::Error;
};

/// Internal invariant failure: a constructive procedure produced an output
/// that does not satisfy its own certificate. Always a bug, never silent.
struct ReconstructionFailed : Error {
    using Error::Error;
};

/// Malformed input file or JSON document.
struct ParseError : Error {
    using Error::Error;
};

} // namespace invsemi
