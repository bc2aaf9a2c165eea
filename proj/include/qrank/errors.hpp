#pragma once

#include <stdexcept>
#include <string>

namespace qrank {

/* Base class for every error thrown by the library.  All conditions that a
 * caller can react to get their own type; plain logic bugs use asserts. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A coefficient at or beyond the truncation bound was requested.  Coefficients
 * there are unknown, never silently zero. */
struct OutOfRangeError : Error {
    using Error::Error;
};

/* Inversion (or division) of a series whose stored leading coefficient is
 * zero: the input is an un-normalized Laurent series or identically zero. */
struct LeadingZeroError : Error {
    using Error::Error;
};

/* An infinite product was asked to include the factor (1 - q^0) = 0, which
 * would make the whole product vanish. */
struct VanishingFactorError : Error {
    using Error::Error;
};

/* A bilateral sum hit a term whose denominator factor is exactly zero. */
struct PoleTermError : Error {
    using Error::Error;
};

/* An enumeration request exceeded the configured weight cap. */
struct CapExceededError : Error {
    using Error::Error;
};

/* An identity id that is not in the catalog. */
struct UnknownIdError : Error {
    using Error::Error;
};

/* Parameters outside the supported specializations of an operation. */
struct UnsupportedCaseError : Error {
    using Error::Error;
};

/* The requested truncation could not be met from the given inputs.  Used as an
 * internal grow-and-retry signal by the expression evaluator. */
struct TruncationError : Error {
    using Error::Error;
};

} // namespace qrank
