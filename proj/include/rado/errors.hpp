#pragma once

#include <stdexcept>
#include <string>

namespace rado {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two scalars/vectors over different fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

/// Vector lengths or matrix shapes do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A field-only operation (rref, span membership) was asked to work
/// modulo a composite number.
struct CompositeModulus : Error {
    using Error::Error;
};

/// Exhaustive partition search refused to run: too many columns and no
/// single-row shortcut applies.
struct TooManyColumns : Error {
    using Error::Error;
};

/// An enumeration exceeded its element/node budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A partition handed in as a columns-condition witness failed verification.
struct InvalidWitness : Error {
    using Error::Error;
};

/// The dilation coefficient shares a factor with the modulus.
struct NotCoprime : Error {
    using Error::Error;
};

/// A local Fourier operation was given an empty base set.
struct EmptyBase : Error {
    using Error::Error;
};

/// The regular-pair width scan found no admissible width. The pigeonhole
/// argument rules this out, so it signals an internal inconsistency.
struct ScanExhausted : Error {
    using Error::Error;
};

/// Malformed input file or CLI parameter.
struct InputError : Error {
    using Error::Error;
};

} // namespace rado
