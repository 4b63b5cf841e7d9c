#pragma once

#include <stdexcept>
#include <string>

namespace masum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Modulus was zero (or otherwise unusable).
struct ModulusError : Error {
    using Error::Error;
};

/// Malformed caller-supplied data: duplicate exponents, bad decimal string,
/// schema violations, tamper on a missing index, ...
struct InputError : Error {
    using Error::Error;
};

/// An open interval that was expected to contain a prime does not.
struct EmptyIntervalError : Error {
    using Error::Error;
};

/// A documented precondition does not hold (e.g. a weight exceeds the target).
struct PreconditionError : Error {
    using Error::Error;
};

/// Request exceeds the desk-scale resource guards (table cells, enumeration width).
struct ResourceLimitError : Error {
    using Error::Error;
};

/// Certificate is structurally invalid for the instance. Distinct from a
/// verifier rejection: a rejected certificate is well-formed but inconsistent.
struct CertificateFormatError : Error {
    using Error::Error;
};

} // namespace masum
