#pragma once

#include <cstdint>
#include <string>

#include "masum/bigint.hpp"

namespace masum {

enum class PickMode { Smallest, UniformRandom };

/// Exact interval endpoint: either the integer `n` itself or sqrt(n).
/// Comparisons against sqrt(n) are done on squares, never in floating point,
/// so boundary primes are classified exactly.
struct Bound {
    enum class Kind { Value, SqrtOf };
    Kind kind;
    Natural n;

    static Bound value(Natural v) { return Bound{Kind::Value, std::move(v)}; }
    static Bound sqrt_of(Natural v) { return Bound{Kind::SqrtOf, std::move(v)}; }

    /// x strictly above this bound?
    bool below(const Natural& x) const {
        return kind == Kind::Value ? x > n : x * x > n;
    }
    /// x strictly below this bound?
    bool above(const Natural& x) const {
        return kind == Kind::Value ? x < n : x * x < n;
    }
    std::string str() const {
        return kind == Kind::Value ? to_decimal(n) : "sqrt(" + to_decimal(n) + ")";
    }
};

struct PrimePick {
    Natural prime;
    Bound interval_lo; // exclusive
    Bound interval_hi; // exclusive
    PickMode mode;
    std::uint64_t seed; // meaningful for UniformRandom only
};

/// Exact for x < 2^64 (Miller-Rabin over the first twelve prime bases, a
/// deterministic witness set for that range). Beyond 64 bits: 64 Miller-Rabin
/// rounds with bases derived from the candidate by a fixed splitmix64 rule,
/// error probability <= 4^-64 = 2^-128, reproducible across runs.
bool is_prime(const Natural& x);

/// Least prime strictly between the bounds. Throws EmptyIntervalError if the
/// open interval holds none.
Natural smallest_prime_in(const Bound& lo_exclusive, const Bound& hi_exclusive);

/// Smallest prime p with 4nt < p^2 < 16nt, i.e. p in (2*sqrt(nt), 4*sqrt(nt)).
/// Existence in the Bertrand interval is established by the scan itself.
PrimePick pick_p(std::uint64_t n, std::uint64_t t);

/// Prime q with 2^n*t < q < 2^(n+1)*t. Smallest mode is deterministic;
/// UniformRandom rejection-samples from the interval using the given seed.
PrimePick pick_q(std::uint64_t n, std::uint64_t t, PickMode mode, std::uint64_t seed = 0);

} // namespace masum
