#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "masum/errors.hpp"

namespace masum {

/// Signed arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision integer that is nonnegative by contract. Subset counts
/// reach 2^n, so fixed-width storage is out for n >= 64.
using Natural = BigInt;

/// Value reduced into [0, modulus).
struct Residue {
    Natural value;
    Natural modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Canonical decimal form, no sign, no leading zeros except "0" itself.
std::string to_decimal(const Natural& x);

/// Strict inverse of to_decimal. Rejects empty strings, signs, non-digits and
/// non-canonical leading zeros, so serialized values round-trip byte-exactly.
Natural parse_natural(const std::string& s);

/// Remainder of x divided by m, mapped to the nonnegative representative:
/// 0 <= result < m and x == result (mod m). Works for negative x, which the
/// verifier recurrence needs for (i - w_j) when i < w_j.
Residue nonneg_mod(const BigInt& x, const Natural& m);

/// base^exponent mod m by square-and-multiply, O(log exponent) multiplications.
/// Convention 0^0 = 1 (mod m), so sparse-polynomial evaluation at r = 0 keeps
/// its constant term.
Residue modpow(const Natural& base, const Natural& exponent, const Natural& m);

struct PolyEntry {
    Natural exponent;
    Natural coeff;
};

/// Sum of coeff * r^exponent mod q over the entries. Exponents must be
/// pairwise distinct; summation order cannot change the result.
Residue eval_sparse_poly(const std::vector<PolyEntry>& entries, const Natural& r,
                         const Natural& q);

/// Exact binomial coefficient, multiplicative form with exact division.
Natural binomial(const Natural& n, std::uint64_t k);

// 64-bit modular helpers shared by the prime tester and the u64 row kernels.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

} // namespace masum
