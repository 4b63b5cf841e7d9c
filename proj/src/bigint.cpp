#include "masum/bigint.hpp"

#include <cctype>

namespace masum {

std::string to_decimal(const Natural& x) {
    if (x < 0) {
        throw InputError("to_decimal: negative value");
    }
    return x.str();
}

Natural parse_natural(const std::string& s) {
    if (s.empty()) {
        throw InputError("parse_natural: empty string");
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InputError("parse_natural: non-digit in \"" + s + "\"");
        }
    }
    if (s.size() > 1 && s.front() == '0') {
        throw InputError("parse_natural: leading zero in \"" + s + "\"");
    }
    return Natural(s);
}

Residue nonneg_mod(const BigInt& x, const Natural& m) {
    if (m <= 0) {
        throw ModulusError("nonneg_mod: modulus must be positive");
    }
    BigInt r = x % m; // cpp_int keeps the dividend's sign
    if (r < 0) {
        r += m;
    }
    return Residue{Natural(r), m};
}

Residue modpow(const Natural& base, const Natural& exponent, const Natural& m) {
    if (m <= 0) {
        throw ModulusError("modpow: modulus must be positive");
    }
    if (base < 0 || exponent < 0) {
        throw InputError("modpow: base and exponent must be nonnegative");
    }
    Natural result = 1 % m; // covers 0^0 = 1 (then reduced)
    Natural b = base % m;
    Natural e = exponent;
    while (e > 0) {
        if (bit_test(e, 0)) {
            result = (result * b) % m;
        }
        e >>= 1;
        if (e > 0) {
            b = (b * b) % m;
        }
    }
    return Residue{result, m};
}

Residue eval_sparse_poly(const std::vector<PolyEntry>& entries, const Natural& r,
                         const Natural& q) {
    if (q <= 0) {
        throw ModulusError("eval_sparse_poly: modulus must be positive");
    }
    std::vector<Natural> seen;
    seen.reserve(entries.size());
    for (const auto& e : entries) {
        for (const auto& prev : seen) {
            if (prev == e.exponent) {
                throw InputError("eval_sparse_poly: duplicate exponent " + to_decimal(e.exponent));
            }
        }
        seen.push_back(e.exponent);
    }
    Natural acc = 0;
    for (const auto& e : entries) {
        acc = (acc + (e.coeff % q) * modpow(r, e.exponent, q).value) % q;
    }
    return Residue{acc, q};
}

Natural binomial(const Natural& n, std::uint64_t k) {
    if (n < 0) {
        throw InputError("binomial: negative n");
    }
    if (Natural(k) > n) {
        return 0;
    }
    Natural result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - Natural(k) + i) / i; // divides exactly at each step
    }
    return result;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    std::uint64_t b = base % m;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod_u64(result, b, m);
        }
        exp >>= 1;
        if (exp > 0) {
            b = mulmod_u64(b, b, m);
        }
    }
    return result;
}

} // namespace masum
