#include "masum/primes.hpp"

#include <array>

#include "masum/rng.hpp"

namespace masum {

namespace {

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) {
        return true;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    // deterministic witness set for the full 64-bit range
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL}) {
        if (!miller_rabin_u64(n, a)) {
            return false;
        }
    }
    return true;
}

bool miller_rabin_big(const Natural& n, const Natural& a) {
    Natural d = n - 1;
    std::uint64_t s = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    Natural x = modpow(a, d, n).value;
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (std::uint64_t i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

bool is_prime_big(const Natural& n) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                            31ULL, 37ULL, 41ULL, 43ULL, 47ULL, 53ULL}) {
        if (n % p == 0) {
            return false; // n > 2^64, so n never equals a small prime
        }
    }
    // Witness rule: seed splitmix64 with (low 64 bits of n) xor bit length,
    // draw 64 bases in [2, n-2]. Fixed rule, so every run agrees.
    std::uint64_t state =
        static_cast<std::uint64_t>(n & Natural(0xffffffffffffffffULL)) ^ (msb(n) + 1);
    std::mt19937_64 g(splitmix64(state));
    const Natural span = n - 3; // bases 2 .. n-2
    for (int round = 0; round < 64; ++round) {
        const Natural a = 2 + uniform_natural_below(g, span);
        if (!miller_rabin_big(n, a)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_prime(const Natural& x) {
    if (x < 2) {
        return false;
    }
    if (x <= Natural(0xffffffffffffffffULL)) {
        return is_prime_u64(static_cast<std::uint64_t>(x));
    }
    return is_prime_big(x);
}

Natural smallest_prime_in(const Bound& lo_exclusive, const Bound& hi_exclusive) {
    Natural candidate;
    if (lo_exclusive.kind == Bound::Kind::Value) {
        candidate = lo_exclusive.n + 1;
    } else {
        candidate = sqrt(lo_exclusive.n) + 1; // least integer strictly above sqrt
    }
    if (candidate < 2) {
        candidate = 2;
    }
    while (hi_exclusive.above(candidate)) {
        if (is_prime(candidate)) {
            return candidate;
        }
        ++candidate;
    }
    throw EmptyIntervalError("no prime strictly between " + lo_exclusive.str() + " and " +
                             hi_exclusive.str());
}

PrimePick pick_p(std::uint64_t n, std::uint64_t t) {
    if (n < 1 || t < 1) {
        throw PreconditionError("pick_p: n and t must be positive");
    }
    const Natural nt = Natural(n) * t;
    Bound lo = Bound::sqrt_of(4 * nt);
    Bound hi = Bound::sqrt_of(16 * nt);
    Natural prime = smallest_prime_in(lo, hi);
    return PrimePick{std::move(prime), std::move(lo), std::move(hi), PickMode::Smallest, 0};
}

PrimePick pick_q(std::uint64_t n, std::uint64_t t, PickMode mode, std::uint64_t seed) {
    if (n < 1 || t < 1) {
        throw PreconditionError("pick_q: n and t must be positive");
    }
    const Natural lo_v = (Natural(1) << n) * t;
    Bound lo = Bound::value(lo_v);
    Bound hi = Bound::value(2 * lo_v);
    if (mode == PickMode::Smallest) {
        Natural prime = smallest_prime_in(lo, hi);
        return PrimePick{std::move(prime), std::move(lo), std::move(hi), mode, 0};
    }
    // Rejection sampling over the open interval; reproducible per seed. The
    // draw cap only exists so an empty interval terminates with the honest
    // error from the deterministic scan.
    std::mt19937_64 g(seed);
    const Natural width = hi.n - lo.n - 1; // candidates lo+1 .. hi-1
    if (width > 0) {
        for (int attempt = 0; attempt < 20000; ++attempt) {
            const Natural candidate = lo.n + 1 + uniform_natural_below(g, width);
            if (is_prime(candidate)) {
                return PrimePick{candidate, std::move(lo), std::move(hi), mode, seed};
            }
        }
    }
    Natural prime = smallest_prime_in(lo, hi);
    return PrimePick{std::move(prime), std::move(lo), std::move(hi), mode, seed};
}

} // namespace masum
