#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "masum/primes.hpp"

using namespace masum;

namespace {

// Sieve-based oracle, independent of the trial/Miller-Rabin route.
std::vector<bool> sieve(std::uint64_t limit) {
    std::vector<bool> is_p(limit + 1, true);
    is_p[0] = false;
    if (limit >= 1) {
        is_p[1] = false;
    }
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (is_p[i]) {
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                is_p[j] = false;
            }
        }
    }
    return is_p;
}

} // namespace

TEST_CASE("is_prime examples and small range against the sieve") {
    CHECK(is_prime(17));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(273)); // 3 * 7 * 13
    CHECK(is_prime(2));
    CHECK(is_prime(277));
    const auto oracle = sieve(20000);
    for (std::uint64_t x = 0; x <= 20000; ++x) {
        CHECK(is_prime(x) == oracle[x]);
    }
}

TEST_CASE("is_prime beyond 64 bits stays deterministic") {
    const Natural m89 = (Natural(1) << 89) - 1; // Mersenne prime
    CHECK(is_prime(m89));
    CHECK(is_prime(m89) == is_prime(m89)); // fixed witness rule, same answer
    CHECK_FALSE(is_prime(m89 * m89));
    CHECK_FALSE(is_prime((Natural(1) << 90) - 1));
}

TEST_CASE("smallest_prime_in spec examples") {
    // (2*sqrt(68), 4*sqrt(68)) expressed exactly as (sqrt(272), sqrt(1088))
    CHECK(smallest_prime_in(Bound::sqrt_of(272), Bound::sqrt_of(1088)) == 17);
    CHECK(smallest_prime_in(Bound::value(272), Bound::value(544)) == 277);
    CHECK_THROWS_AS(smallest_prime_in(Bound::value(24), Bound::value(28)), EmptyIntervalError);
    // exclusive endpoints: 17 itself is not inside (17, 29)
    CHECK(smallest_prime_in(Bound::value(17), Bound::value(29)) == 19);
    CHECK(smallest_prime_in(Bound::sqrt_of(289), Bound::value(25)) == 19);
}

TEST_CASE("pick_p spec examples") {
    CHECK(pick_p(4, 17).prime == 17);
    CHECK(pick_p(1, 1).prime == 3);
    CHECK(pick_p(2, 5).prime == 7);
    CHECK_THROWS_AS(pick_p(0, 5), PreconditionError);
}

TEST_CASE("pick_q spec examples") {
    CHECK(pick_q(4, 17, PickMode::Smallest).prime == 277);
    CHECK(pick_q(1, 1, PickMode::Smallest).prime == 3);
    CHECK(pick_q(2, 5, PickMode::Smallest).prime == 23);
}

TEST_CASE("picked primes lie strictly inside their intervals") {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        for (std::uint64_t t : {1ULL, 2ULL, 7ULL, 25ULL, 50ULL}) {
            const PrimePick p = pick_p(n, t);
            CHECK(is_prime(p.prime));
            CHECK(p.interval_lo.below(p.prime));
            CHECK(p.interval_hi.above(p.prime));
            // exact square comparison: 4nt < p^2 < 16nt
            const Natural nt = Natural(n) * t;
            CHECK(p.prime * p.prime > 4 * nt);
            CHECK(p.prime * p.prime < 16 * nt);

            const PrimePick q = pick_q(n, t, PickMode::Smallest);
            CHECK(is_prime(q.prime));
            CHECK(q.prime > (Natural(1) << n) * t);
            CHECK(q.prime < (Natural(1) << (n + 1)) * t);
        }
    }
}

TEST_CASE("pick_p and smallest pick_q match a sieve oracle for n <= 10, t <= 50") {
    const auto oracle = sieve(1 << 17); // covers 2^11 * 50
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (std::uint64_t t = 1; t <= 50; ++t) {
            const std::uint64_t nt = n * t;
            std::uint64_t expected_p = 0;
            for (std::uint64_t c = 2; c * c < 16 * nt; ++c) {
                if (oracle[c] && c * c > 4 * nt) {
                    expected_p = c;
                    break;
                }
            }
            REQUIRE(expected_p != 0);
            CHECK(pick_p(n, t).prime == expected_p);

            const std::uint64_t lo = (1ULL << n) * t;
            std::uint64_t expected_q = 0;
            for (std::uint64_t c = lo + 1; c < 2 * lo; ++c) {
                if (oracle[c]) {
                    expected_q = c;
                    break;
                }
            }
            REQUIRE(expected_q != 0);
            CHECK(pick_q(n, t, PickMode::Smallest).prime == expected_q);
        }
    }
}

TEST_CASE("uniform-random q is reproducible per seed and lands in range") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 12345ULL}) {
        const PrimePick a = pick_q(10, 37, PickMode::UniformRandom, seed);
        const PrimePick b = pick_q(10, 37, PickMode::UniformRandom, seed);
        CHECK(a.prime == b.prime);
        CHECK(is_prime(a.prime));
        CHECK(a.prime > (Natural(1) << 10) * 37);
        CHECK(a.prime < (Natural(1) << 11) * 37);
        CHECK(a.seed == seed);
    }
}
