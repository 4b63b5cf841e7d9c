#pragma once

#include <cstdint>
#include <random>

#include "masum/bigint.hpp"

namespace masum {

/// splitmix64 step; used to derive reproducible sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform draw from [0, bound), bound > 0. std::uniform_int_distribution is
/// not portable bit-for-bit across standard libraries, so seeded runs use this
/// fixed rejection scheme instead.
inline std::uint64_t uniform_u64_below(std::mt19937_64& g, std::uint64_t bound) {
    if (bound == 0) {
        throw InputError("uniform_u64_below: zero bound");
    }
    const std::uint64_t limit = bound * (UINT64_MAX / bound); // largest multiple of bound
    for (;;) {
        std::uint64_t v = g();
        if (v < limit) {
            return v % bound;
        }
    }
}

/// Uniform draw from [lo, hi], inclusive.
inline std::uint64_t uniform_u64_in(std::mt19937_64& g, std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_u64_below(g, hi - lo + 1);
}

/// Uniform Natural in [0, bound) by rejection on bound's bit length.
inline Natural uniform_natural_below(std::mt19937_64& g, const Natural& bound) {
    if (bound <= 0) {
        throw InputError("uniform_natural_below: bound must be positive");
    }
    const std::size_t bits = msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    for (;;) {
        Natural v = 0;
        for (std::size_t i = 0; i < words; ++i) {
            v <<= 64;
            v |= Natural(g());
        }
        v >>= words * 64 - bits;
        if (v < bound) {
            return v;
        }
    }
}

} // namespace masum
