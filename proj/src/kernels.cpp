#include "masum/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

namespace masum::kernels {

namespace {

Impl resolve() {
#ifdef MASUM_WITH_AVX2
    const char* env = std::getenv("MASUM_KERNELS");
    if (env != nullptr) {
        const std::string v(env);
        if (v == "scalar") {
            return Impl::Scalar;
        }
        if (v == "avx2") {
            return avx2_supported() ? Impl::Avx2 : Impl::Scalar;
        }
    }
    return avx2_supported() ? Impl::Avx2 : Impl::Scalar;
#else
    return Impl::Scalar;
#endif
}

} // namespace

Impl active() {
    static const Impl impl = resolve();
    return impl;
}

const char* name(Impl impl) {
    return impl == Impl::Avx2 ? "avx2" : "scalar";
}

bool avx2_supported() {
#if defined(MASUM_WITH_AVX2) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

void subset_row_update_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                              std::uint64_t w) {
    const std::size_t head = static_cast<std::size_t>(std::min<std::uint64_t>(w, len));
    std::memcpy(dst, src, head * sizeof(std::uint64_t));
    for (std::size_t i = head; i < len; ++i) {
        dst[i] = src[i] + src[i - w];
    }
}

void fingerprint_row_update_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                                   std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q) {
    const std::size_t w = static_cast<std::size_t>(w_mod_p);
    for (std::size_t s = 0; s < w; ++s) {
        const std::uint64_t prod =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(rw) * src[s + p - w] % q);
        const std::uint64_t sum = src[s] + prod;
        dst[s] = sum >= q ? sum - q : sum;
    }
    for (std::size_t s = w; s < p; ++s) {
        const std::uint64_t prod =
            static_cast<std::uint64_t>(static_cast<unsigned __int128>(rw) * src[s - w] % q);
        const std::uint64_t sum = src[s] + prod;
        dst[s] = sum >= q ? sum - q : sum;
    }
}

#ifndef MASUM_WITH_AVX2
// Build without the AVX2 translation unit: the named variants stay callable.
void subset_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                            std::uint64_t w) {
    subset_row_update_scalar(dst, src, len, w);
}

void fingerprint_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                                 std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q) {
    fingerprint_row_update_scalar(dst, src, p, w_mod_p, rw, q);
}
#endif

void subset_row_update(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                       std::uint64_t w) {
    if (active() == Impl::Avx2) {
        subset_row_update_avx2(dst, src, len, w);
    } else {
        subset_row_update_scalar(dst, src, len, w);
    }
}

void fingerprint_row_update(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                            std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q) {
    if (active() == Impl::Avx2) {
        fingerprint_row_update_avx2(dst, src, p, w_mod_p, rw, q);
    } else {
        fingerprint_row_update_scalar(dst, src, p, w_mod_p, rw, q);
    }
}

} // namespace masum::kernels
