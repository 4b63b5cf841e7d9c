// AVX2 variants. Compiled with -mavx2; callers gate on kernels::active().

#include "masum/kernels.hpp"

#include <algorithm>
#include <cstring>

#include <immintrin.h>

namespace masum::kernels {

namespace {

// Montgomery arithmetic mod an odd q < 2^31 with R = 2^32. Values travel in
// the ordinary domain; only the per-round constant rw is lifted to rw*R mod q,
// so REDC(rw*R * x) = rw*x mod q.
struct Mont32 {
    std::uint64_t q;
    std::uint64_t qneg_inv; // -q^{-1} mod 2^32
    std::uint64_t rw_m;     // rw * 2^32 mod q

    Mont32(std::uint64_t q_, std::uint64_t rw) : q(q_) {
        std::uint64_t inv = q_; // Newton iteration, 2^32 fixed point
        for (int i = 0; i < 5; ++i) {
            inv *= 2 - q_ * inv;
        }
        qneg_inv = (0 - inv) & 0xffffffffULL;
        rw_m = static_cast<std::uint64_t>((static_cast<unsigned __int128>(rw) << 32) % q_);
    }

    std::uint64_t mul(std::uint64_t b) const { // rw * b mod q
        const std::uint64_t t = rw_m * b;      // < q^2 < 2^62
        const std::uint64_t m = (t & 0xffffffffULL) * qneg_inv & 0xffffffffULL;
        const std::uint64_t u = (t + m * q) >> 32; // < 2q
        return u >= q ? u - q : u;
    }
};

inline __m256i mont_mul4(__m256i b, __m256i rw_m, __m256i qv, __m256i qneg_inv, __m256i lo32) {
    const __m256i t = _mm256_mul_epu32(rw_m, b);
    const __m256i m = _mm256_and_si256(_mm256_mul_epu32(_mm256_and_si256(t, lo32), qneg_inv), lo32);
    const __m256i u = _mm256_srli_epi64(_mm256_add_epi64(t, _mm256_mul_epu32(m, qv)), 32);
    // conditional subtract: u < 2q < 2^32, signed 64-bit compare is safe
    const __m256i ge = _mm256_andnot_si256(_mm256_cmpgt_epi64(qv, u), qv);
    return _mm256_sub_epi64(u, ge);
}

inline __m256i add_mod4(__m256i a, __m256i b, __m256i qv) {
    const __m256i s = _mm256_add_epi64(a, b);
    const __m256i ge = _mm256_andnot_si256(_mm256_cmpgt_epi64(qv, s), qv);
    return _mm256_sub_epi64(s, ge);
}

// dst[s] = (src[s] + rw*src[s + off]) % q for s in [begin, end), Montgomery path.
void fingerprint_segment_mont(std::uint64_t* dst, const std::uint64_t* src, std::size_t begin,
                              std::size_t end, std::ptrdiff_t off, const Mont32& mont) {
    const __m256i qv = _mm256_set1_epi64x(static_cast<long long>(mont.q));
    const __m256i qneg_inv = _mm256_set1_epi64x(static_cast<long long>(mont.qneg_inv));
    const __m256i rw_m = _mm256_set1_epi64x(static_cast<long long>(mont.rw_m));
    const __m256i lo32 = _mm256_set1_epi64x(0xffffffffLL);
    std::size_t s = begin;
    for (; s + 4 <= end; s += 4) {
        const __m256i keep = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + s));
        const __m256i shifted =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + s + off));
        const __m256i prod = mont_mul4(shifted, rw_m, qv, qneg_inv, lo32);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + s), add_mod4(keep, prod, qv));
    }
    for (; s < end; ++s) {
        const std::uint64_t sum = src[s] + mont.mul(src[s + off]);
        dst[s] = sum >= mont.q ? sum - mont.q : sum;
    }
}

} // namespace

void subset_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                            std::uint64_t w) {
    const std::size_t head = static_cast<std::size_t>(std::min<std::uint64_t>(w, len));
    std::memcpy(dst, src, head * sizeof(std::uint64_t));
    std::size_t i = head;
    for (; i + 4 <= len; i += 4) {
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_add_epi64(a, b));
    }
    for (; i < len; ++i) {
        dst[i] = src[i] + src[i - w];
    }
}

void fingerprint_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                                 std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q) {
    if (q >= (1ULL << 31) || (q & 1) == 0) {
        fingerprint_row_update_scalar(dst, src, p, w_mod_p, rw, q);
        return;
    }
    const Mont32 mont(q, rw % q);
    const std::size_t w = static_cast<std::size_t>(w_mod_p);
    // (s + p - w) % p splits into two contiguous segments
    fingerprint_segment_mont(dst, src, 0, w, static_cast<std::ptrdiff_t>(p - w), mont);
    fingerprint_segment_mont(dst, src, w, p, -static_cast<std::ptrdiff_t>(w), mont);
}

} // namespace masum::kernels
