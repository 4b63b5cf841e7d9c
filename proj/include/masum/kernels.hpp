#pragma once

#include <cstddef>
#include <cstdint>

namespace masum::kernels {

enum class Impl { Scalar, Avx2 };

/// Implementation selected at startup: MASUM_KERNELS=scalar|avx2|auto wins,
/// otherwise auto-detect via cpuid. Resolved once, immutable afterwards.
Impl active();

const char* name(Impl impl);

/// True when the AVX2 variants were compiled in and the CPU reports AVX2.
bool avx2_supported();

// Prover row update over sums 0..len-1:
//   dst[i] = src[i] + (i >= w ? src[i - w] : 0)
// Caller guarantees no overflow (counts stay below 2^63 for n <= 63 items).
void subset_row_update(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                       std::uint64_t w);
void subset_row_update_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                              std::uint64_t w);
void subset_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                            std::uint64_t w);

// Verifier fingerprint row update over residues 0..p-1:
//   dst[s] = (src[s] + rw * src[(s + p - w_mod_p) % p]) % q
// Requires src values < q, rw < q, 2 <= q < 2^63. The AVX2 variant runs a
// 32-bit Montgomery pipeline when q is odd and below 2^31 and otherwise
// delegates to the scalar route; results are identical either way.
void fingerprint_row_update(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                            std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q);
void fingerprint_row_update_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                                   std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q);
void fingerprint_row_update_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t p,
                                 std::uint64_t w_mod_p, std::uint64_t rw, std::uint64_t q);

} // namespace masum::kernels
