#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "masum/bigint.hpp"
#include "masum/counting.hpp"
#include "masum/primes.hpp"

namespace masum {

struct CertEntry {
    std::uint64_t index; // sum value i
    Natural count;       // c_i

    friend bool operator==(const CertEntry&, const CertEntry&) = default;
};

/// Prover output: prime p and the counts on the residue class i = t (mod p),
/// for 0 <= i <= nt, indices ascending. The class includes i = 0 whenever p
/// divides t, and always includes i = t.
struct Certificate {
    std::uint64_t p = 0;
    std::uint64_t t = 0;
    std::vector<CertEntry> entries;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct VerifierParams {
    Natural q;
    Natural r;
    PickMode q_mode = PickMode::Smallest;
    std::uint64_t seed = 0;
};

enum class Outcome { Accept, Reject };

/// Acceptance transcript. lhs is the certificate fingerprint sum(c_i r^i),
/// rhs the recomputed compressed cell T'[n, t mod p]; outcome is Accept iff
/// they agree, in which case c_t carries the claimed solution count.
struct Verdict {
    Outcome outcome;
    std::optional<Natural> c_t;
    Residue lhs;
    Residue rhs;
};

/// Fingerprint row T'[n, 0..p-1], all values reduced mod q.
struct ResidueRow {
    Natural modulus;
    std::vector<Natural> values;
};

/// Build the count table under the policy, pick p, and extract the residue
/// class of t. Requires 1 <= w_i <= t so every subset sum lies within [0, nt].
Certificate prove(const Instance& inst, const PolicyProfile& policy);

/// The verifier's compressed DP. Under FullZeroToPMinus1 every residue is
/// updated each round, so T'[n,s] accumulates r^{w(X)} over subsets with
/// w(X) = s (mod p). Under PaperOneToP the loop runs i = 1..p exactly as
/// printed: the write at i = p folds to residue 0, the read at index p falls
/// outside the row and contributes zero.
ResidueRow compressed_row(const Instance& inst, std::uint64_t p, const Natural& r,
                          const Natural& q, const PolicyProfile& policy,
                          TableEngine engine = TableEngine::Auto);

/// Check the certificate's shape, then compare fingerprints. A malformed
/// certificate (wrong index set, bad prime) raises CertificateFormatError
/// rather than rejecting.
Verdict verify(const Instance& inst, const Certificate& cert, const VerifierParams& params,
               const PolicyProfile& policy);

/// Copy of cert with the count at `index` changed by delta. The index must be
/// present and the result nonnegative.
Certificate tamper(const Certificate& cert, std::uint64_t index, const BigInt& delta);

/// Draw q (per mode) and r (per the policy's r-sampling range) from a single
/// mt19937_64 stream seeded with `seed`: first the q rejection draws when the
/// mode is UniformRandom, then r. Fully replayable.
VerifierParams draw_verifier_params(const Instance& inst, PickMode q_mode, std::uint64_t seed,
                                    const PolicyProfile& policy);

/// Number of indices in {i : 0 <= i <= nt, i = t (mod p)}.
std::uint64_t certificate_entry_count(std::uint64_t nt, std::uint64_t t, std::uint64_t p);

} // namespace masum
