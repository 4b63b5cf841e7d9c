#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "masum/bigint.hpp"

namespace masum {

/// Problem statement: order-significant positive weights w_1..w_n and a
/// positive target t. A solution is an index subset X with sum of w_i over X
/// equal to t; duplicates in the weight list give distinct index subsets.
struct Instance {
    std::vector<std::uint64_t> weights;
    std::uint64_t t = 0;

    std::uint64_t n() const { return weights.size(); }
    std::uint64_t nt() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

// The pseudocode leaves four choices open; each policy pins one of them.

/// Cells the loops never assign: read as zero (literal reading) or treat
/// column 0 as 1 (the empty subset).
enum class Boundary { AsWrittenZero, CorrectedOne };
/// Prover row loop: i = 1..nt as printed, or i = 0..nt.
enum class RowRange { PaperOneBased, FullZeroBased };
/// Verifier residue loop: i = 1..p as printed (index p folds to 0 at write
/// time), or s = 0..p-1.
enum class ResidueRange { PaperOneToP, FullZeroToPMinus1 };
/// Is r = 0 a legal verifier challenge?
enum class RSampling { IncludeZero, ExcludeZero };

struct PolicyProfile {
    Boundary boundary;
    RowRange row_range;
    ResidueRange verifier_residue_range;
    RSampling r_sampling;

    static PolicyProfile corrected() {
        return {Boundary::CorrectedOne, RowRange::FullZeroBased,
                ResidueRange::FullZeroToPMinus1, RSampling::ExcludeZero};
    }
    static PolicyProfile as_written() {
        return {Boundary::AsWrittenZero, RowRange::PaperOneBased, ResidueRange::PaperOneToP,
                RSampling::IncludeZero};
    }

    friend bool operator==(const PolicyProfile&, const PolicyProfile&) = default;
};

/// Dense exact counts for sums 0..upper.
struct CountTable {
    std::uint64_t upper = 0;
    std::vector<Natural> counts; // size upper + 1

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Row storage for the subset DP. Auto uses 64-bit rows while counts provably
/// fit (n <= 63) and arbitrary precision beyond; the explicit values pin one
/// route so tests can cross-check the two.
enum class TableEngine { Auto, Uint64, BigInt };

/// Final DP row T[n, 0..nt] under the given policy. CorrectedOne/FullZeroBased
/// yields exact subset counts (empty set included). The as-written profile
/// reproduces the literal pseudocode: T[j, 0] is never assigned for j >= 1 and
/// reads as zero.
CountTable subset_count_table(const Instance& inst, const PolicyProfile& policy,
                              TableEngine engine = TableEngine::Auto);

/// Ground truth by enumerating all 2^n index subsets (n <= 24). Sums above nt
/// fall outside the table, matching the DP's bound.
CountTable brute_force_counts(const Instance& inst);

/// counts[i] = number of multisets over `members` (distinct positive integers,
/// unbounded repetition) summing to i, for 0 <= i <= limit. counts[0] = 1.
CountTable multiset_partition_counts(const std::vector<std::uint64_t>& members,
                                     std::uint64_t limit);

/// binom(t+n, n) <= P(A,t) * prod(a_j) <= binom(t+sum(a_j), n), where A
/// contains 1, n = |A| - 1, and the product runs over the elements other
/// than 1.
struct GuptaBounds {
    Natural lower;
    Natural product;
    Natural upper;
};

GuptaBounds gupta_bounds(const std::vector<std::uint64_t>& A, std::uint64_t t);

/// Partition counts of A are eventually non-decreasing iff 1 is a member, or
/// |A| > 1 and removing any single element leaves gcd 1. When the condition
/// fails, witness names an element whose removal leaves gcd > 1 (or the sole
/// element).
struct BatemanErdosResult {
    bool holds;
    std::optional<std::uint64_t> witness;
};

BatemanErdosResult bateman_erdos_condition(const std::vector<std::uint64_t>& A);

/// All n in [0, N-1] with P(A, n) > P(A, n+1). A finite probe, no asymptotic
/// claim.
std::vector<std::uint64_t> monotonicity_violations(const std::vector<std::uint64_t>& A,
                                                   std::uint64_t N);

} // namespace masum
