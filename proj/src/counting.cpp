#include "masum/counting.hpp"

#include <algorithm>
#include <numeric>

#include "masum/kernels.hpp"

namespace masum {

namespace {

constexpr std::uint64_t kMaxTableCells = 100'000'000; // dense-table guard
constexpr std::uint64_t kMaxBruteForceN = 24;

void validate_instance(const Instance& inst) {
    if (inst.n() < 1) {
        throw PreconditionError("instance: need at least one weight");
    }
    if (inst.t < 1) {
        throw PreconditionError("instance: target must be positive");
    }
    for (std::uint64_t w : inst.weights) {
        if (w < 1) {
            throw PreconditionError("instance: weights must be positive");
        }
    }
}

std::uint64_t guarded_upper(const Instance& inst) {
    const std::uint64_t nt = inst.nt();
    if (nt > kMaxTableCells) {
        throw ResourceLimitError("table bound nt = " + std::to_string(nt) + " exceeds " +
                                 std::to_string(kMaxTableCells) + " cells");
    }
    return nt;
}

CountTable subset_table_u64(const Instance& inst, const PolicyProfile& policy,
                            std::uint64_t upper) {
    std::vector<std::uint64_t> prev(upper + 1, 0), cur(upper + 1, 0);
    prev[0] = 1; // T[0,0] = 1 and T[0,i] = 0 elsewhere, both readings agree
    for (std::uint64_t w : inst.weights) {
        kernels::subset_row_update(cur.data(), prev.data(), cur.size(), w);
        if (policy.row_range == RowRange::PaperOneBased) {
            // the printed loop starts at i = 1, so cell 0 is never assigned
            cur[0] = policy.boundary == Boundary::CorrectedOne ? 1 : 0;
        }
        std::swap(prev, cur);
    }
    CountTable table{upper, {}};
    table.counts.assign(prev.begin(), prev.end());
    return table;
}

CountTable subset_table_big(const Instance& inst, const PolicyProfile& policy,
                            std::uint64_t upper) {
    std::vector<Natural> prev(upper + 1), cur(upper + 1);
    prev[0] = 1;
    for (std::uint64_t w : inst.weights) {
        for (std::uint64_t i = 0; i <= upper; ++i) {
            cur[i] = i >= w ? prev[i] + prev[i - w] : prev[i];
        }
        if (policy.row_range == RowRange::PaperOneBased) {
            cur[0] = policy.boundary == Boundary::CorrectedOne ? 1 : 0;
        }
        std::swap(prev, cur);
    }
    return CountTable{upper, std::move(prev)};
}

} // namespace

std::uint64_t Instance::nt() const {
    const std::uint64_t n = weights.size();
    if (t != 0 && n > UINT64_MAX / t) {
        throw ResourceLimitError("instance: n*t overflows 64 bits");
    }
    return n * t;
}

CountTable subset_count_table(const Instance& inst, const PolicyProfile& policy,
                              TableEngine engine) {
    validate_instance(inst);
    const std::uint64_t upper = guarded_upper(inst);
    if (engine == TableEngine::Auto) {
        engine = inst.n() <= 63 ? TableEngine::Uint64 : TableEngine::BigInt;
    }
    if (engine == TableEngine::Uint64) {
        if (inst.n() > 63) {
            throw ResourceLimitError("u64 table rows overflow for n > 63");
        }
        return subset_table_u64(inst, policy, upper);
    }
    return subset_table_big(inst, policy, upper);
}

CountTable brute_force_counts(const Instance& inst) {
    validate_instance(inst);
    if (inst.n() > kMaxBruteForceN) {
        throw ResourceLimitError("brute force limited to n <= " +
                                 std::to_string(kMaxBruteForceN));
    }
    const std::uint64_t upper = guarded_upper(inst);
    std::vector<std::uint64_t> tally(upper + 1, 0);
    const std::uint64_t n = inst.n();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::uint64_t sum = 0;
        for (std::uint64_t j = 0; j < n; ++j) {
            if (mask & (1ULL << j)) {
                sum += inst.weights[j];
            }
        }
        if (sum <= upper) {
            ++tally[sum];
        }
    }
    CountTable table{upper, {}};
    table.counts.assign(tally.begin(), tally.end());
    return table;
}

namespace {

void validate_members(const std::vector<std::uint64_t>& A) {
    if (A.empty()) {
        throw PreconditionError("member set must be non-empty");
    }
    for (std::uint64_t a : A) {
        if (a < 1) {
            throw PreconditionError("members must be positive");
        }
    }
    auto sorted = A;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("members must be distinct");
    }
}

} // namespace

CountTable multiset_partition_counts(const std::vector<std::uint64_t>& members,
                                     std::uint64_t limit) {
    validate_members(members);
    if (limit > kMaxTableCells) {
        throw ResourceLimitError("partition table limit exceeds cell guard");
    }
    std::vector<Natural> counts(limit + 1);
    counts[0] = 1;
    for (std::uint64_t m : members) {
        for (std::uint64_t i = m; i <= limit; ++i) {
            counts[i] += counts[i - m];
        }
    }
    return CountTable{limit, std::move(counts)};
}

GuptaBounds gupta_bounds(const std::vector<std::uint64_t>& A, std::uint64_t t) {
    validate_members(A);
    if (std::find(A.begin(), A.end(), 1) == A.end()) {
        throw PreconditionError("gupta_bounds: the member set must contain 1");
    }
    if (t < 1) {
        throw PreconditionError("gupta_bounds: t must be positive");
    }
    const std::uint64_t n = A.size() - 1;
    Natural product = multiset_partition_counts(A, t).counts[t];
    Natural elem_sum = 0;
    for (std::uint64_t a : A) {
        if (a != 1) {
            product *= a;
            elem_sum += a;
        }
    }
    return GuptaBounds{binomial(Natural(t) + n, n), std::move(product),
                       binomial(Natural(t) + elem_sum, n)};
}

BatemanErdosResult bateman_erdos_condition(const std::vector<std::uint64_t>& A) {
    validate_members(A);
    if (std::find(A.begin(), A.end(), 1) != A.end()) {
        return {true, std::nullopt};
    }
    auto sorted = A;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted.size() == 1) {
        return {false, sorted.front()};
    }
    for (std::uint64_t removed : sorted) {
        std::uint64_t g = 0;
        for (std::uint64_t a : A) {
            if (a != removed) {
                g = std::gcd(g, a);
            }
        }
        if (g != 1) {
            return {false, removed};
        }
    }
    return {true, std::nullopt};
}

std::vector<std::uint64_t> monotonicity_violations(const std::vector<std::uint64_t>& A,
                                                   std::uint64_t N) {
    if (N < 1) {
        throw PreconditionError("monotonicity_violations: N must be positive");
    }
    const CountTable table = multiset_partition_counts(A, N);
    std::vector<std::uint64_t> drops;
    for (std::uint64_t n = 0; n + 1 <= N; ++n) {
        if (table.counts[n] > table.counts[n + 1]) {
            drops.push_back(n);
        }
    }
    return drops;
}

} // namespace masum
