#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "masum/counting.hpp"
#include "masum/rng.hpp"

using namespace masum;

namespace {

Instance random_protocol_instance(std::mt19937_64& g, std::uint64_t max_n, std::uint64_t max_t) {
    Instance inst;
    const std::uint64_t n = uniform_u64_in(g, 1, max_n);
    inst.t = uniform_u64_in(g, 1, max_t);
    for (std::uint64_t i = 0; i < n; ++i) {
        inst.weights.push_back(uniform_u64_in(g, 1, inst.t));
    }
    return inst;
}

std::vector<std::uint64_t> to_u64(const CountTable& t) {
    std::vector<std::uint64_t> out;
    for (const Natural& c : t.counts) {
        out.push_back(static_cast<std::uint64_t>(c));
    }
    return out;
}

} // namespace

TEST_CASE("corrected table: worked example weights (1,2,3,4), t = 17") {
    const Instance inst{{1, 2, 3, 4}, 17};
    const CountTable table = subset_count_table(inst, PolicyProfile::corrected());
    REQUIRE(table.upper == 68);
    const std::vector<std::uint64_t> head{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1};
    for (std::uint64_t i = 0; i <= 10; ++i) {
        CHECK(table.counts[i] == head[i]);
    }
    for (std::uint64_t i = 11; i <= 68; ++i) {
        CHECK(table.counts[i] == 0);
    }
    CHECK(table == brute_force_counts(inst));
}

TEST_CASE("corrected table: single weight") {
    const CountTable table = subset_count_table(Instance{{1}, 1}, PolicyProfile::corrected());
    CHECK(table.upper == 1);
    CHECK(to_u64(table) == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("as-written table: cell (j, 0) reads as zero") {
    const Instance inst{{1, 2}, 2};
    const CountTable table = subset_count_table(inst, PolicyProfile::as_written());
    // T[2,2] = T[1,2] + T[1,0] misses subset {2} because T[1,0] was never assigned
    CHECK(to_u64(table) == std::vector<std::uint64_t>{0, 1, 0, 1, 0});
    const CountTable corrected = subset_count_table(inst, PolicyProfile::corrected());
    CHECK(to_u64(corrected) == std::vector<std::uint64_t>{1, 1, 1, 1, 0});
}

TEST_CASE("brute force spec examples") {
    CHECK(to_u64(brute_force_counts(Instance{{1}, 1})) == std::vector<std::uint64_t>{1, 1});
    const CountTable dup = brute_force_counts(Instance{{5, 5}, 10});
    CHECK(dup.counts[0] == 1);
    CHECK(dup.counts[5] == 2); // duplicate weights are distinct index subsets
    CHECK(dup.counts[10] == 1);
    Instance too_big;
    too_big.weights.assign(25, 1);
    too_big.t = 1;
    CHECK_THROWS_AS(brute_force_counts(too_big), ResourceLimitError);
}

TEST_CASE("oracle equivalence, conservation and complement symmetry") {
    std::mt19937_64 g(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const Instance inst = random_protocol_instance(g, 12, 30);
        const CountTable dp = subset_count_table(inst, PolicyProfile::corrected());
        const CountTable brute = brute_force_counts(inst);
        REQUIRE(dp == brute);

        Natural total = 0;
        for (const Natural& c : dp.counts) {
            total += c;
        }
        CHECK(total == Natural(1) << inst.n());

        const std::uint64_t s =
            std::accumulate(inst.weights.begin(), inst.weights.end(), std::uint64_t(0));
        REQUIRE(s <= dp.upper);
        for (std::uint64_t i = 0; i <= s; ++i) {
            CHECK(dp.counts[i] == dp.counts[s - i]);
        }
    }
}

TEST_CASE("u64 and bigint table engines agree") {
    std::mt19937_64 g(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Instance inst = random_protocol_instance(g, 10, 20);
        for (const PolicyProfile& policy :
             {PolicyProfile::corrected(), PolicyProfile::as_written()}) {
            CHECK(subset_count_table(inst, policy, TableEngine::Uint64) ==
                  subset_count_table(inst, policy, TableEngine::BigInt));
        }
    }
}

TEST_CASE("weights above t only shift mass upward (and off the table)") {
    // nt = 4; subset {2,3} sums to 5 and falls off the table
    const CountTable table = subset_count_table(Instance{{3, 2}, 2}, PolicyProfile::corrected());
    CHECK(to_u64(table) == std::vector<std::uint64_t>{1, 0, 1, 1, 0});
    CHECK(table == brute_force_counts(Instance{{3, 2}, 2}));
}

TEST_CASE("dense-table memory guard") {
    Instance inst{{1, 1}, 60'000'000};
    CHECK_THROWS_AS(subset_count_table(inst, PolicyProfile::corrected()), ResourceLimitError);
    CHECK_THROWS_AS(brute_force_counts(inst), ResourceLimitError);
}

TEST_CASE("multiset partition counts") {
    CHECK(multiset_partition_counts({1, 2}, 4).counts[4] == 3); // 1+1+1+1, 1+1+2, 2+2
    CHECK(multiset_partition_counts({5}, 4).counts[4] == 0);
    const CountTable t23 = multiset_partition_counts({2, 3}, 13);
    CHECK(to_u64(t23) == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2});
    CHECK(multiset_partition_counts({4, 9, 2}, 0).counts[0] == 1);
    CHECK_THROWS_AS(multiset_partition_counts({2, 2}, 5), PreconditionError);
    CHECK_THROWS_AS(multiset_partition_counts({}, 5), PreconditionError);
}

TEST_CASE("multiset and subset counts diverge: members {1,2} at sum 3") {
    const CountTable multis = multiset_partition_counts({1, 2}, 3);
    const CountTable subsets = subset_count_table(Instance{{1, 2}, 2}, PolicyProfile::corrected());
    CHECK(multis.counts[3] == 2); // 1+1+1 and 1+2
    CHECK(subsets.counts[3] == 1); // only the index subset {1,2}
}

TEST_CASE("gupta bounds spec examples") {
    const GuptaBounds a = gupta_bounds({1, 2}, 4);
    CHECK(a.lower == 5);
    CHECK(a.product == 6);
    CHECK(a.upper == 6);

    const GuptaBounds b = gupta_bounds({1}, 7);
    CHECK(b.lower == 1);
    CHECK(b.product == 1);
    CHECK(b.upper == 1);

    const GuptaBounds c = gupta_bounds({1, 2, 3}, 3);
    CHECK(c.lower == 10);
    CHECK(c.product == 18);
    CHECK(c.upper == 28);

    CHECK_THROWS_AS(gupta_bounds({2, 3}, 4), PreconditionError);
}

TEST_CASE("gupta inequalities on a small sweep") {
    // member sets containing 1 with elements up to 6, |A| <= 3
    for (std::uint64_t a = 2; a <= 6; ++a) {
        for (std::uint64_t b = a + 1; b <= 6; ++b) {
            for (std::uint64_t t = 1; t <= 15; ++t) {
                for (const auto& A : {std::vector<std::uint64_t>{1},
                                      std::vector<std::uint64_t>{1, a},
                                      std::vector<std::uint64_t>{1, a, b}}) {
                    const GuptaBounds gb = gupta_bounds(A, t);
                    CHECK(gb.lower <= gb.product);
                    CHECK(gb.product <= gb.upper);
                }
            }
        }
    }
}

TEST_CASE("bateman-erdos condition") {
    CHECK(bateman_erdos_condition({1, 5}).holds);
    const auto r23 = bateman_erdos_condition({2, 3});
    CHECK_FALSE(r23.holds);
    CHECK(r23.witness == 3); // removing 3 leaves gcd 2
    CHECK(bateman_erdos_condition({2, 3, 5}).holds);
    const auto solo = bateman_erdos_condition({4});
    CHECK_FALSE(solo.holds);
    CHECK(solo.witness == 4);
    const auto r24 = bateman_erdos_condition({2, 4});
    CHECK_FALSE(r24.holds);
    CHECK(r24.witness == 4);
    CHECK(bateman_erdos_condition({1}).holds);
    const auto r61015 = bateman_erdos_condition({6, 10, 15});
    CHECK_FALSE(r61015.holds); // gcd(A) = 1 overall, yet removing 15 leaves gcd 2
    CHECK(r61015.witness == 15);
}

TEST_CASE("monotonicity probes") {
    CHECK(monotonicity_violations({2, 3}, 13) == std::vector<std::uint64_t>{0, 6, 12});
    CHECK(monotonicity_violations({1}, 10).empty());
    CHECK(monotonicity_violations({1, 2}, 10).empty());
}
