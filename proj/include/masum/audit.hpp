#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "masum/counting.hpp"
#include "masum/protocol.hpp"

namespace masum {

/// A number as printed in the reviewed note, with the quoted fragment it was
/// lifted from so the diff is traceable.
struct StatedValue {
    std::string name;
    std::string value;
    std::string quote;
};

/// A quantity recomputed by live library calls under one policy ("shared"
/// when the policies cannot disagree on it).
struct RecomputedValue {
    std::string policy;
    std::string name;
    std::string value;
};

struct Discrepancy {
    std::string id; // D1..D4
    std::string description;
    std::string stated;
    std::string recomputed;
    std::string policy;
};

/// Recomputation of the note's worked example (weights 1,2,3,4, target 17,
/// fixed q = 277 and r = 7) under both policy profiles. Stated values are
/// hard-coded with their quotes; recomputed values always come from live
/// calls, never cached constants.
struct AuditReport {
    Instance instance;
    Natural q;
    Natural r;
    std::vector<StatedValue> stated;
    std::vector<RecomputedValue> recomputed;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::pair<std::string, Verdict>> verdicts; // policy label -> verdict
};

AuditReport audit_example1();

/// One multiset-vs-subset counting divergence: index where the partition
/// count over `members` differs from the subset count of the same weights.
struct MultisetWitness {
    std::vector<std::uint64_t> members;
    std::uint64_t index;
    Natural multiset_count;
    Natural subset_count;
};

struct RecurrenceIdentityReport {
    std::uint64_t trials = 0;
    std::uint64_t matches = 0;         // index-form table == set-form table
    std::uint64_t divergent_trials = 0; // trials with a multiset/subset divergence
    std::vector<MultisetWitness> witnesses;
};

/// For seeded random instances with distinct weights (n <= 10, w_i <= t <= 30):
/// the index-form recurrence with corrected boundary and the set-form
/// recurrence produce identical tables, while the multiset partition counter
/// diverges from both; witnesses record where.
RecurrenceIdentityReport audit_recurrence_identity(std::uint64_t seed, std::uint64_t trials);

/// Literal transcription of the set-form recurrence T[A_j, i], kept separate
/// from subset_count_table so the identity check compares two routes.
/// Requires distinct weights.
CountTable set_form_table(const Instance& inst);

} // namespace masum
