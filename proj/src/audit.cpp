#include "masum/audit.hpp"

#include <algorithm>

#include "masum/rng.hpp"

namespace masum {

namespace {

std::string policy_label(const PolicyProfile& policy) {
    return policy == PolicyProfile::corrected() ? "corrected" : "aswritten";
}

void push_counts(std::vector<RecomputedValue>& out, const std::string& label,
                 const CountTable& table) {
    for (std::uint64_t i : {0ULL, 17ULL, 34ULL, 51ULL, 68ULL}) {
        out.push_back({label, "c_" + std::to_string(i), to_decimal(table.counts[i])});
    }
}

} // namespace

AuditReport audit_example1() {
    AuditReport report;
    report.instance = Instance{{1, 2, 3, 4}, 17};
    report.q = 277;
    report.r = 7;

    // Values as printed in the note's worked example.
    report.stated = {
        {"p", "17", "p=17"},
        {"q", "277", "the verifier picks q=277, r=7"},
        {"r", "7", "the verifier picks q=277, r=7"},
        {"sqrt_lower_bound", "16.492", "2sqrt(68) approx 16.492"},
        {"c_17", "0", "c_17=0"},
        {"c_34", "0", "c_34= c_51= c_68=0"},
        {"c_51", "0", "c_34= c_51= c_68=0"},
        {"c_68", "0", "c_34= c_51= c_68=0"},
        {"certificate_indices", "17,34,51,68", "p=17, c_17=0, c_34=0, c_51=0, c_68=0"},
        {"sum_ci_ri", "7", "sum_i c_i r^i = 7"},
        {"t_mod_p", "1", "T'[4, 20% 19]=T'[4, 1]"},
        {"chain_modulus", "331", "(T'[3, 1]+7^4 T'[3, 16]) % 331"},
        {"required_seed", "T'[0,0]=0", "it has to specify T'[0, 0]=0"},
        // recorded, not endorsed: the construction suggests failure <= nt/q
        {"soundness_claim", "1/2", "NO with 1/2 probability otherwise"},
    };

    const Instance& inst = report.instance;
    const PrimePick p_pick = pick_p(inst.n(), inst.t);
    const PrimePick q_pick = pick_q(inst.n(), inst.t, PickMode::Smallest);

    // The four entries exactly as the note lists them (no i = 0 term).
    const std::vector<PolyEntry> stated_poly{{17, 0}, {34, 0}, {51, 0}, {68, 0}};

    for (const PolicyProfile& policy :
         {PolicyProfile::corrected(), PolicyProfile::as_written()}) {
        const std::string label = policy_label(policy);
        // policy-independent quantities appear under every policy key
        report.recomputed.push_back({label, "p", to_decimal(p_pick.prime)});
        report.recomputed.push_back({label, "q_smallest", to_decimal(q_pick.prime)});
        report.recomputed.push_back(
            {label, "t_mod_p", to_decimal(nonneg_mod(inst.t, p_pick.prime).value)});
        report.recomputed.push_back({label, "mod_20_19", to_decimal(nonneg_mod(20, 19).value)});
        report.recomputed.push_back(
            {label, "sqrt_lower_bound", "16 < 2sqrt(68) < 17 (256 < 272 < 289)"});
        report.recomputed.push_back(
            {label, "sum_ci_ri_stated_entries",
             to_decimal(eval_sparse_poly(stated_poly, report.r, report.q).value)});

        const CountTable table = subset_count_table(inst, policy);
        push_counts(report.recomputed, label, table);

        const Certificate cert = prove(inst, policy);
        std::string indices;
        for (const auto& e : cert.entries) {
            indices += (indices.empty() ? "" : ",") + std::to_string(e.index);
        }
        report.recomputed.push_back({label, "certificate_indices", indices});

        const VerifierParams params{report.q, report.r, PickMode::Smallest, 0};
        const Verdict verdict = verify(inst, cert, params, policy);
        report.recomputed.push_back({label, "sum_ci_ri", to_decimal(verdict.lhs.value)});
        report.recomputed.push_back(
            {label, "row_t_mod_p", to_decimal(verdict.rhs.value)});
        report.verdicts.emplace_back(label, verdict);
    }

    const auto lookup = [&](const std::string& policy, const std::string& name) {
        for (const auto& rv : report.recomputed) {
            if (rv.policy == policy && rv.name == name) {
                return rv.value;
            }
        }
        return std::string("<missing>");
    };

    report.discrepancies = {
        {"D1",
         "moduli switch: the chain evaluates t%p as 20% 19 and reduces % 331 although the "
         "example fixes p=17, q=277",
         "t%p = 20% 19 = 1, reductions % 331",
         "t mod p = 17 mod 17 = " + lookup("corrected", "t_mod_p") + ", q = " +
             lookup("corrected", "q_smallest") + " (20% 19 = " + lookup("corrected", "mod_20_19") +
             " is fine as arithmetic, but has the wrong inputs)",
         "shared"},
        {"D2", "the stated fingerprint sum does not match any certificate the note lists",
         "sum_i c_i r^i = 7",
         lookup("corrected", "sum_ci_ri_stated_entries") + " from the stated four entries, " +
             lookup("corrected", "sum_ci_ri") + " from the corrected five-entry certificate",
         "shared"},
        {"D3",
         "the stated certificate omits index 0 although the residue class of t includes 0 "
         "(0 = 17 mod 17)",
         "certificate indices 17,34,51,68",
         "certificate indices " + lookup("corrected", "certificate_indices"), "corrected"},
        {"D4",
         "under the corrected profile the verifier accepts outright; nothing forces "
         "T'[0,0] = 0",
         "it has to specify T'[0, 0]=0",
         "accept with lhs = rhs = " + lookup("corrected", "row_t_mod_p") +
             " and c_t = " + lookup("corrected", "c_17"),
         "corrected"},
    };
    return report;
}

CountTable set_form_table(const Instance& inst) {
    if (inst.n() < 1 || inst.t < 1) {
        throw PreconditionError("set_form_table: need n >= 1 and t >= 1");
    }
    auto sorted = inst.weights;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("set_form_table: weights must be distinct");
    }
    const std::uint64_t upper = inst.nt();
    // T[A_0, .] = (1, 0, ..., 0); then
    // T[A_j, i] = T[A_{j-1}, i]                      for i < w_j
    //           = T[A_{j-1}, i] + T[A_{j-1}, i-w_j]  for i >= w_j
    std::vector<Natural> prev(upper + 1), cur(upper + 1);
    prev[0] = 1;
    for (std::uint64_t w : inst.weights) {
        for (std::uint64_t i = 0; i <= upper; ++i) {
            if (i < w) {
                cur[i] = prev[i];
            } else {
                cur[i] = prev[i] + prev[i - w];
            }
        }
        std::swap(prev, cur);
    }
    return CountTable{upper, std::move(prev)};
}

RecurrenceIdentityReport audit_recurrence_identity(std::uint64_t seed, std::uint64_t trials) {
    if (trials < 1) {
        throw PreconditionError("audit_recurrence_identity: trials must be positive");
    }
    RecurrenceIdentityReport report;
    report.trials = trials;

    // Canonical divergence, computed live: members {1,2} at sum 3.
    {
        const Instance two{{1, 2}, 2};
        const CountTable subsets =
            subset_count_table(two, PolicyProfile::corrected());
        const CountTable multis = multiset_partition_counts({1, 2}, 3);
        report.witnesses.push_back(
            MultisetWitness{{1, 2}, 3, multis.counts[3], subsets.counts[3]});
    }

    std::mt19937_64 g(seed);
    constexpr std::size_t kMaxWitnesses = 8;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t n = uniform_u64_in(g, 1, 10);
        const std::uint64_t t = uniform_u64_in(g, n, 30);
        std::vector<std::uint64_t> pool(t);
        for (std::uint64_t v = 0; v < t; ++v) {
            pool[v] = v + 1;
        }
        for (std::uint64_t k = 0; k < n; ++k) { // partial Fisher-Yates
            std::swap(pool[k], pool[uniform_u64_in(g, k, t - 1)]);
        }
        Instance inst{std::vector<std::uint64_t>(pool.begin(), pool.begin() + n), t};

        const CountTable index_form = subset_count_table(inst, PolicyProfile::corrected());
        if (index_form == set_form_table(inst)) {
            ++report.matches;
        }

        const CountTable multis = multiset_partition_counts(inst.weights, inst.nt());
        for (std::uint64_t i = 0; i <= index_form.upper; ++i) {
            if (multis.counts[i] != index_form.counts[i]) {
                ++report.divergent_trials;
                if (report.witnesses.size() < kMaxWitnesses) {
                    auto members = inst.weights;
                    std::sort(members.begin(), members.end());
                    report.witnesses.push_back(MultisetWitness{std::move(members), i,
                                                               multis.counts[i],
                                                               index_form.counts[i]});
                }
                break;
            }
        }
    }
    return report;
}

} // namespace masum
