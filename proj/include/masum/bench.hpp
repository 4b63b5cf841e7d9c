#pragma once

#include <cstdint>
#include <string>

#include "masum/bigint.hpp"
#include "masum/json_io.hpp"

namespace masum {

/// Prover-table vs verifier-table comparison. Cell updates count recurrence
/// applications per the loop bounds (n*nt vs n*p), a deterministic model
/// independent of wall time; seconds are measured on the real row engines.
struct BenchReport {
    std::uint64_t n = 0;
    std::uint64_t t = 0;
    std::uint64_t nt = 0;
    std::uint64_t p = 0;
    Natural q;
    std::uint64_t prover_cell_updates = 0;   // n * nt
    std::uint64_t verifier_cell_updates = 0; // n * p
    double prover_seconds = 0.0;
    double verifier_seconds = 0.0;
    double cell_ratio_prover_over_verifier = 0.0; // nt / p
    double wall_ratio_verifier_over_prover = 0.0;
    std::string kernel;
};

/// Weights are derived from the seed (w_i in [1, t]), so runs are replayable.
BenchReport run_bench(std::uint64_t n, std::uint64_t t, std::uint64_t seed, int reps = 3);

Json bench_report_to_json(const BenchReport& report);
std::string bench_report_text(const BenchReport& report);

} // namespace masum
