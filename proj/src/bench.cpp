#include "masum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "masum/counting.hpp"
#include "masum/kernels.hpp"
#include "masum/protocol.hpp"
#include "masum/rng.hpp"

namespace masum {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double time_once(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Fn>
double time_min(int reps, Fn&& fn) {
    double best = time_once(fn);
    for (int i = 1; i < reps; ++i) {
        best = std::min(best, time_once(fn));
    }
    return best;
}

// Repeat cheap calls until the batch is long enough for the clock, then
// average within the best batch.
template <class Fn>
double time_min_adaptive(int reps, Fn&& fn) {
    std::uint64_t inner = 1;
    for (;;) {
        const double elapsed = time_once([&] {
            for (std::uint64_t i = 0; i < inner; ++i) {
                fn();
            }
        });
        if (elapsed >= 0.01) {
            double best = elapsed;
            for (int rep = 1; rep < reps; ++rep) {
                best = std::min(best, time_once([&] {
                                    for (std::uint64_t i = 0; i < inner; ++i) {
                                        fn();
                                    }
                                }));
            }
            return best / static_cast<double>(inner);
        }
        inner *= 4;
    }
}

} // namespace

BenchReport run_bench(std::uint64_t n, std::uint64_t t, std::uint64_t seed, int reps) {
    if (n < 1 || t < 1 || reps < 1) {
        throw PreconditionError("bench: need n >= 1, t >= 1, reps >= 1");
    }
    Instance inst;
    inst.t = t;
    std::uint64_t state = seed;
    inst.weights.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        inst.weights.push_back(splitmix64(state) % t + 1);
    }

    BenchReport report;
    report.n = n;
    report.t = t;
    report.nt = inst.nt();
    const PrimePick p_pick = pick_p(n, t);
    report.p = static_cast<std::uint64_t>(p_pick.prime);
    report.q = pick_q(n, t, PickMode::Smallest).prime;
    report.kernel = kernels::name(kernels::active());

    report.prover_cell_updates = n * report.nt;
    report.verifier_cell_updates = n * report.p;
    report.cell_ratio_prover_over_verifier =
        static_cast<double>(report.nt) / static_cast<double>(report.p);

    const PolicyProfile policy = PolicyProfile::corrected();
    volatile std::uint64_t sink = 0; // keep the builds observable
    report.prover_seconds = time_min(reps, [&] {
        const CountTable table = subset_count_table(inst, policy);
        sink = sink + static_cast<std::uint64_t>(table.counts[0]);
    });

    std::mt19937_64 g(seed);
    const Natural r = 1 + uniform_natural_below(g, report.q - 1);
    report.verifier_seconds = time_min_adaptive(reps, [&] {
        const ResidueRow row = compressed_row(inst, report.p, r, report.q, policy);
        sink = sink + static_cast<std::uint64_t>(row.values[0] & Natural(0xff));
    });

    report.wall_ratio_verifier_over_prover =
        report.verifier_seconds / std::max(report.prover_seconds, 1e-12);
    return report;
}

Json bench_report_to_json(const BenchReport& report) {
    Json j;
    j["n"] = report.n;
    j["t"] = report.t;
    j["nt"] = report.nt;
    j["p"] = report.p;
    j["q"] = to_decimal(report.q);
    j["kernel"] = report.kernel;
    j["prover_cell_updates"] = report.prover_cell_updates;
    j["verifier_cell_updates"] = report.verifier_cell_updates;
    j["cell_ratio_prover_over_verifier"] = report.cell_ratio_prover_over_verifier;
    j["prover_seconds"] = report.prover_seconds;
    j["verifier_seconds"] = report.verifier_seconds;
    j["wall_ratio_verifier_over_prover"] = report.wall_ratio_verifier_over_prover;
    return j;
}

std::string bench_report_text(const BenchReport& report) {
    std::ostringstream out;
    out << "bench: n=" << report.n << " t=" << report.t << " nt=" << report.nt
        << " p=" << report.p << " q=" << to_decimal(report.q) << " kernel=" << report.kernel
        << "\n";
    out << "cells:  prover " << report.prover_cell_updates << " (n*nt), verifier "
        << report.verifier_cell_updates << " (n*p), ratio nt/p = "
        << report.cell_ratio_prover_over_verifier << "\n";
    out << "wall:   prover " << report.prover_seconds << " s, verifier "
        << report.verifier_seconds << " s, verifier/prover = "
        << report.wall_ratio_verifier_over_prover << "\n";
    return out.str();
}

} // namespace masum
