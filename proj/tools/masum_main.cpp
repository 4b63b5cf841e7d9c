// masum: count, prove, verify, audit and benchmark subset-sum counting
// certificates over the JSON formats documented in the README.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "masum/audit.hpp"
#include "masum/bench.hpp"
#include "masum/bigint.hpp"
#include "masum/counting.hpp"
#include "masum/json_io.hpp"
#include "masum/primes.hpp"
#include "masum/protocol.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw masum::InputError("cannot read file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

masum::Instance load_instance(const std::string& path) {
    return masum::instance_from_json(masum::parse_json_text(read_input(path)));
}

void print_json(const masum::Json& j) {
    std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset-sum counting certificates: prover, verifier, audit, bench"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string cert_path;
    std::string params_path;
    std::string policy_name = "corrected";
    std::string q_mode = "smallest";
    std::string prime_mode = "smallest";
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t trials = 100;
    std::uint64_t arg_n = 0;
    std::uint64_t arg_t = 0;
    int reps = 3;
    bool as_json = false;

    auto* count = app.add_subcommand("count", "subset count table (DP) as JSON");
    count->add_option("instance", instance_path, "instance JSON file, or - for stdin")
        ->required();
    count->add_option("--policy", policy_name, "corrected|aswritten");

    auto* oracle = app.add_subcommand("oracle", "brute-force count table (n <= 24) as JSON");
    oracle->add_option("instance", instance_path, "instance JSON file, or - for stdin")
        ->required();

    auto* prove = app.add_subcommand("prove", "emit certificate JSON");
    prove->add_option("instance", instance_path, "instance JSON file, or - for stdin")
        ->required();
    prove->add_option("--policy", policy_name, "corrected|aswritten");

    auto* verify = app.add_subcommand("verify", "check a certificate, exit 0 accept / 1 reject");
    verify->add_option("instance", instance_path, "instance JSON file, or - for stdin")
        ->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();
    verify->add_option("--q-mode", q_mode, "smallest|random");
    verify->add_option("--seed", seed, "seed for the q/r draws (default 0)")
        ->capture_default_str();
    verify->add_option("--params", params_path, "verifier params JSON (explicit q and r)");
    verify->add_option("--policy", policy_name, "corrected|aswritten");

    auto* audit = app.add_subcommand("audit", "recompute the published worked example");
    audit->require_subcommand(1);
    auto* audit_ex1 = audit->add_subcommand("example1", "diff stated vs recomputed values");
    audit_ex1->add_flag("--json", as_json, "emit JSON instead of text");
    auto* audit_eq = audit->add_subcommand("equivalence", "index-form vs set-form recurrence");
    audit_eq->add_option("--trials", trials, "number of random instances")
        ->capture_default_str();
    audit_eq->add_option("--seed", seed, "seed")->capture_default_str();
    audit_eq->add_flag("--json", as_json, "emit JSON instead of text");

    auto* primes = app.add_subcommand("primes", "the protocol's prime picks");
    primes->require_subcommand(1);
    auto* primes_p = primes->add_subcommand("p", "smallest prime in (2*sqrt(nt), 4*sqrt(nt))");
    primes_p->add_option("--n", arg_n, "number of weights")->required();
    primes_p->add_option("--t", arg_t, "target")->required();
    primes_p->add_flag("--json", as_json, "emit PrimePick JSON");
    auto* primes_q = primes->add_subcommand("q", "prime in (2^n*t, 2^(n+1)*t)");
    primes_q->add_option("--n", arg_n, "number of weights")->required();
    primes_q->add_option("--t", arg_t, "target")->required();
    primes_q->add_option("--mode", prime_mode, "smallest|random");
    auto* primes_q_seed = primes_q->add_option("--seed", seed, "seed (required with --mode random)");
    primes_q->add_flag("--json", as_json, "emit PrimePick JSON");

    auto* bench = app.add_subcommand("bench", "prover-table vs verifier-table comparison");
    bench->add_option("--n", arg_n, "number of weights")->required();
    bench->add_option("--t", arg_t, "target")->required();
    bench->add_option("--seed", seed, "seed for the weight draw")->capture_default_str();
    bench->add_option("--reps", reps, "timing repetitions")->capture_default_str();
    bench->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    seed_given = verify->count("--seed") > 0 || audit_eq->count("--seed") > 0 ||
                 primes_q_seed->count() > 0 || bench->count("--seed") > 0;

    try {
        if (count->parsed()) {
            const masum::Instance inst = load_instance(instance_path);
            const masum::PolicyProfile policy = masum::policy_from_name(policy_name);
            print_json(masum::count_table_to_json(masum::subset_count_table(inst, policy)));
            return kExitOk;
        }
        if (oracle->parsed()) {
            const masum::Instance inst = load_instance(instance_path);
            print_json(masum::count_table_to_json(masum::brute_force_counts(inst)));
            return kExitOk;
        }
        if (prove->parsed()) {
            const masum::Instance inst = load_instance(instance_path);
            const masum::PolicyProfile policy = masum::policy_from_name(policy_name);
            print_json(masum::certificate_to_json(masum::prove(inst, policy)));
            return kExitOk;
        }
        if (verify->parsed()) {
            const masum::Instance inst = load_instance(instance_path);
            const masum::Certificate cert =
                masum::certificate_from_json(masum::parse_json_text(read_input(cert_path)));
            const masum::PolicyProfile policy = masum::policy_from_name(policy_name);
            masum::VerifierParams params;
            if (!params_path.empty()) {
                params = masum::verifier_params_from_json(
                    masum::parse_json_text(read_input(params_path)));
            } else {
                masum::PickMode mode;
                if (q_mode == "smallest") {
                    mode = masum::PickMode::Smallest;
                } else if (q_mode == "random") {
                    mode = masum::PickMode::UniformRandom;
                } else {
                    throw masum::InputError("--q-mode must be smallest|random");
                }
                if (mode == masum::PickMode::UniformRandom && !seed_given) {
                    throw masum::InputError("--q-mode random requires an explicit --seed");
                }
                params = masum::draw_verifier_params(inst, mode, seed, policy);
            }
            const masum::Verdict verdict = masum::verify(inst, cert, params, policy);
            masum::Json out = masum::verdict_to_json(verdict);
            out["params"] = masum::verifier_params_to_json(params);
            out["policy"] = policy_name;
            print_json(out);
            return verdict.outcome == masum::Outcome::Accept ? kExitOk : kExitReject;
        }
        if (audit_ex1->parsed()) {
            const masum::AuditReport report = masum::audit_example1();
            if (as_json) {
                print_json(masum::audit_report_to_json(report));
            } else {
                std::cout << masum::audit_report_text(report);
            }
            return kExitOk;
        }
        if (audit_eq->parsed()) {
            const masum::RecurrenceIdentityReport report =
                masum::audit_recurrence_identity(seed, trials);
            if (as_json) {
                print_json(masum::recurrence_report_to_json(report));
            } else {
                std::cout << masum::recurrence_report_text(report);
            }
            return kExitOk;
        }
        if (primes_p->parsed()) {
            const masum::PrimePick pick = masum::pick_p(arg_n, arg_t);
            if (as_json) {
                print_json(masum::prime_pick_to_json(pick));
            } else {
                std::cout << masum::to_decimal(pick.prime) << "\n";
            }
            return kExitOk;
        }
        if (primes_q->parsed()) {
            masum::PickMode mode;
            if (prime_mode == "smallest") {
                mode = masum::PickMode::Smallest;
            } else if (prime_mode == "random") {
                mode = masum::PickMode::UniformRandom;
            } else {
                throw masum::InputError("--mode must be smallest|random");
            }
            if (mode == masum::PickMode::UniformRandom && !seed_given) {
                throw masum::InputError("--mode random requires an explicit --seed");
            }
            const masum::PrimePick pick = masum::pick_q(arg_n, arg_t, mode, seed);
            if (as_json) {
                print_json(masum::prime_pick_to_json(pick));
            } else {
                std::cout << masum::to_decimal(pick.prime) << "\n";
            }
            return kExitOk;
        }
        if (bench->parsed()) {
            const masum::BenchReport report = masum::run_bench(arg_n, arg_t, seed, reps);
            if (as_json) {
                print_json(masum::bench_report_to_json(report));
            } else {
                std::cout << masum::bench_report_text(report);
            }
            return kExitOk;
        }
    } catch (const masum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
}
