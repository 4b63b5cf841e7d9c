#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MASUM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, got);
    }
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "masum_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    return path;
}

const std::string kExample1 = R"({"weights":[1,2,3,4],"t":17})";

} // namespace

TEST_CASE("prove then verify round-trips with exit code 0") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult proved = run_cli("prove " + inst.string());
    REQUIRE(proved.exit_code == 0);
    const Json cert = Json::parse(proved.out);
    CHECK(cert["p"] == 17);
    CHECK(cert["entries"].size() == 5);
    CHECK(cert["entries"][0]["i"] == 0);
    CHECK(cert["entries"][0]["c"] == "1");

    const fs::path cert_path = write_file("cert.json", proved.out);
    const RunResult verified =
        run_cli("verify " + inst.string() + " " + cert_path.string() + " --q-mode smallest");
    CHECK(verified.exit_code == 0);
    const Json verdict = Json::parse(verified.out);
    CHECK(verdict["outcome"] == "accept");
    CHECK(verdict["c_t"] == "0");
    CHECK(verdict["params"]["q"] == "277");
}

TEST_CASE("count equals oracle entrywise") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult dp = run_cli("count " + inst.string());
    const RunResult brute = run_cli("oracle " + inst.string());
    REQUIRE(dp.exit_code == 0);
    REQUIRE(brute.exit_code == 0);
    CHECK(Json::parse(dp.out) == Json::parse(brute.out));
}

TEST_CASE("certificates serialize canonically: two prove runs are byte-identical") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult a = run_cli("prove " + inst.string());
    const RunResult b = run_cli("prove " + inst.string());
    CHECK(a.out == b.out);
}

TEST_CASE("count --policy aswritten reads unassigned cells as zero") {
    const fs::path inst = write_file("two.json", R"({"weights":[1,2],"t":2})");
    const RunResult counted = run_cli("count " + inst.string() + " --policy aswritten");
    REQUIRE(counted.exit_code == 0);
    const Json table = Json::parse(counted.out);
    CHECK(table["counts"][2] == "0"); // subset {2} is lost under the literal reading
    CHECK(table["counts"][0] == "0");
}

TEST_CASE("verify rejects a tampered certificate with exit code 1") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult proved = run_cli("prove " + inst.string());
    Json cert = Json::parse(proved.out);
    cert["entries"][1]["c"] = "1"; // honest value is 0
    const fs::path cert_path = write_file("tampered.json", cert.dump());
    const RunResult verified = run_cli("verify " + inst.string() + " " + cert_path.string());
    CHECK(verified.exit_code == 1);
    CHECK(Json::parse(verified.out)["outcome"] == "reject");
}

TEST_CASE("verify with explicit params file reproduces the worked example") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult proved = run_cli("prove " + inst.string());
    const fs::path cert_path = write_file("cert.json", proved.out);
    const fs::path params = write_file(
        "params.json", R"({"q":"277","r":"7","q_mode":"smallest","seed":0})");
    const RunResult verified = run_cli("verify " + inst.string() + " " + cert_path.string() +
                                       " --params " + params.string());
    REQUIRE(verified.exit_code == 0);
    const Json verdict = Json::parse(verified.out);
    CHECK(verdict["lhs"] == "1");
    CHECK(verdict["rhs"] == "1");
}

TEST_CASE("as-written policy round-trips too") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult proved = run_cli("prove " + inst.string() + " --policy aswritten");
    REQUIRE(proved.exit_code == 0);
    const Json cert = Json::parse(proved.out);
    CHECK(cert["entries"][0]["c"] == "0"); // T[4,0] reads as zero
    const fs::path cert_path = write_file("cert_aw.json", proved.out);
    const RunResult verified = run_cli("verify " + inst.string() + " " + cert_path.string() +
                                       " --policy aswritten --seed 9");
    CHECK(verified.exit_code == 0);
}

TEST_CASE("randomized q-mode requires an explicit seed and is replayable") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult proved = run_cli("prove " + inst.string());
    const fs::path cert_path = write_file("cert.json", proved.out);

    const RunResult no_seed =
        run_cli("verify " + inst.string() + " " + cert_path.string() + " --q-mode random");
    CHECK(no_seed.exit_code == 2);

    const std::string args =
        "verify " + inst.string() + " " + cert_path.string() + " --q-mode random --seed 1234";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage and schema violations exit with code 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("count /nonexistent/file.json").exit_code == 2);
    const fs::path bad = write_file("bad.json", R"({"weights":"nope"})");
    CHECK(run_cli("count " + bad.string()).exit_code == 2);
    const fs::path negative = write_file("neg.json", R"({"weights":[1,-2],"t":5})");
    CHECK(run_cli("count " + negative.string()).exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("primes q --n 4 --t 17 --mode random").exit_code == 2); // no seed
}

TEST_CASE("instances arrive via stdin as -") {
    const fs::path inst = write_file("ex1.json", kExample1);
    const RunResult piped = run_cli("count - < " + inst.string());
    REQUIRE(piped.exit_code == 0);
    const RunResult direct = run_cli("count " + inst.string());
    CHECK(piped.out == direct.out);
}

TEST_CASE("audit subcommands") {
    const RunResult text = run_cli("audit example1");
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("D1") != std::string::npos);
    CHECK(text.out.find("D4") != std::string::npos);

    const RunResult json = run_cli("audit example1 --json");
    REQUIRE(json.exit_code == 0);
    const Json report = Json::parse(json.out);
    CHECK(report["discrepancies"].size() == 4);
    CHECK(report["instance"]["t"] == 17);

    const RunResult eq = run_cli("audit equivalence --trials 20 --seed 5");
    REQUIRE(eq.exit_code == 0);
    CHECK(eq.out.find("20/20") != std::string::npos);

    const RunResult eq_json = run_cli("audit equivalence --trials 20 --seed 5 --json");
    REQUIRE(eq_json.exit_code == 0);
    CHECK(Json::parse(eq_json.out)["matches"] == 20);
}

TEST_CASE("primes subcommands print the picks") {
    const RunResult p = run_cli("primes p --n 4 --t 17");
    REQUIRE(p.exit_code == 0);
    CHECK(p.out == "17\n");
    const RunResult q = run_cli("primes q --n 4 --t 17");
    REQUIRE(q.exit_code == 0);
    CHECK(q.out == "277\n");
    const RunResult qj = run_cli("primes q --n 4 --t 17 --json");
    REQUIRE(qj.exit_code == 0);
    const Json pick = Json::parse(qj.out);
    CHECK(pick["prime"] == "277");
    CHECK(pick["interval_lo"] == "272");
    const RunResult pj = run_cli("primes p --n 4 --t 17 --json");
    CHECK(Json::parse(pj.out)["interval_lo"] == "sqrt(272)");
}

TEST_CASE("bench reports the exact cell-update counts") {
    const RunResult bench = run_cli("bench --n 4 --t 17 --reps 1 --json");
    REQUIRE(bench.exit_code == 0);
    const Json report = Json::parse(bench.out);
    CHECK(report["nt"] == 68);
    CHECK(report["p"] == 17);
    CHECK(report["prover_cell_updates"] == 4 * 68);
    CHECK(report["verifier_cell_updates"] == 4 * 17);
    CHECK(report["prover_seconds"].template get<double>() > 0.0);
}
