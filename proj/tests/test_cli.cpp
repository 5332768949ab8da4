#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "jring/serial.hpp"

using nlohmann::json;

namespace {

#ifndef JRING_CLI_PATH
#error "JRING_CLI_PATH must be defined"
#endif

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(JRING_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_fixture_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

json strip_timing(json j) {
    j.erase("wall_time_seconds");
    return j;
}

}  // namespace

TEST_CASE("verify runs and reports trial counts") {
    RunResult r = run_cli("verify --suite thm-3.11 --ring rational --n 3 --trials 3 --seed 42");
    CHECK(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report.at("suite") == "thm-3.11");
    CHECK(report.at("passed") == 3);
    CHECK(report.at("failed") == 0);
    CHECK(report.at("status") == "pass");
    CHECK(report.at("trial_results").size() == 3);
}

TEST_CASE("verify is deterministic for a fixed seed") {
    std::string args = "verify --suite lemma-3.6 --ring gaussian-rational --n 2..4 --trials 5 --seed 7";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_timing(json::parse(a.output)).dump() == strip_timing(json::parse(b.output)).dump());

    // csv summaries carry no timing at all
    RunResult c = run_cli(args + " --format csv");
    RunResult d = run_cli(args + " --format csv");
    CHECK(c.output == d.output);
    CHECK(c.output.find("lemma-3.6,gaussian-rational,2;3;4,,5,5,0,pass") != std::string::npos);
}

TEST_CASE("reports can be written to a file") {
    std::string path = "cli_fixture_report.json";
    RunResult r = run_cli("verify --suite lemma-3.4 --ring rational --n 3 --trials 2 --seed 1 --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    json report;
    in >> report;
    CHECK(report.at("status") == "pass");
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("verify --suite thm-3.11 --ring 'polynomial(rational,-1)' --trials 1").exit_code == 2);
    CHECK(run_cli("verify --suite no-such-suite --trials 1").exit_code == 2);
    CHECK(run_cli("verify --suite thm-3.3 --n 4 --trials 1").exit_code == 2);
    CHECK(run_cli("verify --suite thm-3.11 --ring prime-field(2) --trials 1").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("reconstruct from an implementer matrix") {
    json z{{"ring", "rational"},
           {"n", 2},
           {"entries", json::array({json::array({"0", "1"}), json::array({"-1", "0"})})}};
    std::string path = temp_file("impl.json", z.dump());
    RunResult r = run_cli("reconstruct " + path + " --mode matrix --probes 5 --seed 3");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report.at("status") == "pass");
    CHECK(report.at("abar") == z);
    CHECK(report.at("verification").at("ok") == true);
    std::remove(path.c_str());
}

TEST_CASE("reconstruct over the map algebra") {
    json z1{{"ring", "rational"},
            {"n", 2},
            {"entries", json::array({json::array({"0", "1"}), json::array({"-1", "0"})})}};
    json z2{{"ring", "rational"},
            {"n", 2},
            {"entries", json::array({json::array({"0", "0"}), json::array({"0", "0"})})}};
    json omega{{"omega", 2}, {"points", json::array({z1, z2})}};
    std::string path = temp_file("omega.json", omega.dump());
    for (std::string mode : {"omega-2local", "omega-local"}) {
        RunResult r = run_cli("reconstruct " + path + " --mode " + mode + " --probes 3");
        REQUIRE(r.exit_code == 0);
        json report = json::parse(r.output);
        CHECK(report.at("status") == "pass");
        CHECK(report.at("abar").at("omega") == 2);
    }
    std::remove(path.c_str());
}

TEST_CASE("reconstruct rejects a corrupted oracle table") {
    // witness implements 3z but the values come from z
    jring::RingId Q = jring::RingId::rational();
    jring::SquareMatrix z =
        jring::matrix_unit(Q, 2, 1, 2) - jring::matrix_unit(Q, 2, 2, 1);
    jring::OracleTable table;
    table.n = 2;
    table.ring = Q;
    for (const auto& p : jring::test_family(Q, 2)) {
        table.values.emplace_back(p, jring::HermitianMatrix(jring::commutator(z, p.matrix())));
    }
    table.witnesses.push_back({jring::sym_unit(Q, 2, 1, 2), jring::tridiagonal_chain(Q, 2),
                               jring::jordan_pairs_from_skew(jring::from_int(Q, 3) * z)});
    std::string path = temp_file("corrupt.json", jring::oracle_table_to_json(table).dump());
    RunResult r = run_cli("reconstruct " + path + " --mode matrix");
    CHECK(r.exit_code == 1);
    json report = json::parse(r.output);
    CHECK(report.at("error") == "InconsistentOracle");
    std::remove(path.c_str());
}

TEST_CASE("check reports witnessed and failed pairs") {
    json s12{{"ring", "rational"},
             {"n", 2},
             {"entries", json::array({json::array({"0", "1"}), json::array({"1", "0"})})}};
    json zero{{"ring", "rational"},
              {"n", 2},
              {"entries", json::array({json::array({"0", "0"}), json::array({"0", "0"})})}};
    json e11{{"ring", "rational"},
             {"n", 2},
             {"entries", json::array({json::array({"1", "0"}), json::array({"0", "0"})})}};

    SUBCASE("the documented counterexample fails and replays identically") {
        json table{{"values", json::array({json{{"x", s12}, {"dx", zero}},
                                           json{{"x", e11}, {"dx", s12}}})}};
        std::string path = temp_file("counter.json", table.dump());
        RunResult a = run_cli("check " + path + " --kind 2local");
        RunResult b = run_cli("check " + path + " --kind 2local");
        CHECK(a.exit_code == 1);
        CHECK(a.output == b.output);
        json report = json::parse(a.output);
        CHECK(report.at("status") == "fail");
        bool mixed_pair_failed = false;
        for (const auto& p : report.at("pairs")) {
            if (p.at("i") == 0 && p.at("j") == 1) mixed_pair_failed = !p.at("witnessed");
        }
        CHECK(mixed_pair_failed);
        std::remove(path.c_str());
    }

    SUBCASE("local check on the same table") {
        json table{{"values", json::array({json{{"x", s12}, {"dx", zero}},
                                           json{{"x", e11}, {"dx", s12}}})}};
        std::string path = temp_file("local.json", table.dump());
        RunResult r = run_cli("check " + path + " --kind local");
        CHECK(r.exit_code == 0);  // each point alone is witnessed
        std::remove(path.c_str());
    }

    SUBCASE("empty tables are a usage error") {
        std::string path = temp_file("empty.json", R"({"values": []})");
        CHECK(run_cli("check " + path + " --kind 2local").exit_code == 2);
        std::remove(path.c_str());
    }
}
