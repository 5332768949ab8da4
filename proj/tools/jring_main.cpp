#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "jring/random.hpp"
#include "jring/serial.hpp"
#include "jring/suites.hpp"

namespace {

using jring::RingId;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw jring::Error("cannot open output file: " + output_path);
    out << text;
}

std::vector<int> parse_size_list(const std::string& text) {
    if (text.empty()) return {};
    auto dots = text.find("..");
    std::vector<int> out;
    if (dots != std::string::npos) {
        int lo = std::stoi(text.substr(0, dots));
        int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) throw jring::UsageError("empty size range: " + text);
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!item.empty()) out.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw jring::ParseError("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

int cmd_verify(const std::string& suite, const std::string& ring_text, const std::string& n_text,
               const std::string& omega_text, int trials, std::uint64_t seed,
               const std::string& format, const std::string& output_path) {
    jring::SuiteConfig config;
    config.suite = suite;
    config.ring = RingId::parse(ring_text);
    config.ns = parse_size_list(n_text);
    config.omegas = parse_size_list(omega_text);
    config.trials = trials;
    config.seed = seed;
    jring::RunReport report = jring::run_suite(config);
    if (format == "csv") {
        emit(report.to_csv(), output_path);
    } else {
        emit(report.to_json().dump(2) + "\n", output_path);
    }
    return report.pass() ? kExitPass : kExitFail;
}

json verification_to_json(bool ok, int probes_checked) {
    return json{{"ok", ok}, {"probes_checked", probes_checked}};
}

int cmd_reconstruct(const std::string& input_path, const std::string& mode, int probe_count,
                    std::uint64_t seed, const std::string& output_path) {
    json input = load_json(input_path);
    json out;
    try {
        if (mode == "matrix") {
            jring::TwoLocalOracle oracle;
            std::vector<jring::HermitianMatrix> probes;
            if (input.contains("values")) {
                jring::OracleTable table = jring::oracle_table_from_json(input);
                oracle = jring::oracle_from_table(table);
                for (const auto& [x, dx] : table.values) probes.push_back(x);
            } else {
                jring::SquareMatrix z = jring::matrix_from_json(input);
                oracle = jring::oracle_from_inner(z);
                jring::TrialRng rng(seed);
                for (int k = 0; k < probe_count; ++k) {
                    probes.push_back(jring::random_hermitian(rng, z.ring(), z.n()));
                }
            }
            jring::ReconstructionResult result = jring::reconstruct_two_local(oracle, probes);
            out = json{{"command", "reconstruct"},
                       {"mode", mode},
                       {"abar", jring::matrix_to_json(result.abar)},
                       {"anchor", json::array({result.anchor.first, result.anchor.second})},
                       {"gauge_offset", jring::entry_to_json(result.gauge_offset)},
                       {"verification",
                        verification_to_json(result.verification.ok, result.verification.probes_checked)},
                       {"status", "pass"}};
        } else if (mode == "omega-2local" || mode == "omega-local") {
            jring::OmegaMap z = jring::omega_map_from_json(input);
            jring::TrialRng rng(seed);
            std::vector<jring::OmegaMap> probes;
            for (int k = 0; k < probe_count; ++k) {
                probes.push_back(jring::random_omega_hermitian(rng, z.ring(), z.n(), z.omega_size()));
            }
            jring::OmegaReconstructionResult result = [&] {
                if (mode == "omega-2local") {
                    return jring::reconstruct_two_local_spatial(
                        jring::omega_oracle_from_inner(z), jring::unit_chain(z.ring(), z.n()), probes);
                }
                auto zz = std::make_shared<jring::OmegaMap>(z);
                jring::LocalSpatialOracle oracle;
                oracle.omega_size = z.omega_size();
                oracle.n = z.n();
                oracle.ring = z.ring();
                oracle.value = [zz](const jring::OmegaMap& x) { return jring::commutator(*zz, x); };
                return jring::reconstruct_local_spatial(oracle, probes);
            }();
            out = json{{"command", "reconstruct"},
                       {"mode", mode},
                       {"abar", jring::omega_map_to_json(result.abar)},
                       {"verification", verification_to_json(true, result.probes_checked)},
                       {"status", "pass"}};
        } else {
            throw jring::UsageError("unknown mode: " + mode);
        }
    } catch (const jring::VerificationFailed& e) {
        out = json{{"command", "reconstruct"},
                   {"mode", mode},
                   {"status", "fail"},
                   {"error", "VerificationFailed"},
                   {"message", e.what()},
                   {"probe", jring::matrix_to_json(e.mismatch().probe)},
                   {"lhs", jring::matrix_to_json(e.mismatch().expected)},
                   {"rhs", jring::matrix_to_json(e.mismatch().actual)}};
        emit(out.dump(2) + "\n", output_path);
        return kExitFail;
    } catch (const jring::PointwiseMismatch& e) {
        out = json{{"command", "reconstruct"}, {"mode", mode},       {"status", "fail"},
                   {"error", "PointwiseMismatch"}, {"message", e.what()}, {"point", e.point()},
                   {"probe", jring::matrix_to_json(e.mismatch().probe)},
                   {"lhs", jring::matrix_to_json(e.mismatch().expected)},
                   {"rhs", jring::matrix_to_json(e.mismatch().actual)}};
        emit(out.dump(2) + "\n", output_path);
        return kExitFail;
    } catch (const jring::InconsistentOracle& e) {
        out = json{{"command", "reconstruct"},
                   {"mode", mode},
                   {"status", "fail"},
                   {"error", "InconsistentOracle"},
                   {"message", e.what()}};
        emit(out.dump(2) + "\n", output_path);
        return kExitFail;
    } catch (const jring::PointNotInner& e) {
        out = json{{"command", "reconstruct"}, {"mode", mode},       {"status", "fail"},
                   {"error", "PointNotInner"},     {"message", e.what()}, {"point", e.point()}};
        emit(out.dump(2) + "\n", output_path);
        return kExitFail;
    }
    emit(out.dump(2) + "\n", output_path);
    return kExitPass;
}

int cmd_check(const std::string& input_path, const std::string& kind,
              const std::string& output_path) {
    json input = load_json(input_path);
    RingId ring = RingId::rational();
    int n = 0;
    auto table = jring::value_table_from_json(input, ring, n);
    if (!ring.is_field()) throw jring::UsageError("witness search requires a field kind ring");
    json out{{"command", "check"}, {"kind", kind}, {"ring", ring.to_string()}, {"n", n}};
    bool all_ok = true;
    if (kind == "2local") {
        jring::TwoLocalCheckReport report = jring::check_two_local(table, n, ring);
        json pairs = json::array();
        for (const auto& p : report.pairs) {
            json entry{{"i", p.first_index}, {"j", p.second_index}, {"witnessed", p.witnessed}};
            if (p.witness) entry["witness"] = jring::matrix_to_json(*p.witness);
            pairs.push_back(std::move(entry));
        }
        out["pairs"] = std::move(pairs);
        all_ok = report.all_witnessed;
    } else if (kind == "local") {
        jring::LocalCheckReport report = jring::check_local(table, n, ring);
        json points = json::array();
        for (const auto& p : report.points) {
            json entry{{"index", p.index}, {"witnessed", p.witnessed}};
            if (p.witness) entry["witness"] = jring::matrix_to_json(*p.witness);
            points.push_back(std::move(entry));
        }
        out["points"] = std::move(points);
        out["additivity_checked"] = report.additivity_checked;
        out["additivity_ok"] = report.additivity_ok;
        all_ok = report.all_witnessed && report.additivity_ok;
    } else {
        throw jring::UsageError("unknown kind: " + kind);
    }
    out["status"] = all_ok ? "pass" : "fail";
    emit(out.dump(2) + "\n", output_path);
    return all_ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jordan matrix rings: derivation reconstruction and verification suites"};
    app.require_subcommand(1);

    std::string suite, ring_text = "rational", n_text, omega_text, format = "json", output_path;
    int trials = 100;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--ring", ring_text, "ring id, e.g. rational or prime-field(101)");
    verify->add_option("--n", n_text, "matrix size, list or range (e.g. 3, 2..5)");
    verify->add_option("--omega", omega_text, "index-set size, list or range (map-algebra suites)");
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--seed", seed, "64-bit seed");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--output", output_path, "write the report to a file");

    std::string rec_input, rec_mode = "matrix", rec_output;
    int rec_probes = 0;
    std::uint64_t rec_seed = 0;
    auto* reconstruct = app.add_subcommand("reconstruct", "recover an implementing element");
    reconstruct->add_option("input", rec_input, "implementer or oracle-table JSON file")->required();
    reconstruct->add_option("--mode", rec_mode, "matrix, omega-2local or omega-local")
        ->check(CLI::IsMember({"matrix", "omega-2local", "omega-local"}));
    reconstruct->add_option("--probes", rec_probes, "extra random self-adjoint probes");
    reconstruct->add_option("--seed", rec_seed, "seed for the extra probes");
    reconstruct->add_option("--output", rec_output, "write the result to a file");

    std::string chk_input, chk_kind = "2local", chk_output;
    auto* check = app.add_subcommand("check", "witness search over a finite value table");
    check->add_option("input", chk_input, "value-table JSON file")->required();
    check->add_option("--kind", chk_kind, "2local or local")
        ->check(CLI::IsMember({"2local", "local"}));
    check->add_option("--output", chk_output, "write the report to a file");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) {
            return cmd_verify(suite, ring_text, n_text, omega_text, trials, seed, format, output_path);
        }
        if (reconstruct->parsed()) {
            return cmd_reconstruct(rec_input, rec_mode, rec_probes, rec_seed, rec_output);
        }
        if (check->parsed()) {
            return cmd_check(chk_input, chk_kind, chk_output);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const jring::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jring::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jring::MissingValue& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const jring::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
