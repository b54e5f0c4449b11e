// bsgate: verify, simulate and solve staged beam-splitter gate networks.
//
// Exit status: 0 success, 1 checks or solve failed, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bsgate/anglesolve.h"
#include "bsgate/report.h"
#include "bsgate/run_config.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw bsgate::ConfigError("cannot write " + out_path);
    }
    out << text;
}

bsgate::GateTarget resolve_gate(const std::string &gate) {
    if (gate == "cnot") {
        return bsgate::cnot_target();
    }
    if (gate == "swap") {
        return bsgate::swap_target();
    }
    return bsgate::custom_target(bsgate::parse_matrix(bsgate::read_json_file(gate)));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Staged beam-splitter network gate simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "json";
    std::string gate;
    std::string mode = "enumerate";
    double tolerance = 1e-6;

    auto *verify = app.add_subcommand("verify", "Check orthogonality, block conditions and target match");
    verify->add_option("--config", config_path, "Run configuration (JSON)")->required();
    verify->add_option("--out", out_path, "Report path (default: stdout)");

    auto *simulate = app.add_subcommand("simulate", "Run gate reports for the configured inputs");
    simulate->add_option("--config", config_path, "Run configuration (JSON)")->required();
    simulate->add_option("--out", out_path, "Report path (default: stdout)");
    simulate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto *solve = app.add_subcommand("solve", "Find beam-splitter angles for a target block");
    solve->add_option("--gate", gate, "cnot, swap, or a path to a 4x4 matrix (JSON)")->required();
    solve->add_option("--mode", mode, "enumerate or continuous")->check(CLI::IsMember({"enumerate", "continuous"}));
    solve->add_option("--tol", tolerance, "Residual tolerance for continuous mode")->check(CLI::PositiveNumber);
    solve->add_option("--out", out_path, "Solutions path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (verify->parsed()) {
            auto config = bsgate::load_run_config(config_path);
            auto outcome = bsgate::verify_network(config);
            emit(bsgate::dump_json(outcome.document), out_path);
            return outcome.passed ? kExitOk : kExitFailed;
        }
        if (simulate->parsed()) {
            auto config = bsgate::load_run_config(config_path);
            auto doc = bsgate::simulate_document(config);
            emit(format == "csv" ? bsgate::simulate_csv(doc) : bsgate::dump_json(doc), out_path);
            return kExitOk;
        }
        if (solve->parsed()) {
            bsgate::GateTarget target = resolve_gate(gate);
            if (mode == "enumerate") {
                std::optional<bsgate::ConditionSet> conditions;
                if (target.kind != bsgate::GateKind::custom) {
                    conditions = bsgate::sign_conditions(target.kind);
                }
                auto doc = bsgate::enumerate_document(target, conditions);
                emit(bsgate::dump_json(doc), out_path);
                return doc["solution_count"].get<size_t>() > 0 ? kExitOk : kExitFailed;
            }
            auto result = bsgate::continuous_angle_search(target.matrix, tolerance);
            emit(bsgate::dump_json(bsgate::search_document(result, tolerance)), out_path);
            return result.converged ? kExitOk : kExitFailed;
        }
    } catch (const bsgate::ConfigError &e) {
        std::cerr << "bsgate: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "bsgate: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "bsgate: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitInput;
}
