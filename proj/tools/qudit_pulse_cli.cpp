// Copyright 2026 The qudit-pulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit status: 0 when every check of the scenario
// passes, 1 when a check fails, 2 on usage or input errors. Errors are
// reported on stderr as a single line "error: <CODE>: <message>".

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qudit_pulse/qudit_pulse.hpp"

namespace qp = qudit_pulse;

namespace {

constexpr const char *kOutputDirEnv = "QUDIT_PULSE_OUTPUT_DIR";

int fail(qp::ErrorCode code, std::string message) {
    for (char &c : message)
        if (c == '\n' || c == '\r') c = ' ';
    std::cerr << "error: " << qp::error_code_name(code) << ": " << message << "\n";
    return 2;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) throw qp::Error(qp::ErrorCode::Io, "cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pulse-level compiler and simulator for a four-level system used as two qubits"};
    app.set_version_flag("--version", std::string(qp::kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    qp::ScenarioConfig cfg;
    std::string csv_path;
    app.add_option("--seed", cfg.seed, "Base seed; trial i uses seed + i")->capture_default_str();
    app.add_option("-o,--output", cfg.output_path,
                   std::string("Write the JSON report here (default directory: $") + kOutputDirEnv + ")");
    app.add_option("--csv", csv_path, "Write the per-trial CSV table here (entropy-check)");

    auto &p = cfg.parameters;

    auto *compile = app.add_subcommand("compile", "Emit the pulse schedule of a gate");
    compile->add_option("gate", p["gate"], "ISWAP, H_A, H_B, H_AB (CNOT is rejected)")->required();

    auto *verify = app.add_subcommand("verify", "Compare a schedule file with a target gate");
    verify->add_option("schedule", p["schedule"], "Schedule JSON file")->required();
    verify->add_option("--target", p["target"], "Target gate")->required();
    verify->add_option("--ancilla", p["ancilla"], "Ancilla policy for Y pulses: lowest|highest");

    auto *prepare = app.add_subcommand("prepare", "Solve and simulate the state preparation");
    prepare->add_option("--bloch-a", p["bloch_a"], "Target Bloch vector of qubit A: x,y,z")->required();
    prepare->add_option("--bloch-b", p["bloch_b"], "Target Bloch vector of qubit B: x,y,z");
    bool identical = false;
    prepare->add_flag("--identical", identical, "Prepare identical marginals (uses --bloch-a)");

    auto *entropy = app.add_subcommand("entropy-check", "Monte Carlo check of entropic inequalities");
    entropy->add_option("--scenario", p["scenario"], "log2 | renyi | log4")->required();
    entropy->add_option("--alpha", p["alpha"], "Renyi order (> 1/2)");
    entropy->add_option("--shots", p["shots"], "Shots per trial; 0 uses exact statistics");
    entropy->add_option("--noise", p["noise"], "Relative pulse-angle noise sigma");
    entropy->add_option("--trials", p["trials"], "Number of random trials");

    auto *obstruction = app.add_subcommand("obstruction", "Determinant certificate against an exact CNOT");
    obstruction->add_option("--schedules", p["schedules"], "Random schedules to check");
    obstruction->add_option("--max-pulses", p["max_pulses"], "Maximum pulses per random schedule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::string what = e.what();
        if (what.empty()) what = e.get_name();
        return fail(qp::ErrorCode::Usage, what);
    }

    // Options that were not given leave empty strings behind; drop them.
    for (auto it = p.begin(); it != p.end();) {
        if (it->second.empty()) it = p.erase(it);
        else ++it;
    }
    if (identical) p["identical"] = "true";

    try {
        cfg.scenario = qp::parse_scenario(app.get_subcommands().front()->get_name());

        std::string report_path = cfg.output_path;
        if (report_path.empty()) {
            if (const char *dir = std::getenv(kOutputDirEnv); dir && *dir) {
                report_path = (std::filesystem::path(dir) /
                               (std::string(qp::scenario_name(cfg.scenario)) + ".json"))
                                  .string();
                cfg.output_path = report_path;
            }
        }
        if (csv_path.empty() && !report_path.empty() && cfg.scenario == qp::Scenario::EntropyCheck)
            csv_path = std::filesystem::path(report_path).replace_extension(".csv").string();

        const qp::RunResult result = qp::run(cfg);
        const std::string report_text = result.report.dump(2) + "\n";

        if (cfg.scenario == qp::Scenario::Compile)
            std::cout << qp::schedule_to_string(qp::compile(qp::parse_gate(p.at("gate"))).schedule);
        else
            std::cout << report_text;

        if (!report_path.empty()) write_file(report_path, report_text);
        if (!csv_path.empty() && !result.csv.empty()) write_file(csv_path, result.csv);
        return result.passed ? 0 : 1;
    } catch (const qp::Error &e) {
        return fail(e.code(), e.what());
    } catch (const std::exception &e) {
        return fail(qp::ErrorCode::Usage, e.what());
    }
}
