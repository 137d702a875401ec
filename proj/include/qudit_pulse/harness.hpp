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

/**
 * @file harness.hpp
 * @brief Scenario dispatch behind the command-line tool.
 *
 * A ScenarioConfig names one scenario plus string parameters; run() executes
 * it and returns a JSON report (and a CSV table for sweeps). Monte Carlo
 * trial i always uses seed base + i, so reports are reproducible bit for bit
 * apart from the wall_clock_seconds field.
 */

#ifndef QUDIT_PULSE_HARNESS_HPP
#define QUDIT_PULSE_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qudit_pulse/core.hpp"
#include "qudit_pulse/entropy.hpp"
#include "qudit_pulse/gates.hpp"
#include "qudit_pulse/pulse.hpp"
#include "qudit_pulse/sampling.hpp"
#include "qudit_pulse/schedule_io.hpp"
#include "qudit_pulse/state_prep.hpp"
#include "qudit_pulse/version.hpp"

namespace qudit_pulse {

enum class Scenario { Compile, Verify, Prepare, EntropyCheck, Obstruction };

constexpr std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Compile: return "compile";
        case Scenario::Verify: return "verify";
        case Scenario::Prepare: return "prepare";
        case Scenario::EntropyCheck: return "entropy-check";
        case Scenario::Obstruction: return "obstruction";
    }
    return "?";
}

inline Scenario parse_scenario(std::string_view text) {
    for (Scenario s : {Scenario::Compile, Scenario::Verify, Scenario::Prepare,
                       Scenario::EntropyCheck, Scenario::Obstruction})
        if (scenario_name(s) == text) return s;
    throw Error(ErrorCode::Usage, "unknown scenario '" + std::string(text) + "'");
}

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 0;

struct ScenarioConfig {
    Scenario scenario = Scenario::Compile;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = kDefaultSeed;
    std::string output_path;

    bool has(const std::string &key) const { return parameters.count(key) != 0; }

    const std::string &require(const std::string &key) const {
        auto it = parameters.find(key);
        if (it == parameters.end())
            throw Error(ErrorCode::Usage, std::string(scenario_name(scenario)) +
                                              ": missing required parameter '" + key + "'");
        return it->second;
    }

    std::string get(const std::string &key, const std::string &fallback) const {
        auto it = parameters.find(key);
        return it == parameters.end() ? fallback : it->second;
    }
};

struct RunResult {
    nlohmann::json report;
    std::string csv;  // empty unless the scenario produces a sweep table
    bool passed = false;
};

namespace detail {

inline double parse_double(const std::string &key, const std::string &text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorCode::Usage, "parameter '" + key + "' is not a number: '" + text + "'");
    }
}

inline std::int64_t parse_int(const std::string &key, const std::string &text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception &) {
        throw Error(ErrorCode::Usage, "parameter '" + key + "' is not an integer: '" + text + "'");
    }
}

inline bool parse_bool(const std::string &key, const std::string &text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw Error(ErrorCode::Usage, "parameter '" + key + "' is not a boolean: '" + text + "'");
}

inline BlochVector parse_bloch(const std::string &key, const std::string &text) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_double(key, item));
    if (parts.size() != 3)
        throw Error(ErrorCode::Usage, "parameter '" + key + "' must be x,y,z; got '" + text + "'");
    return {parts[0], parts[1], parts[2]};
}

inline nlohmann::json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }
inline nlohmann::json to_json(const BlochVector &v) { return {v.x, v.y, v.z}; }

inline nlohmann::json to_json(const PrepAngles &a) {
    return {{"theta0", a.theta0},     {"theta1_a", a.theta1_a}, {"theta2_a", a.theta2_a},
            {"theta1_b", a.theta1_b}, {"theta2_b", a.theta2_b}};
}

inline nlohmann::json to_json(const InequalityReport &r) {
    nlohmann::json j = {{"lhs", r.lhs}, {"bound", r.bound}, {"margin", r.margin},
                        {"satisfied", r.satisfied}};
    if (r.alpha) j["alpha"] = *r.alpha;
    if (r.beta) j["beta"] = *r.beta;
    return j;
}

inline nlohmann::json to_json(const VerifyReport &r) {
    return {{"distance", r.distance},       {"phase", to_json(r.phase)},
            {"pulse_count", r.pulse_count}, {"exact", r.exact},
            {"unitarity_defect", r.unitarity_defect}};
}

inline double bloch_gap(const BlochVector &a, const BlochVector &b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

inline RunResult run_compile(const ScenarioConfig &cfg) {
    const GateName g = parse_gate(cfg.require("gate"));
    const CompiledGate c = compile(g);
    const VerifyReport v = verify(c);
    RunResult r;
    r.passed = v.distance < kExactTol;
    r.report["results"] = {{"gate", gate_name(g)},
                           {"schedule", schedule_to_json(c.schedule)},
                           {"achieved_phase", to_json(c.achieved_phase)},
                           {"verify", to_json(v)}};
    nlohmann::json ry = nlohmann::json::array();
    for (AncillaPolicy p : {AncillaPolicy::Lowest, AncillaPolicy::Highest}) {
        const RyFormCheck check = cross_check_ry_form(g, p);
        ry.push_back({{"ancilla_policy", p == AncillaPolicy::Lowest ? "lowest" : "highest"},
                      {"distance_to_target", check.distance_to_target},
                      {"distance_to_pulse_line", check.distance_to_pulse_line}});
    }
    r.report["results"]["ry_form_cross_check"] = ry;
    r.report["summary"] = {{"distance", v.distance}, {"pulse_count", v.pulse_count}};
    return r;
}

inline AncillaPolicy parse_policy(const ScenarioConfig &cfg) {
    const std::string p = cfg.get("ancilla", "lowest");
    if (p == "lowest") return AncillaPolicy::Lowest;
    if (p == "highest") return AncillaPolicy::Highest;
    throw Error(ErrorCode::Usage, "ancilla policy must be 'lowest' or 'highest'");
}

inline RunResult run_verify(const ScenarioConfig &cfg) {
    const PulseSchedule s = load_schedule(cfg.require("schedule"));
    const GateName g = parse_gate(cfg.require("target"));
    const VerifyReport v = verify_schedule(s, target_matrix(g), parse_policy(cfg));
    RunResult r;
    r.passed = v.distance < kExactTol;
    r.report["results"] = to_json(v);
    r.report["results"]["target"] = gate_name(g);
    r.report["results"]["input_pulses"] = s.size();
    r.report["results"]["lowered_y_pulses"] = !is_x_only(s);
    r.report["summary"] = {{"distance", v.distance}, {"pulse_count", v.pulse_count}};
    return r;
}

inline RunResult run_prepare(const ScenarioConfig &cfg) {
    const bool identical = parse_bool("identical", cfg.get("identical", "false"));
    const BlochVector ta = parse_bloch("bloch_a", cfg.require("bloch_a"));
    BlochVector tb = ta;
    if (cfg.has("bloch_b")) tb = parse_bloch("bloch_b", cfg.require("bloch_b"));
    else if (!identical) cfg.require("bloch_b");
    if (identical && cfg.has("bloch_b") && bloch_gap(ta, tb) > kSpectralTol)
        throw Error(ErrorCode::InfeasibleTarget, "--identical requires bloch_a == bloch_b");

    const PrepAngles angles = identical ? identical_prep(ta) : solve_angles({ta, tb});
    const PulseSchedule s = prep_schedule(angles);
    const auto [pa, pb] = predicted_bloch(angles);
    const Marginals m = marginals_of(apply_schedule(s, PureState4::basis(0)));
    const BlochVector sa = bloch_of(m.a);
    const BlochVector sb = bloch_of(m.b);
    const double deviation = std::max({bloch_gap(pa, sa), bloch_gap(pb, sb), bloch_gap(ta, sa),
                                       bloch_gap(tb, sb)});
    const double td_ab = trace_distance(m.a, m.b);

    RunResult r;
    r.passed = deviation < kSpectralTol && (!identical || td_ab < kExactTol);
    r.report["results"] = {
        {"angles", to_json(angles)},
        {"schedule", schedule_to_json(s)},
        {"target", {{"a", to_json(ta)}, {"b", to_json(tb)}}},
        {"predicted", {{"a", to_json(pa)}, {"b", to_json(pb)}}},
        {"simulated", {{"a", to_json(sa)}, {"b", to_json(sb)}}},
        {"trace_distances",
         {{"a_b", td_ab},
          {"a_target", trace_distance(m.a, bloch_to_qubit(ta))},
          {"b_target", trace_distance(m.b, bloch_to_qubit(tb))}}},
        {"purities", {{"a", purity(m.a)}, {"b", purity(m.b)}}},
    };
    r.report["summary"] = {{"max_bloch_deviation", deviation}, {"trace_distance_a_b", td_ab},
                           {"pulse_count", s.size()}};
    return r;
}

inline RunResult run_entropy_check(const ScenarioConfig &cfg) {
    const std::string kind = cfg.require("scenario");
    if (kind != "log2" && kind != "renyi" && kind != "log4")
        throw Error(ErrorCode::Usage, "entropy-check scenario must be log2, renyi or log4");
    const double alpha = kind == "renyi" ? parse_double("alpha", cfg.require("alpha")) : 1.0;
    if (kind == "renyi") conjugate_beta(alpha);  // validates alpha > 1/2
    const std::int64_t shots = parse_int("shots", cfg.get("shots", "0"));
    const double sigma = parse_double("noise", cfg.get("noise", "0"));
    const std::int64_t trials = parse_int("trials", cfg.get("trials", "1000"));
    if (shots < 0) throw Error(ErrorCode::InvalidShots, "shots must be >= 0 (0 = exact statistics)");
    if (sigma < 0) throw Error(ErrorCode::InvalidNoise, "noise must be >= 0");
    if (trials < 1) throw Error(ErrorCode::Usage, "trials must be >= 1");

    std::vector<InequalityReport> per_trial;
    per_trial.reserve(static_cast<std::size_t>(trials));
    for (std::int64_t i = 0; i < trials; ++i) {
        Engine rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        if (kind == "log4") {
            const PureState4 psi = random_haar_state(rng);
            const std::uint64_t noise_seed = rng();
            const std::uint64_t shot_seed = rng();
            static const PulseSchedule hh = compile(GateName::H_AB).schedule;
            std::optional<NoiseModel> noise;
            if (sigma > 0) noise = NoiseModel(sigma, noise_seed);
            const PureState4 conj = apply_schedule(hh, psi, noise);
            double lhs;
            if (shots > 0) {
                lhs = plugin_shannon(sample_shots(psi, shots, shot_seed)) +
                      plugin_shannon(sample_shots(conj, shots, shot_seed + 1));
            } else {
                lhs = shannon(ProbabilityVector::from(psi.probabilities())) +
                      shannon(ProbabilityVector::from(conj.probabilities()));
            }
            per_trial.push_back(make_report(lhs, 2.0));
            continue;
        }
        const BlochVector target = random_bloch_ball(rng);
        const std::uint64_t noise_seed = rng();
        const std::uint64_t shot_seed = rng();
        std::optional<NoiseModel> noise;
        if (sigma > 0) noise = NoiseModel(sigma, noise_seed);
        const PureState4 psi = hadamard_pair_state(target, noise);
        if (shots > 0) {
            const auto counts = sample_shots(psi, shots, shot_seed);
            per_trial.push_back(kind == "log2" ? log2_from_counts(counts)
                                               : renyi_from_counts(counts, alpha).worst());
        } else {
            const Eigen::Vector4d p = psi.probabilities();
            per_trial.push_back(kind == "log2" ? log2_from_joint(p)
                                               : renyi_from_joint(p, alpha).worst());
        }
    }

    double min_margin = std::numeric_limits<double>::infinity();
    double sum_margin = 0.0;
    std::size_t violations = 0;
    nlohmann::json margins = nlohmann::json::array();
    std::ostringstream csv;
    csv << "trial,lhs,bound,margin\n";
    for (std::size_t i = 0; i < per_trial.size(); ++i) {
        const InequalityReport &t = per_trial[i];
        min_margin = std::min(min_margin, t.margin);
        sum_margin += t.margin;
        if (!t.satisfied) ++violations;
        margins.push_back(t.margin);
        csv << i << ',' << format_angle(t.lhs) << ',' << format_angle(t.bound) << ','
            << format_angle(t.margin) << '\n';
    }
    const bool exact_path = shots == 0 && sigma == 0.0;

    RunResult r;
    r.csv = csv.str();
    r.passed = !exact_path || violations == 0;
    r.report["results"] = {{"scenario", kind},
                           {"bound_bits", kind == "log4" ? 2.0 : 1.0},
                           {"margins", margins}};
    if (kind == "renyi") {
        r.report["results"]["alpha"] = alpha;
        r.report["results"]["beta"] = conjugate_beta(alpha);
    }
    r.report["summary"] = {
        {"trials", trials},
        {"min_margin", min_margin},
        {"mean_margin", sum_margin / static_cast<double>(per_trial.size())},
        {"violations", violations},
        {"exact_path", exact_path},
        {"violation_interpretation",
         exact_path ? "any violation would be a numerical defect"
                    : "violations on noisy or finite-shot paths are model artifacts "
                      "(imperfect pulses or estimator bias), not violations of the inequality"},
    };
    return r;
}

inline RunResult run_obstruction(const ScenarioConfig &cfg) {
    const std::int64_t n = parse_int("schedules", cfg.get("schedules", "1000"));
    const std::int64_t max_pulses = parse_int("max_pulses", cfg.get("max_pulses", "20"));
    if (n < 1 || max_pulses < 1)
        throw Error(ErrorCode::Usage, "schedules and max_pulses must be >= 1");
    const ObstructionReport o =
        cnot_obstruction(static_cast<std::size_t>(n), static_cast<int>(max_pulses), cfg.seed);
    RunResult r;
    r.passed = std::abs(o.det_target + 1.0) < kSpectralTol && o.all_reachable_det_one;
    r.report["results"] = {{"det_target", to_json(o.det_target)},
                           {"det_phased_target", to_json(o.det_phased_target)},
                           {"det_reachable_worst", to_json(o.det_reachable)},
                           {"schedules_checked", o.schedules_checked},
                           {"max_det_deviation", o.max_det_deviation},
                           {"note",
                            "every pulse product has determinant 1, so the exact CNOT "
                            "(determinant -1) is unreachable; e^{i pi/4} CNOT has determinant "
                            "+1 and is not excluded by this argument"}};
    r.report["summary"] = {{"all_reachable_det_one", o.all_reachable_det_one},
                           {"max_det_deviation", o.max_det_deviation}};
    return r;
}

}  // namespace detail

/// Executes one scenario. Module errors propagate as qudit_pulse::Error.
inline RunResult run(const ScenarioConfig &cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    switch (cfg.scenario) {
        case Scenario::Compile: r = detail::run_compile(cfg); break;
        case Scenario::Verify: r = detail::run_verify(cfg); break;
        case Scenario::Prepare: r = detail::run_prepare(cfg); break;
        case Scenario::EntropyCheck: r = detail::run_entropy_check(cfg); break;
        case Scenario::Obstruction: r = detail::run_obstruction(cfg); break;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    r.report["tool"] = kToolName;
    r.report["version"] = kVersion;
    r.report["config"] = {{"scenario", scenario_name(cfg.scenario)},
                          {"parameters", cfg.parameters},
                          {"seed", cfg.seed},
                          {"output_path", cfg.output_path}};
    r.report["passed"] = r.passed;
    r.report["wall_clock_seconds"] = elapsed.count();
    return r;
}

/// Report with timing fields removed, for reproducibility comparisons.
inline nlohmann::json strip_timing(nlohmann::json report) {
    report.erase("wall_clock_seconds");
    return report;
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_HARNESS_HPP
