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
 * @file gates.hpp
 * @brief Fixed pulse decompositions of two-qubit gates on the four-level
 *        register, their verification up to global phase, and the
 *        determinant argument that rules out an exact CNOT.
 */

#ifndef QUDIT_PULSE_GATES_HPP
#define QUDIT_PULSE_GATES_HPP

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "qudit_pulse/core.hpp"
#include "qudit_pulse/pulse.hpp"

namespace qudit_pulse {

enum class GateName { ISWAP, H_A, H_B, H_AB, CNOT };

inline constexpr std::array<GateName, 5> kAllGates = {GateName::ISWAP, GateName::H_A, GateName::H_B,
                                                      GateName::H_AB, GateName::CNOT};

constexpr std::string_view gate_name(GateName g) {
    switch (g) {
        case GateName::ISWAP: return "ISWAP";
        case GateName::H_A: return "H_A";
        case GateName::H_B: return "H_B";
        case GateName::H_AB: return "H_AB";
        case GateName::CNOT: return "CNOT";
    }
    return "?";
}

/// Case-insensitive parse; accepts '-' in place of '_'.
inline GateName parse_gate(std::string_view text) {
    std::string norm;
    for (char c : text) {
        if (c == '-') c = '_';
        norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    for (GateName g : kAllGates)
        if (gate_name(g) == norm) return g;
    throw Error(ErrorCode::UnknownGate, "unknown gate '" + std::string(text) +
                                            "' (expected ISWAP, H_A, H_B, H_AB or CNOT)");
}

/// Gate matrix in the level basis |0>..|3> = |00>..|11>.
inline Matrix4 target_matrix(GateName g) {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix4 m;
    switch (g) {
        case GateName::ISWAP:
            m << 1, 0, 0, 0,
                 0, 0, kI, 0,
                 0, kI, 0, 0,
                 0, 0, 0, 1;
            break;
        case GateName::H_A:
            m << h, 0, h, 0,
                 0, h, 0, h,
                 h, 0, -h, 0,
                 0, h, 0, -h;
            break;
        case GateName::H_B:
            m << h, h, 0, 0,
                 h, -h, 0, 0,
                 0, 0, h, h,
                 0, 0, h, -h;
            break;
        case GateName::H_AB:
            m << 0.5, 0.5, 0.5, 0.5,
                 0.5, -0.5, 0.5, -0.5,
                 0.5, 0.5, -0.5, -0.5,
                 0.5, -0.5, -0.5, 0.5;
            break;
        case GateName::CNOT:
            m << 1, 0, 0, 0,
                 0, 1, 0, 0,
                 0, 0, 0, 1,
                 0, 0, 1, 0;
            break;
    }
    return m;
}

struct GateSpec {
    GateName name;
    Matrix4 target;
};

inline GateSpec gate_spec(GateName g) { return {g, target_matrix(g)}; }

/// A pulse schedule together with the gate it implements; the schedule
/// product equals achieved_phase * target.
struct CompiledGate {
    GateSpec spec;
    PulseSchedule schedule;
    Complex achieved_phase{1.0, 0.0};
};

/// The X-pulse sequences, already in time order.
inline PulseSchedule pulse_line(GateName g) {
    constexpr double pi = std::numbers::pi;
    switch (g) {
        case GateName::ISWAP:
            return {Pulse::x(1, 2, 3 * pi)};
        case GateName::H_A:
            return {Pulse::x(2, 3, pi), Pulse::x(0, 3, 3.5 * pi), Pulse::x(1, 2, 3.5 * pi),
                    Pulse::x(2, 3, pi)};
        case GateName::H_B:
            return {Pulse::x(1, 3, pi), Pulse::x(0, 3, 3.5 * pi), Pulse::x(1, 2, 3.5 * pi),
                    Pulse::x(1, 3, pi)};
        case GateName::H_AB:
            return {Pulse::x(1, 3, 2 * pi),   Pulse::x(1, 2, 3 * pi),   Pulse::x(0, 2, 3.5 * pi),
                    Pulse::x(1, 3, 2.5 * pi), Pulse::x(0, 1, 3.5 * pi), Pulse::x(2, 3, 0.5 * pi),
                    Pulse::x(1, 2, pi)};
        case GateName::CNOT:
            break;
    }
    throw Error(ErrorCode::UnsupportedGate,
                "CNOT has determinant -1 while every pulse product lies in SU(4); "
                "no pulse schedule realizes it exactly");
}

/// The intermediate form built from y rotations, in time order. Contains Y
/// pulses; run it through lower_schedule before treating it as hardware input.
inline PulseSchedule ry_form(GateName g) {
    constexpr double pi = std::numbers::pi;
    switch (g) {
        case GateName::ISWAP:
            return pulse_line(g);
        case GateName::H_A:
            return {Pulse::x(2, 3, 2 * pi), Pulse::y(0, 2, pi / 2), Pulse::y(1, 3, pi / 2)};
        case GateName::H_B:
            return {Pulse::x(1, 3, 2 * pi), Pulse::y(0, 1, pi / 2), Pulse::y(2, 3, pi / 2)};
        case GateName::H_AB:
            return {Pulse::x(1, 3, 2 * pi), Pulse::y(0, 1, pi / 2), Pulse::y(2, 3, 2.5 * pi),
                    Pulse::y(0, 2, pi / 2), Pulse::y(1, 3, pi / 2)};
        case GateName::CNOT:
            break;
    }
    return pulse_line(g);  // throws for CNOT
}

inline CompiledGate compile(GateName g) {
    GateSpec spec = gate_spec(g);
    PulseSchedule schedule = pulse_line(g);
    const PhaseFit fit = phase_fit(schedule_unitary(schedule), spec.target);
    return {std::move(spec), std::move(schedule), fit.phase};
}

struct VerifyReport {
    double distance = 0.0;
    Complex phase{1.0, 0.0};
    std::size_t pulse_count = 0;
    /// True when the product equals the target with phase 1, not just up to phase.
    bool exact = false;
    double unitarity_defect = 0.0;
};

/// Checks an arbitrary schedule against a target; Y pulses are lowered first.
inline VerifyReport verify_schedule(const PulseSchedule &schedule, const Matrix4 &target,
                                    AncillaPolicy policy = AncillaPolicy::Lowest,
                                    double tol = kExactTol) {
    const PulseSchedule lowered = lower_schedule(schedule, policy);
    const Matrix4 u = schedule_unitary(lowered);
    const PhaseFit fit = phase_fit(u, target);
    VerifyReport r;
    r.distance = fit.distance;
    r.phase = fit.phase;
    r.pulse_count = lowered.size();
    r.exact = (u - target).norm() < tol;
    r.unitarity_defect = unitarity_defect(u);
    return r;
}

inline VerifyReport verify(const CompiledGate &c) {
    return verify_schedule(c.schedule, c.spec.target);
}

/// Lowered y-rotation form compared against both the target and the X-pulse line.
struct RyFormCheck {
    AncillaPolicy policy;
    double distance_to_target = 0.0;
    double distance_to_pulse_line = 0.0;
    Complex phase_to_target{1.0, 0.0};
};

inline RyFormCheck cross_check_ry_form(GateName g, AncillaPolicy policy) {
    const Matrix4 u = schedule_unitary(lower_schedule(ry_form(g), policy));
    const PhaseFit to_target = phase_fit(u, target_matrix(g));
    return {policy, to_target.distance, phase_distance(u, schedule_unitary(pulse_line(g))),
            to_target.phase};
}

/// Uniformly random schedule of 1..max_pulses pulses, mixed axes, angles in [-4pi, 4pi].
template <typename Rng>
PulseSchedule random_schedule(Rng &rng, int max_pulses) {
    constexpr double pi = std::numbers::pi;
    std::uniform_int_distribution<int> length(1, max_pulses);
    std::uniform_int_distribution<int> level(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_real_distribution<double> angle(-4 * pi, 4 * pi);
    PulseSchedule s;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
        const int j = level(rng);
        int k = level(rng);
        while (k == j) k = level(rng);
        s.push_back(Pulse::make(coin(rng) ? Axis::Y : Axis::X, j, k, angle(rng)));
    }
    return s;
}

struct ObstructionReport {
    Complex det_target{0.0, 0.0};
    /// det(e^{i pi/4} CNOT): the obstruction is to exact equality only.
    Complex det_phased_target{0.0, 0.0};
    Complex det_reachable{1.0, 0.0};
    std::size_t schedules_checked = 0;
    double max_det_deviation = 0.0;
    bool all_reachable_det_one = true;
};

inline ObstructionReport cnot_obstruction(std::size_t num_schedules = 1000, int max_pulses = 20,
                                          std::uint64_t seed = 0,
                                          double tol = kSpectralTol) {
    ObstructionReport r;
    const Matrix4 cnot = target_matrix(GateName::CNOT);
    r.det_target = cnot.determinant();
    r.det_phased_target = (std::polar(1.0, std::numbers::pi / 4) * cnot).determinant();
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < num_schedules; ++i) {
        const Complex det = schedule_unitary(random_schedule(rng, max_pulses)).determinant();
        const double dev = std::abs(det - Complex{1.0, 0.0});
        if (dev > r.max_det_deviation) {
            r.max_det_deviation = dev;
            r.det_reachable = det;
        }
        if (dev > tol) r.all_reachable_det_one = false;
    }
    r.schedules_checked = num_schedules;
    return r;
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_GATES_HPP
