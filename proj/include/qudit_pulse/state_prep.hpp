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
 * @file state_prep.hpp
 * @brief Three-stage preparation of pure two-qubit states whose marginals
 *        have prescribed Bloch vectors of equal length.
 *
 * Starting from |0>, the schedule applies
 *   1. an entangling x pulse of angle theta0 on transition 0-3,
 *   2. an x rotation by theta1 on each virtual qubit,
 *   3. a y rotation by theta2 on each virtual qubit (lowered to x pulses).
 * The resulting marginal of qubit j has Bloch vector
 *   x = cos(theta0) cos(theta1_j) sin(theta2_j)
 *   y = -cos(theta0) sin(theta1_j)
 *   z = cos(theta0) cos(theta1_j) cos(theta2_j).
 */

#ifndef QUDIT_PULSE_STATE_PREP_HPP
#define QUDIT_PULSE_STATE_PREP_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "qudit_pulse/core.hpp"
#include "qudit_pulse/pulse.hpp"

namespace qudit_pulse {

struct PrepAngles {
    double theta0 = 0.0;
    double theta1_a = 0.0;
    double theta2_a = 0.0;
    double theta1_b = 0.0;
    double theta2_b = 0.0;

    friend bool operator==(const PrepAngles &, const PrepAngles &) = default;
};

struct PrepTarget {
    BlochVector bloch_a;
    BlochVector bloch_b;
};

/// Y pulses are lowered with `policy`; the result contains X pulses only.
inline PulseSchedule prep_schedule(const PrepAngles &a,
                                   AncillaPolicy policy = AncillaPolicy::Lowest) {
    const PulseSchedule staged = {
        Pulse::x(0, 3, a.theta0),
        // x rotations: qubit A acts on transitions 1-3 and 0-2, qubit B on 0-1 and 2-3
        Pulse::x(1, 3, a.theta1_a), Pulse::x(0, 2, a.theta1_a),
        Pulse::x(0, 1, a.theta1_b), Pulse::x(2, 3, a.theta1_b),
        // y rotations
        Pulse::y(1, 3, a.theta2_a), Pulse::y(0, 2, a.theta2_a),
        Pulse::y(0, 1, a.theta2_b), Pulse::y(2, 3, a.theta2_b),
    };
    return lower_schedule(staged, policy);
}

inline PureState4 prepare_state(const PrepAngles &a,
                                const std::optional<NoiseModel> &noise = std::nullopt) {
    return apply_schedule(prep_schedule(a), PureState4::basis(0), noise);
}

inline std::pair<BlochVector, BlochVector> predicted_bloch(const PrepAngles &a) {
    const double c0 = std::cos(a.theta0);
    auto one = [c0](double t1, double t2) {
        return BlochVector{c0 * std::cos(t1) * std::sin(t2), -c0 * std::sin(t1),
                           c0 * std::cos(t1) * std::cos(t2)};
    };
    return {one(a.theta1_a, a.theta2_a), one(a.theta1_b, a.theta2_b)};
}

/// Canonical angles reproducing the target marginals: theta0 in [0, pi/2],
/// theta1 in [-pi/2, pi/2], theta2 in (-pi, pi]. A zero-radius target zeroes
/// everything after theta0.
inline PrepAngles solve_angles(const PrepTarget &t, double tol = kSpectralTol) {
    const double ra = t.bloch_a.norm();
    const double rb = t.bloch_b.norm();
    if (!std::isfinite(ra) || !std::isfinite(rb))
        throw Error(ErrorCode::Domain, "target Bloch vectors must be finite");
    if (ra > 1.0 + tol || rb > 1.0 + tol) {
        std::ostringstream os;
        os << "target Bloch radius exceeds 1 (|a| = " << ra << ", |b| = " << rb << ")";
        throw Error(ErrorCode::Domain, os.str());
    }
    if (std::abs(ra - rb) > tol) {
        std::ostringstream os;
        os << "marginals of a pure state need equal Bloch radii; got |a| = " << ra
           << ", |b| = " << rb;
        throw Error(ErrorCode::InfeasibleTarget, os.str());
    }
    const double r = std::min(1.0, 0.5 * (ra + rb));
    PrepAngles a;
    a.theta0 = std::acos(r);
    if (r < kExactTol) {
        a.theta0 = std::numbers::pi / 2;
        return a;
    }
    auto solve = [](const BlochVector &v, double &t1, double &t2) {
        const double rj = v.norm();
        t1 = std::asin(std::clamp(-v.y / rj, -1.0, 1.0));
        t2 = std::atan2(v.x, v.z);
        if (t2 == -std::numbers::pi) t2 = std::numbers::pi;
    };
    solve(t.bloch_a, a.theta1_a, a.theta2_a);
    solve(t.bloch_b, a.theta1_b, a.theta2_b);
    return a;
}

/// Angles giving identical marginals on both qubits.
inline PrepAngles identical_prep(const BlochVector &target, double tol = kSpectralTol) {
    PrepAngles a = solve_angles({target, target}, tol);
    a.theta1_b = a.theta1_a;
    a.theta2_b = a.theta2_a;
    return a;
}

/// Marginals of a prepared pure state.
struct Marginals {
    QubitDensity a;
    QubitDensity b;
};

inline Marginals marginals_of(const PureState4 &psi) {
    const DensityMatrix4 rho = state_to_density(psi);
    return {reduce_A(rho), reduce_B(rho)};
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_STATE_PREP_HPP
