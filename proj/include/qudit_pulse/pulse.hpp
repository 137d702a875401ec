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
 * @file pulse.hpp
 * @brief Two-level rotation pulses on the four-level system, schedules of
 *        such pulses, and the three-pulse lowering of y rotations.
 *
 * Schedules are stored in time order: element 0 is applied first. The
 * corresponding operator product therefore reads right to left, with the
 * last pulse leftmost.
 */

#ifndef QUDIT_PULSE_PULSE_HPP
#define QUDIT_PULSE_PULSE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qudit_pulse/core.hpp"

namespace qudit_pulse {

enum class Axis { X, Y };

namespace detail {

inline void check_transition(int j, int k) {
    if (j < 0 || j > 3 || k < 0 || k > 3)
        throw Error(ErrorCode::LevelsOutOfRange, "transition levels must lie in 0..3");
    if (j == k) throw Error(ErrorCode::DegenerateTransition, "transition needs two distinct levels");
}

inline Matrix4 embed_block(int j, int k, Complex jj, Complex jk, Complex kj, Complex kk) {
    Matrix4 u = Matrix4::Identity();
    u(j, j) = jj;
    u(j, k) = jk;
    u(k, j) = kj;
    u(k, k) = kk;
    return u;
}

}  // namespace detail

/// x rotation by theta on span{|j>, |k>}, identity on the complement.
inline Matrix4 rx_matrix(int j, int k, double theta) {
    detail::check_transition(j, k);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return detail::embed_block(j, k, c, Complex{0.0, -s}, Complex{0.0, -s}, c);
}

/// y rotation by theta on span{|j>, |k>} with the block written in the
/// ordered basis (|j>, |k>); ry_matrix(k, j, t) == ry_matrix(j, k, -t).
inline Matrix4 ry_matrix(int j, int k, double theta) {
    detail::check_transition(j, k);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return detail::embed_block(j, k, c, -s, s, c);
}

/// One rotation on a single transition. Levels are kept as j < k; a Y pulse
/// given with reversed levels is stored with its angle negated, which is the
/// same operator.
class Pulse {
   public:
    static Pulse x(int j, int k, double angle) { return make(Axis::X, j, k, angle); }
    static Pulse y(int j, int k, double angle) { return make(Axis::Y, j, k, angle); }

    static Pulse make(Axis axis, int j, int k, double angle) {
        detail::check_transition(j, k);
        if (!std::isfinite(angle)) throw Error(ErrorCode::Domain, "pulse angle must be finite");
        if (j > k) {
            std::swap(j, k);
            if (axis == Axis::Y) angle = -angle;
        }
        return Pulse(axis, j, k, angle);
    }

    Axis axis() const noexcept { return axis_; }
    int low() const noexcept { return j_; }
    int high() const noexcept { return k_; }
    double angle() const noexcept { return angle_; }

    Pulse with_angle(double angle) const { return make(axis_, j_, k_, angle); }

    Matrix4 matrix() const {
        return axis_ == Axis::X ? rx_matrix(j_, k_, angle_) : ry_matrix(j_, k_, angle_);
    }

    friend bool operator==(const Pulse &, const Pulse &) = default;

   private:
    Pulse(Axis axis, int j, int k, double angle) : axis_(axis), j_(j), k_(k), angle_(angle) {}

    Axis axis_;
    int j_;
    int k_;
    double angle_;
};

/// Time-ordered pulse list; empty means identity.
using PulseSchedule = std::vector<Pulse>;

inline bool is_x_only(const PulseSchedule &s) {
    return std::none_of(s.begin(), s.end(), [](const Pulse &p) { return p.axis() == Axis::Y; });
}

/// Multiplicative over-rotation: theta -> theta (1 + eps), eps ~ N(0, sigma^2)
/// drawn independently per pulse from a generator seeded with `seed`.
struct NoiseModel {
    double relative_sigma = 0.0;
    std::uint64_t seed = 0;

    NoiseModel() = default;
    NoiseModel(double sigma, std::uint64_t s) : relative_sigma(sigma), seed(s) {
        if (!(sigma >= 0.0) || !std::isfinite(sigma))
            throw Error(ErrorCode::InvalidNoise, "relative_sigma must be finite and >= 0");
    }
};

/// Three X pulses realizing ry_matrix(j, k, theta) through ancilla level l.
/// Time order: (j,l,3pi), (k,l,theta), (j,l,pi).
inline PulseSchedule lower_ry(int j, int k, double theta, int l) {
    detail::check_transition(j, k);
    if (l < 0 || l > 3) throw Error(ErrorCode::LevelsOutOfRange, "ancilla level must lie in 0..3");
    if (l == j || l == k)
        throw Error(ErrorCode::AncillaCollision, "ancilla level must differ from both rotated levels");
    constexpr double pi = std::numbers::pi;
    return {Pulse::x(j, l, 3.0 * pi), Pulse::x(k, l, theta), Pulse::x(j, l, pi)};
}

/// Which free level a Y pulse borrows when lowered.
enum class AncillaPolicy { Lowest, Highest };

inline int pick_ancilla(int j, int k, AncillaPolicy policy) {
    if (policy == AncillaPolicy::Lowest) {
        for (int l = 0; l < 4; ++l)
            if (l != j && l != k) return l;
    } else {
        for (int l = 3; l >= 0; --l)
            if (l != j && l != k) return l;
    }
    return -1;  // unreachable for valid transitions
}

/// Replaces every Y pulse by its X-pulse lowering; X pulses pass through.
inline PulseSchedule lower_schedule(const PulseSchedule &s,
                                    AncillaPolicy policy = AncillaPolicy::Lowest) {
    PulseSchedule out;
    out.reserve(s.size() * 3);
    for (const Pulse &p : s) {
        if (p.axis() == Axis::X) {
            out.push_back(p);
            continue;
        }
        const int l = pick_ancilla(p.low(), p.high(), policy);
        for (const Pulse &q : lower_ry(p.low(), p.high(), p.angle(), l)) out.push_back(q);
    }
    return out;
}

/// Left-multiplies `u` by the pulse operator, touching only rows j and k.
inline void apply_left(Matrix4 &u, const Pulse &p) {
    const int j = p.low();
    const int k = p.high();
    const double c = std::cos(p.angle() / 2.0);
    const double s = std::sin(p.angle() / 2.0);
    const Complex jk = p.axis() == Axis::X ? Complex{0.0, -s} : Complex{-s, 0.0};
    const Complex kj = p.axis() == Axis::X ? Complex{0.0, -s} : Complex{s, 0.0};
    for (int col = 0; col < u.cols(); ++col) {
        const Complex a = u(j, col);
        const Complex b = u(k, col);
        u(j, col) = c * a + jk * b;
        u(k, col) = kj * a + c * b;
    }
}

inline Matrix4 schedule_unitary(const PulseSchedule &s) {
    Matrix4 u = Matrix4::Identity();
    for (const Pulse &p : s) apply_left(u, p);
    return u;
}

/// Copy of the schedule with angles over-rotated per the noise model.
inline PulseSchedule perturb(const PulseSchedule &s, const NoiseModel &noise) {
    std::mt19937_64 rng(noise.seed);
    std::normal_distribution<double> standard(0.0, 1.0);
    PulseSchedule out;
    out.reserve(s.size());
    for (const Pulse &p : s) {
        const double eps = noise.relative_sigma * standard(rng);
        out.push_back(p.with_angle(p.angle() * (1.0 + eps)));
    }
    return out;
}

inline PureState4 apply_schedule(const PulseSchedule &s, const PureState4 &psi,
                                  const std::optional<NoiseModel> &noise = std::nullopt) {
    const Matrix4 u = noise ? schedule_unitary(perturb(s, *noise)) : schedule_unitary(s);
    return PureState4::from_amplitudes(u * psi.amplitudes());
}

inline PulseSchedule concat(PulseSchedule first, const PulseSchedule &then) {
    first.insert(first.end(), then.begin(), then.end());
    return first;
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_PULSE_HPP
