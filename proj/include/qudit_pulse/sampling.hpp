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

// Random inputs for sweeps. All generators take the engine by reference so
// callers control seeding; trial i of a sweep uses seed base + i.

#ifndef QUDIT_PULSE_SAMPLING_HPP
#define QUDIT_PULSE_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qudit_pulse/core.hpp"

namespace qudit_pulse {

using Engine = std::mt19937_64;

inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) { return base + trial; }

/// Uniform in the unit ball.
template <typename Rng>
BlochVector random_bloch_ball(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double x, y, z, n;
    do {
        x = g(rng);
        y = g(rng);
        z = g(rng);
        n = std::sqrt(x * x + y * y + z * z);
    } while (n == 0.0);
    const double r = std::cbrt(u(rng));
    return {r * x / n, r * y / n, r * z / n};
}

/// Uniform on the sphere of the given radius.
template <typename Rng>
BlochVector random_bloch_sphere(Rng &rng, double radius) {
    std::normal_distribution<double> g(0.0, 1.0);
    double x, y, z, n;
    do {
        x = g(rng);
        y = g(rng);
        z = g(rng);
        n = std::sqrt(x * x + y * y + z * z);
    } while (n == 0.0);
    return {radius * x / n, radius * y / n, radius * z / n};
}

/// Haar-distributed pure state (normalized complex Gaussian vector).
template <typename Rng>
PureState4 random_haar_state(Rng &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector4 v;
    do {
        for (int i = 0; i < 4; ++i) v[i] = Complex{g(rng), g(rng)};
    } while (v.norm() == 0.0);
    return PureState4::normalized(v);
}

/// Flat Dirichlet draw of length n.
template <typename Rng>
std::vector<double> random_probabilities(Rng &rng, int n) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double &v : p) total += (v = e(rng));
    for (double &v : p) v /= total;
    return p;
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_SAMPLING_HPP
