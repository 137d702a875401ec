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

#include "qudit_pulse/entropy.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qudit_pulse/sampling.hpp"
#include "test_util.hpp"

using namespace qudit_pulse;

TEST(shannon, examples) {
    EXPECT_EQ(shannon(ProbabilityVector::from({1.0, 0.0})), 0.0);
    EXPECT_NEAR(shannon(ProbabilityVector::from({0.5, 0.5})), 1.0, 1e-15);
    EXPECT_NEAR(shannon(ProbabilityVector::from({0.5, 0.25, 0.125, 0.125})), 1.75, 1e-15);
}

TEST(shannon, permutation_invariant_and_bounded) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> p = random_probabilities(rng, 4);
        const double h = shannon(ProbabilityVector::from(p));
        EXPECT_NEAR(h, oracle::shannon_bits(p), 1e-12);
        EXPECT_LE(h, 2.0 + 1e-12);
        EXPECT_GE(h, 0.0);
        std::shuffle(p.begin(), p.end(), rng);
        EXPECT_NEAR(shannon(ProbabilityVector::from(p)), h, 1e-12);
    }
}

TEST(probability_vector, validation) {
    EXPECT_QP_ERROR(ProbabilityVector::from({0.5, 0.6}), ErrorCode::Domain);
    EXPECT_QP_ERROR(ProbabilityVector::from({1.2, -0.2}), ErrorCode::Domain);
    EXPECT_QP_ERROR(ProbabilityVector::from({0.2, 0.3, 0.5}), ErrorCode::DimensionMismatch);
}

TEST(renyi, examples) {
    EXPECT_NEAR(renyi(ProbabilityVector::from({0.5, 0.5}), 2.0), 1.0, 1e-15);
    // -log2(0.8^2 + 0.2^2) = -log2(0.68)
    EXPECT_NEAR(renyi(ProbabilityVector::from({0.8, 0.2}), 2.0), 0.556393348524385, 1e-12);
    EXPECT_NEAR(renyi(ProbabilityVector::from({0.8, 0.2}), 2.0), -std::log2(0.68), 1e-15);
    EXPECT_EQ(renyi(ProbabilityVector::from({0.7, 0.0, 0.3, 0.0}), 0.0), 1.0);
    EXPECT_QP_ERROR(renyi(ProbabilityVector::from({0.5, 0.5}), -0.1), ErrorCode::InvalidAlpha);
}

TEST(renyi, shannon_limit) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 100; ++i) {
        const ProbabilityVector p = ProbabilityVector::from(random_probabilities(rng, 4));
        EXPECT_NEAR(renyi(p, 1 + 1e-9), shannon(p), 1e-6);
        EXPECT_NEAR(renyi(p, 1 - 1e-9), shannon(p), 1e-6);
        // just outside the Shannon branch the closed form is used and still agrees
        EXPECT_NEAR(renyi(p, 1 + 1e-6), shannon(p), 1e-5);
    }
}

TEST(renyi, nonincreasing_in_alpha_and_maximal_at_uniform) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const ProbabilityVector p = ProbabilityVector::from(random_probabilities(rng, 4));
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= 99; ++k) {
            const double alpha = 0.1 + k * 0.1;
            const double r = renyi(p, alpha);
            EXPECT_LE(r, prev + 1e-12);
            EXPECT_LE(r, 2.0 + 1e-12);
            prev = r;
        }
    }
    for (double alpha : {0.0, 0.5, 1.0, 2.0, 7.0})
        EXPECT_NEAR(renyi(ProbabilityVector::from({0.25, 0.25, 0.25, 0.25}), alpha), 2.0, 1e-12);
}

TEST(conjugate_beta, examples) {
    EXPECT_EQ(conjugate_beta(1.0), 1.0);
    EXPECT_NEAR(conjugate_beta(2.0), 2.0 / 3.0, 1e-15);
    EXPECT_EQ(conjugate_beta(std::numeric_limits<double>::infinity()), 0.5);
    EXPECT_NEAR(conjugate_beta(1e12), 0.5, 1e-11);
    for (double a : {0.6, 0.75, 1.5, 5.0}) EXPECT_NEAR(1 / a + 1 / conjugate_beta(a), 2.0, 1e-14);
    EXPECT_QP_ERROR(conjugate_beta(0.5), ErrorCode::NoConjugate);
    EXPECT_QP_ERROR(conjugate_beta(0.2), ErrorCode::NoConjugate);
}

TEST(check_log2, equality_and_maximally_mixed) {
    const InequalityReport r0 = check_log2(bloch_to_qubit({0, 0, 1}));
    EXPECT_NEAR(r0.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r0.margin, 0.0, 1e-10);
    EXPECT_TRUE(r0.satisfied);
    const InequalityReport rm = check_log2(bloch_to_qubit({0, 0, 0}));
    EXPECT_NEAR(rm.lhs, 2.0, 1e-12);
    EXPECT_NEAR(rm.margin, 1.0, 1e-12);
}

TEST(check_log2, random_states_never_violate) {
    std::mt19937_64 rng(34);
    double min_margin = 10;
    for (int i = 0; i < 10000; ++i)
        min_margin = std::min(min_margin, check_log2(bloch_to_qubit(random_bloch_ball(rng))).margin);
    EXPECT_GE(min_margin, -1e-10);
}

TEST(check_log2, margin_ignores_y_component) {
    // diag(rho) depends on z, diag(H rho H) on x; y enters neither.
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 200; ++i) {
        const BlochVector v = random_bloch_ball(rng);
        const double ymax = std::sqrt(std::max(0.0, 1 - v.x * v.x - v.z * v.z));
        const double m1 = check_log2(bloch_to_qubit({v.x, ymax * u(rng), v.z})).margin;
        const double m2 = check_log2(bloch_to_qubit({v.x, ymax * u(rng), v.z})).margin;
        EXPECT_NEAR(m1, m2, 1e-12);
    }
}

TEST(check_renyi, alpha_one_is_check_log2_bit_for_bit) {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 200; ++i) {
        const QubitDensity rho = bloch_to_qubit(random_bloch_ball(rng));
        const RenyiCheck c = check_renyi(rho, 1.0);
        const InequalityReport s = check_log2(rho);
        EXPECT_EQ(c.forward.lhs, s.lhs);
        EXPECT_EQ(c.forward.margin, s.margin);
        EXPECT_EQ(c.reversed.margin, s.margin);
    }
}

TEST(check_renyi, ground_state_equality) {
    const RenyiCheck c = check_renyi(bloch_to_qubit({0, 0, 1}), 2.0);
    EXPECT_NEAR(c.forward.lhs, 1.0, 1e-12);
    EXPECT_NEAR(c.forward.margin, 0.0, 1e-10);
    EXPECT_EQ(*c.forward.beta, conjugate_beta(2.0));
}

TEST(check_renyi, alpha_grid_never_violates) {
    std::mt19937_64 rng(37);
    for (double alpha : {0.6, 0.75, 1.0, 1.5, 2.0, 5.0})
        for (int i = 0; i < 1000; ++i) {
            const RenyiCheck c = check_renyi(bloch_to_qubit(random_bloch_ball(rng)), alpha);
            EXPECT_TRUE(c.satisfied()) << alpha << " " << c.worst().margin;
        }
    EXPECT_QP_ERROR(check_renyi(bloch_to_qubit({0, 0, 1}), 0.5), ErrorCode::NoConjugate);
}

TEST(check_log4, equality_cases) {
    const Log4Report g = check_log4(PureState4::basis(0));
    EXPECT_NEAR(g.inequality.lhs, 2.0, 1e-12);
    EXPECT_NEAR(g.inequality.margin, 0.0, 1e-10);
    Vector4 u;
    u << 0.5, 0.5, 0.5, 0.5;
    const Log4Report f = check_log4(PureState4::from_amplitudes(u));
    EXPECT_NEAR(f.inequality.margin, 0.0, 1e-10);
    EXPECT_LT(f.cross_check_deviation, 1e-12);
}

TEST(check_log4, haar_states_never_violate) {
    std::mt19937_64 rng(38);
    for (int i = 0; i < 10000; ++i) {
        const Log4Report r = check_log4(random_haar_state(rng));
        ASSERT_TRUE(r.inequality.satisfied) << r.inequality.margin;
        ASSERT_LT(r.cross_check_deviation, 1e-12);
    }
}

TEST(sample_shots, basis_state_is_deterministic) {
    const auto c = sample_shots(PureState4::basis(3), 1000, 5);
    EXPECT_EQ(c[0] + c[1] + c[2], 0u);
    EXPECT_EQ(c[3], 1000u);
}

TEST(sample_shots, frozen_draw_for_uniform_state) {
    Vector4 u;
    u << 0.5, 0.5, 0.5, 0.5;
    const auto c = sample_shots(PureState4::from_amplitudes(u), 1000000, 2024);
    // Recorded once from this generator (mt19937_64 + std::binomial_distribution, libstdc++).
    const std::array<std::uint64_t, 4> frozen = {249712, 250139, 249842, 250307};
    EXPECT_EQ(c, frozen);
    for (auto n : c) EXPECT_NEAR(static_cast<double>(n) / 1e6, 0.25, 0.002);
    EXPECT_EQ(sample_shots(PureState4::from_amplitudes(u), 1000000, 2024), c);
}

TEST(sample_shots, invalid_shots) {
    EXPECT_QP_ERROR(sample_shots(PureState4::basis(0), 0, 1), ErrorCode::InvalidShots);
}

TEST(sample_shots, plugin_error_shrinks_with_shots) {
    Vector4 v;
    v << 0.7, Complex(0.1, 0.4), 0.3, Complex(-0.2, 0.1);
    const PureState4 psi = PureState4::normalized(v);
    const double exact = shannon(ProbabilityVector::from(psi.probabilities()));
    double previous = std::numeric_limits<double>::infinity();
    for (std::int64_t shots : {100, 1000, 10000, 100000}) {
        double err = 0;
        for (int s = 0; s < 100; ++s) err += std::abs(plugin_shannon(sample_shots(psi, shots, s)) - exact);
        err /= 100;
        EXPECT_LT(err, previous) << shots;
        previous = err;
    }
}

TEST(hadamard_pair_state, qubit_statistics_are_conjugate) {
    std::mt19937_64 rng(39);
    for (int i = 0; i < 200; ++i) {
        const BlochVector target = random_bloch_ball(rng);
        const Eigen::Vector4d p = hadamard_pair_state(target).probabilities();
        const InequalityReport joint = log2_from_joint(p);
        const InequalityReport direct = check_log2(bloch_to_qubit(target));
        EXPECT_NEAR(joint.lhs, direct.lhs, 1e-10);
        EXPECT_TRUE(joint.satisfied);
    }
}

TEST(hadamard_pair_state, sampled_margin_tracks_exact) {
    const BlochVector target{0.3, -0.2, 0.5};
    const PureState4 psi = hadamard_pair_state(target);
    const double exact = log2_from_joint(psi.probabilities()).margin;
    const double sampled = log2_from_counts(sample_shots(psi, 1000000, 77)).margin;
    EXPECT_NEAR(exact, sampled, 0.01);
}
