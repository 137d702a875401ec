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
 * @file entropy.hpp
 * @brief Shannon and Renyi entropies of computational-basis statistics and
 *        the log 2 / log 4 entropic uncertainty checks.
 *
 * All logarithms are base 2, so every entropy and bound is in bits: the
 * qubit bound log 2 is 1 bit and the two-qubit bound log 4 is 2 bits.
 */

#ifndef QUDIT_PULSE_ENTROPY_HPP
#define QUDIT_PULSE_ENTROPY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <vector>

#include "qudit_pulse/core.hpp"
#include "qudit_pulse/gates.hpp"
#include "qudit_pulse/pulse.hpp"
#include "qudit_pulse/state_prep.hpp"

namespace qudit_pulse {

/// Margin below which an inequality counts as violated.
inline constexpr double kMarginTol = 1e-10;
/// |alpha - 1| below which the Renyi entropy takes the Shannon branch.
inline constexpr double kShannonBranch = 1e-8;

/// Nonnegative weights of length 2 or 4 summing to one.
class ProbabilityVector {
   public:
    static ProbabilityVector from(std::span<const double> p, double tol = kSpectralTol) {
        if (p.size() != 2 && p.size() != 4)
            throw Error(ErrorCode::DimensionMismatch, "probability vector must have length 2 or 4");
        std::vector<double> v(p.begin(), p.end());
        double total = 0.0;
        for (double &x : v) {
            if (!std::isfinite(x) || x < -tol)
                throw Error(ErrorCode::Domain, "probabilities must be finite and nonnegative");
            if (x < 0.0) x = 0.0;
            total += x;
        }
        if (std::abs(total - 1.0) > tol) {
            std::ostringstream os;
            os << "probabilities sum to " << total << ", not 1";
            throw Error(ErrorCode::Domain, os.str());
        }
        return ProbabilityVector(std::move(v));
    }
    static ProbabilityVector from(std::initializer_list<double> p) {
        return from(std::span<const double>(p.begin(), p.size()));
    }
    template <int N>
    static ProbabilityVector from(const Eigen::Matrix<double, N, 1> &p) {
        return from(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
    }

    /// Empirical frequencies of a count vector.
    template <std::size_t N>
    static ProbabilityVector from_counts(const std::array<std::uint64_t, N> &counts) {
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        if (total == 0) throw Error(ErrorCode::InvalidShots, "no shots recorded");
        std::vector<double> v;
        for (auto c : counts) v.push_back(static_cast<double>(c) / static_cast<double>(total));
        return from(std::span<const double>(v));
    }

    const std::vector<double> &values() const noexcept { return p_; }
    std::size_t size() const noexcept { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }

   private:
    explicit ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {}
    std::vector<double> p_;
};

inline double shannon(const ProbabilityVector &p) {
    double h = 0.0;
    for (double x : p.values())
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

inline double renyi(const ProbabilityVector &p, double alpha) {
    if (!(alpha >= 0.0)) throw Error(ErrorCode::InvalidAlpha, "Renyi order must be >= 0");
    if (std::abs(alpha - 1.0) < kShannonBranch) return shannon(p);
    if (alpha == 0.0) {
        int support = 0;
        for (double x : p.values())
            if (x > 0.0) ++support;
        return std::log2(static_cast<double>(support));
    }
    if (std::isinf(alpha)) {
        double pmax = 0.0;
        for (double x : p.values()) pmax = std::max(pmax, x);
        return -std::log2(pmax);
    }
    double s = 0.0;
    for (double x : p.values())
        if (x > 0.0) s += std::pow(x, alpha);
    return std::log2(s) / (1.0 - alpha);
}

/// beta with 1/alpha + 1/beta = 2; alpha = infinity maps to 1/2.
inline double conjugate_beta(double alpha) {
    if (!(alpha > 0.5))
        throw Error(ErrorCode::NoConjugate, "conjugate exponent exists only for alpha > 1/2");
    if (std::isinf(alpha)) return 0.5;
    return alpha / (2.0 * alpha - 1.0);
}

struct InequalityReport {
    double lhs = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool satisfied = true;
    std::optional<double> alpha;
    std::optional<double> beta;
};

inline InequalityReport make_report(double lhs, double bound) {
    InequalityReport r;
    r.lhs = lhs;
    r.bound = bound;
    r.margin = lhs - bound;
    r.satisfied = r.margin >= -kMarginTol;
    return r;
}

inline const Matrix2 &hadamard2() {
    static const Matrix2 h = [] {
        const double s = 1.0 / std::sqrt(2.0);
        Matrix2 m;
        m << s, s, s, -s;
        return m;
    }();
    return h;
}

inline ProbabilityVector diagonal_of(const Matrix2 &m) {
    return ProbabilityVector::from({m(0, 0).real(), m(1, 1).real()});
}

/// Statistics of rho0 and of H rho0 H in the computational basis.
inline std::pair<ProbabilityVector, ProbabilityVector> conjugate_statistics(const QubitDensity &rho0) {
    const Matrix2 &h = hadamard2();
    return {diagonal_of(rho0.matrix()), diagonal_of(h * rho0.matrix() * h)};
}

/// H(rho0) + H(H rho0 H) >= 1 bit.
inline InequalityReport check_log2(const QubitDensity &rho0) {
    const auto [p, q] = conjugate_statistics(rho0);
    return make_report(shannon(p) + shannon(q), 1.0);
}

/// Renyi version, evaluated with alpha on either term.
struct RenyiCheck {
    InequalityReport forward;   // alpha on rho0, beta on H rho0 H
    InequalityReport reversed;  // beta on rho0, alpha on H rho0 H

    const InequalityReport &worst() const {
        return reversed.margin < forward.margin ? reversed : forward;
    }
    bool satisfied() const { return forward.satisfied && reversed.satisfied; }
};

inline RenyiCheck renyi_pair(const ProbabilityVector &p, const ProbabilityVector &q, double alpha,
                             double bound) {
    const double beta = conjugate_beta(alpha);
    RenyiCheck c;
    c.forward = make_report(renyi(p, alpha) + renyi(q, beta), bound);
    c.forward.alpha = alpha;
    c.forward.beta = beta;
    c.reversed = make_report(renyi(p, beta) + renyi(q, alpha), bound);
    c.reversed.alpha = beta;
    c.reversed.beta = alpha;
    return c;
}

inline RenyiCheck check_renyi(const QubitDensity &rho0, double alpha) {
    const auto [p, q] = conjugate_statistics(rho0);
    return renyi_pair(p, q, alpha, 1.0);
}

struct Log4Report {
    InequalityReport inequality;
    /// max |p_schedule - p_exact| over the four outcomes of (H x H)|psi>.
    double cross_check_deviation = 0.0;
};

/// H(|psi|^2) + H(|(H x H) psi|^2) >= 2 bits; H x H is applied through the
/// compiled seven-pulse schedule and cross-checked against the exact matrix.
inline Log4Report check_log4(const PureState4 &psi) {
    static const PulseSchedule hh = compile(GateName::H_AB).schedule;
    static const Matrix4 hh_exact = target_matrix(GateName::H_AB);
    const Eigen::Vector4d p = psi.probabilities();
    const Eigen::Vector4d q = apply_schedule(hh, psi).probabilities();
    const Eigen::Vector4d q_exact = (hh_exact * psi.amplitudes()).cwiseAbs2();
    Log4Report r;
    r.inequality = make_report(shannon(ProbabilityVector::from(p)) + shannon(ProbabilityVector::from(q)), 2.0);
    r.cross_check_deviation = (q - q_exact).cwiseAbs().maxCoeff();
    return r;
}

/// Multinomial counts over the four levels. Deterministic for a given seed.
inline std::array<std::uint64_t, 4> sample_shots(const PureState4 &psi, std::int64_t shots,
                                                 std::uint64_t seed) {
    if (shots < 1) throw Error(ErrorCode::InvalidShots, "shots must be >= 1");
    const Eigen::Vector4d p = psi.probabilities();
    std::mt19937_64 rng(seed);
    std::array<std::uint64_t, 4> counts{};
    auto remaining = static_cast<std::uint64_t>(shots);
    double mass = p.sum();
    for (int m = 0; m < 3 && remaining > 0; ++m) {
        const double cond = mass > 0.0 ? std::clamp(p[m] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> draw(remaining, cond);
        counts[m] = draw(rng);
        remaining -= counts[m];
        mass -= p[m];
    }
    counts[3] = remaining;
    return counts;
}

/// Plug-in (maximum likelihood) Shannon estimate from counts.
template <std::size_t N>
double plugin_shannon(const std::array<std::uint64_t, N> &counts) {
    return shannon(ProbabilityVector::from_counts(counts));
}

/// Outcome statistics of virtual qubits A and B read off one four-outcome
/// measurement.
inline std::array<double, 2> marginal_a(const Eigen::Vector4d &p) { return {p[0] + p[1], p[2] + p[3]}; }
inline std::array<double, 2> marginal_b(const Eigen::Vector4d &p) { return {p[0] + p[2], p[1] + p[3]}; }

inline std::array<std::uint64_t, 2> marginal_a(const std::array<std::uint64_t, 4> &c) {
    return {c[0] + c[1], c[2] + c[3]};
}
inline std::array<std::uint64_t, 2> marginal_b(const std::array<std::uint64_t, 4> &c) {
    return {c[0] + c[2], c[1] + c[3]};
}

/// Prepares identical marginals rho0 on both qubits, applies the compiled
/// Hadamard to qubit B, and returns the state measured in the level basis.
/// Qubit A then carries the statistics of rho0 and qubit B those of H rho0 H.
inline PureState4 hadamard_pair_state(const BlochVector &target,
                                      const std::optional<NoiseModel> &noise = std::nullopt) {
    static const PulseSchedule hb = compile(GateName::H_B).schedule;
    const PulseSchedule s = concat(prep_schedule(identical_prep(target)), hb);
    return apply_schedule(s, PureState4::basis(0), noise);
}

/// log 2 check from the two marginals of a single four-outcome distribution.
inline InequalityReport log2_from_joint(const Eigen::Vector4d &p) {
    const auto a = marginal_a(p);
    const auto b = marginal_b(p);
    return make_report(shannon(ProbabilityVector::from(a)) + shannon(ProbabilityVector::from(b)), 1.0);
}

inline InequalityReport log2_from_counts(const std::array<std::uint64_t, 4> &counts) {
    return make_report(plugin_shannon(marginal_a(counts)) + plugin_shannon(marginal_b(counts)), 1.0);
}

inline RenyiCheck renyi_from_joint(const Eigen::Vector4d &p, double alpha) {
    const auto a = marginal_a(p);
    const auto b = marginal_b(p);
    return renyi_pair(ProbabilityVector::from(a), ProbabilityVector::from(b), alpha, 1.0);
}

inline RenyiCheck renyi_from_counts(const std::array<std::uint64_t, 4> &counts, double alpha) {
    return renyi_pair(ProbabilityVector::from_counts(marginal_a(counts)),
                      ProbabilityVector::from_counts(marginal_b(counts)), alpha, 1.0);
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_ENTROPY_HPP
