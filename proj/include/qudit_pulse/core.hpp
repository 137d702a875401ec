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
 * @file core.hpp
 * @brief Fixed-size linear algebra for a four-level system read as two
 *        virtual qubits.
 *
 * Level k of the four-level system is identified with the two-qubit basis
 * state |a b> where k = 2a + b, i.e. |0>=|00>, |1>=|01>, |2>=|10>, |3>=|11>.
 * Qubit A is the high bit and qubit B the low bit.
 *
 * Bloch vectors follow the Pauli expectation convention
 *     sigma = (I + x X + y Y + z Z) / 2,
 * so sigma_01 = (x - i y) / 2.
 */

#ifndef QUDIT_PULSE_CORE_HPP
#define QUDIT_PULSE_CORE_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "qudit_pulse/error.hpp"

namespace qudit_pulse {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector2 = Eigen::Matrix<Complex, 2, 1>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;
/// Runtime-sized matrix; only dimensions 2 and 4 are accepted by the API.
using ComplexMatrix = Eigen::MatrixXcd;

/// Default tolerance for identities that hold in exact arithmetic.
inline constexpr double kExactTol = 1e-12;
/// Default tolerance for spectral quantities (eigenvalues, determinants).
inline constexpr double kSpectralTol = 1e-10;

inline constexpr Complex kI{0.0, 1.0};

namespace detail {

template <int N>
bool all_finite(const Eigen::Matrix<Complex, N, N> &m) {
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
    return true;
}

template <int N>
void validate_density(const Eigen::Matrix<Complex, N, N> &m, double tol, double spectral_tol) {
    auto fail = [](const std::string &why) {
        throw Error(ErrorCode::InvalidDensity, "invalid density matrix: " + why);
    };
    if (!all_finite(m)) fail("non-finite entry");
    if ((m - m.adjoint()).norm() > tol) fail("not Hermitian");
    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > tol) {
        std::ostringstream os;
        os << "trace " << tr.real() << " != 1";
        fail(os.str());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex, N, N>> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -spectral_tol) fail("negative eigenvalue");
}

}  // namespace detail

/// A normalized pure state of the four-level system.
class PureState4 {
   public:
    static PureState4 from_amplitudes(const Vector4 &amplitudes, double tol = kExactTol) {
        for (int i = 0; i < 4; ++i) {
            if (!std::isfinite(amplitudes[i].real()) || !std::isfinite(amplitudes[i].imag()))
                throw Error(ErrorCode::Normalization, "state has a non-finite amplitude");
        }
        const double norm2 = amplitudes.squaredNorm();
        if (std::abs(norm2 - 1.0) > tol) {
            std::ostringstream os;
            os << "state is not normalized: sum |a|^2 = " << norm2;
            throw Error(ErrorCode::Normalization, os.str());
        }
        return PureState4(amplitudes);
    }

    /// Scales an arbitrary nonzero vector to unit norm.
    static PureState4 normalized(const Vector4 &v) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw Error(ErrorCode::Normalization, "cannot normalize a zero or non-finite vector");
        return PureState4(v / n);
    }

    static PureState4 basis(int level) {
        if (level < 0 || level > 3) throw Error(ErrorCode::InvalidLevels, "level must be in 0..3");
        Vector4 v = Vector4::Zero();
        v[level] = 1.0;
        return PureState4(v);
    }

    const Vector4 &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](int level) const { return amplitudes_[level]; }

    /// Computational-basis outcome probabilities |a_m|^2.
    Eigen::Vector4d probabilities() const { return amplitudes_.cwiseAbs2(); }

   private:
    explicit PureState4(const Vector4 &a) : amplitudes_(a) {}
    Vector4 amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix.
class DensityMatrix4 {
   public:
    static DensityMatrix4 from_matrix(const Matrix4 &m, double tol = kExactTol,
                                      double spectral_tol = kSpectralTol) {
        detail::validate_density<4>(m, tol, spectral_tol);
        return DensityMatrix4(m);
    }

    const Matrix4 &matrix() const noexcept { return matrix_; }
    Complex operator()(int r, int c) const { return matrix_(r, c); }

   private:
    explicit DensityMatrix4(const Matrix4 &m) : matrix_(m) {}
    Matrix4 matrix_;
};

/// Hermitian, unit-trace, positive semidefinite 2x2 matrix.
class QubitDensity {
   public:
    static QubitDensity from_matrix(const Matrix2 &m, double tol = kExactTol,
                                    double spectral_tol = kSpectralTol) {
        detail::validate_density<2>(m, tol, spectral_tol);
        return QubitDensity(m);
    }

    const Matrix2 &matrix() const noexcept { return matrix_; }
    Complex operator()(int r, int c) const { return matrix_(r, c); }

    /// Computational-basis outcome probabilities (sigma_00, sigma_11).
    Eigen::Vector2d diagonal() const { return {matrix_(0, 0).real(), matrix_(1, 1).real()}; }

   private:
    explicit QubitDensity(const Matrix2 &m) : matrix_(m) {}
    Matrix2 matrix_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    friend bool operator==(const BlochVector &, const BlochVector &) = default;
};

inline DensityMatrix4 state_to_density(const PureState4 &psi) {
    const Vector4 &a = psi.amplitudes();
    return DensityMatrix4::from_matrix(a * a.adjoint());
}

/// Marginal of virtual qubit A (traces out B).
inline QubitDensity reduce_A(const DensityMatrix4 &rho) {
    const Matrix4 &r = rho.matrix();
    Matrix2 out;
    out << r(0, 0) + r(1, 1), r(0, 2) + r(1, 3),
           r(2, 0) + r(3, 1), r(2, 2) + r(3, 3);
    return QubitDensity::from_matrix(out);
}

/// Marginal of virtual qubit B (traces out A).
inline QubitDensity reduce_B(const DensityMatrix4 &rho) {
    const Matrix4 &r = rho.matrix();
    Matrix2 out;
    out << r(0, 0) + r(2, 2), r(0, 1) + r(2, 3),
           r(1, 0) + r(3, 2), r(1, 1) + r(3, 3);
    return QubitDensity::from_matrix(out);
}

inline BlochVector bloch_of(const QubitDensity &sigma) {
    const Matrix2 &m = sigma.matrix();
    return {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), (m(0, 0) - m(1, 1)).real()};
}

inline QubitDensity bloch_to_qubit(const BlochVector &v, double tol = kSpectralTol) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        throw Error(ErrorCode::Domain, "Bloch vector has a non-finite component");
    if (v.norm() > 1.0 + tol) {
        std::ostringstream os;
        os << "Bloch vector outside the unit ball: |v| = " << v.norm();
        throw Error(ErrorCode::Domain, os.str());
    }
    Matrix2 m;
    m << Complex{0.5 * (1.0 + v.z), 0.0}, Complex{0.5 * v.x, -0.5 * v.y},
         Complex{0.5 * v.x, 0.5 * v.y}, Complex{0.5 * (1.0 - v.z), 0.0};
    return QubitDensity::from_matrix(m, kExactTol, tol);
}

inline double purity(const QubitDensity &sigma) {
    return (sigma.matrix() * sigma.matrix()).trace().real();
}

inline double purity(const DensityMatrix4 &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

/// (1/2) || a - b ||_1.
inline double trace_distance(const QubitDensity &a, const QubitDensity &b) {
    const Matrix2 diff = a.matrix() - b.matrix();
    Eigen::SelfAdjointEigenSolver<Matrix2> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

/// Best global-phase alignment of V onto U.
struct PhaseFit {
    double distance = 0.0;
    Complex phase{1.0, 0.0};
};

/// min over phi of ||U - e^{i phi} V||_F, attained at phi = arg Tr(V^dagger U).
template <typename DerivedU, typename DerivedV>
PhaseFit phase_fit(const Eigen::MatrixBase<DerivedU> &u, const Eigen::MatrixBase<DerivedV> &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw Error(ErrorCode::DimensionMismatch, "phase_distance: dimension mismatch");
    const Complex overlap = (v.adjoint() * u).trace();
    PhaseFit fit;
    if (std::abs(overlap) > 0.0) fit.phase = overlap / std::abs(overlap);
    fit.distance = (u - fit.phase * v).norm();
    return fit;
}

template <typename DerivedU, typename DerivedV>
double phase_distance(const Eigen::MatrixBase<DerivedU> &u, const Eigen::MatrixBase<DerivedV> &v) {
    return phase_fit(u, v).distance;
}

/// Runtime-dimension entry point; rejects anything but matching 2x2 or 4x4.
inline double phase_distance(const ComplexMatrix &u, const ComplexMatrix &v) {
    auto ok = [](const ComplexMatrix &m) {
        return m.rows() == m.cols() && (m.rows() == 2 || m.rows() == 4);
    };
    if (!ok(u) || !ok(v) || u.rows() != v.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "phase_distance: operands must both be 2x2 or both be 4x4");
    return phase_fit(u, v).distance;
}

/// || U^dagger U - I ||_F
template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived> &u) {
    using Plain = typename Derived::PlainObject;
    return (u.adjoint() * u - Plain::Identity(u.rows(), u.cols())).norm();
}

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_CORE_HPP
