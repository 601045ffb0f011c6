// Copyright 2026 The swapbudget Authors
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

// Dense complex linear algebra on one- and two-spin Hilbert spaces.
//
// Basis ordering is |00>, |01>, |10>, |11> with qubit 1 the left tensor factor.
// Spin operators are dimensionless (s = sigma / 2).

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "errors.hpp"

namespace swapbudget {

using cplx = std::complex<double>;

template <int N>
using ComplexMat = Eigen::Matrix<cplx, N, N>;
using Mat2 = ComplexMat<2>;
using Mat4 = ComplexMat<4>;
using Vec4 = Eigen::Matrix<cplx, 4, 1>;

inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityFloor = -1e-10;

namespace detail {

template <int N>
void check_dim() {
    static_assert(N == 2 || N == 4, "only one- and two-qubit operators are supported");
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.cwiseAbs().maxCoeff();
}

template <int N>
void require_finite(const ComplexMat<N> &m, const char *what) {
    for (int r = 0; r < N; ++r) {
        for (int c = 0; c < N; ++c) {
            if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) {
                throw InvalidArgument(std::string(what) + ": matrix has non-finite entries");
            }
        }
    }
}

}  // namespace detail

template <int N>
bool is_hermitian(const ComplexMat<N> &m, double tol = kHermitianTol) {
    return detail::max_abs(m - m.adjoint()) <= tol;
}

template <int N>
bool is_unitary(const ComplexMat<N> &m, double tol = kUnitaryTol) {
    return detail::max_abs(m.adjoint() * m - ComplexMat<N>::Identity()) <= tol;
}

/// A unitary operator. Construction checks U^dagger U = I to `kUnitaryTol` (max-abs entry norm).
template <int N>
class Unitary {
   public:
    explicit Unitary(const ComplexMat<N> &m) : m_(m) {
        detail::check_dim<N>();
        detail::require_finite<N>(m, "Unitary");
        if (!is_unitary<N>(m)) {
            throw InvalidArgument("Unitary: matrix is not unitary within 1e-12");
        }
    }

    static Unitary identity() {
        return Unitary(ComplexMat<N>::Identity());
    }

    const ComplexMat<N> &matrix() const noexcept {
        return m_;
    }
    cplx operator()(int r, int c) const {
        return m_(r, c);
    }
    Unitary adjoint() const {
        return Unitary(m_.adjoint().eval());
    }

    friend Unitary operator*(const Unitary &a, const Unitary &b) {
        return Unitary((a.m_ * b.m_).eval());
    }

   private:
    ComplexMat<N> m_;
};

using Unitary2 = Unitary<2>;
using Unitary4 = Unitary<4>;

/// Two-qubit state. Hermitian and unit trace to 1e-12, eigenvalues >= -1e-10.
class DensityMatrix4 {
   public:
    explicit DensityMatrix4(const Mat4 &m) : m_(m) {
        detail::require_finite<4>(m, "DensityMatrix4");
        if (!is_hermitian<4>(m)) {
            throw InvalidArgument("DensityMatrix4: matrix is not Hermitian within 1e-12");
        }
        if (std::abs(m.trace() - cplx(1.0, 0.0)) > kTraceTol) {
            throw InvalidArgument("DensityMatrix4: trace differs from 1 by more than 1e-12");
        }
        Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < kPositivityFloor) {
            throw InvalidArgument("DensityMatrix4: matrix has a negative eigenvalue");
        }
    }

    const Mat4 &matrix() const noexcept {
        return m_;
    }
    cplx operator()(int r, int c) const {
        return m_(r, c);
    }
    double purity() const {
        return (m_ * m_).trace().real();
    }

   private:
    Mat4 m_;
};

namespace pauli {

inline Mat2 identity() {
    return Mat2::Identity();
}
inline Mat2 x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}
inline Mat2 y() {
    Mat2 m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}
inline Mat2 z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace pauli

/// Tensor product a (x) b with `a` acting on qubit 1 (the high-order index bit).
inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

inline Mat4 swap_matrix() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
}

/// s1 . s2 = (XX + YY + ZZ) / 4. Triplet eigenvalue +1/4, singlet -3/4.
inline Mat4 spin_dot_operator() {
    return (kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y()) + kron(pauli::z(), pauli::z())) / 4.0;
}

/// Projector onto the symmetric (triplet) subspace, (I + SWAP) / 2.
inline Mat4 triplet_projector() {
    return (Mat4::Identity() + swap_matrix()) / 2.0;
}

/// Projector onto the singlet (|01> - |10>) / sqrt(2), (I - SWAP) / 2.
inline Mat4 singlet_projector() {
    return (Mat4::Identity() - swap_matrix()) / 2.0;
}

/// exp(-i theta H) for Hermitian H, by spectral decomposition.
template <int N>
Unitary<N> expm_hermitian(const ComplexMat<N> &h, double theta) {
    detail::check_dim<N>();
    detail::require_finite<N>(h, "expm_hermitian");
    if (!is_hermitian<N>(h)) {
        throw InvalidArgument("expm_hermitian: generator is not Hermitian within 1e-12");
    }
    if (!std::isfinite(theta)) {
        throw InvalidArgument("expm_hermitian: non-finite angle");
    }
    // Symmetrize so the solver sees an exactly self-adjoint input.
    const ComplexMat<N> hs = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMat<N>> es(hs);
    const auto &vecs = es.eigenvectors();
    Eigen::Matrix<cplx, N, 1> phases;
    for (int k = 0; k < N; ++k) {
        phases(k) = std::polar(1.0, -theta * es.eigenvalues()(k));
    }
    ComplexMat<N> u = vecs * phases.asDiagonal() * vecs.adjoint();
    return Unitary<N>(u);
}

/// |Tr(U^dagger V)|^2 / d^2. Symmetric, global-phase invariant, in [0, 1].
template <int N>
double process_fidelity(const Unitary<N> &u, const Unitary<N> &v) {
    const double d = static_cast<double>(N);
    const double f = std::norm((u.matrix().adjoint() * v.matrix()).trace()) / (d * d);
    return std::clamp(f, 0.0, 1.0);
}

/// rho = psi psi^dagger for a unit vector psi.
inline DensityMatrix4 density_from_pure(const Vec4 &psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-12) {
        throw InvalidArgument("density_from_pure: state vector is not normalized within 1e-12");
    }
    return DensityMatrix4(psi * psi.adjoint());
}

}  // namespace swapbudget
