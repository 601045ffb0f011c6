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

// Independent reference computations used only by the tests. Nothing here
// calls into the library's algebra beyond its matrix typedefs.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "swapbudget/quantum_core.hpp"

namespace oracle {

using swapbudget::cplx;
using swapbudget::Mat2;
using swapbudget::Mat4;
using swapbudget::Vec4;

/// exp(-i theta H) by summing the power series until terms vanish.
template <int N>
swapbudget::ComplexMat<N> taylor_expm(const swapbudget::ComplexMat<N> &h, double theta) {
    using M = swapbudget::ComplexMat<N>;
    const M a = cplx(0.0, -theta) * h;
    M sum = M::Identity();
    M term = M::Identity();
    for (int k = 1; k < 400; ++k) {
        term = (term * a / static_cast<double>(k)).eval();
        sum += term;
        if (term.cwiseAbs().maxCoeff() < 1e-300 || (k > 20 && term.cwiseAbs().maxCoeff() < 1e-22)) {
            break;
        }
    }
    return sum;
}

inline Mat2 sigma(int k) {
    Mat2 m = Mat2::Zero();
    if (k == 0) {
        m << 0, 1, 1, 0;
    } else if (k == 1) {
        m << 0, cplx(0, -1), cplx(0, 1), 0;
    } else {
        m << 1, 0, 0, -1;
    }
    return m;
}

/// <ab| s1.s2 |cd> = sum_k sigma_k[a,c] sigma_k[b,d] / 4, with index = 2*first + second.
inline Mat4 spin_dot_by_components() {
    Mat4 out = Mat4::Zero();
    for (int k = 0; k < 3; ++k) {
        const Mat2 s = sigma(k);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) += s(a, c) * s(b, d) / 4.0;
    }
    return out;
}

inline Vec4 basis(int i) {
    Vec4 v = Vec4::Zero();
    v(i) = 1.0;
    return v;
}

inline Vec4 singlet() {
    return (basis(1) - basis(2)) / std::sqrt(2.0);
}

/// Triplet states |00>, (|01>+|10>)/sqrt2, |11>.
inline std::array<Vec4, 3> triplets() {
    return {basis(0), Vec4((basis(1) + basis(2)) / std::sqrt(2.0)), basis(3)};
}

inline Vec4 random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec4 v;
    for (int i = 0; i < 4; ++i) {
        v(i) = cplx(g(rng), g(rng));
    }
    return v / v.norm();
}

/// Random mixed state: sum of a few weighted random pure projectors.
inline Mat4 random_density(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Mat4 rho = Mat4::Zero();
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double w = u(rng);
        const Vec4 v = random_state(rng);
        rho += w * v * v.adjoint();
        total += w;
    }
    rho /= total;
    return (rho + rho.adjoint()) / 2.0;
}

/// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline Mat4 random_unitary(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = cplx(g(rng), g(rng));
    Eigen::HouseholderQR<Mat4> qr(m);
    return qr.householderQ() * Mat4::Identity();
}

inline double max_abs_diff(const Mat4 &a, const Mat4 &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace oracle
