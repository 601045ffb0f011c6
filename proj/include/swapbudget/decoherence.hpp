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

// Pure dephasing on each qubit and entanglement fidelity of noisy gates.

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"
#include "quantum_core.hpp"

namespace swapbudget {

/// Per-qubit T2 in seconds. +inf means that qubit does not dephase.
struct DephasingSpec {
    std::array<double, 2> t2{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};

    static DephasingSpec none() {
        return {};
    }
    static DephasingSpec uniform(double t2_seconds) {
        DephasingSpec s{{t2_seconds, t2_seconds}};
        s.validate();
        return s;
    }

    bool is_none() const {
        return std::isinf(t2[0]) && std::isinf(t2[1]);
    }

    void validate() const {
        for (double v : t2) {
            if (!(v > 0.0)) {
                throw InvalidArgument("DephasingSpec: T2 must be > 0 (or +inf for no decoherence)");
            }
        }
    }
};

/// Kraus representation of a trace-preserving map on two qubits.
class QuantumChannel4 {
   public:
    explicit QuantumChannel4(std::vector<Mat4> kraus) : kraus_(std::move(kraus)) {
        if (kraus_.empty()) {
            throw InvalidArgument("QuantumChannel4: empty Kraus set");
        }
        Mat4 acc = Mat4::Zero();
        for (const auto &k : kraus_) {
            detail::require_finite<4>(k, "QuantumChannel4");
            acc += k.adjoint() * k;
        }
        if (detail::max_abs(acc - Mat4::Identity()) > 1e-12) {
            throw InvalidArgument("QuantumChannel4: Kraus operators are not complete (sum K^dagger K != I)");
        }
    }

    static QuantumChannel4 identity() {
        return QuantumChannel4({Mat4::Identity()});
    }
    static QuantumChannel4 unitary(const Unitary4 &u) {
        return QuantumChannel4({u.matrix()});
    }

    const std::vector<Mat4> &kraus() const noexcept {
        return kraus_;
    }

    /// `second` applied after `this`.
    QuantumChannel4 then(const QuantumChannel4 &second) const {
        std::vector<Mat4> ops;
        ops.reserve(kraus_.size() * second.kraus_.size());
        for (const auto &b : second.kraus_) {
            for (const auto &a : kraus_) {
                ops.push_back(b * a);
            }
        }
        return QuantumChannel4(std::move(ops));
    }

   private:
    std::vector<Mat4> kraus_;
};

/// Phase-flip probability after time T: p = (1 - exp(-T/T2)) / 2.
inline double dephasing_probability(double t, double t2) {
    if (std::isinf(t2)) {
        return 0.0;
    }
    return -0.5 * std::expm1(-t / t2);
}

/// Independent phase flips on both qubits for duration `t`. Single-qubit
/// coherences decay by exp(-t/T2). Zero-weight Kraus terms are dropped, so
/// t = 0 yields the single operator I.
inline QuantumChannel4 dephasing_channel(double t, const DephasingSpec &spec) {
    if (!(t >= 0.0)) {
        throw InvalidArgument("dephasing_channel: duration must be >= 0");
    }
    spec.validate();
    const double p1 = dephasing_probability(t, spec.t2[0]);
    const double p2 = dephasing_probability(t, spec.t2[1]);
    const std::array<std::pair<double, Mat2>, 2> q1{{{1.0 - p1, pauli::identity()}, {p1, pauli::z()}}};
    const std::array<std::pair<double, Mat2>, 2> q2{{{1.0 - p2, pauli::identity()}, {p2, pauli::z()}}};
    std::vector<Mat4> ops;
    for (const auto &[w1, a] : q1) {
        for (const auto &[w2, b] : q2) {
            if (w1 * w2 > 0.0) {
                ops.push_back(std::sqrt(w1 * w2) * kron(a, b));
            }
        }
    }
    return QuantumChannel4(std::move(ops));
}

inline DensityMatrix4 apply_channel(const QuantumChannel4 &ch, const DensityMatrix4 &rho) {
    Mat4 out = Mat4::Zero();
    for (const auto &k : ch.kraus()) {
        out += k * rho.matrix() * k.adjoint();
    }
    // Remove rounding-level anti-Hermitian residue.
    out = (out + out.adjoint()).eval() / 2.0;
    return DensityMatrix4(out);
}

/// F_e = sum_i |Tr(V^dagger K_i)|^2 / 16 for a channel against a target unitary.
inline double entanglement_fidelity(const QuantumChannel4 &ch, const Unitary4 &target) {
    double acc = 0.0;
    const Mat4 vd = target.matrix().adjoint();
    for (const auto &k : ch.kraus()) {
        acc += std::norm((vd * k).trace());
    }
    return std::clamp(acc / 16.0, 0.0, 1.0);
}

/// Entanglement fidelity of `ch` applied after `actual`, against `target`.
inline double entanglement_fidelity(const QuantumChannel4 &ch, const Unitary4 &actual, const Unitary4 &target) {
    double acc = 0.0;
    const Mat4 vd = target.matrix().adjoint();
    for (const auto &k : ch.kraus()) {
        acc += std::norm((vd * k * actual.matrix()).trace());
    }
    return std::clamp(acc / 16.0, 0.0, 1.0);
}

}  // namespace swapbudget
