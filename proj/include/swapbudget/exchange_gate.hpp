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

// Exchange-pulse gates: the pulse area of a Heisenberg coupling J(t) s1.s2 fixes
// which power of SWAP is realized.
//
// Units at the API boundary: exchange strength is an angular frequency J/hbar in
// rad/s and durations are seconds. Internally everything reduces to the
// dimensionless phase theta = integral(J dt) / (2 hbar), so that
//
//     U(theta) = exp(-i theta s1.s2) = e^{-i theta/4} P_triplet + e^{3i theta/4} P_singlet.
//
// SWAP^alpha is defined as P_triplet + e^{i pi alpha} P_singlet (principal branch).
// U(pi alpha) equals it up to the global phase e^{-i pi alpha / 4}, which process
// fidelity ignores. Hence JT = 2 pi hbar alpha, i.e. JT = pi hbar for sqrt(SWAP).

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "errors.hpp"
#include "quantum_core.hpp"

namespace swapbudget {

/// Reduced Planck constant, J s. Only used when callers hand in energies.
inline constexpr double kHbar = 1.054571817e-34;

struct ProfileSample {
    double t;      ///< seconds
    double value;  ///< J/hbar in rad/s (or optical intensity, for control-map inputs)

    friend bool operator==(const ProfileSample &, const ProfileSample &) = default;
};

/// A nominal exchange pulse: constant strength for a duration, or a sampled J(t).
class PulseSpec {
   public:
    /// Constant pulse J/hbar = `omega` (rad/s) for `duration` seconds.
    static PulseSpec constant(double omega, double duration) {
        if (!std::isfinite(omega) || omega < 0.0) {
            throw InvalidArgument("PulseSpec: exchange strength must be finite and >= 0");
        }
        if (!std::isfinite(duration) || duration <= 0.0) {
            throw InvalidArgument("PulseSpec: duration must be finite and > 0");
        }
        return PulseSpec(omega, duration, {});
    }

    /// Constant pulse given the exchange energy in joules.
    static PulseSpec from_energy(double joules, double duration) {
        return constant(joules / kHbar, duration);
    }

    /// Sampled profile. Times strictly increasing, first sample at t = 0; the
    /// last sample time is the pulse duration.
    static PulseSpec from_profile(std::vector<ProfileSample> samples) {
        if (samples.empty()) {
            throw InvalidArgument("PulseSpec: empty profile");
        }
        if (samples.size() < 2) {
            throw InvalidArgument("PulseSpec: profile needs at least two samples to span [0, T]");
        }
        if (samples.front().t != 0.0) {
            throw InvalidArgument("PulseSpec: profile must start at t = 0");
        }
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (!std::isfinite(samples[i].t) || !std::isfinite(samples[i].value) || samples[i].value < 0.0) {
                throw InvalidArgument("PulseSpec: profile samples must be finite with J >= 0");
            }
            if (i > 0 && !(samples[i].t > samples[i - 1].t)) {
                throw InvalidArgument("PulseSpec: profile sample times must be strictly increasing");
            }
        }
        const double duration = samples.back().t;
        return PulseSpec(0.0, duration, std::move(samples));
    }

    /// Pulse of fixed duration whose area realizes SWAP^alpha.
    static PulseSpec for_swap_power(double alpha, double duration) {
        if (alpha < 0.0) {
            throw InvalidArgument("PulseSpec: negative SWAP exponent needs a negative exchange strength");
        }
        return constant(2.0 * std::numbers::pi * alpha / duration, duration);
    }

    bool has_profile() const noexcept {
        return !profile_.empty();
    }
    /// Constant strength (rad/s); zero for profile pulses.
    double omega() const noexcept {
        return omega_;
    }
    double duration() const noexcept {
        return duration_;
    }
    std::span<const ProfileSample> profile() const noexcept {
        return profile_;
    }

    /// Integral of J/hbar over the pulse (trapezoidal for profiles), in radians.
    double area() const {
        if (profile_.empty()) {
            return omega_ * duration_;
        }
        double acc = 0.0;
        for (std::size_t i = 1; i < profile_.size(); ++i) {
            acc += 0.5 * (profile_[i].value + profile_[i - 1].value) * (profile_[i].t - profile_[i - 1].t);
        }
        return acc;
    }

    /// Strength scaled by `amp` and time axis stretched to `new_duration`.
    PulseSpec perturbed(double amp, double new_duration) const {
        if (profile_.empty()) {
            return constant(omega_ * amp, new_duration);
        }
        const double stretch = new_duration / duration_;
        std::vector<ProfileSample> s(profile_);
        for (auto &p : s) {
            p.t *= stretch;
            p.value *= amp;
        }
        return from_profile(std::move(s));
    }

    friend bool operator==(const PulseSpec &, const PulseSpec &) = default;

   private:
    PulseSpec(double omega, double duration, std::vector<ProfileSample> profile)
        : omega_(omega), duration_(duration), profile_(std::move(profile)) {
    }

    double omega_;
    double duration_;
    std::vector<ProfileSample> profile_;
};

/// Dimensionless coefficient of s1.s2 in the gate exponent.
struct ExchangePhase {
    double value = 0.0;

    constexpr ExchangePhase() = default;
    constexpr explicit ExchangePhase(double v) : value(v) {
    }
    friend constexpr bool operator==(ExchangePhase, ExchangePhase) = default;
};

inline ExchangePhase phase_from_pulse(const PulseSpec &p) {
    return ExchangePhase(p.area() / 2.0);
}

/// Phase whose exchange unitary equals SWAP^alpha up to global phase.
inline ExchangePhase phase_for_swap_power(double alpha) {
    return ExchangePhase(std::numbers::pi * alpha);
}

inline Unitary4 exchange_unitary(ExchangePhase theta) {
    if (!std::isfinite(theta.value)) {
        throw InvalidArgument("exchange_unitary: non-finite phase");
    }
    const Mat4 u = std::polar(1.0, -theta.value / 4.0) * triplet_projector() +
                   std::polar(1.0, 3.0 * theta.value / 4.0) * singlet_projector();
    return Unitary4(u);
}

inline Unitary4 swap_power_target(double alpha) {
    if (!std::isfinite(alpha)) {
        throw InvalidArgument("swap_power_target: non-finite exponent");
    }
    const Mat4 u = triplet_projector() + std::polar(1.0, std::numbers::pi * alpha) * singlet_projector();
    return Unitary4(u);
}

/// 1 - F_pro(U(theta), U(theta + dtheta)) = (3/8)(1 - cos dtheta), evaluated as
/// (3/4) sin^2(dtheta / 2) to keep precision for small errors.
inline double gate_error_vs_phase(double dtheta) {
    const double s = std::sin(dtheta / 2.0);
    return 0.75 * s * s;
}

/// Process fidelity to average gate fidelity for d = 4.
inline double average_fidelity(double process_fid) {
    return (4.0 * process_fid + 1.0) / 5.0;
}

struct PhaseError {
    double exact;        ///< theta [(1 + dJ/J)(1 + dT/T) - 1]
    double first_order;  ///< theta (dJ/J + dT/T)
};

inline PhaseError relative_error_to_phase_error(ExchangePhase theta, double dj_over_j, double dt_over_t) {
    if (!(std::abs(dj_over_j) < 1.0) || !(std::abs(dt_over_t) < 1.0)) {
        throw InvalidArgument("relative_error_to_phase_error: relative errors must have magnitude < 1");
    }
    return PhaseError{
        theta.value * (dj_over_j + dt_over_t + dj_over_j * dt_over_t),
        theta.value * (dj_over_j + dt_over_t),
    };
}

}  // namespace swapbudget
