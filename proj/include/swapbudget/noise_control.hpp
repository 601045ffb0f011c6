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

// Classical control imperfections: per-pulse amplitude and timing noise, band
// integrated SNR, shot-noise floors, field-to-exchange sensitivity, and the
// optical-rectification control map.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "exchange_gate.hpp"

namespace swapbudget {

enum class NoiseDistribution { gaussian, uniform };

inline std::string_view to_string(NoiseDistribution d) {
    return d == NoiseDistribution::gaussian ? "gaussian" : "uniform";
}

inline NoiseDistribution parse_distribution(std::string_view s) {
    if (s == "gaussian") {
        return NoiseDistribution::gaussian;
    }
    if (s == "uniform") {
        return NoiseDistribution::uniform;
    }
    throw InvalidArgument("unknown noise distribution '" + std::string(s) + "' (expected gaussian|uniform)");
}

/// Quasi-static control noise: each pulse draws one relative amplitude error
/// and one duration error, both zero-mean with the given RMS.
struct ControlNoiseSpec {
    double sigma_a = 0.0;  ///< RMS relative amplitude noise
    double sigma_t = 0.0;  ///< RMS timing jitter, seconds
    NoiseDistribution distribution = NoiseDistribution::gaussian;
    double bandwidth_low = 0.0;                                      ///< Hz
    double bandwidth_high = std::numeric_limits<double>::infinity();  ///< Hz

    void validate() const {
        if (!std::isfinite(sigma_a) || sigma_a < 0.0) {
            throw InvalidArgument("ControlNoiseSpec: sigma_a must be finite and >= 0");
        }
        if (!std::isfinite(sigma_t) || sigma_t < 0.0) {
            throw InvalidArgument("ControlNoiseSpec: sigma_t must be finite and >= 0");
        }
        if (!(bandwidth_low >= 0.0) || !(bandwidth_high > bandwidth_low)) {
            throw InvalidArgument("ControlNoiseSpec: need bandwidth_high > bandwidth_low >= 0");
        }
    }
};

inline constexpr int kMaxPulseAttempts = 100;

namespace detail {

template <typename URBG>
double draw_zero_mean(URBG &rng, double rms, NoiseDistribution dist) {
    if (rms == 0.0) {
        return 0.0;
    }
    if (dist == NoiseDistribution::gaussian) {
        return std::normal_distribution<double>(0.0, rms)(rng);
    }
    const double half_width = std::numbers::sqrt3 * rms;
    return std::uniform_real_distribution<double>(-half_width, half_width)(rng);
}

}  // namespace detail

/// One noisy realization of `nominal`: J' = J (1 + a), T' = T + t.
///
/// Draws with T' <= 0 are redrawn, up to `max_attempts` in total; then
/// RejectedSampleError. `rejected`, if given, receives the number of redraws.
template <typename URBG>
PulseSpec sample_pulse(URBG &rng, const PulseSpec &nominal, const ControlNoiseSpec &noise,
                       int max_attempts = kMaxPulseAttempts, int *rejected = nullptr) {
    noise.validate();
    if (noise.sigma_a == 0.0 && noise.sigma_t == 0.0) {
        if (rejected) {
            *rejected = 0;
        }
        return nominal;
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const double a = detail::draw_zero_mean(rng, noise.sigma_a, noise.distribution);
        const double t = detail::draw_zero_mean(rng, noise.sigma_t, noise.distribution);
        const double new_duration = nominal.duration() + t;
        if (new_duration > 0.0) {
            if (rejected) {
                *rejected = attempt;
            }
            // Amplitude below -100% would mean a sign flip of J; clamp to zero coupling.
            return nominal.perturbed(std::max(0.0, 1.0 + a), new_duration);
        }
    }
    throw RejectedSampleError("sample_pulse: every draw in " + std::to_string(max_attempts) +
                              " attempts gave a non-positive duration");
}

/// Band-integrated SNR for a relative RMS noise figure. Zero noise gives +inf.
inline double integrated_snr(double sigma_rel) {
    if (!(sigma_rel >= 0.0)) {
        throw InvalidArgument("integrated_snr: relative noise must be >= 0");
    }
    if (sigma_rel == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 1.0 / sigma_rel;
}

/// Amplitude convention, 20 log10: 80 dB <-> 1e4.
inline double db_to_amplitude_snr(double db) {
    return std::pow(10.0, db / 20.0);
}

/// Power convention, 10 log10: 80 dB <-> 1e8.
inline double db_to_power_snr(double db) {
    return std::pow(10.0, db / 10.0);
}

/// Poisson-limited relative amplitude noise, 1 / sqrt(n).
inline double shot_noise_relative_amplitude(double n_photons) {
    if (!(n_photons > 0.0)) {
        throw InvalidArgument("shot_noise_relative_amplitude: photon number must be > 0");
    }
    return 1.0 / std::sqrt(n_photons);
}

/// dJ/J = s * dE/E with s the logarithmic sensitivity (dJ/dE)(E/J).
inline double sensitivity_map(double delta_field_rel, double s) {
    if (!std::isfinite(delta_field_rel) || !std::isfinite(s) || s < 0.0) {
        throw InvalidArgument("sensitivity_map: inputs must be finite with s >= 0");
    }
    return s * delta_field_rel;
}

/// Phenomenological map from optical intensity to exchange strength.
///
/// Illumination lowers the polarization magnitude linearly, (1 - c I); the
/// inter-dot barrier follows it; J depends exponentially on the barrier:
///     J(I) = j0 exp(-b0 (1 - c I)).
struct RectificationMap {
    double j0 = 0.0;  ///< rad/s
    double b0 = 0.0;  ///< dark barrier in units of the decay scale
    double c = 0.0;   ///< per unit intensity

    void validate() const {
        if (!(j0 > 0.0) || !std::isfinite(j0)) {
            throw InvalidArgument("RectificationMap: j0 must be finite and > 0");
        }
        if (!(b0 >= 0.0) || !std::isfinite(b0)) {
            throw InvalidArgument("RectificationMap: b0 must be finite and >= 0");
        }
        if (!(c >= 0.0) || !std::isfinite(c)) {
            throw InvalidArgument("RectificationMap: c must be finite and >= 0");
        }
    }

    double dark_exchange() const {
        return j0 * std::exp(-b0);
    }

    double exchange_at(double intensity) const {
        if (!(intensity >= 0.0) || c * intensity > 1.0) {
            throw InvalidArgument("RectificationMap: inadmissible intensity (need 0 <= c*I <= 1)");
        }
        return j0 * std::exp(-b0 * (1.0 - c * intensity));
    }
};

/// Exchange profile driven by a sampled intensity profile (t_i, I_i).
inline PulseSpec rectification_exchange(const RectificationMap &map, const std::vector<ProfileSample> &intensity) {
    map.validate();
    std::vector<ProfileSample> j;
    j.reserve(intensity.size());
    for (const auto &s : intensity) {
        j.push_back({s.t, map.exchange_at(s.value)});
    }
    return PulseSpec::from_profile(std::move(j));
}

}  // namespace swapbudget
