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

// Feasibility calculus for exchange gates under a fault-tolerance threshold.
//
// A gate of duration T must satisfy, jointly,
//
//     s * sigma_a + sigma_t / T < eps      (control accuracy, per pulse)
//     T < eps * T2                         (decoherence)
//
// The amplitude term is T-independent, so the admissible window is
// T in (sigma_t / (eps - s sigma_a), eps T2) when s sigma_a < eps.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace swapbudget {

struct PlatformSpec {
    std::string name;
    double t2 = 0.0;             ///< seconds
    double sensitivity = 1.0;    ///< logarithmic |dJ/dE| (dJ/dE)(E/J)

    void validate() const {
        if (!(t2 > 0.0)) {
            throw InvalidArgument("PlatformSpec: t2 must be > 0");
        }
        if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
            throw InvalidArgument("PlatformSpec: sensitivity must be finite and >= 0");
        }
    }
    friend bool operator==(const PlatformSpec &, const PlatformSpec &) = default;
};

struct TechnologySpec {
    std::string name;
    double sigma_a = 0.0;  ///< relative amplitude noise, band integrated
    double sigma_t = 0.0;  ///< timing jitter, seconds
    double bw_low = 0.0;   ///< Hz
    double bw_high = std::numeric_limits<double>::infinity();  ///< Hz
    std::string notes;

    void validate() const {
        if (name.empty()) {
            throw InvalidArgument("TechnologySpec: name must not be empty");
        }
        if (!(sigma_a >= 0.0) || !std::isfinite(sigma_a)) {
            throw InvalidArgument("TechnologySpec: sigma_a must be finite and >= 0");
        }
        if (!(sigma_t >= 0.0) || !std::isfinite(sigma_t)) {
            throw InvalidArgument("TechnologySpec: sigma_t must be finite and >= 0");
        }
        if (!(bw_low >= 0.0) || !(bw_high > bw_low)) {
            throw InvalidArgument("TechnologySpec: need bw_high > bw_low >= 0");
        }
    }
    friend bool operator==(const TechnologySpec &, const TechnologySpec &) = default;
};

class Threshold {
   public:
    explicit Threshold(double epsilon) : eps_(epsilon) {
        if (!(epsilon > 0.0 && epsilon < 1.0)) {
            throw InvalidArgument("Threshold: epsilon must lie in (0, 1)");
        }
    }
    double epsilon() const noexcept {
        return eps_;
    }
    friend bool operator==(const Threshold &, const Threshold &) = default;

   private:
    double eps_;
};

enum class Constraint { amplitude, jitter, decoherence, bandwidth };

inline std::string_view to_string(Constraint c) {
    switch (c) {
        case Constraint::amplitude:
            return "amplitude";
        case Constraint::jitter:
            return "jitter";
        case Constraint::decoherence:
            return "decoherence";
        case Constraint::bandwidth:
            return "bandwidth";
    }
    return "?";
}

inline constexpr std::array<Constraint, 4> kAllConstraints{Constraint::amplitude, Constraint::jitter,
                                                           Constraint::decoherence, Constraint::bandwidth};

struct FeasibilityOptions {
    /// Also require T >= 1 / bw_high (the control channel must reach 1/T).
    bool strict_bandwidth = false;
};

struct ImprovementFactors {
    double amplitude = 1.0;    ///< needed reduction of s * sigma_a
    double jitter = 1.0;       ///< needed reduction of sigma_t
    double decoherence = 1.0;  ///< needed increase of T2
    double bandwidth = 1.0;    ///< needed increase of bw_high (strict mode only)

    double of(Constraint c) const {
        switch (c) {
            case Constraint::amplitude:
                return amplitude;
            case Constraint::jitter:
                return jitter;
            case Constraint::decoherence:
                return decoherence;
            case Constraint::bandwidth:
                return bandwidth;
        }
        return 1.0;
    }
};

struct FeasibilityReport {
    bool feasible = false;
    /// Open interval (T_min, T_max) in seconds; present iff feasible.
    std::optional<std::pair<double, double>> t_window;
    /// Ordered by severity of the failure: amplitude, then jitter, decoherence, bandwidth.
    std::vector<Constraint> limiting_constraints;
    ImprovementFactors improvement_factors;

    double amplitude_budget = 0.0;  ///< s * sigma_a, the per-gate dJ/J
    double t_min = 0.0;             ///< jitter bound, seconds (inf when amplitude-infeasible)
    double t_max = 0.0;             ///< eps * T2, seconds
    /// 1 / T at the longest admissible gate (the least demanding bandwidth), Hz.
    double required_bandwidth = std::numeric_limits<double>::infinity();
    /// 1 / T at the shortest admissible gate, Hz (inf when T_min = 0).
    double required_bandwidth_fastest = std::numeric_limits<double>::infinity();
    bool bandwidth_ok = false;  ///< required_bandwidth <= tech.bw_high

    bool is_limited_by(Constraint c) const {
        for (auto l : limiting_constraints) {
            if (l == c) {
                return true;
            }
        }
        return false;
    }
};

/// Longest gate compatible with decoherence, eps * T2.
inline double max_gate_time(const Threshold &eps, double t2) {
    return eps.epsilon() * t2;
}

/// Shortest gate for which sigma_t / T stays below `eps_share`.
inline double min_gate_time_from_jitter(double sigma_t, double eps_share) {
    if (!(eps_share > 0.0)) {
        throw InvalidArgument("min_gate_time_from_jitter: error share must be > 0");
    }
    return sigma_t / eps_share;
}

inline double required_bandwidth(double gate_time) {
    if (!(gate_time > 0.0)) {
        throw InvalidArgument("required_bandwidth: gate time must be > 0");
    }
    return 1.0 / gate_time;
}

inline FeasibilityReport feasibility(const PlatformSpec &platform, const TechnologySpec &tech, const Threshold &eps,
                                     FeasibilityOptions opts = {}) {
    platform.validate();
    tech.validate();
    const double e = eps.epsilon();
    const double inf = std::numeric_limits<double>::infinity();

    FeasibilityReport r;
    r.amplitude_budget = platform.sensitivity * tech.sigma_a;
    r.t_max = max_gate_time(eps, platform.t2);
    r.required_bandwidth = required_bandwidth(r.t_max);
    r.bandwidth_ok = r.required_bandwidth <= tech.bw_high;

    // Strict mode raises the lower end of the window to 1 / bw_high.
    const double t_bw = opts.strict_bandwidth ? 1.0 / tech.bw_high : 0.0;

    if (r.amplitude_budget >= e) {
        r.t_min = inf;
        r.limiting_constraints.push_back(Constraint::amplitude);
        r.improvement_factors.amplitude = r.amplitude_budget / e;
        // Jitter judged on its own, as if amplitude noise were removed.
        const double t_min_jitter_only = min_gate_time_from_jitter(tech.sigma_t, e);
        if (t_min_jitter_only >= r.t_max) {
            r.limiting_constraints.push_back(Constraint::jitter);
            r.improvement_factors.jitter = t_min_jitter_only / r.t_max;
        }
        return r;
    }

    r.t_min = min_gate_time_from_jitter(tech.sigma_t, e - r.amplitude_budget);
    r.required_bandwidth_fastest = r.t_min > 0.0 ? 1.0 / r.t_min : inf;
    if (r.t_min >= r.t_max) {
        r.limiting_constraints.push_back(Constraint::jitter);
        r.limiting_constraints.push_back(Constraint::decoherence);
        r.improvement_factors.jitter = r.t_min / r.t_max;
        r.improvement_factors.decoherence = r.t_min / r.t_max;
    }
    if (opts.strict_bandwidth && t_bw >= r.t_max) {
        r.limiting_constraints.push_back(Constraint::bandwidth);
        r.improvement_factors.bandwidth = t_bw / r.t_max;
    }
    if (!r.limiting_constraints.empty()) {
        return r;
    }

    const double lo = std::max(r.t_min, t_bw);
    r.feasible = true;
    r.t_window = std::make_pair(lo, r.t_max);
    r.required_bandwidth_fastest = lo > 0.0 ? 1.0 / lo : inf;
    return r;
}

/// Silicon electron-spin platform: T2 ~ 0.5 ms, |dJ/dE| ~ 1.
inline PlatformSpec si_spin_platform() {
    return PlatformSpec{"si-spin", 0.5e-3, 1.0};
}

inline std::vector<PlatformSpec> builtin_platforms() {
    return {si_spin_platform()};
}

inline std::vector<TechnologySpec> builtin_catalog() {
    return {
        TechnologySpec{"electrical-pulse-generator", 1e-2, 100e-12, 0.0, 1e9,
                       "best available GHz-range pulse generators: dV/V ~ 1e-2, pulse-length jitter dT ~ 100 ps"},
        TechnologySpec{"modelocked-laser-10GHz", 5e-4, 240e-15, 10.0, 5e9,
                       "externally mode-locked femtosecond laser at 10 GHz repetition rate: intensity noise 0.05% "
                       "and timing jitter 240 fs over 10 Hz - 5 GHz, < 2 dB above shot noise"},
    };
}

}  // namespace swapbudget
