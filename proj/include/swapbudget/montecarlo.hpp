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

// Monte Carlo estimate of gate infidelity under sampled control noise and
// dephasing, with a closed-form second-moment prediction for comparison.
//
// Sample i draws its noise from a private engine seeded with
// substream_seed(seed, i), and per-sample results are reduced in index order,
// so the result is bit-identical for any number of worker threads.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "decoherence.hpp"
#include "errors.hpp"
#include "exchange_gate.hpp"
#include "noise_control.hpp"

namespace swapbudget {

enum class RejectPolicy {
    resample,  ///< redraw up to kMaxPulseAttempts times, then fail the run
    discard,   ///< drop the sample and count it in McResult::n_rejected
};

struct McConfig {
    std::uint64_t n_samples = 10000;
    std::uint64_t seed = 0;
    double target_alpha = 0.5;
    PulseSpec nominal = PulseSpec::for_swap_power(0.5, 1e-9);
    ControlNoiseSpec noise;
    DephasingSpec dephasing = DephasingSpec::none();
    /// Scales noise.sigma_a into the per-pulse dJ/J.
    double sensitivity = 1.0;
    RejectPolicy reject_policy = RejectPolicy::resample;

    void validate() const {
        if (n_samples < 1) {
            throw InvalidArgument("McConfig: n_samples must be >= 1");
        }
        if (!std::isfinite(target_alpha)) {
            throw InvalidArgument("McConfig: target_alpha must be finite");
        }
        if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
            throw InvalidArgument("McConfig: sensitivity must be finite and >= 0");
        }
        noise.validate();
        dephasing.validate();
    }
};

/// 64 log-spaced bins over [1e-16, 1], a quarter decade each. Values below the
/// range (including exact zeros) land in bin 0.
struct InfidelityHistogram {
    static constexpr int kBins = 64;
    static constexpr double kLogLow = -16.0;
    static constexpr double kLogHigh = 0.0;

    std::array<std::uint64_t, kBins> counts{};

    static int bin_of(double x) {
        if (!(x > 0.0)) {
            return 0;
        }
        const double pos = (std::log10(x) - kLogLow) / (kLogHigh - kLogLow) * kBins;
        return std::clamp(static_cast<int>(std::floor(pos)), 0, kBins - 1);
    }
    static double lower_edge(int bin) {
        return std::pow(10.0, kLogLow + (kLogHigh - kLogLow) * bin / kBins);
    }

    void add(double x) {
        ++counts[bin_of(x)];
    }
    std::uint64_t mass() const {
        std::uint64_t m = 0;
        for (auto c : counts) {
            m += c;
        }
        return m;
    }
    friend bool operator==(const InfidelityHistogram &, const InfidelityHistogram &) = default;
};

struct McResult {
    double mean_infidelity = 0.0;
    double std_error = 0.0;
    double min = 0.0;
    double max = 0.0;
    InfidelityHistogram histogram;
    std::uint64_t n_samples = 0;
    std::uint64_t n_rejected = 0;

    friend bool operator==(const McResult &, const McResult &) = default;
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the private engine for sample `index`: mix64(mix64(seed) ^ index).
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ index);
}

namespace detail {

struct SampleOutcome {
    double infidelity = 0.0;
    bool rejected = false;
};

inline SampleOutcome evaluate_sample(const McConfig &cfg, const Unitary4 &target, std::uint64_t index) {
    std::mt19937_64 rng(substream_seed(cfg.seed, index));
    ControlNoiseSpec noise = cfg.noise;
    noise.sigma_a *= cfg.sensitivity;

    const int attempts = cfg.reject_policy == RejectPolicy::resample ? kMaxPulseAttempts : 1;
    std::optional<PulseSpec> pulse;
    try {
        pulse = sample_pulse(rng, cfg.nominal, noise, attempts);
    } catch (const RejectedSampleError &) {
        if (cfg.reject_policy == RejectPolicy::resample) {
            throw;
        }
        return {0.0, true};
    }

    const Unitary4 u = exchange_unitary(phase_from_pulse(*pulse));
    double f;
    if (cfg.dephasing.is_none()) {
        f = process_fidelity(u, target);
    } else {
        f = entanglement_fidelity(dephasing_channel(pulse->duration(), cfg.dephasing), u, target);
    }
    return {std::clamp(1.0 - f, 0.0, 1.0), false};
}

}  // namespace detail

inline unsigned resolve_workers(unsigned workers) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    return workers;
}

/// Mean infidelity against SWAP^target_alpha. `workers` = 0 uses all hardware threads.
inline McResult estimate_infidelity(const McConfig &cfg, unsigned workers = 1) {
    cfg.validate();
    const Unitary4 target = swap_power_target(cfg.target_alpha);
    const std::uint64_t n = cfg.n_samples;
    std::vector<detail::SampleOutcome> outcomes(n);

    workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n));
    std::vector<std::exception_ptr> errors(workers);
    auto run_chunk = [&](unsigned w) {
        const std::uint64_t begin = n * w / workers;
        const std::uint64_t end = n * (w + 1) / workers;
        try {
            for (std::uint64_t i = begin; i < end; ++i) {
                outcomes[i] = detail::evaluate_sample(cfg, target, i);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run_chunk(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(run_chunk, w);
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    McResult r;
    r.n_samples = n;
    double sum = 0.0;
    r.min = 1.0;
    r.max = 0.0;
    for (const auto &o : outcomes) {
        if (o.rejected) {
            ++r.n_rejected;
            continue;
        }
        sum += o.infidelity;
        r.min = std::min(r.min, o.infidelity);
        r.max = std::max(r.max, o.infidelity);
        r.histogram.add(o.infidelity);
    }
    const std::uint64_t kept = n - r.n_rejected;
    if (kept == 0) {
        throw RejectedSampleError("estimate_infidelity: every sample was rejected");
    }
    r.mean_infidelity = sum / static_cast<double>(kept);
    if (kept > 1) {
        double ss = 0.0;
        for (const auto &o : outcomes) {
            if (!o.rejected) {
                const double d = o.infidelity - r.mean_infidelity;
                ss += d * d;
            }
        }
        r.std_error = std::sqrt(ss / static_cast<double>(kept - 1) / static_cast<double>(kept));
    }
    return r;
}

/// Second-moment prediction: (3/16) E[(theta' - theta_target)^2] for the
/// coherent part, combined multiplicatively with the dephasing fidelity
/// (1 - p1)(1 - p2) at the nominal duration.
inline double analytic_prediction(const McConfig &cfg) {
    const double theta_nom = phase_from_pulse(cfg.nominal).value;
    const double theta_target = phase_for_swap_power(cfg.target_alpha).value;
    const double sa = cfg.sensitivity * cfg.noise.sigma_a;
    const double rt = cfg.noise.sigma_t / cfg.nominal.duration();
    const double sa2 = sa * sa;
    const double rt2 = rt * rt;
    const double rel_var = sa2 + rt2 + sa2 * rt2;
    const double offset = theta_nom - theta_target;
    const double coherent = 3.0 / 16.0 * (offset * offset + theta_nom * theta_nom * rel_var);
    const double t = cfg.nominal.duration();
    const double p1 = dephasing_probability(t, cfg.dephasing.t2[0]);
    const double p2 = dephasing_probability(t, cfg.dephasing.t2[1]);
    // 1 - (1 - c)(1 - p1)(1 - p2), arranged to avoid cancellation at small error.
    return coherent + (1.0 - coherent) * (p1 + p2 - p1 * p2);
}

enum class SweepAxis { sigma_a, sigma_t, t2, target_alpha, epsilon };

inline std::string_view to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::sigma_a:
            return "sigma_a";
        case SweepAxis::sigma_t:
            return "sigma_t";
        case SweepAxis::t2:
            return "t2";
        case SweepAxis::target_alpha:
            return "alpha";
        case SweepAxis::epsilon:
            return "epsilon";
    }
    return "?";
}

inline SweepAxis parse_sweep_axis(std::string_view s) {
    if (s == "sigma_a") return SweepAxis::sigma_a;
    if (s == "sigma_t") return SweepAxis::sigma_t;
    if (s == "t2") return SweepAxis::t2;
    if (s == "alpha" || s == "target_alpha") return SweepAxis::target_alpha;
    if (s == "epsilon") return SweepAxis::epsilon;
    throw InvalidArgument("unknown sweep axis '" + std::string(s) +
                          "' (expected sigma_a|sigma_t|t2|alpha|epsilon)");
}

/// Config with `axis` set to `value`. Sweeping alpha re-tunes a constant
/// nominal pulse to the new target at the same duration. Epsilon does not
/// change the simulated gate.
inline McConfig with_axis_value(McConfig cfg, SweepAxis axis, double value) {
    switch (axis) {
        case SweepAxis::sigma_a:
            cfg.noise.sigma_a = value;
            break;
        case SweepAxis::sigma_t:
            cfg.noise.sigma_t = value;
            break;
        case SweepAxis::t2:
            cfg.dephasing = DephasingSpec::uniform(value);
            break;
        case SweepAxis::target_alpha:
            cfg.target_alpha = value;
            cfg.nominal = PulseSpec::for_swap_power(value, cfg.nominal.duration());
            break;
        case SweepAxis::epsilon:
            if (!(value > 0.0 && value < 1.0)) {
                throw InvalidArgument("sweep: epsilon values must lie in (0, 1)");
            }
            break;
    }
    return cfg;
}

struct SweepRow {
    double value;
    McResult result;
    /// analytic_prediction of the row's config; for the epsilon axis, the threshold itself.
    double analytic;
};

inline std::vector<SweepRow> sweep(const McConfig &base, SweepAxis axis, const std::vector<double> &values,
                                   unsigned workers = 1) {
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        const McConfig cfg = with_axis_value(base, axis, v);
        const double analytic = axis == SweepAxis::epsilon ? v : analytic_prediction(cfg);
        rows.push_back({v, estimate_infidelity(cfg, workers), analytic});
    }
    return rows;
}

}  // namespace swapbudget
