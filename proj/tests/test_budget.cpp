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

#include <catch2/catch_amalgamated.hpp>
#include <limits>
#include <random>

#include "swapbudget/budget.hpp"

using namespace swapbudget;
using Catch::Approx;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const TechnologySpec &tech(const std::string &name) {
    static const auto catalog = builtin_catalog();
    for (const auto &t : catalog) {
        if (t.name == name) return t;
    }
    throw std::runtime_error("missing " + name);
}

/// Re-evaluates the constraints at a given gate time, independently of the window arithmetic.
bool satisfies_all(const PlatformSpec &p, const TechnologySpec &t, double eps, double gate) {
    return p.sensitivity * t.sigma_a + t.sigma_t / gate < eps && gate < eps * p.t2;
}

}  // namespace

TEST_CASE("gate-time bounds") {
    CHECK(max_gate_time(Threshold(1e-5), 0.5e-3) == 5e-9);
    CHECK(max_gate_time(Threshold(1e-4), 0.5e-3) == Approx(50e-9).epsilon(1e-15));
    CHECK(max_gate_time(Threshold(1e-4), 0.0) == 0.0);

    CHECK(min_gate_time_from_jitter(100e-12, 1e-5) == Approx(10e-6).epsilon(1e-15));
    CHECK(min_gate_time_from_jitter(240e-15, 1e-5) == Approx(24e-9).epsilon(1e-15));
    CHECK(min_gate_time_from_jitter(0.0, 1e-5) == 0.0);
    CHECK_THROWS_AS(min_gate_time_from_jitter(1e-12, 0.0), InvalidArgument);

    CHECK(required_bandwidth(5e-9) == Approx(2e8).epsilon(1e-15));
    CHECK(required_bandwidth(1.0) == 1.0);
    CHECK(required_bandwidth(10e-6) == Approx(1e5).epsilon(1e-15));
    CHECK_THROWS_AS(required_bandwidth(0.0), InvalidArgument);

    CHECK_THROWS_AS(Threshold(0.0), InvalidArgument);
    CHECK_THROWS_AS(Threshold(1.0), InvalidArgument);
}

TEST_CASE("feasibility on the builtin catalog") {
    const auto si = si_spin_platform();
    const Threshold eps(1e-5);

    SECTION("electrical pulse generator needs a 1e3 amplitude improvement") {
        const auto r = feasibility(si, tech("electrical-pulse-generator"), eps);
        CHECK_FALSE(r.feasible);
        CHECK_FALSE(r.t_window.has_value());
        REQUIRE(!r.limiting_constraints.empty());
        CHECK(r.limiting_constraints.front() == Constraint::amplitude);
        CHECK(r.improvement_factors.amplitude == (1.0 * 1e-2) / 1e-5);
        CHECK(r.improvement_factors.amplitude == Approx(1e3).epsilon(1e-15));
        // jitter alone: 100 ps / 1e-5 = 10 us against 5 ns
        CHECK(r.is_limited_by(Constraint::jitter));
        CHECK(r.improvement_factors.jitter == Approx(2000.0).epsilon(1e-12));
        CHECK(r.improvement_factors.decoherence == 1.0);
    }
    SECTION("perfect technology opens (0, 5 ns)") {
        TechnologySpec perfect{"perfect", 0.0, 0.0, 0.0, kInf, ""};
        const auto r = feasibility(si, perfect, eps);
        CHECK(r.feasible);
        REQUIRE(r.t_window.has_value());
        CHECK(r.t_window->first == 0.0);
        CHECK(r.t_window->second == 5e-9);
        CHECK(r.limiting_constraints.empty());
        CHECK(r.required_bandwidth == Approx(2e8).epsilon(1e-15));
        CHECK(std::isinf(r.required_bandwidth_fastest));
    }
    SECTION("mode-locked laser is amplitude-limited by 50 at 1e-5") {
        const auto r = feasibility(si, tech("modelocked-laser-10GHz"), eps);
        CHECK_FALSE(r.feasible);
        CHECK(r.limiting_constraints.front() == Constraint::amplitude);
        CHECK(r.improvement_factors.amplitude == Approx(50.0).epsilon(1e-14));
        // 240 fs / 1e-5 = 24 ns > 5 ns
        CHECK(r.improvement_factors.jitter == Approx(24.0 / 5.0).epsilon(1e-12));
    }
    SECTION("laser timing alone at 1e-4 leaves (2.4 ns, 50 ns)") {
        TechnologySpec t = tech("modelocked-laser-10GHz");
        t.sigma_a = 0.0;
        const auto r = feasibility(si, t, Threshold(1e-4));
        CHECK(r.feasible);
        CHECK(r.t_window->first == Approx(2.4e-9).epsilon(1e-12));
        CHECK(r.t_window->second == Approx(50e-9).epsilon(1e-12));
    }
    SECTION("jitter-limited reports the window ratio") {
        TechnologySpec t{"jittery", 0.0, 1e-13, 0.0, kInf, ""};
        const auto r = feasibility(si, t, eps);  // T_min = 10 ns, T_max = 5 ns
        CHECK_FALSE(r.feasible);
        CHECK(r.limiting_constraints == std::vector{Constraint::jitter, Constraint::decoherence});
        CHECK(r.improvement_factors.jitter == Approx(2.0).epsilon(1e-12));
        CHECK(r.improvement_factors.amplitude == 1.0);
    }
    SECTION("strict bandwidth raises T_min to 1/bw_high") {
        TechnologySpec t{"slow", 0.0, 0.0, 0.0, 1e8, ""};
        const auto loose = feasibility(si, t, eps);
        CHECK(loose.feasible);
        CHECK_FALSE(loose.bandwidth_ok);  // 1/T_max = 2e8 Hz > 1e8 Hz
        const auto strict = feasibility(si, t, eps, {true});
        CHECK_FALSE(strict.feasible);
        CHECK(strict.is_limited_by(Constraint::bandwidth));
        CHECK(strict.improvement_factors.bandwidth == Approx(2.0).epsilon(1e-12));

        t.bw_high = 1e9;
        const auto ok = feasibility(si, t, eps, {true});
        CHECK(ok.feasible);
        CHECK(ok.t_window->first == Approx(1e-9).epsilon(1e-15));
    }
    SECTION("catalog entries are valid and carry the quoted figures") {
        const auto c = builtin_catalog();
        REQUIRE(c.size() >= 2);
        for (const auto &t : c) CHECK_NOTHROW(t.validate());
        CHECK(tech("electrical-pulse-generator").sigma_a == 1e-2);
        CHECK(tech("electrical-pulse-generator").sigma_t == 100e-12);
        CHECK(tech("electrical-pulse-generator").bw_high == 1e9);
        CHECK(tech("modelocked-laser-10GHz").sigma_a == 5e-4);
        CHECK(tech("modelocked-laser-10GHz").sigma_t == 240e-15);
        CHECK(tech("modelocked-laser-10GHz").bw_low == 10.0);
        CHECK(tech("modelocked-laser-10GHz").bw_high == 5e9);
    }
    SECTION("pure and deterministic") {
        const auto a = feasibility(si, tech("modelocked-laser-10GHz"), eps);
        const auto b = feasibility(si, tech("modelocked-laser-10GHz"), eps);
        CHECK(a.limiting_constraints == b.limiting_constraints);
        CHECK(a.improvement_factors.amplitude == b.improvement_factors.amplitude);
        CHECK(a.t_min == b.t_min);
    }
}

TEST_CASE("feasibility properties") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) { return std::pow(10.0, std::log10(lo) + u(rng) * std::log10(hi / lo)); };

    for (int trial = 0; trial < 2000; ++trial) {
        const PlatformSpec p{"p", log_uniform(1e-5, 1e-1), log_uniform(1e-3, 10.0)};
        const TechnologySpec t{"t", log_uniform(1e-8, 1e-2), log_uniform(1e-16, 1e-9), 0.0, log_uniform(1e6, 1e12), ""};
        const double e = log_uniform(1e-6, 1e-2);
        const auto r = feasibility(p, t, Threshold(e));

        // invariants of the report
        CHECK(r.feasible == r.t_window.has_value());
        for (auto c : kAllConstraints) {
            CHECK(r.improvement_factors.of(c) >= 1.0);
            if (!r.is_limited_by(c)) CHECK(r.improvement_factors.of(c) == 1.0);
        }
        if (r.is_limited_by(Constraint::amplitude)) {
            CHECK(r.improvement_factors.amplitude == p.sensitivity * t.sigma_a / e);
        }
        // every interior time in the window satisfies the inequalities
        if (r.feasible) {
            const auto [lo, hi] = *r.t_window;
            for (double f : {1e-6, 0.25, 0.5, 0.75, 1 - 1e-6}) {
                const double gate = lo + f * (hi - lo);
                CHECK(satisfies_all(p, t, e, gate));
            }
        }
    }
}
