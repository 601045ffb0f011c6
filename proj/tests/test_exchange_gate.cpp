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
#include <numbers>

#include "oracles.hpp"
#include "swapbudget/exchange_gate.hpp"

using namespace swapbudget;
using Catch::Approx;
constexpr double pi = std::numbers::pi;

TEST_CASE("phase_from_pulse") {
    SECTION("JT = pi hbar gives theta = pi/2") {
        const double omega = 2 * pi * 1e9;
        const auto p = PulseSpec::constant(omega, pi / omega);
        CHECK(phase_from_pulse(p).value == Approx(pi / 2).epsilon(1e-15));
    }
    SECTION("energy input divides by hbar") {
        const double omega = 2 * pi * 1e9;
        const auto p = PulseSpec::from_energy(omega * kHbar, pi / omega);
        CHECK(phase_from_pulse(p).value == Approx(pi / 2).epsilon(1e-14));
    }
    SECTION("zero coupling") {
        CHECK(phase_from_pulse(PulseSpec::constant(0.0, 1e-9)).value == 0.0);
    }
    SECTION("piecewise profile with equal area") {
        const double omega = 1e9, t = 2e-9;
        // 2*omega for the first half, zero afterwards, with a sharp edge.
        const auto p = PulseSpec::from_profile({{0.0, 2 * omega}, {t / 2, 2 * omega}, {t / 2 + 1e-22, 0.0}, {t, 0.0}});
        CHECK(phase_from_pulse(p).value == Approx(phase_from_pulse(PulseSpec::constant(omega, t)).value).margin(1e-12));
    }
    SECTION("invalid pulses") {
        CHECK_THROWS_AS(PulseSpec::from_profile({}), InvalidArgument);
        CHECK_THROWS_AS(PulseSpec::from_profile({{0.0, 1.0}, {2.0, 1.0}, {1.0, 1.0}}), InvalidArgument);
        CHECK_THROWS_AS(PulseSpec::from_profile({{0.1, 1.0}, {1.0, 1.0}}), InvalidArgument);
        CHECK_THROWS_AS(PulseSpec::constant(1.0, 0.0), InvalidArgument);
        CHECK_THROWS_AS(PulseSpec::constant(-1.0, 1.0), InvalidArgument);
    }
}

TEST_CASE("exchange_unitary") {
    SECTION("theta = 0 is identity") {
        CHECK(oracle::max_abs_diff(exchange_unitary(ExchangePhase(0.0)).matrix(), Mat4::Identity()) < 1e-15);
    }
    SECTION("theta = pi is e^{-i pi/4} SWAP") {
        const Mat4 expected = std::polar(1.0, -pi / 4) * swap_matrix();
        CHECK(oracle::max_abs_diff(exchange_unitary(ExchangePhase(pi)).matrix(), expected) < 1e-15);
    }
    SECTION("theta = pi/2 squares to SWAP") {
        const auto u = exchange_unitary(ExchangePhase(pi / 2));
        CHECK(process_fidelity(u * u, Unitary4(swap_matrix())) == Approx(1.0).margin(1e-10));
    }
    SECTION("agrees with the series exponential of s1.s2") {
        const double th = GENERATE(take(20, random(-10.0, 10.0)));
        const Mat4 ref = oracle::taylor_expm<4>(oracle::spin_dot_by_components(), th);
        CHECK(oracle::max_abs_diff(exchange_unitary(ExchangePhase(th)).matrix(), ref) < 1e-10);
    }
    SECTION("depends only on pulse area") {
        const double omega = 3.1e9, t = 0.7e-9;
        const auto a = exchange_unitary(phase_from_pulse(PulseSpec::constant(omega, t)));
        const auto b = exchange_unitary(phase_from_pulse(PulseSpec::constant(2 * omega, t / 2)));
        CHECK(oracle::max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
    }
    SECTION("smooth profile equals constant pulse of equal area") {
        const double t = 1e-9, peak = 4e9;
        std::vector<ProfileSample> s;
        const int n = 4001;
        for (int i = 0; i < n; ++i) {
            const double ti = t * i / (n - 1);
            s.push_back({ti, peak * std::sin(pi * ti / t) * std::sin(pi * ti / t)});
        }
        const auto prof = PulseSpec::from_profile(s);
        const double exact_area = peak * t / 2;  // integral of sin^2 over one half period
        const auto u_prof = exchange_unitary(phase_from_pulse(prof));
        const auto u_const = exchange_unitary(phase_from_pulse(PulseSpec::constant(exact_area / t, t)));
        CHECK(oracle::max_abs_diff(u_prof.matrix(), u_const.matrix()) < 1e-9);
    }
    SECTION("group law") {
        const double a = GENERATE(take(10, random(-6.0, 6.0)));
        const double b = 1.234;
        const Mat4 lhs = exchange_unitary(ExchangePhase(a)).matrix() * exchange_unitary(ExchangePhase(b)).matrix();
        CHECK(oracle::max_abs_diff(lhs, exchange_unitary(ExchangePhase(a + b)).matrix()) < 1e-10);
    }
}

TEST_CASE("swap_power_target") {
    CHECK(oracle::max_abs_diff(swap_power_target(0.0).matrix(), Mat4::Identity()) < 1e-15);
    CHECK(oracle::max_abs_diff(swap_power_target(1.0).matrix(), swap_matrix()) < 1e-15);

    const auto h = swap_power_target(0.5);
    const cplx d(0.5, 0.5), o(0.5, -0.5);
    CHECK(std::abs(h(1, 1) - d) < 1e-15);
    CHECK(std::abs(h(2, 2) - d) < 1e-15);
    CHECK(std::abs(h(1, 2) - o) < 1e-15);
    CHECK(std::abs(h(2, 1) - o) < 1e-15);
    CHECK(std::abs(h(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(h(3, 3) - 1.0) < 1e-15);

    SECTION("U(pi alpha) realizes SWAP^alpha up to phase e^{-i pi alpha/4}") {
        for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0}) {
            const auto u = exchange_unitary(phase_for_swap_power(alpha));
            const auto v = swap_power_target(alpha);
            CHECK(process_fidelity(u, v) >= 1.0 - 1e-10);
            CHECK(oracle::max_abs_diff(u.matrix(), std::polar(1.0, -pi * alpha / 4) * v.matrix()) < 1e-14);
        }
    }
    SECTION("SWAP^a SWAP^b = SWAP^(a+b)") {
        const Mat4 prod = swap_power_target(0.3).matrix() * swap_power_target(0.45).matrix();
        CHECK(oracle::max_abs_diff(prod, swap_power_target(0.75).matrix()) < 1e-14);
    }
    SECTION("pulse for swap power has JT = 2 pi alpha") {
        const auto p = PulseSpec::for_swap_power(0.5, 2e-9);
        CHECK(p.omega() * p.duration() == Approx(pi).epsilon(1e-15));
    }
}

TEST_CASE("gate_error_vs_phase") {
    CHECK(gate_error_vs_phase(0.0) == 0.0);
    CHECK(gate_error_vs_phase(pi) == Approx(0.75).margin(1e-15));
    // cross-check via |3 e^{-i d/4} + e^{3 i d/4}|^2 = 10 + 6 cos d
    for (double d : {0.1, 0.7, 2.0, 3.0}) {
        const double tr2 = std::norm(3.0 * std::polar(1.0, -d / 4) + std::polar(1.0, 3 * d / 4));
        CHECK(tr2 == Approx(10 + 6 * std::cos(d)).margin(1e-12));
        CHECK(gate_error_vs_phase(d) == Approx(1.0 - tr2 / 16).margin(1e-14));
    }
    CHECK(gate_error_vs_phase(1e-3) == Approx(1.875e-7).epsilon(0.01));

    SECTION("independent of the base phase") {
        const double base = GENERATE(take(10, random(-8.0, 8.0)));
        const double d = 0.37;
        const double numeric =
            1.0 - process_fidelity(exchange_unitary(ExchangePhase(base)), exchange_unitary(ExchangePhase(base + d)));
        CHECK(numeric == Approx(gate_error_vs_phase(d)).margin(1e-13));
    }
    SECTION("even and 2 pi periodic") {
        const double d = GENERATE(take(20, random(-10.0, 10.0)));
        CHECK(gate_error_vs_phase(-d) == Approx(gate_error_vs_phase(d)).margin(1e-15));
        CHECK(gate_error_vs_phase(d + 2 * pi) == Approx(gate_error_vs_phase(d)).margin(1e-13));
    }
    CHECK(average_fidelity(1.0) == 1.0);
    CHECK(average_fidelity(0.25) == Approx(0.4));
}

TEST_CASE("relative_error_to_phase_error") {
    const auto a = relative_error_to_phase_error(ExchangePhase(pi / 2), 1e-5, 0.0);
    CHECK(a.exact == Approx(pi / 2 * 1e-5).epsilon(1e-12));
    CHECK(a.first_order == Approx(pi / 2 * 1e-5).epsilon(1e-12));

    const auto z = relative_error_to_phase_error(ExchangePhase(3.3), 0.0, 0.0);
    CHECK(z.exact == 0.0);
    CHECK(z.first_order == 0.0);

    const auto b = relative_error_to_phase_error(ExchangePhase(1.0), 1e-2, 1e-2);
    CHECK(b.exact == Approx(0.0201).epsilon(1e-12));
    CHECK(b.first_order == Approx(0.02).epsilon(1e-12));
    CHECK(b.exact - b.first_order == Approx(1e-4).epsilon(1e-9));

    CHECK_THROWS_AS(relative_error_to_phase_error(ExchangePhase(1.0), 1.0, 0.0), InvalidArgument);
}
