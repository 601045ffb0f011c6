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

// Walks through the library: builds sqrt(SWAP) from a pulse, checks it against
// the target, and asks whether the builtin technologies can drive it.

#include <cstdio>

#include "swapbudget/swapbudget.hpp"

using namespace swapbudget;

int main() {
    // J/hbar = 2 pi GHz; JT = pi hbar gives theta = pi/2, i.e. sqrt(SWAP).
    const double omega = 2.0 * std::numbers::pi * 1e9;
    const PulseSpec pulse = PulseSpec::constant(omega, std::numbers::pi / omega);
    const ExchangePhase theta = phase_from_pulse(pulse);
    const double f = process_fidelity(exchange_unitary(theta), swap_power_target(0.5));
    std::printf("theta = %.6f rad, F(U, SWAP^1/2) = %.15f\n", theta.value, f);

    // A 1e-5 relative error in J.
    const PhaseError pe = relative_error_to_phase_error(theta, 1e-5, 0.0);
    std::printf("dJ/J = 1e-5 -> dtheta = %.3e rad, infidelity %.3e\n", pe.exact, gate_error_vs_phase(pe.exact));

    const Threshold eps(1e-5);
    for (const auto &tech : builtin_catalog()) {
        const auto r = feasibility(si_spin_platform(), tech, eps);
        std::printf("%-28s %s", tech.name.c_str(), r.feasible ? "feasible" : "infeasible");
        for (auto c : r.limiting_constraints) {
            std::printf("  %s x%.3g", std::string(to_string(c)).c_str(), r.improvement_factors.of(c));
        }
        std::printf("\n");
    }

    McConfig cfg;
    cfg.noise.sigma_a = 1e-3;
    cfg.n_samples = 20000;
    cfg.seed = 1;
    const McResult mc = estimate_infidelity(cfg);
    std::printf("MC mean infidelity %.4e +- %.1e (analytic %.4e)\n", mc.mean_infidelity, mc.std_error,
                analytic_prediction(cfg));
    return 0;
}
