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

// Command-line front end: feasibility | gate | mc | sweep | catalog.
//
// Exit status: 0 when the analysis completed (whatever the verdict), 2 for bad
// input, 1 for internal failures such as unwritable outputs.

#pragma once

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"
#include "exchange_gate.hpp"
#include "montecarlo.hpp"
#include "spec_file.hpp"

namespace swapbudget::cli {

inline constexpr const char *kVersion = "0.1.0";
/// Spec file whose technologies are merged into the catalog for every command.
inline constexpr const char *kCatalogEnv = "SWAPBUDGET_CATALOG";
inline constexpr double kDefaultEpsilon = 1e-5;

using nlohmann::ordered_json;

/// printf-style scientific notation; "inf" / "-inf" / "nan" for non-finite values.
inline std::string sci(double v, int digits = 3) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, v);
    return buf;
}

/// JSON has no infinity; encode non-finite numbers as null.
inline ordered_json num(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

namespace detail {

class OutputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw OutputError("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f) {
        throw OutputError("failed writing '" + path + "'");
    }
}

inline std::string manifest_path(const std::string &output) {
    std::filesystem::path p(output);
    p.replace_extension(".manifest.json");
    return p.string();
}

/// Writes `<output stem>.manifest.json` describing one run.
inline void write_manifest(const std::string &command, const ordered_json &parameters,
                           std::optional<std::uint64_t> seed, const std::vector<std::string> &outputs,
                           std::chrono::steady_clock::time_point started, const ordered_json &results = nullptr) {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    ordered_json m;
    m["command"] = command;
    m["tool_version"] = kVersion;
    m["parameters"] = parameters;
    m["defaults"] = {{"epsilon", kDefaultEpsilon}, {"seed", 0}};
    m["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
    m["outputs"] = outputs;
    if (!results.is_null()) {
        m["results"] = results;
    }
    m["wall_clock_seconds"] = wall;
    write_file(manifest_path(outputs.front()), m.dump(2) + "\n");
}

struct Catalog {
    std::vector<PlatformSpec> platforms = builtin_platforms();
    std::vector<TechnologySpec> technologies = builtin_catalog();
    std::vector<std::string> sources = std::vector<std::string>(builtin_catalog().size(), "builtin");

    void add(const SpecDocument &doc, const std::string &source) {
        const auto merged = merge_catalog(technologies, doc.technologies);
        sources.resize(merged.size(), source);
        technologies = merged;
        if (doc.platform) {
            platforms.push_back(*doc.platform);
        }
    }

    const TechnologySpec &technology(const std::string &name) const {
        for (const auto &t : technologies) {
            if (t.name == name) {
                return t;
            }
        }
        throw InvalidArgument("unknown technology '" + name + "' (see the catalog command)");
    }

    const PlatformSpec &platform(const std::string &name) const {
        // Later entries (spec files) shadow builtins of the same name.
        for (auto it = platforms.rbegin(); it != platforms.rend(); ++it) {
            if (it->name == name) {
                return *it;
            }
        }
        throw InvalidArgument("unknown platform '" + name + "'");
    }
};

inline Catalog load_catalog(const std::string &extra_file, std::optional<SpecDocument> *extra_doc = nullptr) {
    Catalog c;
    if (const char *env = std::getenv(kCatalogEnv); env != nullptr && *env != '\0') {
        c.add(load_spec_file(env), "env");
    }
    if (!extra_file.empty()) {
        auto doc = load_spec_file(extra_file);
        c.add(doc, extra_file);
        if (extra_doc) {
            *extra_doc = std::move(doc);
        }
    }
    return c;
}

inline ordered_json to_json(const PlatformSpec &p) {
    return {{"name", p.name}, {"t2_seconds", p.t2}, {"sensitivity", p.sensitivity}};
}

inline ordered_json to_json(const TechnologySpec &t) {
    return {{"name", t.name},         {"sigma_a", t.sigma_a},         {"sigma_t_seconds", t.sigma_t},
            {"bw_low_hz", num(t.bw_low)}, {"bw_high_hz", num(t.bw_high)}, {"notes", t.notes}};
}

}  // namespace detail

// ---------------------------------------------------------------- feasibility

struct FeasibilityArgs {
    std::string platform = "si-spin";
    std::optional<double> t2;
    std::optional<double> sensitivity;
    std::string tech;
    std::optional<double> sigma_a;
    std::optional<double> sigma_t;
    std::optional<double> bw_low;
    std::optional<double> bw_high;
    std::optional<double> epsilon;
    std::string spec_file;
    bool strict_bandwidth = false;
    bool platform_given = false;
    std::string out = "feasibility.json";
};

inline ordered_json report_json(const PlatformSpec &p, const TechnologySpec &t, const Threshold &eps, bool strict,
                                const FeasibilityReport &r) {
    ordered_json j;
    j["platform"] = detail::to_json(p);
    j["technology"] = detail::to_json(t);
    j["epsilon"] = eps.epsilon();
    j["strict_bandwidth"] = strict;
    j["feasible"] = r.feasible;
    j["t_window_seconds"] =
        r.t_window ? ordered_json::array({r.t_window->first, r.t_window->second}) : ordered_json(nullptr);
    j["amplitude_budget"] = r.amplitude_budget;
    j["t_min_seconds"] = num(r.t_min);
    j["t_max_seconds"] = num(r.t_max);
    ordered_json lim = ordered_json::array();
    for (auto c : r.limiting_constraints) {
        lim.push_back(std::string(to_string(c)));
    }
    j["limiting_constraints"] = lim;
    ordered_json f;
    for (auto c : kAllConstraints) {
        f[std::string(to_string(c))] = r.improvement_factors.of(c);
    }
    j["improvement_factors"] = f;
    j["required_bandwidth_hz"] = num(r.required_bandwidth);
    j["required_bandwidth_fastest_hz"] = num(r.required_bandwidth_fastest);
    j["bandwidth_ok"] = r.bandwidth_ok;
    return j;
}

inline void print_report(std::ostream &out, const PlatformSpec &p, const TechnologySpec &t, const Threshold &eps,
                         const FeasibilityReport &r) {
    auto row = [&](const std::string &name, const std::string &value, const std::string &unit) {
        out << "  " << std::left << std::setw(34) << name << std::setw(14) << value << unit << "\n";
    };
    out << "feasibility: " << p.name << " + " << t.name << " at epsilon " << sci(eps.epsilon()) << "\n";
    out << "  verdict: " << (r.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n\n";
    row("quantity", "value", "unit");
    row("T2", sci(p.t2), "s");
    row("sensitivity", sci(p.sensitivity), "dimensionless");
    row("sigma_a", sci(t.sigma_a), "dimensionless");
    row("sigma_t", sci(t.sigma_t), "s");
    row("amplitude budget (s*sigma_a)", sci(r.amplitude_budget), "dimensionless");
    row("T_min (jitter)", sci(r.t_min), "s");
    row("T_max (eps*T2)", sci(r.t_max), "s");
    if (r.t_window) {
        row("window", "(" + sci(r.t_window->first) + ", " + sci(r.t_window->second) + ")", "s");
    } else {
        row("window", "empty", "s");
    }
    row("required bandwidth (1/T_max)", sci(r.required_bandwidth), "Hz");
    row("required bandwidth (1/T_min)", sci(r.required_bandwidth_fastest), "Hz");
    row("technology bandwidth", sci(t.bw_high), "Hz");
    out << "\n";
    out << "  " << std::left << std::setw(14) << "constraint" << std::setw(10) << "limiting"
        << "improvement factor (dimensionless)\n";
    for (auto c : kAllConstraints) {
        out << "  " << std::left << std::setw(14) << to_string(c) << std::setw(10)
            << (r.is_limited_by(c) ? "yes" : "no") << sci(r.improvement_factors.of(c), 1) << "\n";
    }
}

inline int cmd_feasibility(const FeasibilityArgs &a, std::ostream &out) {
    const auto started = std::chrono::steady_clock::now();
    std::optional<SpecDocument> doc;
    const auto catalog = detail::load_catalog(a.spec_file, &doc);

    PlatformSpec platform = (doc && doc->platform && !a.platform_given) ? *doc->platform : catalog.platform(a.platform);
    if (a.t2) platform.t2 = *a.t2;
    if (a.sensitivity) platform.sensitivity = *a.sensitivity;

    std::string tech_name = a.tech;
    if (tech_name.empty()) {
        tech_name = (doc && doc->technologies.size() == 1) ? doc->technologies.front().name
                                                             : std::string("electrical-pulse-generator");
    }
    TechnologySpec tech = catalog.technology(tech_name);
    const bool overridden = a.sigma_a || a.sigma_t || a.bw_low || a.bw_high;
    if (a.sigma_a) tech.sigma_a = *a.sigma_a;
    if (a.sigma_t) tech.sigma_t = *a.sigma_t;
    if (a.bw_low) tech.bw_low = *a.bw_low;
    if (a.bw_high) tech.bw_high = *a.bw_high;
    if (overridden) {
        tech.name += " (overridden)";
    }

    const Threshold eps(a.epsilon ? *a.epsilon : (doc && doc->threshold ? doc->threshold->epsilon() : kDefaultEpsilon));
    const FeasibilityReport r = feasibility(platform, tech, eps, {a.strict_bandwidth});

    print_report(out, platform, tech, eps, r);
    const auto j = report_json(platform, tech, eps, a.strict_bandwidth, r);
    detail::write_file(a.out, j.dump(2) + "\n");
    ordered_json params = {{"platform", detail::to_json(platform)},
                           {"technology", detail::to_json(tech)},
                           {"epsilon", eps.epsilon()},
                           {"strict_bandwidth", a.strict_bandwidth},
                           {"spec_file", a.spec_file}};
    detail::write_manifest("feasibility", params, std::nullopt, {a.out}, started);
    out << "\nwrote " << a.out << "\n";
    return 0;
}

// ----------------------------------------------------------------------- gate

struct GateArgs {
    double alpha = 0.5;
    std::optional<double> phase_error;
    double dj = 0.0;
    double dt = 0.0;
};

inline int cmd_gate(const GateArgs &a, std::ostream &out) {
    const Unitary4 target = swap_power_target(a.alpha);
    const ExchangePhase theta = phase_for_swap_power(a.alpha);
    out << "target SWAP^" << a.alpha << " in basis |00>,|01>,|10>,|11> (P_triplet + e^{i pi alpha} P_singlet)\n";
    for (int r = 0; r < 4; ++r) {
        out << "  [";
        for (int c = 0; c < 4; ++c) {
            char buf[64];
            const auto z = target(r, c);
            std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", z.real() == 0.0 ? 0.0 : z.real(),
                          z.imag() == 0.0 ? 0.0 : z.imag());
            out << buf;
        }
        out << " ]\n";
    }
    out << "exchange phase theta = pi*alpha      " << sci(theta.value, 6) << " rad\n";
    out << "pulse area JT/hbar = 2*theta         " << sci(2.0 * theta.value, 6) << " rad\n";

    double dtheta;
    if (a.phase_error) {
        dtheta = *a.phase_error;
        out << "phase error (given)                  " << sci(dtheta, 6) << " rad\n";
    } else {
        const PhaseError pe = relative_error_to_phase_error(theta, a.dj, a.dt);
        dtheta = pe.exact;
        out << "dJ/J, dT/T                           " << sci(a.dj, 3) << ", " << sci(a.dt, 3) << "\n";
        out << "phase error exact                    " << sci(pe.exact, 6) << " rad\n";
        out << "phase error first order              " << sci(pe.first_order, 6) << " rad\n";
    }
    const double infid = gate_error_vs_phase(dtheta);
    out << "infidelity (1 - F_process)           " << sci(infid, 6) << " dimensionless\n";
    out << "leading order (3/16) dtheta^2        " << sci(3.0 / 16.0 * dtheta * dtheta, 6) << " dimensionless\n";
    out << "average-gate infidelity (4/5)(1-F)   " << sci(1.0 - average_fidelity(1.0 - infid), 6)
        << " dimensionless\n";
    return 0;
}

// ----------------------------------------------------------------- mc, sweep

struct McArgs {
    double alpha = 0.5;
    double gate_time = 1e-9;
    double sigma_a = 0.0;
    double sigma_t = 0.0;
    std::string distribution = "gaussian";
    std::optional<double> t2;
    double sensitivity = 1.0;
    std::int64_t n = 10000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::string reject_policy = "resample";
    std::string out;
};

inline McConfig to_config(const McArgs &a) {
    if (a.n < 1) {
        throw InvalidArgument("--n must be >= 1");
    }
    if (!(a.gate_time > 0.0)) {
        throw InvalidArgument("--gate-time must be > 0");
    }
    McConfig c;
    c.n_samples = static_cast<std::uint64_t>(a.n);
    c.seed = a.seed;
    c.target_alpha = a.alpha;
    c.nominal = PulseSpec::for_swap_power(a.alpha, a.gate_time);
    c.noise.sigma_a = a.sigma_a;
    c.noise.sigma_t = a.sigma_t;
    c.noise.distribution = parse_distribution(a.distribution);
    c.dephasing = a.t2 ? DephasingSpec::uniform(*a.t2) : DephasingSpec::none();
    c.sensitivity = a.sensitivity;
    if (a.reject_policy == "resample") {
        c.reject_policy = RejectPolicy::resample;
    } else if (a.reject_policy == "discard") {
        c.reject_policy = RejectPolicy::discard;
    } else {
        throw InvalidArgument("--reject-policy must be resample or discard");
    }
    c.validate();
    return c;
}

inline ordered_json config_json(const McArgs &a, const McConfig &c) {
    return {{"alpha", c.target_alpha},
            {"gate_time_seconds", c.nominal.duration()},
            {"exchange_rad_per_second", c.nominal.omega()},
            {"sigma_a", c.noise.sigma_a},
            {"sigma_t_seconds", c.noise.sigma_t},
            {"distribution", std::string(to_string(c.noise.distribution))},
            {"t2_seconds", a.t2 ? ordered_json(*a.t2) : ordered_json(nullptr)},
            {"sensitivity", c.sensitivity},
            {"n_samples", c.n_samples},
            {"reject_policy", a.reject_policy},
            {"workers", a.workers}};
}

inline constexpr const char *kCsvHeader = "axis_value,mean_infidelity,stderr,analytic_prediction,n_samples,seed\n";

inline std::string csv_row(double axis_value, const McResult &r, double analytic, std::uint64_t seed) {
    return sci(axis_value, 16) + "," + sci(r.mean_infidelity, 16) + "," + sci(r.std_error, 16) + "," +
           sci(analytic, 16) + "," + std::to_string(r.n_samples) + "," + std::to_string(seed) + "\n";
}

inline void print_mc_line(std::ostream &out, const std::string &label, const McResult &r, double analytic) {
    out << "  " << std::left << std::setw(16) << label << std::setw(14) << sci(r.mean_infidelity) << std::setw(14)
        << sci(r.std_error) << std::setw(14) << sci(analytic) << std::setw(12) << sci(r.min) << std::setw(12)
        << sci(r.max) << r.n_rejected << "\n";
}

inline void print_mc_header(std::ostream &out, const std::string &axis) {
    out << "  " << std::left << std::setw(16) << axis << std::setw(14) << "mean (1)" << std::setw(14) << "stderr (1)"
        << std::setw(14) << "analytic (1)" << std::setw(12) << "min (1)" << std::setw(12) << "max (1)"
        << "rejected\n";
}

/// The single CSV row carries axis_value = alpha.
inline int cmd_mc(const McArgs &a, std::ostream &out) {
    const auto started = std::chrono::steady_clock::now();
    const McConfig cfg = to_config(a);
    const McResult r = estimate_infidelity(cfg, a.workers);
    const double analytic = analytic_prediction(cfg);
    const std::string path = a.out.empty() ? "mc.csv" : a.out;
    detail::write_file(path, std::string(kCsvHeader) + csv_row(cfg.target_alpha, r, analytic, cfg.seed));
    detail::write_manifest("mc", config_json(a, cfg), cfg.seed, {path}, started,
                           {{"n_samples", r.n_samples}, {"n_rejected", r.n_rejected}});

    out << "monte carlo: SWAP^" << cfg.target_alpha << ", " << cfg.n_samples << " samples, seed " << cfg.seed << "\n";
    print_mc_header(out, "alpha");
    print_mc_line(out, sci(cfg.target_alpha), r, analytic);
    out << "wrote " << path << "\n";
    return 0;
}

struct SweepArgs {
    McArgs mc;
    std::string axis;
    std::vector<double> values;
};

inline int cmd_sweep(const SweepArgs &a, std::ostream &out) {
    const auto started = std::chrono::steady_clock::now();
    const SweepAxis axis = parse_sweep_axis(a.axis);
    if (a.values.empty()) {
        throw InvalidArgument("--values must list at least one value");
    }
    const McConfig cfg = to_config(a.mc);
    const auto rows = sweep(cfg, axis, a.values, a.mc.workers);

    std::string csv = kCsvHeader;
    for (const auto &row : rows) {
        csv += csv_row(row.value, row.result, row.analytic, cfg.seed);
    }
    const std::string path = a.mc.out.empty() ? "sweep.csv" : a.mc.out;
    detail::write_file(path, csv);
    auto params = config_json(a.mc, cfg);
    params["axis"] = std::string(to_string(axis));
    params["values"] = a.values;
    ordered_json rejected = ordered_json::array();
    for (const auto &row : rows) {
        rejected.push_back(row.result.n_rejected);
    }
    detail::write_manifest("sweep", params, cfg.seed, {path}, started, {{"n_rejected", rejected}});

    out << "sweep over " << to_string(axis) << ": " << rows.size() << " rows, " << cfg.n_samples
        << " samples each, seed " << cfg.seed << "\n";
    print_mc_header(out, std::string(to_string(axis)));
    for (const auto &row : rows) {
        print_mc_line(out, sci(row.value), row.result, row.analytic);
    }
    out << "wrote " << path << "\n";
    return 0;
}

// -------------------------------------------------------------------- catalog

struct CatalogArgs {
    std::string format = "text";
    std::string file;
};

inline int cmd_catalog(const CatalogArgs &a, std::ostream &out) {
    if (a.format != "text" && a.format != "json") {
        throw InvalidArgument("--format must be text or json");
    }
    const auto catalog = detail::load_catalog(a.file);
    if (a.format == "json") {
        ordered_json j;
        j["platforms"] = ordered_json::array();
        for (const auto &p : catalog.platforms) {
            j["platforms"].push_back(detail::to_json(p));
        }
        j["technologies"] = ordered_json::array();
        for (std::size_t i = 0; i < catalog.technologies.size(); ++i) {
            auto t = detail::to_json(catalog.technologies[i]);
            t["source"] = catalog.sources[i];
            j["technologies"].push_back(t);
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "platforms\n";
    out << "  " << std::left << std::setw(30) << "name" << std::setw(14) << "T2 (s)" << "sensitivity (1)\n";
    for (const auto &p : catalog.platforms) {
        out << "  " << std::left << std::setw(30) << p.name << std::setw(14) << sci(p.t2) << sci(p.sensitivity)
            << "\n";
    }
    out << "\ntechnologies\n";
    out << "  " << std::left << std::setw(30) << "name" << std::setw(14) << "sigma_a (1)" << std::setw(14)
        << "sigma_t (s)" << std::setw(14) << "bw_low (Hz)" << std::setw(14) << "bw_high (Hz)" << "source\n";
    for (std::size_t i = 0; i < catalog.technologies.size(); ++i) {
        const auto &t = catalog.technologies[i];
        out << "  " << std::left << std::setw(30) << t.name << std::setw(14) << sci(t.sigma_a) << std::setw(14)
            << sci(t.sigma_t) << std::setw(14) << sci(t.bw_low) << std::setw(14) << sci(t.bw_high)
            << catalog.sources[i] << "\n";
        if (!t.notes.empty()) {
            out << "      " << t.notes << "\n";
        }
    }
    return 0;
}

// ----------------------------------------------------------------------- main

inline void add_mc_options(CLI::App &cmd, McArgs &a) {
    cmd.add_option("--alpha", a.alpha, "target SWAP exponent")->capture_default_str();
    cmd.add_option("--gate-time", a.gate_time, "nominal pulse duration, seconds")->capture_default_str();
    cmd.add_option("--sigma-a", a.sigma_a, "RMS relative amplitude noise of the control field")->capture_default_str();
    cmd.add_option("--sigma-t", a.sigma_t, "RMS timing jitter, seconds")->capture_default_str();
    cmd.add_option("--distribution", a.distribution, "gaussian | uniform")->capture_default_str();
    cmd.add_option("--t2", a.t2, "dephasing time per qubit, seconds (omit for none)");
    cmd.add_option("--sensitivity", a.sensitivity, "logarithmic dJ/dE sensitivity")->capture_default_str();
    cmd.add_option("--n", a.n, "number of samples")->capture_default_str();
    cmd.add_option("--seed", a.seed, "64-bit seed")->capture_default_str();
    cmd.add_option("--workers", a.workers, "worker threads (0 = all cores)")->capture_default_str();
    cmd.add_option("--reject-policy", a.reject_policy, "resample | discard")->capture_default_str();
    cmd.add_option("--out", a.out, "CSV output path");
}

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exchange-gate error budgets: feasibility, gate error, Monte Carlo", "swapbudget"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    FeasibilityArgs fa;
    auto *feas = app.add_subcommand("feasibility", "feasible gate-time window for a platform and control technology");
    feas->add_option("--platform", fa.platform, "platform name")->capture_default_str();
    feas->add_option("--t2", fa.t2, "override T2, seconds");
    feas->add_option("--sensitivity", fa.sensitivity, "override logarithmic dJ/dE sensitivity");
    feas->add_option("--tech", fa.tech, "technology name (default electrical-pulse-generator)");
    feas->add_option("--sigma-a", fa.sigma_a, "override relative amplitude noise");
    feas->add_option("--sigma-t", fa.sigma_t, "override timing jitter, seconds");
    feas->add_option("--bw-low", fa.bw_low, "override lower band edge, Hz");
    feas->add_option("--bw-high", fa.bw_high, "override upper band edge, Hz");
    feas->add_option("--epsilon", fa.epsilon, "fault-tolerance threshold (default 1e-5)");
    feas->add_option("--spec", fa.spec_file, "spec file with platform / technology / threshold sections");
    feas->add_flag("--strict-bandwidth", fa.strict_bandwidth, "require T >= 1/bw_high");
    feas->add_option("--out", fa.out, "JSON report path")->capture_default_str();

    GateArgs ga;
    auto *gate = app.add_subcommand("gate", "closed-form error of a SWAP^alpha exchange gate");
    gate->add_option("--alpha", ga.alpha, "SWAP exponent")->capture_default_str();
    auto *pe = gate->add_option("--phase-error", ga.phase_error, "exchange phase error, rad");
    auto *dj = gate->add_option("--dj", ga.dj, "relative exchange error dJ/J");
    auto *dt = gate->add_option("--dt", ga.dt, "relative duration error dT/T");
    pe->excludes(dj)->excludes(dt);

    McArgs ma;
    auto *mc = app.add_subcommand("mc", "Monte Carlo infidelity estimate");
    add_mc_options(*mc, ma);

    SweepArgs sa;
    auto *sw = app.add_subcommand("sweep", "Monte Carlo over a list of parameter values");
    add_mc_options(*sw, sa.mc);
    sw->add_option("--axis", sa.axis, "sigma_a | sigma_t | t2 | alpha | epsilon")->required();
    sw->add_option("--values", sa.values, "comma-separated values")->required()->delimiter(',');

    CatalogArgs ca;
    auto *cat = app.add_subcommand("catalog", "list platforms and control technologies");
    cat->add_option("--format", ca.format, "text | json")->capture_default_str();
    cat->add_option("--file", ca.file, "spec file with extra technologies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (feas->parsed()) {
            fa.platform_given = feas->count("--platform") > 0;
            return cmd_feasibility(fa, out);
        }
        if (gate->parsed()) {
            return cmd_gate(ga, out);
        }
        if (mc->parsed()) {
            return cmd_mc(ma, out);
        }
        if (sw->parsed()) {
            return cmd_sweep(sa, out);
        }
        if (cat->parsed()) {
            return cmd_catalog(ca, out);
        }
    } catch (const SpecError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const RejectedSampleError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "internal error: no command ran\n";
    return 1;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("swapbudget");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace swapbudget::cli
