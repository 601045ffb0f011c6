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

// Reader for spec documents: INI-style text with three section kinds.
//
//     ; whole-line comments start with ';' or '#'
//     [platform]
//     name = si-spin
//     t2_seconds = 0.5e-3
//     sensitivity = 1
//
//     [threshold]
//     epsilon = 1e-5
//
//     [technology.generator]
//     name = my-generator
//     sigma_a = 1e-2
//     sigma_t_seconds = 100e-12
//     bw_low_hz = 0
//     bw_high_hz = 1e9
//     notes = free text
//
// Technology sections are named [technology] or [technology.<label>] and may
// repeat with distinct labels. platform.name, bw_low_hz (default 0),
// bw_high_hz (default inf) and notes are optional. Numbers use '.' decimals and
// may use scientific notation. Unknown sections or keys are errors. Every
// error carries the dotted path of the offending field.

#pragma once

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "budget.hpp"
#include "errors.hpp"

namespace swapbudget {

struct SpecDocument {
    std::optional<PlatformSpec> platform;
    std::vector<TechnologySpec> technologies;
    std::optional<Threshold> threshold;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string &raw, const std::string &path) {
    const std::string_view s = trim(raw);
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last || std::isnan(v)) {
        throw SpecError(SpecError::Kind::parse, path, "expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

class SectionReader {
   public:
    SectionReader(const boost::property_tree::ptree &node, std::string path, std::set<std::string> allowed)
        : node_(node), path_(std::move(path)) {
        for (const auto &[key, child] : node_) {
            if (!child.empty()) {
                throw SpecError(SpecError::Kind::parse, field(key), "nested values are not supported");
            }
            if (!allowed.contains(key)) {
                throw SpecError(SpecError::Kind::unknown_field, field(key), "unknown key");
            }
        }
    }

    std::string field(const std::string &key) const {
        return path_ + "." + key;
    }

    std::optional<std::string> text(const std::string &key) const {
        auto it = node_.find(key);
        if (it == node_.not_found()) {
            return std::nullopt;
        }
        return std::string(trim(it->second.data()));
    }

    std::string required_text(const std::string &key) const {
        auto v = text(key);
        if (!v) {
            throw SpecError(SpecError::Kind::missing_field, field(key), "missing required field");
        }
        return *v;
    }

    std::optional<double> number(const std::string &key) const {
        auto v = text(key);
        if (!v) {
            return std::nullopt;
        }
        return parse_number(*v, field(key));
    }

    double required_number(const std::string &key) const {
        auto v = number(key);
        if (!v) {
            throw SpecError(SpecError::Kind::missing_field, field(key), "missing required field");
        }
        return *v;
    }

    void invariant(bool ok, const std::string &key, const std::string &what) const {
        if (!ok) {
            throw SpecError(SpecError::Kind::invariant, field(key), what);
        }
    }

   private:
    const boost::property_tree::ptree &node_;
    std::string path_;
};

inline PlatformSpec read_platform(const boost::property_tree::ptree &node) {
    SectionReader r(node, "platform", {"name", "t2_seconds", "sensitivity"});
    PlatformSpec p;
    p.name = r.text("name").value_or("custom");
    p.t2 = r.required_number("t2_seconds");
    p.sensitivity = r.required_number("sensitivity");
    r.invariant(p.t2 > 0.0, "t2_seconds", "must be > 0");
    r.invariant(std::isfinite(p.sensitivity) && p.sensitivity >= 0.0, "sensitivity", "must be finite and >= 0");
    return p;
}

inline Threshold read_threshold(const boost::property_tree::ptree &node) {
    SectionReader r(node, "threshold", {"epsilon"});
    const double e = r.required_number("epsilon");
    r.invariant(e > 0.0 && e < 1.0, "epsilon", "must lie in (0, 1)");
    return Threshold(e);
}

inline TechnologySpec read_technology(const boost::property_tree::ptree &node, const std::string &path) {
    SectionReader r(node, path, {"name", "sigma_a", "sigma_t_seconds", "bw_low_hz", "bw_high_hz", "notes"});
    TechnologySpec t;
    t.name = r.required_text("name");
    t.sigma_a = r.required_number("sigma_a");
    t.sigma_t = r.required_number("sigma_t_seconds");
    t.bw_low = r.number("bw_low_hz").value_or(0.0);
    t.bw_high = r.number("bw_high_hz").value_or(std::numeric_limits<double>::infinity());
    t.notes = r.text("notes").value_or("");
    r.invariant(!t.name.empty(), "name", "must not be empty");
    r.invariant(std::isfinite(t.sigma_a) && t.sigma_a >= 0.0, "sigma_a", "must be finite and >= 0");
    r.invariant(std::isfinite(t.sigma_t) && t.sigma_t >= 0.0, "sigma_t_seconds", "must be finite and >= 0");
    r.invariant(t.bw_low >= 0.0, "bw_low_hz", "must be >= 0");
    r.invariant(t.bw_high > t.bw_low, "bw_high_hz", "must exceed bw_low_hz");
    return t;
}

}  // namespace detail

inline SpecDocument load_specs(std::string_view content) {
    namespace pt = boost::property_tree;
    pt::ptree root;
    std::istringstream in{std::string(content)};
    try {
        pt::ini_parser::read_ini(in, root);
    } catch (const pt::ini_parser_error &e) {
        throw SpecError(SpecError::Kind::parse, "", "line " + std::to_string(e.line()) + ": " + e.message());
    }

    SpecDocument doc;
    std::set<std::string> tech_names;
    for (const auto &[section, node] : root) {
        if (node.empty() && !node.data().empty()) {
            throw SpecError(SpecError::Kind::unknown_field, section,
                            "keys must appear inside a [platform], [threshold] or [technology] section");
        }
        if (section == "platform") {
            doc.platform = detail::read_platform(node);
        } else if (section == "threshold") {
            doc.threshold = detail::read_threshold(node);
        } else if (section == "technology" || section.starts_with("technology.")) {
            auto t = detail::read_technology(node, section);
            if (!tech_names.insert(t.name).second) {
                throw SpecError(SpecError::Kind::duplicate, section + ".name",
                                "technology '" + t.name + "' defined twice");
            }
            doc.technologies.push_back(std::move(t));
        } else {
            throw SpecError(SpecError::Kind::unknown_field, section, "unknown section");
        }
    }
    return doc;
}

inline SpecDocument load_spec_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw SpecError(SpecError::Kind::parse, "", "cannot open spec file '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return load_specs(ss.str());
}

/// Builtin catalog followed by `extra`; a name already present is a duplicate error.
inline std::vector<TechnologySpec> merge_catalog(std::vector<TechnologySpec> base,
                                                 const std::vector<TechnologySpec> &extra) {
    for (const auto &t : extra) {
        for (const auto &b : base) {
            if (b.name == t.name) {
                throw SpecError(SpecError::Kind::duplicate, "technology.name",
                                "technology '" + t.name + "' collides with an existing catalog entry");
            }
        }
        base.push_back(t);
    }
    return base;
}

}  // namespace swapbudget
