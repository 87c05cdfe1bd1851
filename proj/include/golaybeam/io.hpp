// SPDX-License-Identifier: Apache-2.0
//
// File formats: sequence / pair / array-pair JSON, scenario files, and
// CSV / JSON serialization of pattern maps. Angles are degrees in files
// and radians in memory; conversion happens here.
#ifndef GOLAYBEAM_IO_HPP
#define GOLAYBEAM_IO_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "golaybeam/array.hpp"
#include "golaybeam/errors.hpp"
#include "golaybeam/ris.hpp"
#include "golaybeam/sequence.hpp"
#include "golaybeam/sweep.hpp"

namespace golaybeam {

using json = nlohmann::json;

inline double deg_from_rad(double r) { return r * 180.0 / std::numbers::pi; }
inline double rad_from_deg(double d) { return d * std::numbers::pi / 180.0; }

namespace detail {

inline bool all_multiples_of(const std::vector<double> &phases, double step) {
    for (double p : phases) {
        const double q = p / step;
        if (std::abs(q - std::round(q)) > 1e-9)
            return false;
    }
    return true;
}

} // namespace detail

inline std::string alphabet_name(Alphabet a) {
    switch (a) {
    case Alphabet::binary: return "binary";
    case Alphabet::quaternary: return "quaternary";
    case Alphabet::polyphase: return "polyphase";
    }
    return "?";
}

inline Alphabet alphabet_from_name(const std::string &s) {
    if (s == "binary") return Alphabet::binary;
    if (s == "quaternary") return Alphabet::quaternary;
    if (s == "polyphase") return Alphabet::polyphase;
    throw invalid_input("unknown alphabet: " + s);
}

// Tightest alphabet that contains all phases (modulo 2*pi grid check).
inline Alphabet infer_alphabet(const UnimodularSequence &u) {
    if (detail::all_multiples_of(u.phases(), std::numbers::pi))
        return Alphabet::binary;
    if (detail::all_multiples_of(u.phases(), std::numbers::pi / 2.0))
        return Alphabet::quaternary;
    return Alphabet::polyphase;
}

inline json sequence_to_json(const UnimodularSequence &u) {
    return json{{"alphabet", alphabet_name(infer_alphabet(u))}, {"phases", u.phases()}};
}

inline UnimodularSequence sequence_from_json(const json &j) {
    if (!j.contains("phases") || !j["phases"].is_array())
        throw invalid_input("sequence JSON: missing phases array");
    auto ph = j["phases"].get<std::vector<double>>();
    if (j.contains("alphabet"))
        alphabet_from_name(j["alphabet"].get<std::string>()); // validate tag
    return UnimodularSequence(std::move(ph));
}

inline json pair_to_json(const UnimodularSequence &u, const UnimodularSequence &w) {
    return json{{"u", sequence_to_json(u)}, {"w", sequence_to_json(w)}};
}

inline std::pair<UnimodularSequence, UnimodularSequence> pair_from_json(const json &j) {
    if (!j.contains("u") || !j.contains("w"))
        throw invalid_input("pair JSON: missing u/w");
    return {sequence_from_json(j["u"]), sequence_from_json(j["w"])};
}

inline json array_pair_to_json(const UnimodularArray &u, const UnimodularArray &w) {
    auto grid = [](const UnimodularArray &a) {
        std::vector<std::vector<double>> rows(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            rows[i].resize(a.cols());
            for (std::size_t j = 0; j < a.cols(); ++j)
                rows[i][j] = a.phase(i, j);
        }
        return rows;
    };
    return json{{"dims", {u.rows(), u.cols()}}, {"U_phases", grid(u)}, {"W_phases", grid(w)}};
}

inline std::pair<UnimodularArray, UnimodularArray> array_pair_from_json(const json &j) {
    if (!j.contains("dims") || !j.contains("U_phases") || !j.contains("W_phases"))
        throw invalid_input("array pair JSON: missing dims/U_phases/W_phases");
    const auto dims = j["dims"].get<std::vector<std::size_t>>();
    if (dims.size() != 2)
        throw invalid_input("array pair JSON: dims must have two entries");
    auto parse = [&](const json &g) {
        const auto rows = g.get<std::vector<std::vector<double>>>();
        if (rows.size() != dims[0])
            throw invalid_input("array pair JSON: row count does not match dims");
        std::vector<double> flat;
        flat.reserve(dims[0] * dims[1]);
        for (const auto &r : rows) {
            if (r.size() != dims[1])
                throw invalid_input("array pair JSON: column count does not match dims");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return UnimodularArray(dims[0], dims[1], std::move(flat));
    };
    return {parse(j["U_phases"]), parse(j["W_phases"])};
}

inline json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw invalid_input("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string &path, const json &j) {
    std::ofstream out(path);
    if (!out)
        throw invalid_input("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

// Scenario: geometry, configuration (inline pair or file reference), AoA,
// element-gain parameters and link budget. Defaults mirror the 256-element
// reference setup: 16x16 surface at half-wavelength spacing, AoA
// (-60 deg, 60 deg), stacked construction from the two length-8 seeds.
struct Scenario {
    RisGeometry geometry{16, 16, 0.5, 0.5, 1.0};
    DualPolConfig config;
    Direction aoa = Direction::from_degrees(-60.0, 60.0);
    ElementGainParams element_gain{};
    LinkBudget link{};

    explicit Scenario(DualPolConfig cfg) : config(std::move(cfg)) {}
};

inline Scenario scenario_from_json(const json &j, const std::string &base_dir = ".") {
    RisGeometry geom{16, 16, 0.5, 0.5, 1.0};
    if (j.contains("geometry")) {
        const auto &g = j["geometry"];
        geom = RisGeometry(g.value("n_y", 16), g.value("n_z", 16), g.value("delta_y", 0.5),
                           g.value("delta_z", 0.5), g.value("lambda", 1.0));
    }
    std::pair<UnimodularArray, UnimodularArray> pr = [&] {
        if (j.contains("config")) {
            const auto &c = j["config"];
            if (c.contains("file")) {
                const auto p = std::filesystem::path(base_dir) / c["file"].get<std::string>();
                return array_pair_from_json(load_json_file(p.string()));
            }
            return array_pair_from_json(c);
        }
        throw invalid_input("scenario JSON: missing config");
    }();
    Scenario s(DualPolConfig(std::move(pr.first), std::move(pr.second)));
    s.geometry = geom;
    if (j.contains("aoa_deg")) {
        const auto &a = j["aoa_deg"];
        s.aoa = Direction::from_degrees(a.value("azimuth", -60.0), a.value("elevation", 60.0));
    }
    if (j.contains("element_gain")) {
        const auto &e = j["element_gain"];
        s.element_gain.phi0 = rad_from_deg(e.value("boresight_azimuth_deg", 0.0));
        s.element_gain.theta0 = rad_from_deg(e.value("boresight_elevation_deg", 0.0));
        s.element_gain.delta_phi = rad_from_deg(e.value("beamwidth_azimuth_deg", 90.0));
        s.element_gain.delta_theta = rad_from_deg(e.value("beamwidth_elevation_deg", 90.0));
        s.element_gain.peak_dbi = e.value("peak_dbi", 8.0);
        s.element_gain.floor_db = e.value("floor_db", 30.0);
        s.element_gain.validate();
    }
    if (j.contains("link")) {
        const auto &l = j["link"];
        s.link.m = l.value("m", 1);
        s.link.p_t = l.value("p_t", 1.0);
        s.link.beta1 = l.value("beta1", 1.0);
        s.link.beta2 = l.value("beta2", 1.0);
        s.link.g_b0 = l.value("g_b0", 1.0);
        s.link.validate();
    }
    s.config.require_matches(s.geometry);
    return s;
}

namespace detail {

// Fixed formatting keeps CSV bytes identical across runs and platforms.
inline std::string fmt(double v, const char *spec) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace detail

// CSV schema: azimuth_deg,elevation_deg,value; row-major with elevation
// as the outer loop.
inline std::string pattern_map_to_csv(const PatternMap &m) {
    std::string out = "azimuth_deg,elevation_deg,value\n";
    for (std::size_t ie = 0; ie < m.grid.elevation.size(); ++ie)
        for (std::size_t ia = 0; ia < m.grid.azimuth.size(); ++ia) {
            out += detail::fmt(deg_from_rad(m.grid.azimuth[ia]), "%.10g");
            out += ',';
            out += detail::fmt(deg_from_rad(m.grid.elevation[ie]), "%.10g");
            out += ',';
            out += detail::fmt(m.at(ie, ia), "%.12e");
            out += '\n';
        }
    return out;
}

inline json pattern_map_to_json(const PatternMap &m) {
    std::vector<double> az(m.grid.azimuth.size()), el(m.grid.elevation.size());
    for (std::size_t i = 0; i < az.size(); ++i)
        az[i] = deg_from_rad(m.grid.azimuth[i]);
    for (std::size_t i = 0; i < el.size(); ++i)
        el[i] = deg_from_rad(m.grid.elevation[i]);
    std::vector<std::vector<double>> rows(el.size());
    for (std::size_t ie = 0; ie < el.size(); ++ie) {
        rows[ie].resize(az.size());
        for (std::size_t ia = 0; ia < az.size(); ++ia)
            rows[ie][ia] = m.at(ie, ia);
    }
    return json{{"quantity", m.quantity},
                {"units", m.is_db ? "dB" : "linear"},
                {"azimuth_deg", az},
                {"elevation_deg", el},
                {"aoa_deg",
                 {{"azimuth", deg_from_rad(m.aoa_azimuth)},
                  {"elevation", deg_from_rad(m.aoa_elevation)}}},
                {"values", rows}};
}

// dB view of a linear map; values below the floor clamp to the floor so
// exact pattern nulls stay finite.
inline PatternMap to_db(const PatternMap &m, double floor_linear = 1e-30) {
    if (m.is_db)
        return m;
    PatternMap out = m;
    out.is_db = true;
    for (auto &v : out.values)
        v = db_from_linear(std::max(v, floor_linear));
    return out;
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw invalid_input("cannot write file: " + path);
    out << content;
}

} // namespace golaybeam

#endif
