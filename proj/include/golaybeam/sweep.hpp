// SPDX-License-Identifier: Apache-2.0
//
// Dense angular-grid evaluation of array factors and radiation patterns.
// Grid points are independent; parallel runs write disjoint slots of a
// preallocated buffer, so output is identical for any worker count.
#ifndef GOLAYBEAM_SWEEP_HPP
#define GOLAYBEAM_SWEEP_HPP

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "golaybeam/errors.hpp"
#include "golaybeam/ris.hpp"

namespace golaybeam {

struct AngleGrid {
    std::vector<double> azimuth;   // radians, strictly increasing
    std::vector<double> elevation; // radians, strictly increasing
};

enum class Quantity { total_af, af_h, af_v, total_pattern };

inline std::string quantity_name(Quantity q) {
    switch (q) {
    case Quantity::total_af: return "total_af";
    case Quantity::af_h: return "af_h";
    case Quantity::af_v: return "af_v";
    case Quantity::total_pattern: return "total_pattern";
    }
    return "?";
}

struct PatternMap {
    AngleGrid grid;
    std::vector<double> values; // row-major, elevation outer loop
    bool is_db = false;
    std::string quantity;
    std::string config_id;
    double aoa_azimuth = 0.0;
    double aoa_elevation = 0.0;

    double at(std::size_t ie, std::size_t ia) const {
        return values[ie * grid.azimuth.size() + ia];
    }
};

// Uniform inclusive sampling; a count of 1 yields the lower bound.
inline AngleGrid make_grid(double az_min, double az_max, std::size_t n_az, double el_min,
                           double el_max, std::size_t n_el) {
    const double lim = std::numbers::pi / 2.0 + 1e-12;
    if (n_az < 1 || n_el < 1)
        throw invalid_input("make_grid: counts must be >= 1");
    if (az_min > az_max || el_min > el_max)
        throw invalid_input("make_grid: inverted bounds");
    if (az_min < -lim || az_max > lim || el_min < -lim || el_max > lim)
        throw invalid_input("make_grid: bounds must lie in [-pi/2, pi/2]");
    AngleGrid g;
    g.azimuth.resize(n_az);
    g.elevation.resize(n_el);
    for (std::size_t i = 0; i < n_az; ++i)
        g.azimuth[i] = n_az == 1 ? az_min : az_min + (az_max - az_min) * i / (n_az - 1.0);
    for (std::size_t i = 0; i < n_el; ++i)
        g.elevation[i] = n_el == 1 ? el_min : el_min + (el_max - el_min) * i / (n_el - 1.0);
    return g;
}

// Worker count: explicit request wins, then GOLAYBEAM_THREADS, then the
// hardware concurrency.
inline std::size_t resolve_thread_count(std::size_t requested = 0) {
    std::size_t n = requested;
    if (const char *env = std::getenv("GOLAYBEAM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) {
            if (n == 0 || n > static_cast<std::size_t>(cap))
                n = static_cast<std::size_t>(cap);
        }
    }
    if (n == 0)
        n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

// Evaluates the requested quantity at every grid point. Array-factor maps
// are linear; total_pattern is in dB. The per-point computation matches a
// direct call into the model exactly.
inline PatternMap sweep(Quantity q, const DualPolConfig &cfg, const RisGeometry &geom,
                        const AngleGrid &grid, const Direction &aoa,
                        const ElementGainParams &params, std::size_t n_threads = 0) {
    if (grid.azimuth.empty() || grid.elevation.empty())
        throw invalid_input("sweep: empty grid");
    cfg.require_matches(geom);
    PatternMap m;
    m.grid = grid;
    m.quantity = quantity_name(q);
    m.is_db = q == Quantity::total_pattern;
    m.aoa_azimuth = aoa.azimuth;
    m.aoa_elevation = aoa.elevation;
    const std::size_t na = grid.azimuth.size();
    const std::size_t ne = grid.elevation.size();
    m.values.assign(na * ne, 0.0);

    auto eval_point = [&](std::size_t ie, std::size_t ia) {
        const Direction d(grid.azimuth[ia], grid.elevation[ie]);
        switch (q) {
        case Quantity::total_af:
            return power_domain_array_factor(cfg, geom, d, aoa);
        case Quantity::af_h:
            return per_polarization_array_factor(cfg, geom, d, aoa, Polarization::H);
        case Quantity::af_v:
            return per_polarization_array_factor(cfg, geom, d, aoa, Polarization::V);
        case Quantity::total_pattern:
            return total_radiation_pattern_db(cfg, geom, d, aoa, params);
        }
        return 0.0;
    };

    const std::size_t total = na * ne;
    const std::size_t workers = std::min(resolve_thread_count(n_threads), total);
    if (workers <= 1) {
        for (std::size_t p = 0; p < total; ++p)
            m.values[p] = eval_point(p / na, p % na);
        return m;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t p = next.fetch_add(1); p < total; p = next.fetch_add(1))
                m.values[p] = eval_point(p / na, p % na);
        });
    for (auto &th : pool)
        th.join();
    return m;
}

struct RippleStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double max_abs_deviation_from_mean = 0.0;
    // 10*log10(max/min) for linear maps, max - min for dB maps. Absent
    // when a linear map contains nonpositive values.
    std::optional<double> ripple_db;
};

inline RippleStats ripple_stats(const PatternMap &m) {
    if (m.values.empty())
        throw invalid_input("ripple_stats: empty map");
    RippleStats s;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (double v : m.values) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mean = sum / static_cast<double>(m.values.size());
    for (double v : m.values)
        s.max_abs_deviation_from_mean = std::max(s.max_abs_deviation_from_mean,
                                                 std::abs(v - s.mean));
    if (m.is_db)
        s.ripple_db = s.max - s.min;
    else if (s.min > 0.0)
        s.ripple_db = 10.0 * std::log10(s.max / s.min);
    return s;
}

} // namespace golaybeam

#endif
