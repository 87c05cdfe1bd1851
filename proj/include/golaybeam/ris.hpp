// SPDX-License-Identifier: Apache-2.0
//
// Physical model of a dual-polarized planar reflecting surface: geometry,
// steering vectors, phase-configuration folding, power-domain array
// factor, element gain and received power.
#ifndef GOLAYBEAM_RIS_HPP
#define GOLAYBEAM_RIS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "golaybeam/array.hpp"
#include "golaybeam/errors.hpp"
#include "golaybeam/sequence.hpp"

namespace golaybeam {

enum class Polarization { H, V };

struct RisGeometry {
    std::size_t n_y; // elements per row
    std::size_t n_z; // elements per column; even, rows alternate polarization
    double delta_y;  // inter-element spacing in y [m]
    double delta_z;  // inter-element spacing in z [m]
    double lambda;   // carrier wavelength [m]

    RisGeometry(std::size_t ny, std::size_t nz, double dy, double dz, double lam)
        : n_y(ny), n_z(nz), delta_y(dy), delta_z(dz), lambda(lam) {
        if (n_y < 1 || n_z < 2 || n_z % 2 != 0)
            throw invalid_input("RisGeometry: need n_y >= 1 and even n_z >= 2");
        if (delta_y <= 0.0 || delta_z <= 0.0 || lambda <= 0.0)
            throw invalid_input("RisGeometry: spacings and wavelength must be positive");
    }

    std::size_t rows_per_polarization() const { return n_z / 2; }
    std::size_t elements_per_polarization() const { return n_y * n_z / 2; }
};

// Azimuth/elevation pair in radians, each within [-pi/2, pi/2].
struct Direction {
    double azimuth;
    double elevation;

    Direction(double az, double el) : azimuth(az), elevation(el) {
        const double lim = std::numbers::pi / 2.0 + 1e-12;
        if (az < -lim || az > lim || el < -lim || el > lim)
            throw invalid_input("Direction: angles must lie in [-pi/2, pi/2]");
    }

    static Direction boresight() { return Direction(0.0, 0.0); }
    static Direction from_degrees(double az_deg, double el_deg) {
        const double k = std::numbers::pi / 180.0;
        return Direction(az_deg * k, el_deg * k);
    }
};

// Per-polarization phase configuration matrices, n_y x (n_z/2) each.
struct DualPolConfig {
    UnimodularArray upsilon_h;
    UnimodularArray upsilon_v;

    DualPolConfig(UnimodularArray h, UnimodularArray v)
        : upsilon_h(std::move(h)), upsilon_v(std::move(v)) {
        if (upsilon_h.rows() != upsilon_v.rows() || upsilon_h.cols() != upsilon_v.cols())
            throw invalid_input("DualPolConfig: polarization matrices must have equal dims");
    }

    const UnimodularArray &matrix(Polarization p) const {
        return p == Polarization::H ? upsilon_h : upsilon_v;
    }

    void require_matches(const RisGeometry &g) const {
        if (upsilon_h.rows() != g.n_y || upsilon_h.cols() != g.rows_per_polarization())
            throw invalid_input("DualPolConfig: config dims do not match geometry");
    }
};

struct ElementGainParams {
    double phi0 = 0.0;                             // boresight azimuth [rad]
    double theta0 = 0.0;                           // boresight elevation [rad]
    double delta_phi = std::numbers::pi / 2.0;     // azimuth beamwidth parameter [rad]
    double delta_theta = std::numbers::pi / 2.0;   // elevation beamwidth parameter [rad]
    double peak_dbi = 8.0;
    double floor_db = 30.0;

    void validate() const {
        if (delta_phi <= 0.0 || delta_theta <= 0.0)
            throw invalid_input("ElementGainParams: beamwidth parameters must be positive");
    }
};

struct LinkBudget {
    std::size_t m = 1; // BS antenna count
    double p_t = 1.0;  // transmit power [W]
    double beta1 = 1.0;
    double beta2 = 1.0;
    double g_b0 = 1.0; // BS antenna gain at the departure angle, linear

    void validate() const {
        if (m < 1 || p_t <= 0.0 || beta1 <= 0.0 || beta2 <= 0.0 || g_b0 <= 0.0)
            throw invalid_input("LinkBudget: all parameters must be positive");
    }
};

// psi_y = (2*pi/lambda) * delta_y * sin(az) * cos(el);
// psi_z = (2*pi/lambda) * delta_z * sin(el).
inline std::pair<double, double> relative_phase_shifts(const RisGeometry &g, const Direction &d) {
    const double k = 2.0 * std::numbers::pi / g.lambda;
    return {k * g.delta_y * std::sin(d.azimuth) * std::cos(d.elevation),
            k * g.delta_z * std::sin(d.elevation)};
}

// Array response vector of one polarization, length n_y * n_z/2.
// Kronecker ordering: entry (nz * n_y + ny) carries phase
// -(ny*psi_y + 2*nz*psi_z); the V rows sit one element lower, which adds
// a common factor e^{-j psi_z}.
inline std::vector<cplx> steering_vector(const RisGeometry &g, const Direction &d,
                                         Polarization pol) {
    const auto [psi_y, psi_z] = relative_phase_shifts(g, d);
    const std::size_t ny = g.n_y;
    const std::size_t nzt = g.rows_per_polarization();
    std::vector<cplx> a(ny * nzt);
    const double shift = pol == Polarization::V ? psi_z : 0.0;
    for (std::size_t z = 0; z < nzt; ++z)
        for (std::size_t y = 0; y < ny; ++y)
            a[z * ny + y] = std::polar(
                1.0, -(static_cast<double>(y) * psi_y + 2.0 * static_cast<double>(z) * psi_z +
                       shift));
    return a;
}

// Column-wise fold of a length n_y*n_z/2 phase vector into an
// n_y x (n_z/2) matrix: column k takes entries k*n_y .. (k+1)*n_y - 1.
inline UnimodularArray fold_phase_vector(const UnimodularSequence &phi, const RisGeometry &g) {
    const std::size_t ny = g.n_y;
    const std::size_t nzt = g.rows_per_polarization();
    if (phi.size() != ny * nzt)
        throw invalid_input("fold_phase_vector: vector length does not match geometry");
    std::vector<double> ph(ny * nzt);
    for (std::size_t k = 0; k < nzt; ++k)
        for (std::size_t i = 0; i < ny; ++i)
            ph[i * nzt + k] = phi.phase(k * ny + i);
    return UnimodularArray(ny, nzt, std::move(ph));
}

inline UnimodularSequence unfold_phase_matrix(const UnimodularArray &m) {
    std::vector<double> ph(m.size());
    for (std::size_t k = 0; k < m.cols(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            ph[k * m.rows() + i] = m.phase(i, k);
    return UnimodularSequence(std::move(ph));
}

inline DualPolConfig fold_config(const UnimodularSequence &phi_h, const UnimodularSequence &phi_v,
                                 const RisGeometry &g) {
    return DualPolConfig(fold_phase_vector(phi_h, g), fold_phase_vector(phi_v, g));
}

inline std::pair<UnimodularSequence, UnimodularSequence> unfold_config(const DualPolConfig &cfg) {
    return {unfold_phase_matrix(cfg.upsilon_h), unfold_phase_matrix(cfg.upsilon_v)};
}

namespace detail {

// Double-sum response of one polarization at effective phase shifts.
inline double pol_term_double_sum(const UnimodularArray &ups, double psi_y_hat,
                                  double psi_z_hat) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < ups.rows(); ++i)
        for (std::size_t k = 0; k < ups.cols(); ++k)
            s += ups.value(i, k) *
                 std::polar(1.0, -(static_cast<double>(i) * psi_y_hat +
                                   2.0 * static_cast<double>(k) * psi_z_hat));
    return std::norm(s);
}

} // namespace detail

// Single |phi_p^T a_hat_p|^2 term, evaluated via the double sum over the
// folded configuration at effective phases psi_hat = psi(d) + psi(aoa).
inline double per_polarization_array_factor(const DualPolConfig &cfg, const RisGeometry &g,
                                            const Direction &d, const Direction &aoa,
                                            Polarization pol) {
    cfg.require_matches(g);
    const auto [py_d, pz_d] = relative_phase_shifts(g, d);
    const auto [py_a, pz_a] = relative_phase_shifts(g, aoa);
    return detail::pol_term_double_sum(cfg.matrix(pol), py_d + py_a, pz_d + pz_a);
}

// Power-domain array factor: sum of both polarization terms, linear.
inline double power_domain_array_factor(const DualPolConfig &cfg, const RisGeometry &g,
                                        const Direction &d, const Direction &aoa) {
    return per_polarization_array_factor(cfg, g, d, aoa, Polarization::H) +
           per_polarization_array_factor(cfg, g, d, aoa, Polarization::V);
}

// Independent route: materialize steering vectors, take the Hadamard
// product of departure and arrival responses, and contract with the
// unfolded configuration vectors.
inline double power_domain_array_factor_via_steering(const DualPolConfig &cfg,
                                                     const RisGeometry &g, const Direction &d,
                                                     const Direction &aoa) {
    cfg.require_matches(g);
    double total = 0.0;
    for (Polarization pol : {Polarization::H, Polarization::V}) {
        const auto ad = steering_vector(g, d, pol);
        const auto aa = steering_vector(g, aoa, pol);
        const auto phi = unfold_phase_matrix(cfg.matrix(pol));
        cplx s{0.0, 0.0};
        for (std::size_t n = 0; n < ad.size(); ++n)
            s += phi.value(n) * ad[n] * aa[n];
        total += std::norm(s);
    }
    return total;
}

// 3GPP-style single-element radiation pattern in dBi:
// peak - min(min(12*((az-phi0)/dphi)^2, floor) +
//            min(12*((el-theta0)/dtheta)^2, floor), floor).
inline double element_gain_dbi(const Direction &d, const ElementGainParams &p) {
    p.validate();
    const double ay = (d.azimuth - p.phi0) / p.delta_phi;
    const double az = (d.elevation - p.theta0) / p.delta_theta;
    const double cut_y = std::min(12.0 * ay * ay, p.floor_db);
    const double cut_z = std::min(12.0 * az * az, p.floor_db);
    return p.peak_dbi - std::min(cut_y + cut_z, p.floor_db);
}

inline double db_from_linear(double x) { return 10.0 * std::log10(x); }
inline double linear_from_db(double x) { return std::pow(10.0, x / 10.0); }

// Total radiation power pattern in dB: array factor plus the element
// pattern at both the arrival and observation directions.
inline double total_radiation_pattern_db(const DualPolConfig &cfg, const RisGeometry &g,
                                         const Direction &d, const Direction &aoa,
                                         const ElementGainParams &p) {
    return db_from_linear(power_domain_array_factor(cfg, g, d, aoa)) + element_gain_dbi(aoa, p) +
           element_gain_dbi(d, p);
}

// Noise-free mean received power after combining both polarizations [W].
inline double received_power_watts(const LinkBudget &link, const DualPolConfig &cfg,
                                   const RisGeometry &g, const Direction &d, const Direction &aoa,
                                   const ElementGainParams &p) {
    link.validate();
    return static_cast<double>(link.m) * link.p_t * link.beta1 * link.beta2 * link.g_b0 *
           linear_from_db(element_gain_dbi(aoa, p)) * linear_from_db(element_gain_dbi(d, p)) *
           power_domain_array_factor(cfg, g, d, aoa);
}

} // namespace golaybeam

#endif
