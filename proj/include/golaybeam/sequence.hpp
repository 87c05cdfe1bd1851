// SPDX-License-Identifier: Apache-2.0
//
// One-dimensional unimodular sequences, their aperiodic autocorrelation,
// power spectral density, and Golay complementarity testing.
#ifndef GOLAYBEAM_SEQUENCE_HPP
#define GOLAYBEAM_SEQUENCE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <cstddef>
#include <numbers>
#include <vector>

#include "golaybeam/errors.hpp"

namespace golaybeam {

using cplx = std::complex<double>;

enum class Alphabet { binary, quaternary, polyphase };

// A finite complex sequence with unit-modulus entries, stored as phase
// angles so that |entry| = 1 holds exactly and quaternary alphabets stay
// on the grid of multiples of pi/2.
class UnimodularSequence {
  public:
    explicit UnimodularSequence(std::vector<double> phases) : phases_(std::move(phases)) {
        if (phases_.empty())
            throw invalid_input("UnimodularSequence: sequence must have at least one entry");
    }

    // Build from +-1 entries (phases 0 / pi).
    static UnimodularSequence from_signs(const std::vector<int> &signs) {
        std::vector<double> ph;
        ph.reserve(signs.size());
        for (int s : signs) {
            if (s != 1 && s != -1)
                throw invalid_input("from_signs: entries must be +1 or -1");
            ph.push_back(s == 1 ? 0.0 : std::numbers::pi);
        }
        return UnimodularSequence(std::move(ph));
    }

    std::size_t size() const { return phases_.size(); }
    double phase(std::size_t n) const { return phases_[n]; }
    const std::vector<double> &phases() const { return phases_; }

    cplx value(std::size_t n) const { return std::polar(1.0, phases_[n]); }

    std::vector<cplx> values() const {
        std::vector<cplx> v(phases_.size());
        for (std::size_t n = 0; n < phases_.size(); ++n)
            v[n] = value(n);
        return v;
    }

    bool operator==(const UnimodularSequence &o) const { return phases_ == o.phases_; }

  private:
    std::vector<double> phases_;
};

// Aperiodic autocorrelation values at integer lags tau in [-(N-1), N-1].
class CorrelationFunction {
  public:
    CorrelationFunction(std::size_t n, std::vector<cplx> values)
        : n_(n), values_(std::move(values)) {}

    std::size_t sequence_length() const { return n_; }
    int min_lag() const { return -(static_cast<int>(n_) - 1); }
    int max_lag() const { return static_cast<int>(n_) - 1; }

    // Lags outside [-(N-1), N-1] are zero by construction.
    cplx at(int tau) const {
        if (tau < min_lag() || tau > max_lag())
            return {0.0, 0.0};
        return values_[static_cast<std::size_t>(tau - min_lag())];
    }

  private:
    std::size_t n_;
    std::vector<cplx> values_; // index 0 holds lag -(N-1)
};

// Aperiodic ACF, evaluated branch by branch: forward products for
// nonnegative lags, shifted products for negative lags.
inline CorrelationFunction acf(const UnimodularSequence &u) {
    const int n = static_cast<int>(u.size());
    std::vector<cplx> vals(static_cast<std::size_t>(2 * n - 1), cplx{0.0, 0.0});
    const auto v = u.values();
    for (int tau = 0; tau < n; ++tau) {
        cplx s{0.0, 0.0};
        for (int k = 0; k < n - tau; ++k)
            s += v[k] * std::conj(v[k + tau]);
        vals[static_cast<std::size_t>(tau + n - 1)] = s;
    }
    for (int tau = -n + 1; tau < 0; ++tau) {
        cplx s{0.0, 0.0};
        for (int k = 0; k < n + tau; ++k)
            s += v[k - tau] * std::conj(v[k]);
        vals[static_cast<std::size_t>(tau + n - 1)] = s;
    }
    return CorrelationFunction(u.size(), std::move(vals));
}

struct GolayCheck {
    bool complementary = false;
    // Largest violation of the delta condition over all lags, including the
    // peak deviation |R_u[0] + R_w[0] - 2N|.
    double max_deviation = 0.0;
};

// Tests whether R_u + R_w equals 2N * delta[tau] within tol.
inline GolayCheck is_golay_pair(const UnimodularSequence &u, const UnimodularSequence &w,
                                double tol) {
    if (u.size() != w.size())
        throw invalid_input("is_golay_pair: sequences must have equal length");
    const auto ru = acf(u);
    const auto rw = acf(w);
    const double peak = 2.0 * static_cast<double>(u.size());
    double dev = std::abs(ru.at(0) + rw.at(0) - peak);
    for (int tau = 1; tau <= ru.max_lag(); ++tau) {
        dev = std::max(dev, std::abs(ru.at(tau) + rw.at(tau)));
        dev = std::max(dev, std::abs(ru.at(-tau) + rw.at(-tau)));
    }
    return GolayCheck{dev <= tol, dev};
}

// PSD via the Fourier transform of the ACF. Real by conjugate symmetry;
// the imaginary residue is numerical noise and is dropped.
inline double psd(const UnimodularSequence &u, double f) {
    const auto r = acf(u);
    cplx s{0.0, 0.0};
    for (int tau = r.min_lag(); tau <= r.max_lag(); ++tau)
        s += r.at(tau) * std::polar(1.0, -2.0 * std::numbers::pi * f * tau);
    return s.real();
}

// Independent PSD route: squared magnitude of the sequence transform.
// The transform sign is tied to the ACF convention R[tau] = sum_n
// u_n * conj(u_{n+tau}); with that convention the ACF transform above
// equals |sum_n u_n e^{+j 2 pi f n}|^2.
inline double psd_direct(const UnimodularSequence &u, double f) {
    cplx s{0.0, 0.0};
    for (std::size_t n = 0; n < u.size(); ++n)
        s += u.value(n) * std::polar(1.0, 2.0 * std::numbers::pi * f * static_cast<double>(n));
    return std::norm(s);
}

enum class PairTransform { reverse_both, conjugate_both, global_phase, negate_each };

// Equivalence transforms that map Golay pairs to Golay pairs.
inline std::pair<UnimodularSequence, UnimodularSequence>
transform_pair(const UnimodularSequence &u, const UnimodularSequence &w, PairTransform kind,
               double alpha = 0.0) {
    auto pu = u.phases();
    auto pw = w.phases();
    switch (kind) {
    case PairTransform::reverse_both:
        std::reverse(pu.begin(), pu.end());
        std::reverse(pw.begin(), pw.end());
        break;
    case PairTransform::conjugate_both:
        for (auto &p : pu)
            p = -p;
        for (auto &p : pw)
            p = -p;
        break;
    case PairTransform::global_phase:
        for (auto &p : pu)
            p += alpha;
        for (auto &p : pw)
            p += alpha;
        break;
    case PairTransform::negate_each:
        for (auto &p : pu)
            p += std::numbers::pi;
        for (auto &p : pw)
            p += std::numbers::pi;
        break;
    }
    return {UnimodularSequence(std::move(pu)), UnimodularSequence(std::move(pw))};
}

} // namespace golaybeam

#endif
