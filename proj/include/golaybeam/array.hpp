// SPDX-License-Identifier: Apache-2.0
//
// Two-dimensional unimodular arrays: 2D aperiodic autocorrelation,
// 2D power spectral density, and Golay array-pair testing.
#ifndef GOLAYBEAM_ARRAY_HPP
#define GOLAYBEAM_ARRAY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "golaybeam/errors.hpp"
#include "golaybeam/sequence.hpp"

namespace golaybeam {

// N1 x N2 grid of unit-modulus entries stored as phases, row-major.
class UnimodularArray {
  public:
    UnimodularArray(std::size_t n1, std::size_t n2, std::vector<double> phases)
        : n1_(n1), n2_(n2), phases_(std::move(phases)) {
        if (n1_ == 0 || n2_ == 0)
            throw invalid_input("UnimodularArray: dimensions must be positive");
        if (phases_.size() != n1_ * n2_)
            throw invalid_input("UnimodularArray: phase grid does not match dimensions");
    }

    static UnimodularArray constant(std::size_t n1, std::size_t n2, double phase = 0.0) {
        return UnimodularArray(n1, n2, std::vector<double>(n1 * n2, phase));
    }

    std::size_t rows() const { return n1_; }
    std::size_t cols() const { return n2_; }
    std::size_t size() const { return n1_ * n2_; }

    double phase(std::size_t i, std::size_t j) const { return phases_[i * n2_ + j]; }
    double &phase(std::size_t i, std::size_t j) { return phases_[i * n2_ + j]; }
    const std::vector<double> &phases() const { return phases_; }

    cplx value(std::size_t i, std::size_t j) const { return std::polar(1.0, phase(i, j)); }

    UnimodularArray transposed() const {
        std::vector<double> t(n1_ * n2_);
        for (std::size_t i = 0; i < n1_; ++i)
            for (std::size_t j = 0; j < n2_; ++j)
                t[j * n1_ + i] = phase(i, j);
        return UnimodularArray(n2_, n1_, std::move(t));
    }

  private:
    std::size_t n1_, n2_;
    std::vector<double> phases_;
};

// 2D ACF values on the lag grid tau1 in [-(N1-1), N1-1], tau2 in
// [-(N2-1), N2-1]; zero outside.
class CorrelationSurface {
  public:
    CorrelationSurface(std::size_t n1, std::size_t n2, std::vector<cplx> values)
        : n1_(n1), n2_(n2), values_(std::move(values)) {}

    int max_lag1() const { return static_cast<int>(n1_) - 1; }
    int max_lag2() const { return static_cast<int>(n2_) - 1; }

    cplx at(int tau1, int tau2) const {
        if (std::abs(tau1) > max_lag1() || std::abs(tau2) > max_lag2())
            return {0.0, 0.0};
        const std::size_t r = static_cast<std::size_t>(tau1 + max_lag1());
        const std::size_t c = static_cast<std::size_t>(tau2 + max_lag2());
        return values_[r * (2 * n2_ - 1) + c];
    }

  private:
    std::size_t n1_, n2_;
    std::vector<cplx> values_; // row-major over (tau1, tau2), origin at (-(N1-1), -(N2-1))
};

// 2D aperiodic ACF with the four sign-quadrant branches written out
// explicitly (0-based index translation of the 1-based definition).
inline CorrelationSurface acf2d(const UnimodularArray &u) {
    const int n1 = static_cast<int>(u.rows());
    const int n2 = static_cast<int>(u.cols());
    std::vector<cplx> vals(static_cast<std::size_t>((2 * n1 - 1) * (2 * n2 - 1)), cplx{0.0, 0.0});
    auto store = [&](int t1, int t2, cplx v) {
        vals[static_cast<std::size_t>((t1 + n1 - 1) * (2 * n2 - 1) + (t2 + n2 - 1))] = v;
    };
    // Materialize entries once.
    std::vector<cplx> a(u.size());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j)
            a[i * u.cols() + j] = u.value(i, j);
    auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i) * u.cols() + j]; };

    for (int t1 = 0; t1 < n1; ++t1)
        for (int t2 = 0; t2 < n2; ++t2) {
            cplx s{0.0, 0.0};
            for (int i = 0; i < n1 - t1; ++i)
                for (int j = 0; j < n2 - t2; ++j)
                    s += at(i, j) * std::conj(at(i + t1, j + t2));
            store(t1, t2, s);
        }
    for (int t1 = -n1 + 1; t1 < 0; ++t1)
        for (int t2 = 0; t2 < n2; ++t2) {
            cplx s{0.0, 0.0};
            for (int i = 0; i < n1 + t1; ++i)
                for (int j = 0; j < n2 - t2; ++j)
                    s += at(i - t1, j) * std::conj(at(i, j + t2));
            store(t1, t2, s);
        }
    for (int t1 = 0; t1 < n1; ++t1)
        for (int t2 = -n2 + 1; t2 < 0; ++t2) {
            cplx s{0.0, 0.0};
            for (int i = 0; i < n1 - t1; ++i)
                for (int j = 0; j < n2 + t2; ++j)
                    s += at(i, j - t2) * std::conj(at(i + t1, j));
            store(t1, t2, s);
        }
    for (int t1 = -n1 + 1; t1 < 0; ++t1)
        for (int t2 = -n2 + 1; t2 < 0; ++t2) {
            cplx s{0.0, 0.0};
            for (int i = 0; i < n1 + t1; ++i)
                for (int j = 0; j < n2 + t2; ++j)
                    s += at(i - t1, j - t2) * std::conj(at(i, j));
            store(t1, t2, s);
        }
    return CorrelationSurface(u.rows(), u.cols(), std::move(vals));
}

// Tests R_U + R_W = 2*N1*N2 * delta[tau1, tau2] within tol at every lag.
inline GolayCheck is_golay_array_pair(const UnimodularArray &u, const UnimodularArray &w,
                                      double tol) {
    if (u.rows() != w.rows() || u.cols() != w.cols())
        throw invalid_input("is_golay_array_pair: arrays must have identical dimensions");
    const auto ru = acf2d(u);
    const auto rw = acf2d(w);
    const double peak = 2.0 * static_cast<double>(u.size());
    double dev = 0.0;
    for (int t1 = -ru.max_lag1(); t1 <= ru.max_lag1(); ++t1)
        for (int t2 = -ru.max_lag2(); t2 <= ru.max_lag2(); ++t2) {
            const double target = (t1 == 0 && t2 == 0) ? peak : 0.0;
            dev = std::max(dev, std::abs(ru.at(t1, t2) + rw.at(t1, t2) - target));
        }
    return GolayCheck{dev <= tol, dev};
}

// Squared magnitude of the 2D transform of the array at normalized
// frequencies (f1, f2).
inline double psd2d(const UnimodularArray &u, double f1, double f2) {
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j)
            s += u.value(i, j) *
                 std::polar(1.0, -2.0 * std::numbers::pi *
                                     (f1 * static_cast<double>(i) + f2 * static_cast<double>(j)));
    return std::norm(s);
}

} // namespace golaybeam

#endif
