// SPDX-License-Identifier: Apache-2.0
#ifndef GOLAYBEAM_TEST_SUPPORT_HPP
#define GOLAYBEAM_TEST_SUPPORT_HPP

#include <complex>
#include <random>
#include <vector>

#include "golaybeam/array.hpp"
#include "golaybeam/sequence.hpp"

namespace gbtest {

using golaybeam::cplx;

inline golaybeam::UnimodularSequence random_sequence(std::mt19937 &rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-3.14159, 3.14159);
    std::vector<double> ph(n);
    for (auto &p : ph)
        p = dist(rng);
    return golaybeam::UnimodularSequence(std::move(ph));
}

inline golaybeam::UnimodularArray random_array(std::mt19937 &rng, std::size_t n1, std::size_t n2) {
    std::uniform_real_distribution<double> dist(-3.14159, 3.14159);
    std::vector<double> ph(n1 * n2);
    for (auto &p : ph)
        p = dist(rng);
    return golaybeam::UnimodularArray(n1, n2, std::move(ph));
}

// Naive shift-and-multiply ACF oracle: for each lag, sum over every index
// whose shifted partner stays in range. Independent of the branch-wise
// implementation under test.
inline cplx acf_oracle(const golaybeam::UnimodularSequence &u, int tau) {
    const int n = static_cast<int>(u.size());
    cplx s{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        const int m = k + tau;
        if (m >= 0 && m < n)
            s += u.value(static_cast<std::size_t>(k)) * std::conj(u.value(static_cast<std::size_t>(m)));
    }
    return s;
}

inline cplx acf2d_oracle(const golaybeam::UnimodularArray &a, int t1, int t2) {
    const int n1 = static_cast<int>(a.rows());
    const int n2 = static_cast<int>(a.cols());
    cplx s{0.0, 0.0};
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            const int p = i + t1, q = j + t2;
            if (p >= 0 && p < n1 && q >= 0 && q < n2)
                s += a.value(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                     std::conj(a.value(static_cast<std::size_t>(p), static_cast<std::size_t>(q)));
        }
    return s;
}

} // namespace gbtest

#endif
