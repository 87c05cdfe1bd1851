// SPDX-License-Identifier: Apache-2.0
//
// Construction of Golay complementary array pairs from two 1D seed pairs,
// by vertical stacking or horizontal concatenation of rank-one blocks.
#ifndef GOLAYBEAM_CONSTRUCT_HPP
#define GOLAYBEAM_CONSTRUCT_HPP

#include <numbers>
#include <utility>
#include <vector>

#include "golaybeam/array.hpp"
#include "golaybeam/errors.hpp"
#include "golaybeam/sequence.hpp"

namespace golaybeam {

namespace detail {

inline void require_seed_pair(const UnimodularSequence &u, const UnimodularSequence &w,
                              const char *which) {
    const auto chk = is_golay_pair(u, w, 1e-9);
    if (!chk.complementary)
        throw invalid_input(std::string("construct: seed pair ") + which +
                            " is not Golay complementary (max deviation " +
                            std::to_string(chk.max_deviation) + ")");
}

// Phase of entry (i, k) of the block b1 * (conj(b2) reversed)^T, with an
// optional sign flip. The anti-diagonal flip is an index reversal; the
// conjugate transpose negates the seed phase. All phase arithmetic is
// exact, so constructed arrays stay unimodular to machine precision.
inline double flipped_block_phase(const UnimodularSequence &b1, const UnimodularSequence &b2,
                                  std::size_t i, std::size_t k, bool negate) {
    const std::size_t l2 = b2.size();
    double p = b1.phase(i) - b2.phase(l2 - 1 - k);
    if (negate)
        p += std::numbers::pi;
    return p;
}

} // namespace detail

// Builds a (2*L1) x L2 Golay array pair: U stacks the outer product
// u1*u2^T over the negated flipped block of (w1, w2); W stacks u1*w2^T
// over the flipped block of (w1, u2).
inline std::pair<UnimodularArray, UnimodularArray>
construct_stacked(const UnimodularSequence &u1, const UnimodularSequence &w1,
                  const UnimodularSequence &u2, const UnimodularSequence &w2) {
    detail::require_seed_pair(u1, w1, "1");
    detail::require_seed_pair(u2, w2, "2");
    const std::size_t l1 = u1.size();
    const std::size_t l2 = u2.size();
    std::vector<double> up(2 * l1 * l2), wp(2 * l1 * l2);
    for (std::size_t i = 0; i < l1; ++i)
        for (std::size_t k = 0; k < l2; ++k) {
            up[i * l2 + k] = u1.phase(i) + u2.phase(k);
            wp[i * l2 + k] = u1.phase(i) + w2.phase(k);
            up[(l1 + i) * l2 + k] = detail::flipped_block_phase(w1, w2, i, k, true);
            wp[(l1 + i) * l2 + k] = detail::flipped_block_phase(w1, u2, i, k, false);
        }
    return {UnimodularArray(2 * l1, l2, std::move(up)), UnimodularArray(2 * l1, l2, std::move(wp))};
}

// Horizontal variant: same blocks concatenated side by side, L1 x (2*L2).
inline std::pair<UnimodularArray, UnimodularArray>
construct_concat(const UnimodularSequence &u1, const UnimodularSequence &w1,
                 const UnimodularSequence &u2, const UnimodularSequence &w2) {
    detail::require_seed_pair(u1, w1, "1");
    detail::require_seed_pair(u2, w2, "2");
    const std::size_t l1 = u1.size();
    const std::size_t l2 = u2.size();
    std::vector<double> up(2 * l1 * l2), wp(2 * l1 * l2);
    for (std::size_t i = 0; i < l1; ++i)
        for (std::size_t k = 0; k < l2; ++k) {
            up[i * 2 * l2 + k] = u1.phase(i) + u2.phase(k);
            wp[i * 2 * l2 + k] = u1.phase(i) + w2.phase(k);
            up[i * 2 * l2 + l2 + k] = detail::flipped_block_phase(w1, w2, i, k, true);
            wp[i * 2 * l2 + l2 + k] = detail::flipped_block_phase(w1, u2, i, k, false);
        }
    return {UnimodularArray(l1, 2 * l2, std::move(up)), UnimodularArray(l1, 2 * l2, std::move(wp))};
}

} // namespace golaybeam

#endif
