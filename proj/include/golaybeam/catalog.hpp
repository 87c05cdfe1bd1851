// SPDX-License-Identifier: Apache-2.0
//
// Catalog of known Golay complementary sequence pairs. Binary entries of
// length 10, 20 and 26 were obtained by a pruned depth-first search over
// the +-1 alphabet and frozen here; the length-16 entry doubles the
// length-8 entry by concatenation. Every entry is validated against
// is_golay_pair at tol 1e-12 in the test suite.
#ifndef GOLAYBEAM_CATALOG_HPP
#define GOLAYBEAM_CATALOG_HPP

#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "golaybeam/errors.hpp"
#include "golaybeam/sequence.hpp"

namespace golaybeam {

namespace detail {

inline UnimodularSequence seq_from_signs(std::initializer_list<int> signs) {
    return UnimodularSequence::from_signs(std::vector<int>(signs));
}

// Phases as multiples of pi/2.
inline UnimodularSequence seq_from_quarters(std::initializer_list<int> q) {
    std::vector<double> ph;
    ph.reserve(q.size());
    for (int k : q)
        ph.push_back(k * std::numbers::pi / 2.0);
    return UnimodularSequence(std::move(ph));
}

} // namespace detail

inline std::vector<std::size_t> cataloged_lengths(Alphabet alphabet) {
    if (alphabet == Alphabet::binary)
        return {1, 2, 4, 8, 10, 16, 20, 26};
    if (alphabet == Alphabet::quaternary)
        return {8};
    return {};
}

// Returns a cataloged Golay complementary sequence pair of the requested
// length, or throws invalid_input for lengths without a cataloged pair
// (e.g. no binary pair of length 3 exists).
inline std::pair<UnimodularSequence, UnimodularSequence> known_golay_pair(std::size_t length,
                                                                          Alphabet alphabet) {
    using detail::seq_from_quarters;
    using detail::seq_from_signs;
    if (alphabet == Alphabet::binary) {
        switch (length) {
        case 1:
            return {seq_from_signs({1}), seq_from_signs({1})};
        case 2:
            return {seq_from_signs({1, 1}), seq_from_signs({1, -1})};
        case 4:
            return {seq_from_signs({1, 1, 1, -1}), seq_from_signs({1, 1, -1, 1})};
        case 8:
            return {seq_from_signs({1, 1, 1, 1, 1, -1, -1, 1}),
                    seq_from_signs({1, 1, -1, -1, 1, -1, 1, -1})};
        case 10:
            return {seq_from_signs({1, 1, -1, 1, -1, 1, -1, -1, 1, 1}),
                    seq_from_signs({1, 1, -1, 1, 1, 1, 1, 1, -1, -1})};
        case 16: {
            // Concatenation doubling of the length-8 pair: (a|b, a|-b).
            auto [a, b] = known_golay_pair(8, Alphabet::binary);
            std::vector<double> u = a.phases();
            std::vector<double> w = a.phases();
            for (double p : b.phases()) {
                u.push_back(p);
                w.push_back(p + std::numbers::pi);
            }
            return {UnimodularSequence(std::move(u)), UnimodularSequence(std::move(w))};
        }
        case 20:
            return {seq_from_signs(
                        {1, 1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, -1, 1, 1, 1, -1, -1, 1, 1}),
                    seq_from_signs(
                        {1, 1, 1, 1, 1, -1, 1, -1, -1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1})};
        case 26:
            return {seq_from_signs({1, 1, 1, 1,  -1, 1, 1, -1, -1, 1,  -1, 1,  -1,
                                    1, -1, -1, 1, -1, 1, 1, 1,  -1, -1, 1,  1,  1}),
                    seq_from_signs({1, 1, 1, 1, -1, 1,  1, -1, -1, 1,  -1, 1,  1,
                                    1, 1, 1, -1, 1, -1, -1, -1, 1,  1,  -1, -1, -1})};
        default:
            break;
        }
    } else if (alphabet == Alphabet::quaternary) {
        if (length == 8) {
            return {seq_from_quarters({0, 0, 0, 0, 1, -1, -1, 1}),
                    seq_from_quarters({0, 0, 2, 2, 1, -1, 1, -1})};
        }
    }
    throw invalid_input("known_golay_pair: no cataloged pair of length " + std::to_string(length) +
                        " in the requested alphabet");
}

// The two length-8 seed pairs used by the 16x8 reference construction:
// a binary pair and a quaternary pair.
inline std::pair<UnimodularSequence, UnimodularSequence> reference_seed_pair_1() {
    return {detail::seq_from_quarters({0, 0, 0, 0, 0, 2, 2, 0}),
            detail::seq_from_quarters({0, 0, 2, 2, 0, 2, 0, 2})};
}

inline std::pair<UnimodularSequence, UnimodularSequence> reference_seed_pair_2() {
    return known_golay_pair(8, Alphabet::quaternary);
}

} // namespace golaybeam

#endif
