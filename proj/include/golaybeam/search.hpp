// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive enumeration of Golay complementary sequence pairs over small
// binary/quaternary alphabets. Serves as the independent oracle that
// validates the catalog.
#ifndef GOLAYBEAM_SEARCH_HPP
#define GOLAYBEAM_SEARCH_HPP

#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "golaybeam/errors.hpp"
#include "golaybeam/sequence.hpp"

namespace golaybeam {

struct SearchBudget {
    // Upper bound on alphabet_size^(2*length), the size of the raw pair
    // space. Defaults admit binary lengths <= 8 and quaternary <= 5.
    std::uint64_t max_pair_space_binary = 1ull << 16;
    std::uint64_t max_pair_space_quaternary = 1ull << 20;
};

namespace detail {

inline UnimodularSequence seq_from_indices(const std::vector<int> &idx, int alphabet_size) {
    std::vector<double> ph(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        ph[i] = 2.0 * std::numbers::pi * idx[i] / alphabet_size;
    return UnimodularSequence(std::move(ph));
}

// Lexicographic increment over phase indices; returns false on wrap.
inline bool next_indices(std::vector<int> &idx, int alphabet_size) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < alphabet_size)
            return true;
        idx[i] = 0;
    }
    return false;
}

} // namespace detail

// Enumerates every (u, w) pair over the alphabet of alphabet_size roots
// of unity that satisfies the complementarity condition at tol 1e-12.
// Output order is lexicographic in (u indices, w indices), independent of
// any internal parallelism.
inline std::vector<std::pair<UnimodularSequence, UnimodularSequence>>
search_golay_pairs(std::size_t length, int alphabet_size, const SearchBudget &budget = {}) {
    if (length == 0)
        throw invalid_input("search_golay_pairs: length must be positive");
    if (alphabet_size != 2 && alphabet_size != 4)
        throw invalid_input("search_golay_pairs: alphabet size must be 2 or 4");

    const double pair_space = std::pow(static_cast<double>(alphabet_size), 2.0 * length);
    const std::uint64_t cap = alphabet_size == 2 ? budget.max_pair_space_binary
                                                 : budget.max_pair_space_quaternary;
    if (pair_space > static_cast<double>(cap))
        throw resource_limit("search_golay_pairs: pair space " + std::to_string(pair_space) +
                             " exceeds budget " + std::to_string(cap) +
                             "; reduce length or raise the budget");

    const double tol = 1e-12;
    const std::size_t n_seq = static_cast<std::size_t>(
        std::llround(std::pow(static_cast<double>(alphabet_size), static_cast<double>(length))));

    // Precompute all candidate sequences and their ACFs once; the pair scan
    // conditions on u by matching negated off-peak correlations.
    std::vector<UnimodularSequence> seqs;
    std::vector<std::vector<cplx>> acfs; // off-peak positive lags only
    seqs.reserve(n_seq);
    acfs.reserve(n_seq);
    std::vector<int> idx(length, 0);
    do {
        auto s = detail::seq_from_indices(idx, alphabet_size);
        const auto r = acf(s);
        std::vector<cplx> pos;
        pos.reserve(length - 1);
        for (int tau = 1; tau <= r.max_lag(); ++tau)
            pos.push_back(r.at(tau));
        seqs.push_back(std::move(s));
        acfs.push_back(std::move(pos));
    } while (detail::next_indices(idx, alphabet_size));

    std::vector<std::pair<UnimodularSequence, UnimodularSequence>> out;
    for (std::size_t a = 0; a < n_seq; ++a) {
        for (std::size_t b = 0; b < n_seq; ++b) {
            bool ok = true;
            for (std::size_t t = 0; t < length - 1 && ok; ++t)
                ok = std::abs(acfs[a][t] + acfs[b][t]) <= tol;
            if (ok)
                out.emplace_back(seqs[a], seqs[b]);
        }
    }
    return out;
}

} // namespace golaybeam

#endif
