// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "golaybeam/catalog.hpp"
#include "golaybeam/search.hpp"

using namespace golaybeam;

TEST_CASE("every cataloged pair is complementary at tol 1e-12") {
    for (Alphabet a : {Alphabet::binary, Alphabet::quaternary}) {
        for (std::size_t len : cataloged_lengths(a)) {
            const auto [u, w] = known_golay_pair(len, a);
            CAPTURE(len);
            REQUIRE(u.size() == len);
            REQUIRE(w.size() == len);
            const auto chk = is_golay_pair(u, w, 1e-12);
            CHECK(chk.complementary);
            CHECK(std::abs(acf(u).at(0) + acf(w).at(0) - cplx{2.0 * len, 0}) < 1e-12);
        }
    }
}

TEST_CASE("uncataloged lengths rejected") {
    CHECK_THROWS_AS(known_golay_pair(3, Alphabet::binary), invalid_input);
    CHECK_THROWS_AS(known_golay_pair(7, Alphabet::quaternary), invalid_input);
    CHECK_THROWS_AS(known_golay_pair(0, Alphabet::binary), invalid_input);
}

TEST_CASE("length-2 catalog entry matches the classic pair") {
    const auto [u, w] = known_golay_pair(2, Alphabet::binary);
    CHECK(std::abs(u.value(0) - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(u.value(1) - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(w.value(0) - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(w.value(1) - cplx{-1, 0}) < 1e-15);
}

// Cross-checks catalog entries against the exhaustive-search oracle where
// the pair space is small enough.
TEST_CASE("catalog entries appear in exhaustive search output") {
    for (std::size_t len : {std::size_t{1}, std::size_t{2}, std::size_t{4}, std::size_t{8}}) {
        const auto [u, w] = known_golay_pair(len, Alphabet::binary);
        const auto found = search_golay_pairs(len, 2);
        bool present = false;
        for (const auto &[fu, fw] : found) {
            bool same = true;
            for (std::size_t n = 0; n < len && same; ++n)
                same = std::abs(fu.value(n) - u.value(n)) < 1e-12 &&
                       std::abs(fw.value(n) - w.value(n)) < 1e-12;
            if (same) {
                present = true;
                break;
            }
        }
        CAPTURE(len);
        CHECK(present);
    }
}

TEST_CASE("reference seed pairs are the resolved length-8 sequences") {
    const auto [u1, w1] = reference_seed_pair_1();
    const auto [u2, w2] = reference_seed_pair_2();
    REQUIRE(u1.size() == 8);
    REQUIRE(u2.size() == 8);
    CHECK(is_golay_pair(u1, w1, 1e-12).complementary);
    CHECK(is_golay_pair(u2, w2, 1e-12).complementary);
    // binary seed: signs + + + + + - - +
    CHECK(std::abs(u1.value(4) - cplx{1, 0}) < 1e-12);
    CHECK(std::abs(u1.value(5) - cplx{-1, 0}) < 1e-12);
    // quaternary seed: entry 4 is +j
    CHECK(std::abs(u2.value(4) - cplx{0, 1}) < 1e-12);
}
