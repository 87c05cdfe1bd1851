// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "golaybeam/search.hpp"

using namespace golaybeam;

namespace {

bool contains_pair(const std::vector<std::pair<UnimodularSequence, UnimodularSequence>> &list,
                   const UnimodularSequence &u, const UnimodularSequence &w) {
    for (const auto &[fu, fw] : list) {
        if (fu.size() != u.size())
            continue;
        bool same = true;
        for (std::size_t n = 0; n < u.size() && same; ++n)
            same = std::abs(fu.value(n) - u.value(n)) < 1e-9 &&
                   std::abs(fw.value(n) - w.value(n)) < 1e-9;
        if (same)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("length 1 includes the trivial pair") {
    const auto found = search_golay_pairs(1, 2);
    CHECK(contains_pair(found, UnimodularSequence::from_signs({1}),
                        UnimodularSequence::from_signs({1})));
}

TEST_CASE("length 2 includes the classic pair") {
    const auto found = search_golay_pairs(2, 2);
    CHECK(contains_pair(found, UnimodularSequence::from_signs({1, 1}),
                        UnimodularSequence::from_signs({1, -1})));
}

TEST_CASE("no binary pair of length 3 exists") {
    CHECK(search_golay_pairs(3, 2).empty());
}

TEST_CASE("every found pair verifies") {
    for (std::size_t len : {std::size_t{2}, std::size_t{4}}) {
        for (const auto &[u, w] : search_golay_pairs(len, 2))
            CHECK(is_golay_pair(u, w, 1e-12).complementary);
        for (const auto &[u, w] : search_golay_pairs(len, 4))
            CHECK(is_golay_pair(u, w, 1e-12).complementary);
    }
}

TEST_CASE("search output is deterministic") {
    const auto a = search_golay_pairs(4, 2);
    const auto b = search_golay_pairs(4, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first.phases() == b[i].first.phases());
        CHECK(a[i].second.phases() == b[i].second.phases());
    }
}

TEST_CASE("search output closed under equivalence transforms") {
    for (std::size_t len : {std::size_t{2}, std::size_t{4}}) {
        const auto found = search_golay_pairs(len, 2);
        for (const auto &[u, w] : found) {
            for (PairTransform k : {PairTransform::reverse_both, PairTransform::conjugate_both,
                                    PairTransform::negate_each}) {
                auto [tu, tw] = transform_pair(u, w, k);
                CAPTURE(len, static_cast<int>(k));
                CHECK(contains_pair(found, tu, tw));
            }
        }
    }
}

TEST_CASE("budget exceeded raises resource_limit") {
    CHECK_THROWS_AS(search_golay_pairs(10, 2), resource_limit);
    CHECK_THROWS_AS(search_golay_pairs(10, 4), resource_limit);
}

TEST_CASE("invalid alphabet size rejected") {
    CHECK_THROWS_AS(search_golay_pairs(2, 3), invalid_input);
}
