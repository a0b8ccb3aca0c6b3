#include "sheafloc/weights.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sheafloc;

namespace {

const std::vector<WeightTriple> kTriples{WeightTriple(1, 2, 10), WeightTriple(1, 3, 100), WeightTriple(2, 5, 1000)};

WeightMultiset multiset(std::initializer_list<std::pair<std::int64_t, std::uint64_t>> entries) {
    WeightMultiset ms;
    for (auto [w, m] : entries) ms.add(w, m);
    return ms;
}

}  // namespace

TEST_CASE("pushforward weights") {
    CHECK(pushforward_weights(0) == std::vector<TwistWeight>{{0, 0}});
    CHECK(pushforward_weights(1) == std::vector<TwistWeight>{{1, 1}, {0, 0}});
    CHECK(pushforward_weights(2) == std::vector<TwistWeight>{{2, 2}, {1, 1}, {0, 0}});
}

TEST_CASE("conormal weights") {
    CHECK(conormal_weight(0) == 0);
    CHECK(conormal_weight(1) == 1);
    CHECK(conormal_weight(5) == 5);
}

TEST_CASE("weight triple validation") {
    CHECK(WeightTriple() == WeightTriple(1, 2, 10));
    CHECK_THROWS_AS(WeightTriple(2, 2, 10), std::invalid_argument);   // w2 - w1 = 0
    CHECK_THROWS_AS(WeightTriple(1, 12, 10), std::invalid_argument);  // w3 <= w2 - w1
    CHECK_THROWS_AS(WeightTriple(1, 11, 10), std::invalid_argument);  // w3 == w2 - w1
    CHECK_THROWS_AS(WeightTriple(0, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(WeightTriple(-3, -1, 10), std::invalid_argument);
    CHECK_NOTHROW(WeightTriple(1, 11, 11));
}

TEST_CASE("ext weight family examples") {
    const WeightTriple w(1, 2, 10);
    CHECK(ext_weight_families({}, {}, 3, -2, w).empty());
    CHECK(ext_weight_families(Partition({1}), {}, 0, 0, w) == multiset({{-1, 1}, {11, 1}}));
    CHECK(ext_weight_families({}, Partition({1}), 0, 0, w) == multiset({{1, 1}, {9, 1}}));
}

TEST_CASE("negative_count") {
    CHECK(negative_count(WeightMultiset{}) == 0);
    CHECK(negative_count(multiset({{-1, 1}, {11, 1}})) == 1);
    CHECK(negative_count(multiset({{-3, 2}, {0, 5}, {4, 1}})) == 2);
}

TEST_CASE("multiset merges equal weights and drops zero multiplicities") {
    WeightMultiset ms;
    ms.add(4, 1);
    ms.add(4, 2);
    ms.add(7, 0);
    CHECK(ms.entries().size() == 1);
    CHECK(ms.entries().at(4) == 3);
}

TEST_CASE("sign of each family depends only on the integer offsets") {
    for (unsigned n = 0; n <= 5; ++n) {
        for (const auto& [alpha, beta] : enumerate_pairs(n)) {
            for (std::int64_t l = -8; l <= 8; ++l) {
                for (std::int64_t lp = -3; lp <= 3; ++lp) {
                    const std::int64_t m = lp + 2 * l;
                    for (const auto& w : kTriples) {
                        for (const auto& t : ext_weight_terms(alpha, beta, l, lp, w)) {
                            const std::int64_t i = t.index;
                            bool predicted = false;
                            switch (t.family) {
                                case WeightFamily::QuotientBeta: predicted = m + i >= 1; break;
                                case WeightFamily::ExtBeta: predicted = m + i <= -1; break;
                                case WeightFamily::ExtAlpha: predicted = m - i > 1; break;
                                case WeightFamily::QuotientAlpha: predicted = m - i <= 0; break;
                            }
                            CHECK((t.weight < 0) == predicted);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("negative dimension does not depend on the weight triple") {
    for (unsigned n = 0; n <= 5; ++n) {
        for (const auto& [alpha, beta] : enumerate_pairs(n)) {
            for (std::int64_t l = -8; l <= 8; ++l) {
                for (std::int64_t lp = -3; lp <= 3; ++lp) {
                    const auto first = negative_count(ext_weight_families(alpha, beta, l, lp, kTriples[0]));
                    for (const auto& w : kTriples) {
                        const auto ms = ext_weight_families(alpha, beta, l, lp, w);
                        CHECK(negative_count(ms) == first);
                        CHECK(ms.total_multiplicity() == 2ull * n);
                    }
                }
            }
        }
    }
}

TEST_CASE("weights out of int64 range are reported") {
    CHECK_THROWS_AS(ext_weight_families(Partition({1}), {}, INT64_MAX / 2, 0, WeightTriple(1, 2, 1000)),
                    std::overflow_error);
}
