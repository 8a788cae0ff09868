// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "cheb/diagram.hpp"
#include "cheb/errors.hpp"

using namespace chebknots;

TEST_CASE("alternating sequence") {
    CHECK(alternating_sequence(3).values == std::vector<int>{-1, 1, -1, 1, -1, 1});
    CHECK(alternating_sequence(1).values == std::vector<int>{-1, 1});
}

TEST_CASE("torus sequences") {
    // For n = 1 the first block has length 2, so only the first two seeds
    // apply and the extension rules fill the rest.
    CHECK(torus_sequence(1).values == std::vector<int>{1, -1, 1, -1, 1, -1});
    CHECK(torus_sequence(2).values ==
          std::vector<int>{1, -1, -1, 1, -1, 1, 1, -1, 1, -1, -1, 1});
    // blocks: second is the first flipped by (-1)^{n+1}, third repeats first
    for (long n = 2; n <= 5; ++n) {
        const auto v = torus_sequence(n).values;
        REQUIRE(static_cast<long>(v.size()) == 6 * n);
        const int flip = n % 2 == 0 ? -1 : 1;
        for (long m = 0; m < 2 * n; ++m) {
            CHECK(v[static_cast<std::size_t>(m + 2 * n)] ==
                  flip * v[static_cast<std::size_t>(m)]);
            CHECK(v[static_cast<std::size_t>(m + 4 * n)] == v[static_cast<std::size_t>(m)]);
        }
    }
    // torus sequences are valid crossing sequences for (3, 3n+1)
    for (long n = 1; n <= 4; ++n)
        CHECK(sequence_valid(3, 3 * n + 1, torus_sequence(n)));
}

TEST_CASE("alternating sequences are valid for every coprime pair") {
    for (long i = 2; i <= 9; ++i)
        for (long j = i + 1; j <= 9; ++j)
            if (std::gcd(i, j) == 1)
                CHECK(sequence_valid(i, j, alternating_sequence((i - 1) * (j - 1) / 2)));
}

TEST_CASE("height-induced sequences") {
    const auto seq = z_crossing_sequence(3, 4, ChebIndex{5});
    CHECK(sequence_valid(3, 4, seq));
    CHECK_THROWS_AS((void)z_crossing_sequence(3, 4, ChebIndex{6}), ZFailsToSeparate);
    // the alternating height gives exactly the alternating sequence
    CHECK(z_crossing_sequence(3, 11, alternating_z(3, 11)) == alternating_sequence(10));
    CHECK(z_crossing_sequence(3, 4, alternating_z(3, 4)) == alternating_sequence(3));
    // generic interval path agrees with the exact path on z = t
    CHECK(z_crossing_sequence(3, 4, ExactPoly::variable()).values ==
          z_crossing_sequence(3, 4, ChebIndex{1}).values);
}

TEST_CASE("gauss code structure") {
    const auto g = build_gauss_code(3, 4, alternating_sequence(3));
    REQUIRE(g.entries.size() == 6);
    std::map<long, std::pair<int, int>> over_under; // label -> (overs, unders)
    std::map<long, std::set<int>> signs;
    for (const auto& e : g.entries) {
        (e.over ? over_under[e.label].first : over_under[e.label].second)++;
        signs[e.label].insert(e.sign);
    }
    CHECK(over_under.size() == 3);
    for (const auto& [label, counts] : over_under) {
        CHECK(counts.first == 1);
        CHECK(counts.second == 1);
        CHECK(signs[label].size() == 1);
    }
    // trefoil: all crossings share handedness
    CHECK(std::abs(writhe(g)) == 3);
    // alternating input alternates over/under along the traversal
    for (std::size_t m = 1; m < g.entries.size(); ++m)
        CHECK(g.entries[m].over != g.entries[m - 1].over);
}

TEST_CASE("invalid sequences are rejected") {
    CrossingSequence bad = alternating_sequence(3);
    bad.values[0] = 1; // breaks the node-pair product rule
    CHECK_THROWS_AS((void)build_gauss_code(3, 4, bad), std::invalid_argument);
    CHECK_FALSE(sequence_valid(3, 4, bad));
}

TEST_CASE("mirror flips over/under and negates writhe") {
    const auto g = build_gauss_code(3, 5, alternating_sequence(4));
    const auto m = mirror(g);
    CHECK(writhe(m) == -writhe(g));
    for (std::size_t s = 0; s < g.entries.size(); ++s)
        CHECK(m.entries[s].over != g.entries[s].over);
}

TEST_CASE("pd codes") {
    const auto g = build_gauss_code(3, 4, alternating_sequence(3));
    const auto pd = gauss_to_pd(g);
    REQUIRE(pd.crossings.size() == 3);
    std::map<long, int> arc_uses;
    for (const auto& c : pd.crossings)
        for (long a : c) arc_uses[a]++;
    // 2N arcs, each incident to exactly two crossing slots
    CHECK(arc_uses.size() == 6);
    for (const auto& [arc, uses] : arc_uses) {
        CHECK(arc >= 1);
        CHECK(arc <= 6);
        CHECK(uses == 2);
    }
    CHECK(gauss_to_pd(SignedGaussCode{}).crossings.empty());
}

TEST_CASE("hand-built nonsense is rejected") {
    SignedGaussCode g;
    g.entries.push_back({1, true, 1});
    g.entries.push_back({1, true, 1}); // visits label 1 over twice
    CHECK_THROWS_AS((void)gauss_to_pd(g), UnrealizableCode);
}

TEST_CASE("json serializers") {
    const auto g = build_gauss_code(3, 4, alternating_sequence(3));
    CHECK(gauss_to_json(g).find("\"label\"") != std::string::npos);
    CHECK(pd_to_json(gauss_to_pd(g)).find("\"crossings\"") != std::string::npos);
}
