// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cheb/algebra.hpp"
#include "cheb/errors.hpp"

using namespace chebknots;

TEST_CASE("pairwise gcd and the embedding test") {
    CHECK(pgcd(3, 4, 5) == 1);
    CHECK(pgcd(2, 4, 6) == 2);
    CHECK(pgcd(6, 10, 15) == 5);
    CHECK(is_embedding({3, 4, 5}));
    CHECK_FALSE(is_embedding({2, 4, 6}));
    CHECK(is_embedding({1, 9, 12})); // unit component wins over pgcd 3
}

TEST_CASE("witness for the trefoil triple") {
    const Witness w = embedding_witness({3, 4, 5});
    CHECK(w.odd_slot == 0);
    CHECK(w.a == 1);
    CHECK(w.b == 1);
    CHECK(w.c == 3);
    CHECK(verify_witness(w)); // t = 2 T_4 T_5 - T_9
}

TEST_CASE("witness rejects non-embeddings and trivial triples") {
    CHECK_THROWS_AS((void)embedding_witness({2, 4, 6}), NotAnEmbedding);
    CHECK_THROWS_AS((void)embedding_witness({1, 3, 4}), NotAnEmbedding);
}

TEST_CASE("random witnesses verify") {
    std::mt19937 rng(20260826);
    std::uniform_int_distribution<long> dist(2, 15);
    int found = 0;
    while (found < 8) {
        const Triple t{dist(rng), dist(rng), dist(rng)};
        if (!is_embedding(t) || t.contains_unit()) continue;
        ++found;
        CHECK(verify_witness(embedding_witness(t)));
    }
}

TEST_CASE("semigroup membership and remnants") {
    CHECK(semigroup_member(3, 4, 7) == std::pair<long, long>{1, 1});
    CHECK_FALSE(semigroup_member(3, 4, 5).has_value());
    CHECK(frobenius(3, 4) == 5);
    CHECK(remnant(3, 4) == std::vector<long>{5});
    CHECK(remnant(3, 8) == std::vector<long>{13});
    CHECK(remnant(4, 7) == std::vector<long>{9, 13, 17});
    CHECK(remnant(5, 7) == std::vector<long>{8, 9, 11, 13, 16, 18, 23});
    CHECK_THROWS_AS((void)remnant(4, 6), NotCoprime);
}

TEST_CASE("table 1 survey") {
    const auto rows = table1_rows(16);
    REQUIRE(rows.size() == 19);
    CHECK(rows.front() == Table1Row{3, 4, 3, {5}});
    CHECK(rows[2] == Table1Row{3, 7, 6, {8, 11}});
    CHECK(rows[3] == Table1Row{4, 5, 6, {7, 11}});
    CHECK(rows.back() == Table1Row{5, 9, 16, {11, 13, 16, 17, 22, 26, 31}});
    CHECK(table1_rows(3) == std::vector<Table1Row>{{3, 4, 3, {5}}});
}

TEST_CASE("reduced predicate") {
    CHECK(is_reduced({3, 4, 5}));
    CHECK(is_reduced({1, 9, 12}));
    CHECK_FALSE(is_reduced({3, 4, 7}));   // 7 = 3 + 4
    CHECK_FALSE(is_reduced({3, 4, 11}));  // 11 = 3 + 2*4
    CHECK(is_reduced({5, 3, 7}));         // order does not matter
}

TEST_CASE("reduction of an already reduced triple is empty") {
    const auto trace = reduce_triple({3, 4, 5});
    CHECK(trace.steps.empty());
    CHECK(trace.end == Triple{3, 4, 5});
}

TEST_CASE("reduction of (3,4,7) ends trivial") {
    const auto trace = reduce_triple({3, 4, 7});
    CHECK(trace.end.contains_unit());
    // replay: involutions are self-inverse, so applying the recorded steps
    // backwards to the reduced parametrization recovers the original
    ParamTriple p = parametrization(trace.end);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
        p = apply_involution(it->first, p);
    CHECK(p == parametrization(trace.start));
}

TEST_CASE("random reductions preserve pgcd and decrease degree") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(2, 40);
    int found = 0;
    while (found < 12) {
        const Triple t{dist(rng), dist(rng), dist(rng)};
        if (!is_embedding(t)) continue;
        ++found;
        const auto trace = reduce_triple(t);
        CHECK(is_reduced(trace.end));
        long deg = trace.start.total_degree();
        for (const auto& [step, after] : trace.steps) {
            if (step.form == InvolutionForm::ProductMinusZ) {
                CHECK(after.total_degree() < deg);
                deg = after.total_degree();
            }
            if (!after.contains_unit()) CHECK(pgcd(after.i, after.j, after.k) == 1);
        }
        ParamTriple p = parametrization(trace.end);
        for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
            p = apply_involution(it->first, p);
        CHECK(p == parametrization(trace.start));
    }
}

TEST_CASE("rectification straightens a trivial triple") {
    const auto trace = reduce_triple({3, 4, 7});
    REQUIRE(trace.end.contains_unit());
    const auto steps = rectify_trivial(trace.end);
    const ParamTriple p = apply_involutions(steps, parametrization(trace.end));
    CHECK(p == ParamTriple{ExactPoly::variable(), ExactPoly::zero(), ExactPoly::zero()});
    CHECK_THROWS_AS((void)rectify_trivial({3, 4, 5}), NoUnitComponent);
}

TEST_CASE("rectification handles units in any slot") {
    for (const Triple t : {Triple{1, 5, 7}, Triple{5, 1, 7}, Triple{5, 7, 1}}) {
        const auto steps = rectify_trivial(t);
        const ParamTriple p = apply_involutions(steps, parametrization(t));
        CHECK(p == ParamTriple{ExactPoly::variable(), ExactPoly::zero(), ExactPoly::zero()});
    }
}

TEST_CASE("involutions are involutions") {
    const ParamTriple p = parametrization({3, 4, 5});
    for (const auto form : {InvolutionForm::SwapXY, InvolutionForm::SwapXZ,
                            InvolutionForm::SwapYZ}) {
        const InvolutionStep s{form, {}, {}};
        CHECK(apply_involution(s, apply_involution(s, p)) == p);
    }
    const InvolutionStep s{InvolutionForm::ProductMinusZ,
                           mpq_class(2) * cheb_t(1), cheb_t(1)};
    CHECK(apply_involution(s, apply_involution(s, p)) == p);
    const InvolutionStep s2{InvolutionForm::PairMinusYZ, cheb_t(4), cheb_t(5)};
    CHECK(apply_involution(s2, apply_involution(s2, p)) == p);
}

TEST_CASE("json serializers are stable") {
    const auto trace = reduce_triple({3, 4, 7});
    const std::string j = trace_to_json(trace);
    CHECK(j.find("\"schema\"") != std::string::npos);
    CHECK(j.find("product_minus_z") != std::string::npos);
    const std::string wj = witness_to_json(embedding_witness({3, 4, 5}));
    CHECK(wj.find("2*T_1(T_4) * T_1(T_5) - T_3(T_3)") != std::string::npos);
}
