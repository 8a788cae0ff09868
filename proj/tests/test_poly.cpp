// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheb/errors.hpp"
#include "cheb/poly.hpp"

using namespace chebknots;

namespace {

const ExactPoly kT = ExactPoly::variable();
const ExactPoly kOneMinusT2{1, 0, -1}; // 1 - t^2

} // namespace

TEST_CASE("small Chebyshev polynomials") {
    CHECK(cheb_t(0) == ExactPoly{1});
    CHECK(cheb_t(1) == kT);
    CHECK(cheb_t(2) == ExactPoly{-1, 0, 2});
    CHECK(cheb_t(3) == ExactPoly{0, -3, 0, 4});
    CHECK(cheb_t(4) == ExactPoly{1, 0, -8, 0, 8});
    CHECK(cheb_u(-1) == ExactPoly::zero());
    CHECK(cheb_u(0) == ExactPoly{1});
    CHECK(cheb_u(1) == ExactPoly{0, 2});
    CHECK(cheb_u(2) == ExactPoly{-1, 0, 4});
    CHECK(cheb_t(12).degree() == 12);
    CHECK(cheb_t(12).leading_coeff() == mpq_class(2048)); // 2^11
}

TEST_CASE("monic rescaling reproduces the trefoil components") {
    CHECK(monic_cheb(3) == ExactPoly{0, -3, 0, 1});
    CHECK(monic_cheb(4) == ExactPoly{2, 0, -4, 0, 1});
    CHECK(monic_cheb(5) == ExactPoly{0, 5, 0, -5, 0, 1});
    CHECK(monic_cheb(1) == kT);
}

TEST_CASE("product and composition identities") {
    for (long m = 0; m <= 12; ++m) {
        for (long n = 0; n <= m; ++n) {
            const auto um1 = cheb_u(m - 1), un1 = cheb_u(n - 1);
            const auto tm = cheb_t(static_cast<unsigned>(m));
            const auto tn = cheb_t(static_cast<unsigned>(n));
            // (a) and (b)
            CHECK(cheb_t(static_cast<unsigned>(m + n)) ==
                  tm * tn - kOneMinusT2 * um1 * un1);
            CHECK(cheb_t(static_cast<unsigned>(m - n)) ==
                  tm * tn + kOneMinusT2 * um1 * un1);
            // (c)
            CHECK(mpq_class(2) * tm * tn ==
                  cheb_t(static_cast<unsigned>(m + n)) + cheb_t(static_cast<unsigned>(m - n)));
            // (d), (e), (f)
            const auto um = cheb_u(m), tm1 = cheb_t(static_cast<unsigned>(m + 1));
            CHECK(cheb_u(m + n) == um * tn + tm1 * un1);
            CHECK(cheb_u(m - n) == um * tn - tm1 * un1);
            CHECK(mpq_class(2) * um * tn == cheb_u(m + n) + cheb_u(m - n));
            // (g)
            CHECK(compose(tm, tn) == cheb_t(static_cast<unsigned>(m * n)));
            // (h)
            if (m >= 1 && n >= 1)
                CHECK(cheb_u(m * n - 1) == compose(un1, tm) * um1);
            // (i)
            CHECK(derivative(tn) == mpq_class(n) * un1);
        }
    }
}

TEST_CASE("fast composition agrees with Horner composition") {
    const ExactPoly q{1, -2, 0, 3}; // arbitrary
    for (unsigned n : {0u, 1u, 2u, 3u, 7u, 16u, 31u})
        CHECK(cheb_compose(n, q) == compose(cheb_t(n), q));
    CHECK(cheb_compose(200, cheb_t(3)) == cheb_t(600));
}

TEST_CASE("large integral products take the packed path") {
    // work = 101 * 102 > threshold; checked against the product identity
    const auto lhs = mpq_class(2) * (cheb_t(100) * cheb_t(101));
    CHECK(lhs == cheb_t(201) + cheb_t(1));
}

TEST_CASE("exact division") {
    CHECK(exact_div(cheb_u(11), cheb_u(2) * cheb_u(3)) ==
          exact_div(cheb_u(11), cheb_u(3) * cheb_u(2)));
    CHECK(exact_div(cheb_t(3) * cheb_t(5), cheb_t(3)) == cheb_t(5));
    CHECK_THROWS_AS((void)exact_div(cheb_t(3), cheb_t(2)), NonzeroRemainder);
    CHECK_THROWS_AS((void)exact_div(cheb_t(3), ExactPoly::zero()), NonzeroRemainder);
}

TEST_CASE("rational evaluation") {
    CHECK(eval_rational(cheb_t(7), 1) == 1);
    CHECK(eval_rational(cheb_t(7), -1) == -1);
    CHECK(eval_rational(cheb_t(2), mpq_class(1, 2)) == mpq_class(-1, 2));
}

TEST_CASE("json round trip") {
    const ExactPoly p{mpq_class(1, 3), 0, mpq_class(-7, 2)};
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(poly_to_json(ExactPoly::zero())) == ExactPoly::zero());
}

TEST_CASE("degree bookkeeping") {
    CHECK(ExactPoly::zero().degree() == ExactPoly::kDegreeNegInf);
    CHECK((cheb_t(5) - cheb_t(5)).degree() == ExactPoly::kDegreeNegInf);
    CHECK((ExactPoly{1, 1} * ExactPoly{1, -1}) == ExactPoly{1, 0, -1});
}
