// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate. Each criterion prints one [PASS]/[FAIL]
// line; the process exits nonzero if any criterion fails. All checks are
// exact; the per-criterion time budgets are generous on desk hardware.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cheb/algebra.hpp"
#include "cheb/diagram.hpp"
#include "cheb/errors.hpp"
#include "cheb/geometry.hpp"
#include "cheb/invariants.hpp"
#include "cheb/poly.hpp"

using namespace chebknots;

namespace {

int g_failures = 0;

template <typename F>
void criterion(const char* name, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-28s %7.2fs%s\n", ok ? "PASS" : "FAIL", name, secs, detail.c_str());
    if (!ok) ++g_failures;
}

bool identity_suite() {
    const ExactPoly one_minus_t2{1, 0, -1};
    for (long m = 0; m <= 30; ++m)
        for (long n = 0; n <= m; ++n) {
            const auto tm = cheb_t(static_cast<unsigned>(m));
            const auto tn = cheb_t(static_cast<unsigned>(n));
            const auto um1 = cheb_u(m - 1), un1 = cheb_u(n - 1);
            const auto um = cheb_u(m), tm1 = cheb_t(static_cast<unsigned>(m + 1));
            if (cheb_t(static_cast<unsigned>(m + n)) != tm * tn - one_minus_t2 * um1 * un1)
                return false;
            if (cheb_t(static_cast<unsigned>(m - n)) != tm * tn + one_minus_t2 * um1 * un1)
                return false;
            if (mpq_class(2) * tm * tn != cheb_t(static_cast<unsigned>(m + n)) +
                                              cheb_t(static_cast<unsigned>(m - n)))
                return false;
            if (cheb_u(m + n) != um * tn + tm1 * un1) return false;
            if (cheb_u(m - n) != um * tn - tm1 * un1) return false;
            if (mpq_class(2) * um * tn != cheb_u(m + n) + cheb_u(m - n)) return false;
            if (m >= 1 && n >= 1 && cheb_u(m * n - 1) != compose(un1, tm) * um1)
                return false;
            if (derivative(tn) != mpq_class(n) * un1) return false;
        }
    for (unsigned m = 0; m <= 12; ++m)
        for (unsigned n = 0; n <= 12; ++n)
            if (compose(cheb_t(m), cheb_t(n)) != cheb_t(m * n)) return false;
    return true;
}

bool table1() {
    const std::vector<Table1Row> expected = {
        {3, 4, 3, {5}},
        {3, 5, 4, {7}},
        {3, 7, 6, {8, 11}},
        {4, 5, 6, {7, 11}},
        {3, 8, 7, {13}},
        {3, 10, 9, {11, 17}},
        {4, 7, 9, {9, 13, 17}},
        {3, 11, 10, {13, 16, 19}},
        {5, 6, 10, {7, 13, 19}},
        {3, 13, 12, {14, 17, 20, 23}},
        {4, 9, 12, {11, 19, 23}},
        {5, 7, 12, {8, 9, 11, 13, 16, 18, 23}},
        {3, 14, 13, {19, 25}},
        {5, 8, 14, {9, 11, 17, 19, 27}},
        {3, 16, 15, {17, 23, 29}},
        {4, 11, 15, {13, 17, 21, 25, 29}},
        {6, 7, 15, {11, 17, 23, 29}},
        {3, 17, 16, {19, 22, 25, 28, 31}},
        {5, 9, 16, {11, 13, 16, 17, 22, 26, 31}},
    };
    return table1_rows(16) == expected;
}

bool parametrization_3_11() {
    std::vector<mpq_class> expected(20, 0);
    expected[19] = 327680;
    expected[17] = -1548288;
    expected[15] = 3080192;
    expected[13] = -3347456;
    expected[11] = 2155008;
    expected[9] = -832320;
    expected[7] = 185888;
    expected[5] = -21774;
    expected[3] = 1090;
    expected[1] = -15;
    return mpq_class(1, 64) * alternating_z(3, 11) == ExactPoly(expected);
}

bool node_census() {
    for (long i = 2; i <= 17; ++i)
        for (long j = i + 1; j <= 17; ++j) {
            if (std::gcd(i, j) != 1) continue;
            const auto ns = nodes(i, j);
            if (static_cast<long>(ns.size()) != (i - 1) * (j - 1) / 2) return false;
            std::multiset<long> seen, expected;
            for (const auto& n : ns) {
                seen.insert(n.t_low.k);
                seen.insert(n.t_high.k);
            }
            for (const auto& a : preimage_parameters(i, j)) expected.insert(a.k);
            if (seen != expected) return false;
        }
    return true;
}

bool parity() {
    for (long i = 2; i <= 13; ++i)
        for (long j = i + 1; j <= 13; ++j)
            if (std::gcd(i, j) == 1 && !check_parity(i, j)) return false;
    return true;
}

bool witnesses() {
    std::mt19937 rng(424243);
    std::uniform_int_distribution<long> dist(2, 15);
    int found = 0;
    while (found < 20) {
        const Triple t{dist(rng), dist(rng), dist(rng)};
        if (t.contains_unit() || pgcd(t.i, t.j, t.k) != 1) continue;
        ++found;
        if (!verify_witness(embedding_witness(t))) return false;
    }
    return true;
}

bool reductions() {
    std::mt19937 rng(90125);
    std::uniform_int_distribution<long> dist(1, 40);
    int found = 0;
    while (found < 50) {
        const Triple t{dist(rng), dist(rng), dist(rng)};
        if (!is_embedding(t)) continue;
        ++found;
        const auto trace = reduce_triple(t);
        if (!is_reduced(trace.end)) return false;
        long deg = trace.start.total_degree();
        for (const auto& [step, after] : trace.steps) {
            if (step.form == InvolutionForm::ProductMinusZ) {
                if (after.total_degree() >= deg) return false;
                deg = after.total_degree();
            }
            if (!after.contains_unit() && pgcd(after.i, after.j, after.k) != 1)
                return false;
        }
        ParamTriple p = parametrization(trace.end);
        for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
            p = apply_involution(it->first, p);
        if (p != parametrization(trace.start)) return false;
    }
    return true;
}

bool named(long i, long j, long k, const char* name) {
    const auto g = build_gauss_code(i, j, z_crossing_sequence(i, j, ChebIndex{k}));
    const auto id = identify(jones(g));
    return id && id->record.name == name;
}

bool table2_subset() {
    return named(3, 4, 5, "3_1") && named(3, 5, 7, "4_1") && named(3, 7, 8, "5_1") &&
           named(3, 7, 11, "6_3") && named(4, 5, 7, "5_2") && named(4, 5, 11, "6_2") &&
           named(3, 8, 13, "7_7") && named(5, 7, 9, "6_3");
}

bool named_alternating(long i, long j, const char* name) {
    const auto seq = z_crossing_sequence(i, j, alternating_z(i, j));
    const auto id = identify(jones(build_gauss_code(i, j, seq)));
    return id && id->record.name == name;
}

bool table3_subset() {
    return named_alternating(3, 4, "3_1") && named_alternating(3, 5, "4_1") &&
           named_alternating(3, 7, "6_3") && named_alternating(4, 5, "6_2") &&
           named_alternating(3, 8, "7_7") && named_alternating(4, 7, "9_20") &&
           named_alternating(5, 6, "10_116");
}

bool torus_oracle() {
    for (long n = 1; n <= 4; ++n) {
        const auto g = build_gauss_code(3, 3 * n + 1, torus_sequence(n));
        const LaurentPoly v = jones(g);
        const LaurentPoly ref = jones(standard_torus_pd(2 * n + 1));
        if (v != ref && v != ref.mirrored()) return false;
    }
    return true;
}

bool cap_row() {
    // 36-node diagram must build; its invariant must be refused at the cap
    const auto seq = z_crossing_sequence(9, 10, ChebIndex{11});
    if (seq.values.size() != 72) return false;
    const auto g = build_gauss_code(9, 10, seq);
    const auto pd = gauss_to_pd(g);
    if (pd.crossings.size() != 36) return false;
    try {
        (void)kauffman_bracket(pd);
        return false;
    } catch (const TooManyCrossings&) {
        return true;
    }
}

} // namespace

int main() {
    criterion("identity suite", identity_suite);
    criterion("table 1 reproduction", table1);
    criterion("(3,11) parametrization", parametrization_3_11);
    criterion("node census", node_census);
    criterion("parity property", parity);
    criterion("witness certificates", witnesses);
    criterion("reduction soundness", reductions);
    criterion("table 2 subset", table2_subset);
    criterion("table 3 subset", table3_subset);
    criterion("torus oracle", torus_oracle);
    criterion("36-node cap row", cap_row);
    return g_failures == 0 ? 0 : 1;
}
