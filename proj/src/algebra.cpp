// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#include "cheb/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

namespace chebknots {

std::string Triple::str() const {
    std::ostringstream out;
    out << "(" << i << "," << j << "," << k << ")";
    return out.str();
}

long pgcd(long i, long j, long k) {
    return std::max({std::gcd(i, j), std::gcd(i, k), std::gcd(j, k)});
}

bool is_embedding(const Triple& t) {
    return t.contains_unit() || pgcd(t.i, t.j, t.k) == 1;
}

std::array<long, 3> Witness::slots() const {
    const std::array<long, 3> v{triple.i, triple.j, triple.k};
    std::array<long, 3> out{v[static_cast<std::size_t>(odd_slot)], 0, 0};
    int pos = 1;
    for (int s = 0; s < 3; ++s)
        if (s != odd_slot) out[static_cast<std::size_t>(pos++)] = v[static_cast<std::size_t>(s)];
    return out;
}

bool verify_witness(const Witness& w) {
    const auto [i, j, k] = w.slots();
    const ExactPoly lhs =
        sub(mul(mpq_class(2), mul(cheb_compose(static_cast<unsigned>(w.a), cheb_t(static_cast<unsigned>(j))),
                                  cheb_compose(static_cast<unsigned>(w.b), cheb_t(static_cast<unsigned>(k))))),
            cheb_compose(static_cast<unsigned>(w.c), cheb_t(static_cast<unsigned>(i))));
    return lhs == ExactPoly::variable();
}

namespace {

// x with x*a = 1 (mod m), in [1, m-1]. Requires gcd(a, m) = 1, m >= 2.
long inverse_mod(long a, long m) {
    long r0 = m, r1 = ((a % m) + m) % m;
    long s0 = 0, s1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::logic_error("inverse_mod: arguments not coprime");
    return ((s0 % m) + m) % m;
}

} // namespace

Witness embedding_witness(const Triple& t) {
    if (t.contains_unit())
        throw NotAnEmbedding("embedding_witness: triple has a unit component; use rectify_trivial");
    if (pgcd(t.i, t.j, t.k) != 1)
        throw NotAnEmbedding("embedding_witness: pgcd(" + t.str() + ") > 1");

    const std::array<long, 3> v{t.i, t.j, t.k};
    int odd_slot = -1;
    for (int s = 0; s < 3; ++s)
        if (v[static_cast<std::size_t>(s)] % 2 != 0) {
            odd_slot = s;
            break;
        }
    // pgcd 1 leaves at most one even element, so an odd slot always exists.
    Witness w;
    w.odd_slot = odd_slot;
    w.triple = t;
    const auto [i, j, k] = w.slots();

    // Base pair: A1*j - B1*k = 1 and the companion A2*j - B2*k = -1;
    // keep the one with the smaller A.
    const long a1 = inverse_mod(j, k);
    const long b1 = (a1 * j - 1) / k;
    const long a2 = k - a1;
    const long b2 = (a2 * j + 1) / k;
    long A = a1, B = b1;
    if (a2 < a1) {
        A = a2;
        B = b2;
    }

    // (2jk)x + (Aj + Bk) = 0 (mod i); i odd and pgcd 1 make 2jk invertible.
    const long inv = inverse_mod((2 * j % i) * (k % i) % i, i);
    const long x = ((-(A * j + B * k) % i + i) % i) * inv % i;

    w.a = k * x + A;
    w.b = j * x + B;
    w.c = (w.a * j + w.b * k) / i;
    if (!verify_witness(w))
        throw std::logic_error("embedding_witness: expansion failed to reproduce t");
    return w;
}

std::optional<std::pair<long, long>> semigroup_member(long i, long j, long k) {
    if (std::gcd(i, j) != 1)
        throw NotCoprime("semigroup_member: gcd(i,j) != 1");
    for (long a = 1; a * i < k; ++a)
        if ((k - a * i) % j == 0) return std::make_pair(a, (k - a * i) / j);
    return std::nullopt;
}

long frobenius(long i, long j) {
    if (i < 2 || j < 2 || std::gcd(i, j) != 1)
        throw NotCoprime("frobenius: needs coprime i,j >= 2");
    return i * j - i - j;
}

std::vector<long> remnant(long i, long j) {
    if (i < 2 || i >= j || std::gcd(i, j) != 1)
        throw NotCoprime("remnant: needs coprime 2 <= i < j");
    std::vector<long> out;
    for (long k = j + 1; k <= i * j - i - j; ++k)
        if (pgcd(i, j, k) == 1 && !semigroup_member(i, j, k)) out.push_back(k);
    return out;
}

bool is_reduced(const Triple& t) {
    if (t.contains_unit()) return true;
    std::array<long, 3> v{t.i, t.j, t.k};
    std::sort(v.begin(), v.end());
    const auto [i, j, k] = v;
    return i >= 2 && i < j && std::gcd(i, j) == 1 && k > j &&
           pgcd(i, j, k) == 1 && !semigroup_member(i, j, k).has_value();
}

ParamTriple apply_involution(const InvolutionStep& s, const ParamTriple& t) {
    const auto& [X, Y, Z] = t;
    switch (s.form) {
        case InvolutionForm::SwapXY: return {Y, X, Z};
        case InvolutionForm::SwapXZ: return {Z, Y, X};
        case InvolutionForm::SwapYZ: return {X, Z, Y};
        case InvolutionForm::ProductMinusX:
            return {sub(mul(compose(s.p, Y), compose(s.q, Z)), X), Y, Z};
        case InvolutionForm::ProductMinusY:
            return {X, sub(mul(compose(s.p, X), compose(s.q, Z)), Y), Z};
        case InvolutionForm::ProductMinusZ:
            return {X, Y, sub(mul(compose(s.p, X), compose(s.q, Y)), Z)};
        case InvolutionForm::PairMinusXY:
            return {sub(compose(s.p, Z), X), sub(compose(s.q, Z), Y), Z};
        case InvolutionForm::PairMinusXZ:
            return {sub(compose(s.p, Y), X), Y, sub(compose(s.q, Y), Z)};
        case InvolutionForm::PairMinusYZ:
            return {X, sub(compose(s.p, X), Y), sub(compose(s.q, X), Z)};
    }
    throw std::logic_error("apply_involution: unknown form");
}

ParamTriple apply_involutions(const std::vector<InvolutionStep>& steps,
                              const ParamTriple& p) {
    ParamTriple cur = p;
    for (const auto& s : steps) cur = apply_involution(s, cur);
    return cur;
}

ParamTriple parametrization(const Triple& t) {
    return {cheb_t(static_cast<unsigned>(t.i)), cheb_t(static_cast<unsigned>(t.j)),
            cheb_t(static_cast<unsigned>(t.k))};
}

namespace {

// Bubble the triple into ascending order, recording each transposition.
void sort_with_swaps(Triple& cur, ReductionTrace& trace) {
    auto record = [&](InvolutionForm form) {
        trace.steps.push_back({InvolutionStep{form, {}, {}}, cur});
    };
    while (true) {
        if (cur.i > cur.j) {
            std::swap(cur.i, cur.j);
            record(InvolutionForm::SwapXY);
        } else if (cur.j > cur.k) {
            std::swap(cur.j, cur.k);
            record(InvolutionForm::SwapYZ);
        } else {
            return;
        }
    }
}

} // namespace

ReductionTrace reduce_triple(const Triple& t) {
    if (!is_embedding(t))
        throw NotAnEmbedding("reduce_triple: " + t.str() + " is not an embedding");
    ReductionTrace trace;
    trace.start = t;
    Triple cur = t;
    while (true) {
        sort_with_swaps(cur, trace);
        if (is_reduced(cur)) break;
        // Non-reduced sorted triple: 2 <= i < j < k with k = ai + bj.
        const auto rep = semigroup_member(cur.i, cur.j, cur.k);
        if (!rep)
            throw std::logic_error("reduce_triple: non-reduced triple outside semigroup");
        const auto [a, b] = *rep;
        const long next_k = std::labs(a * cur.i - b * cur.j);
        if (next_k == 0)
            throw std::logic_error("reduce_triple: reduction hit T_0; pgcd precondition violated");
        InvolutionStep step{InvolutionForm::ProductMinusZ,
                            mul(mpq_class(2), cheb_t(static_cast<unsigned>(a))),
                            cheb_t(static_cast<unsigned>(b))};
        cur.k = next_k;
        trace.steps.push_back({std::move(step), cur});
    }
    trace.end = cur;
    return trace;
}

std::vector<InvolutionStep> rectify_trivial(const Triple& t) {
    if (!t.contains_unit())
        throw NoUnitComponent("rectify_trivial: " + t.str() + " has no unit component");
    std::vector<InvolutionStep> steps;
    Triple cur = t;
    if (cur.j == 1) {
        steps.push_back({InvolutionForm::SwapXY, {}, {}});
        std::swap(cur.i, cur.j);
    } else if (cur.k == 1) {
        steps.push_back({InvolutionForm::SwapXZ, {}, {}});
        std::swap(cur.i, cur.k);
    }
    steps.push_back({InvolutionForm::PairMinusYZ, cheb_t(static_cast<unsigned>(cur.j)),
                     cheb_t(static_cast<unsigned>(cur.k))});
    return steps;
}

std::vector<Table1Row> table1_rows(long max_nodes) {
    std::vector<Table1Row> rows;
    for (long i = 3; (i - 1) * i / 2 <= max_nodes; ++i)
        for (long j = i + 1; (i - 1) * (j - 1) / 2 <= max_nodes; ++j)
            if (std::gcd(i, j) == 1)
                rows.push_back({i, j, (i - 1) * (j - 1) / 2, remnant(i, j)});
    std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
        return std::tie(a.node_count, a.i, a.j) < std::tie(b.node_count, b.i, b.j);
    });
    return rows;
}

namespace {

const char* form_name(InvolutionForm f) {
    switch (f) {
        case InvolutionForm::SwapXY: return "swap_xy";
        case InvolutionForm::SwapXZ: return "swap_xz";
        case InvolutionForm::SwapYZ: return "swap_yz";
        case InvolutionForm::ProductMinusX: return "product_minus_x";
        case InvolutionForm::ProductMinusY: return "product_minus_y";
        case InvolutionForm::ProductMinusZ: return "product_minus_z";
        case InvolutionForm::PairMinusXY: return "pair_minus_xy";
        case InvolutionForm::PairMinusXZ: return "pair_minus_xz";
        case InvolutionForm::PairMinusYZ: return "pair_minus_yz";
    }
    return "?";
}

nlohmann::json triple_json(const Triple& t) {
    return nlohmann::json{{"i", t.i}, {"j", t.j}, {"k", t.k}};
}

} // namespace

std::string trace_to_json(const ReductionTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [step, after] : trace.steps) {
        nlohmann::json s{{"form", form_name(step.form)}, {"triple", triple_json(after)}};
        if (!step.p.is_zero() || !step.q.is_zero()) {
            s["payload"] = {nlohmann::json::parse(poly_to_json(step.p)),
                            nlohmann::json::parse(poly_to_json(step.q))};
        }
        steps.push_back(std::move(s));
    }
    return nlohmann::json{{"schema", "chebknots/reduction-trace/v1"},
                          {"start", triple_json(trace.start)},
                          {"steps", steps},
                          {"end", triple_json(trace.end)},
                          {"trivial", trace.end.contains_unit()}}
        .dump();
}

std::string witness_to_json(const Witness& w) {
    const auto [i, j, k] = w.slots();
    return nlohmann::json{{"schema", "chebknots/witness/v1"},
                          {"a", w.a},
                          {"b", w.b},
                          {"c", w.c},
                          {"odd_slot", w.odd_slot},
                          {"identity", "t = 2*T_" + std::to_string(w.a) + "(T_" + std::to_string(j) +
                                           ") * T_" + std::to_string(w.b) + "(T_" + std::to_string(k) +
                                           ") - T_" + std::to_string(w.c) + "(T_" + std::to_string(i) + ")"}}
        .dump();
}

} // namespace chebknots
