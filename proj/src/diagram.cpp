// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#include "cheb/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cheb/errors.hpp"
#include "cheb/interval.hpp"

namespace chebknots {

namespace {

// Preimage positions 0..2N-1 in ascending-t order, and the involution
// pairing positions at the same node. Also keeps each position's angle
// numerator (denominator is i*j throughout).
struct Pairing {
    std::vector<long> numerator;
    std::vector<std::size_t> partner;
    std::vector<std::size_t> node_of; // index into nodes(i, j) order
};

Pairing node_pairing(long i, long j) {
    const auto params = preimage_parameters(i, j);
    Pairing out;
    out.numerator.reserve(params.size());
    std::map<long, std::size_t> index_of;
    for (std::size_t m = 0; m < params.size(); ++m) {
        out.numerator.push_back(params[m].k);
        index_of[params[m].k] = m;
    }
    out.partner.assign(params.size(), 0);
    out.node_of.assign(params.size(), 0);
    const auto ns = nodes(i, j);
    for (std::size_t n = 0; n < ns.size(); ++n) {
        const std::size_t a = index_of.at(ns[n].t_low.k);
        const std::size_t b = index_of.at(ns[n].t_high.k);
        out.partner[a] = b;
        out.partner[b] = a;
        out.node_of[a] = out.node_of[b] = n;
    }
    return out;
}

} // namespace

CrossingSequence alternating_sequence(long N) {
    CrossingSequence seq;
    seq.values.reserve(static_cast<std::size_t>(2 * N));
    for (long m = 1; m <= 2 * N; ++m) seq.values.push_back(m % 2 == 0 ? 1 : -1);
    return seq;
}

CrossingSequence torus_sequence(long n) {
    if (n < 1) throw std::invalid_argument("torus_sequence: n >= 1");
    std::vector<int> a(static_cast<std::size_t>(6 * n) + 1, 0);
    // Seeds only populate the first block of length 2n; for n = 1 the third
    // seed falls outside the block and the extension rules determine it.
    a[1] = 1;
    a[2] = -1;
    if (n >= 2) a[3] = -1;
    for (long m = 4; m <= 2 * n; ++m)
        a[static_cast<std::size_t>(m)] = a[static_cast<std::size_t>(m - 1)] *
                                         a[static_cast<std::size_t>(m - 2)] *
                                         a[static_cast<std::size_t>(m - 3)];
    const int flip = n % 2 == 0 ? -1 : 1;
    for (long m = 1; m <= 2 * n; ++m) {
        a[static_cast<std::size_t>(m + 2 * n)] = flip * a[static_cast<std::size_t>(m)];
        a[static_cast<std::size_t>(m + 4 * n)] = a[static_cast<std::size_t>(m)];
    }
    return CrossingSequence{std::vector<int>(a.begin() + 1, a.end())};
}

CrossingSequence z_crossing_sequence(long i, long j, ChebIndex z) {
    const Pairing p = node_pairing(i, j);
    const long N = i * j;
    CrossingSequence seq;
    seq.values.reserve(p.numerator.size());
    for (std::size_t m = 0; m < p.numerator.size(); ++m) {
        const AngleCos mine = cheb_eval_angle(z.k, {p.numerator[m], N});
        const AngleCos theirs = cheb_eval_angle(z.k, {p.numerator[p.partner[m]], N});
        if (mine == theirs)
            throw ZFailsToSeparate("T_" + std::to_string(z.k) +
                                   " takes equal values at a node pair of (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
        seq.values.push_back(theirs < mine ? 1 : -1);
    }
    return seq;
}

CrossingSequence z_crossing_sequence(long i, long j, const ExactPoly& z) {
    if (i >= 3 && z == alternating_z(i, j)) {
        // Alternation theorem: z is the derivative of a polynomial whose
        // simple roots are exactly the preimage parameters, so its signs
        // alternate along them and the comparison is (-1)^m.
        return alternating_sequence((i - 1) * (j - 1) / 2);
    }
    const Pairing p = node_pairing(i, j);
    const long N = i * j;
    CrossingSequence seq;
    seq.values.reserve(p.numerator.size());
    for (std::size_t m = 0; m < p.numerator.size(); ++m)
        seq.values.push_back(compare_poly_at_angles(
            z, {p.numerator[m], N}, {p.numerator[p.partner[m]], N}));
    return seq;
}

bool sequence_valid(long i, long j, const CrossingSequence& seq) {
    const Pairing p = node_pairing(i, j);
    if (seq.values.size() != p.numerator.size()) return false;
    for (std::size_t m = 0; m < seq.values.size(); ++m) {
        if (seq.values[m] != 1 && seq.values[m] != -1) return false;
        if (seq.values[m] * seq.values[p.partner[m]] != -1) return false;
    }
    return true;
}

SignedGaussCode build_gauss_code(long i, long j, const CrossingSequence& seq) {
    if (!sequence_valid(i, j, seq))
        throw std::invalid_argument("build_gauss_code: sequence invalid for (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
    const Pairing p = node_pairing(i, j);
    const long N = i * j;
    std::vector<long> label_of_node(p.numerator.size() / 2 + 1, 0);
    long next_label = 1;
    SignedGaussCode g;
    g.entries.reserve(p.numerator.size());
    for (std::size_t m = 0; m < p.numerator.size(); ++m) {
        long& label = label_of_node[p.node_of[m]];
        if (label == 0) label = next_label++;
        const bool over = seq.values[m] == 1;
        const std::size_t o = over ? m : p.partner[m];
        const std::size_t u = over ? p.partner[m] : m;
        const int sign = tangent_det_sign(i, j, p.numerator[o], p.numerator[u], N);
        g.entries.push_back({label, over, sign});
    }
    return g;
}

long writhe(const SignedGaussCode& g) {
    long w = 0;
    for (const auto& e : g.entries)
        if (e.over) w += e.sign; // count each crossing once
    return w;
}

SignedGaussCode mirror(const SignedGaussCode& g) {
    SignedGaussCode out = g;
    for (auto& e : out.entries) {
        e.over = !e.over;
        e.sign = -e.sign;
    }
    return out;
}

PDCode gauss_to_pd(const SignedGaussCode& g) {
    const long two_n = static_cast<long>(g.entries.size());
    if (two_n % 2 != 0) throw UnrealizableCode("odd number of crossing visits");
    const long n_crossings = two_n / 2;

    // visit positions are 1-based; per label record (over pos, under pos, sign)
    struct Visits {
        long over = 0, under = 0;
        int sign = 0;
    };
    std::map<long, Visits> by_label;
    for (long m = 1; m <= two_n; ++m) {
        const auto& e = g.entries[static_cast<std::size_t>(m - 1)];
        auto& v = by_label[e.label];
        long& slot = e.over ? v.over : v.under;
        if (slot != 0) throw UnrealizableCode("label visited twice in same role");
        slot = m;
        if (v.sign != 0 && v.sign != e.sign)
            throw UnrealizableCode("handedness disagrees between visits");
        v.sign = e.sign;
    }
    if (static_cast<long>(by_label.size()) != n_crossings)
        throw UnrealizableCode("label multiplicity mismatch");

    // Arc m runs from visit m to visit m+1; arc 2N closes the loop, so the
    // arc entering visit 1 is arc 2N.
    auto arc = [two_n](long m) { return m == 0 ? two_n : m; };
    PDCode pd;
    pd.crossings.reserve(static_cast<std::size_t>(n_crossings));
    for (const auto& [label, v] : by_label) {
        if (v.over == 0 || v.under == 0)
            throw UnrealizableCode("label missing an over or under visit");
        const long p = v.under, q = v.over;
        if (v.sign > 0)
            pd.crossings.push_back({arc(p - 1), arc(q), arc(p), arc(q - 1)});
        else
            pd.crossings.push_back({arc(p - 1), arc(q - 1), arc(p), arc(q)});
    }
    return pd;
}

std::string gauss_to_json(const SignedGaussCode& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : g.entries)
        arr.push_back({{"label", e.label}, {"over", e.over}, {"sign", e.sign}});
    return nlohmann::json{{"schema", "chebknots/gauss-code/v1"}, {"entries", arr}}.dump();
}

std::string pd_to_json(const PDCode& pd) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : pd.crossings) arr.push_back({c[0], c[1], c[2], c[3]});
    return nlohmann::json{{"schema", "chebknots/pd-code/v1"}, {"crossings", arr}}.dump();
}

} // namespace chebknots
