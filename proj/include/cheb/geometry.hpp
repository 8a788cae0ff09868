// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cheb/poly.hpp"

namespace chebknots {

/// The real number cos(k*pi/N), kept in canonical form 0 <= k <= N so that
/// comparisons reduce to integer cross-multiplication (cosine is strictly
/// decreasing on [0, pi]). The pair is deliberately not reduced by gcd: the
/// denominator N = i*j is part of the bookkeeping.
struct AngleCos {
    long k = 0;
    long N = 1;

    static AngleCos make(long k, long N) {
        long m = ((k % (2 * N)) + 2 * N) % (2 * N);
        if (m > N) m = 2 * N - m;
        return {m, N};
    }

    bool operator==(const AngleCos& o) const { return k * o.N == o.k * N; }
    /// cos(k pi/N) < cos(o.k pi/o.N).
    bool operator<(const AngleCos& o) const { return k * o.N > o.k * N; }

    double approx() const; // non-normative decimal value
    std::string str() const;
};

/// T_n(cos(k pi/N)) = cos(n k pi/N), folded back to canonical form.
AngleCos cheb_eval_angle(long n, const AngleCos& a);

/// Sign of sin(n * k pi/N), i.e. of U_{n-1} at the angle (up to the positive
/// factor sin(k pi/N)). Throws BoundaryAngle unless 0 < k < N.
int sin_multiple_sign(long n, const AngleCos& a);

/// A double point of the plane curve (T_i(t), T_j(t)).
struct NodeData {
    long lambda = 0; // in [1, j-1]
    long mu = 0;     // in [1, i-1], same parity as lambda
    AngleCos x;      // cos(lambda pi / j)
    AngleCos y;      // cos(mu pi / i)
    AngleCos t_low;  // preimage parameters, t_low < t_high by real value
    AngleCos t_high;
};

/// All nodes of (T_i, T_j) for coprime 2 <= i < j. (i-1)(j-1)/2 of them.
std::vector<NodeData> nodes(long i, long j);

/// The (i-1)(j-1) parameters cos(k pi/ij), 1 <= k < ij, k divisible by
/// neither i nor j, sorted ascending by real value.
std::vector<AngleCos> preimage_parameters(long i, long j);

/// True iff at every node the two preimages sit at opposite-parity positions
/// of the sorted parameter list.
bool check_parity(long i, long j);

/// Height polynomial making the diagram of (T_i, T_j) alternating:
/// the derivative of U_{ij-1} / (U_{i-1} U_{j-1}). Needs coprime 3 <= m < n.
ExactPoly alternating_z(long m, long n);

/// Exact samples of (T_i(t), T_j(t)) at count equally spaced rational t.
std::vector<std::pair<mpq_class, mpq_class>>
curve_samples(long i, long j, std::size_t count, const mpq_class& t_min,
              const mpq_class& t_max);

std::string nodes_to_json(long i, long j, const std::vector<NodeData>& ns);

} // namespace chebknots
