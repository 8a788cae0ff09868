// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheb/poly.hpp"

namespace chebknots {

/// Exponent triple (i,j,k) of a candidate line embedding (T_i, T_j, T_k).
struct Triple {
    long i = 1, j = 1, k = 1;

    bool operator==(const Triple&) const = default;
    bool contains_unit() const { return i == 1 || j == 1 || k == 1; }
    long total_degree() const { return i + j + k; }
    std::string str() const;
};

/// max{gcd(i,j), gcd(i,k), gcd(j,k)}.
long pgcd(long i, long j, long k);
inline long pgcd(const Triple& t) { return pgcd(t.i, t.j, t.k); }

/// True iff (T_i,T_j,T_k) is a line embedding: pgcd 1, or a unit component.
bool is_embedding(const Triple& t);

/// Surjectivity certificate: t = 2 T_a(T_j) T_b(T_k) - T_c(T_i), where slots
/// are permuted so the odd element of the triple sits in the T_c slot.
struct Witness {
    long a = 0, b = 0, c = 0;
    int odd_slot = 0; // index into the original triple of the odd element
    Triple triple;    // the triple the witness certifies

    /// The elements (odd, first other, second other) in witness slot order.
    std::array<long, 3> slots() const;
};

/// Expand 2 T_a(T_j) T_b(T_k) - T_c(T_i) exactly and compare with t.
bool verify_witness(const Witness& w);

/// Runs the constructive algorithm: base solution |Aj - Bk| = 1 by extended
/// Euclid (smallest positive A), then the congruence
/// (2jk)x + (Aj + Bk) = 0 (mod i) picks x in [0, i-1].
/// The returned witness has been verified by exact expansion.
/// Throws NotAnEmbedding unless pgcd = 1 and no component equals 1.
Witness embedding_witness(const Triple& t);

/// Smallest-a representation k = a*i + b*j with a,b >= 1, if any.
/// Requires gcd(i,j) = 1.
std::optional<std::pair<long, long>> semigroup_member(long i, long j, long k);

/// ij - i - j, the largest integer outside the semigroup <i,j>.
long frobenius(long i, long j);

/// All k > max(i,j) outside <i,j> with pgcd(i,j,k) = 1, ascending.
std::vector<long> remnant(long i, long j);

/// True iff the triple is reduced: contains 1, or (sorted) k lies in the
/// remnant of i and j.
bool is_reduced(const Triple& t);

/// The nine elementary involution shapes. Bivariate payloads are separable
/// products p(u) q(v); pair forms carry two univariate replacements.
enum class InvolutionForm {
    SwapXY,        // (y, x, z)
    SwapXZ,        // (z, y, x)
    SwapYZ,        // (x, z, y)
    ProductMinusX, // (p(y) q(z) - x, y, z)
    ProductMinusY, // (x, p(x) q(z) - y, z)
    ProductMinusZ, // (x, y, p(x) q(y) - z)
    PairMinusXY,   // (p(z) - x, q(z) - y, z)
    PairMinusXZ,   // (p(y) - x, y, q(y) - z)
    PairMinusYZ,   // (x, p(x) - y, q(x) - z)
};

struct InvolutionStep {
    InvolutionForm form;
    ExactPoly p, q; // unused (empty) for the swap forms
};

using ParamTriple = std::array<ExactPoly, 3>;

ParamTriple apply_involution(const InvolutionStep& step, const ParamTriple& p);

/// Applies each step in order by exact polynomial substitution.
ParamTriple apply_involutions(const std::vector<InvolutionStep>& steps,
                              const ParamTriple& p);

/// Chebyshev parametrization (T_i, T_j, T_k) of a triple.
ParamTriple parametrization(const Triple& t);

/// Involution trail from a start triple to a reduced triple. Swap steps keep
/// the total degree; every ProductMinusZ step strictly decreases it.
struct ReductionTrace {
    Triple start;
    std::vector<std::pair<InvolutionStep, Triple>> steps; // step, triple after
    Triple end;
};

/// Reduce by the move k = ai + bj  ->  |ai - bj| (smallest-a representation),
/// re-sorting ascending with recorded swaps, until the triple is reduced.
/// Throws NotAnEmbedding unless pgcd = 1 or the triple contains 1.
ReductionTrace reduce_triple(const Triple& t);

/// Steps carrying (T_i,T_j,T_k) with a unit component to (t, 0, 0).
/// Throws NoUnitComponent when no component equals 1.
std::vector<InvolutionStep> rectify_trivial(const Triple& t);

/// One line of the remnant survey: a coprime pair and its remnant.
struct Table1Row {
    long i = 0, j = 0;
    long node_count = 0; // (i-1)(j-1)/2
    std::vector<long> remnant;

    bool operator==(const Table1Row&) const = default;
};

/// All coprime pairs 3 <= i < j with (i-1)(j-1)/2 <= max_nodes, ordered by
/// node count, then lexicographically.
std::vector<Table1Row> table1_rows(long max_nodes);

std::string trace_to_json(const ReductionTrace& trace);
std::string witness_to_json(const Witness& w);

} // namespace chebknots
