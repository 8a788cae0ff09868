// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "cheb/geometry.hpp"
#include "cheb/poly.hpp"

namespace chebknots {

/// Over/under choices along the parameter, one per node preimage: +1 means
/// the strand at that parameter passes over its partner. Valid sequences
/// take opposite values at the two preimages of each node.
struct CrossingSequence {
    std::vector<int> values; // length 2N for N nodes, entries in {-1, +1}

    bool operator==(const CrossingSequence&) const = default;
};

/// The strictly alternating sequence (-1)^m, m = 1..2N.
CrossingSequence alternating_sequence(long N);

/// The length-6n sequence giving the (2, 2n+1) torus knot on (T_3, T_{3n+1}):
/// seeds +1, -1, -1, product recurrence a_m = a_{m-1} a_{m-2} a_{m-3} up to
/// m = 2n, then a_{m+2n} = (-1)^{n+1} a_m and a_{m+4n} = a_m.
CrossingSequence torus_sequence(long n);

/// Marker selecting z = T_k in z_crossing_sequence.
struct ChebIndex {
    long k = 0;
};

/// Sequence induced by the height z along (T_i, T_j): +1 where the z-value
/// exceeds the value at the partner preimage. Exact angle comparison for
/// z = T_k; certified intervals for general polynomials. Throws
/// ZFailsToSeparate when z fails to separate some node pair.
CrossingSequence z_crossing_sequence(long i, long j, ChebIndex z);
CrossingSequence z_crossing_sequence(long i, long j, const ExactPoly& z);

/// Product rule: the two preimages of every node carry opposite values.
bool sequence_valid(long i, long j, const CrossingSequence& seq);

struct GaussEntry {
    long label = 0; // crossing id, numbered by first visit along the curve
    bool over = false;
    int sign = 0; // handedness, same at both visits
};

struct SignedGaussCode {
    std::vector<GaussEntry> entries; // traversal order, ascending t
};

/// Diagram of (T_i, T_j) with the given over/under choices. Handedness comes
/// from the certified sign of the tangent determinant at each node.
SignedGaussCode build_gauss_code(long i, long j, const CrossingSequence& seq);

/// Planar diagram code: per crossing, the four incident arcs counterclockwise
/// starting at the incoming under-arc.
struct PDCode {
    std::vector<std::array<long, 4>> crossings;
};

/// Arc-numbering translation of a Gauss code, closing the curve with one
/// crossing-free arc from the last parameter back to the first.
PDCode gauss_to_pd(const SignedGaussCode& g);

long writhe(const SignedGaussCode& g);

/// Same diagram seen in a mirror: over/under flipped, handedness negated.
SignedGaussCode mirror(const SignedGaussCode& g);

std::string gauss_to_json(const SignedGaussCode& g);
std::string pd_to_json(const PDCode& pd);

} // namespace chebknots
