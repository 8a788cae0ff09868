// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace chebknots {

/// Division had a nonzero remainder where exact divisibility was required.
struct NonzeroRemainder : std::domain_error {
    using std::domain_error::domain_error;
};

/// The triple does not define a line embedding (pairwise gcd > 1 and no unit).
struct NotAnEmbedding : std::domain_error {
    using std::domain_error::domain_error;
};

/// Operation requires a coprime pair.
struct NotCoprime : std::domain_error {
    using std::domain_error::domain_error;
};

/// Angle is 0 or pi, where the sine-sign query is undefined.
struct BoundaryAngle : std::domain_error {
    using std::domain_error::domain_error;
};

/// The height polynomial takes equal values at a node's two preimages.
struct ZFailsToSeparate : std::domain_error {
    using std::domain_error::domain_error;
};

/// Gauss code is not a consistent double-occurrence code.
struct UnrealizableCode : std::domain_error {
    using std::domain_error::domain_error;
};

/// Diagram exceeds the bracket state-sum crossing cap.
struct TooManyCrossings : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// rectify_trivial called on a triple without a unit component.
struct NoUnitComponent : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace chebknots
