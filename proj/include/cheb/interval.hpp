// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cheb/geometry.hpp"
#include "cheb/poly.hpp"

namespace chebknots {

/// Certified sign of sin(i a) sin(j b) - sin(j a) sin(i b) for angles
/// a = ka*pi/N, b = kb*pi/N. This is the tangent determinant of (T_i, T_j)
/// at a node, up to the positive factor i*j / (sin a sin b). Evaluated by
/// interval arithmetic with precision doubling from 64 bits; throws
/// std::logic_error if the sign cannot be separated from zero (only
/// possible when the value is exactly zero, excluded by transversality).
int tangent_det_sign(long i, long j, long ka, long kb, long N);

/// Certified comparison of z(cos a) and z(cos b): +1 if greater, -1 if
/// less. Throws ZFailsToSeparate when the values cannot be separated
/// within the precision cap (in particular when they are equal).
int compare_poly_at_angles(const ExactPoly& z, const AngleCos& a, const AngleCos& b);

} // namespace chebknots
