// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cheb/diagram.hpp"

namespace chebknots {

/// Integer Laurent polynomial in one variable; no zero coefficients stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    static LaurentPoly term(const mpz_class& coef, long exp);
    static LaurentPoly one() { return term(1, 0); }

    const std::map<long, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const mpz_class& coef, long exp);

    /// Difference between largest and smallest exponent; 0 for constants.
    long span() const;
    mpz_class eval_at(long x) const;
    /// x -> 1/x, the mirror image on Jones polynomials.
    LaurentPoly mirrored() const;

    bool operator==(const LaurentPoly&) const = default;
    std::string str(const std::string& var) const;

  private:
    std::map<long, mpz_class> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);

inline constexpr long kDefaultCrossingCap = 24;

/// Kauffman bracket state sum in the variable A, empty diagram -> 1.
/// Throws TooManyCrossings above the cap.
LaurentPoly kauffman_bracket(const PDCode& pd, long cap = kDefaultCrossingCap);

/// Writhe recovered from a PD code whose arcs are numbered consecutively
/// along the traversal (true for all codes produced by this library).
long pd_writhe(const PDCode& pd);

/// Jones polynomial in the quarter-power variable x = t^{1/4}:
/// (-A)^{-3w} times the bracket, re-expressed via t = A^{-4}. For knots all
/// exponents are divisible by 4.
LaurentPoly jones(const PDCode& pd, long cap = kDefaultCrossingCap);
LaurentPoly jones(const SignedGaussCode& g, long cap = kDefaultCrossingCap);

/// Standard q-crossing diagram of the (2, q) torus knot, q odd >= 3.
PDCode standard_torus_pd(long q);

/// Reduced alternating diagram of the two-bridge knot with fraction p/q,
/// p odd, 0 < q < p, gcd(p, q) = 1, built from the continued fraction of
/// p/q as a twist-region tangle with numerator closure.
PDCode rational_pd(long p, long q);

struct KnotRecord {
    std::string name;
    long crossing_number = 0;
    LaurentPoly jones; // in x = t^{1/4}
};

/// Reference knots: every Jones value is computed at startup from an
/// explicitly constructed diagram, not transcribed.
const std::vector<KnotRecord>& knot_table();

struct Identification {
    KnotRecord record;
    bool mirror_matched = false;
};

/// Table lookup of a Jones value, up to mirror image.
std::optional<Identification> identify(const LaurentPoly& v);

std::string laurent_to_json(const LaurentPoly& p);
std::string identification_to_json(const std::optional<Identification>& id);

} // namespace chebknots
