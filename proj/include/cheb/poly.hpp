// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "cheb/errors.hpp"

namespace chebknots {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient index equals the exponent; trailing zeros are trimmed, so the
/// highest stored coefficient of a nonzero polynomial is nonzero. The zero
/// polynomial stores no coefficients and its degree is the sentinel
/// `kDegreeNegInf`, never an ordinary integer.
class ExactPoly {
public:
    static constexpr long kDegreeNegInf = std::numeric_limits<long>::min();

    ExactPoly() = default;
    explicit ExactPoly(std::vector<mpq_class> coeffs);
    ExactPoly(std::initializer_list<mpq_class> coeffs);

    static ExactPoly zero() { return ExactPoly(); }
    static ExactPoly constant(const mpq_class& c);
    /// The monomial c * t^n.
    static ExactPoly monomial(const mpq_class& c, std::size_t n);
    /// The identity polynomial t.
    static ExactPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or kDegreeNegInf for the zero polynomial.
    long degree() const {
        return coeffs_.empty() ? kDegreeNegInf
                               : static_cast<long>(coeffs_.size()) - 1;
    }
    /// Coefficient of t^n (zero beyond the stored range).
    const mpq_class& coeff(std::size_t n) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    const mpq_class& leading_coeff() const;

    bool integral() const; // all denominators are 1

    bool operator==(const ExactPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const ExactPoly& rhs) const = default;

    ExactPoly operator-() const;

    /// Human-readable form, e.g. "4t^3 - 3t".
    std::string str() const;

private:
    std::vector<mpq_class> coeffs_;
    void trim();
};

ExactPoly add(const ExactPoly& p, const ExactPoly& q);
ExactPoly sub(const ExactPoly& p, const ExactPoly& q);
ExactPoly mul(const ExactPoly& p, const ExactPoly& q);
ExactPoly mul(const mpq_class& c, const ExactPoly& p);

inline ExactPoly operator+(const ExactPoly& p, const ExactPoly& q) { return add(p, q); }
inline ExactPoly operator-(const ExactPoly& p, const ExactPoly& q) { return sub(p, q); }
inline ExactPoly operator*(const ExactPoly& p, const ExactPoly& q) { return mul(p, q); }
inline ExactPoly operator*(const mpq_class& c, const ExactPoly& p) { return mul(c, p); }

/// Composition p(q), by Horner evaluation in the polynomial ring.
ExactPoly compose(const ExactPoly& p, const ExactPoly& q);

/// Formal derivative.
ExactPoly derivative(const ExactPoly& p);

/// Exact quotient p / q over the rationals.
/// Throws NonzeroRemainder when q does not divide p; that signals a violated
/// divisibility claim in the caller, never a rounding issue.
ExactPoly exact_div(const ExactPoly& p, const ExactPoly& q);

/// Exact evaluation at a rational point.
mpq_class eval_rational(const ExactPoly& p, const mpq_class& x);

/// Chebyshev polynomial of the first kind T_n, by the three-term recurrence
/// T_{n+1} = 2t T_n - T_{n-1}. Memoized per process; thread-safe.
ExactPoly cheb_t(unsigned n);

/// Chebyshev polynomial of the second kind U_n (n >= -1, U_{-1} = 0).
ExactPoly cheb_u(long n);

/// Monic integer Chebyshev polynomial 2 T_n(t/2), n >= 1.
ExactPoly monic_cheb(unsigned n);

/// T_n composed with q, computed by the composition ladder
/// T_{2m} = 2 T_m^2 - 1, T_{2m+1} = 2 T_m T_{m+1} - t. Equals
/// compose(cheb_t(n), q) but avoids the long Horner chain for large n.
ExactPoly cheb_compose(unsigned n, const ExactPoly& q);

/// JSON form {"coeffs": [["num","den"], ...]}, index = exponent.
std::string poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const std::string& text);

} // namespace chebknots
