// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#include "cheb/interval.hpp"

#include <stdexcept>

#include <mpfr.h>

#include "cheb/errors.hpp"

namespace chebknots {

namespace {

// Closed interval [lo, hi] with outward-rounded arithmetic at a fixed
// working precision. Small and local; only what the two sign routines need.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    Interval(const Interval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval& o) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
        return *this;
    }
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

    void set(const mpq_class& q) {
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }

    void add(const Interval& a, const Interval& b) {
        mpfr_add(lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(hi_, a.hi_, b.hi_, MPFR_RNDU);
    }
    void sub(const Interval& a, const Interval& b) {
        mpfr_sub(lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(hi_, a.hi_, b.lo_, MPFR_RNDU);
    }
    void mul(const Interval& a, const Interval& b) {
        mpfr_t c[4];
        for (auto& x : c) mpfr_init2(x, prec());
        mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDD);
        mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDD);
        mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(lo_, c[0], c[1], MPFR_RNDD);
        mpfr_min(lo_, lo_, c[2], MPFR_RNDD);
        mpfr_min(lo_, lo_, c[3], MPFR_RNDD);
        mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDU);
        mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDU);
        mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(hi_, c[0], c[1], MPFR_RNDU);
        mpfr_max(hi_, hi_, c[2], MPFR_RNDU);
        mpfr_max(hi_, hi_, c[3], MPFR_RNDU);
        for (auto& x : c) mpfr_clear(x);
    }

    // Enclosure of sin(k*pi/N). Sin is not monotone, so rather than mapping
    // endpoints we evaluate at the rounded-down argument and widen by the
    // argument interval width (|sin' | <= 1).
    void sin_pi_ratio(long k, long N) {
        const mpfr_prec_t p = prec();
        mpfr_t pi_lo, pi_hi, arg_lo, arg_hi, width;
        mpfr_inits2(p, pi_lo, pi_hi, arg_lo, arg_hi, width, (mpfr_ptr) nullptr);
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        // Reduce k mod 2N first so the argument stays small.
        long m = ((k % (2 * N)) + 2 * N) % (2 * N);
        mpfr_mul_si(arg_lo, pi_lo, m, MPFR_RNDD);
        mpfr_div_si(arg_lo, arg_lo, N, MPFR_RNDD);
        mpfr_mul_si(arg_hi, pi_hi, m, MPFR_RNDU);
        mpfr_div_si(arg_hi, arg_hi, N, MPFR_RNDU);
        mpfr_sub(width, arg_hi, arg_lo, MPFR_RNDU);
        mpfr_sin(lo_, arg_lo, MPFR_RNDD);
        mpfr_sin(hi_, arg_lo, MPFR_RNDU);
        mpfr_sub(lo_, lo_, width, MPFR_RNDD);
        mpfr_add(hi_, hi_, width, MPFR_RNDU);
        mpfr_clears(pi_lo, pi_hi, arg_lo, arg_hi, width, (mpfr_ptr) nullptr);
    }

    // +1 / -1 if the whole interval is on one side of zero, 0 if straddling.
    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;
    }

    int cmp(const Interval& o) const {
        if (mpfr_cmp(hi_, o.lo_) < 0) return -1;
        if (mpfr_cmp(lo_, o.hi_) > 0) return 1;
        return 0;
    }

  private:
    mpfr_t lo_, hi_;
};

constexpr mpfr_prec_t kSeedPrec = 64;
constexpr mpfr_prec_t kPrecCap = 8192;

} // namespace

int tangent_det_sign(long i, long j, long ka, long kb, long N) {
    for (mpfr_prec_t p = kSeedPrec; p <= kPrecCap; p *= 2) {
        Interval sa(p), sb(p), sc(p), sd(p), m1(p), m2(p), det(p);
        sa.sin_pi_ratio(i * ka, N);
        sb.sin_pi_ratio(j * kb, N);
        sc.sin_pi_ratio(j * ka, N);
        sd.sin_pi_ratio(i * kb, N);
        m1.mul(sa, sb);
        m2.mul(sc, sd);
        det.sub(m1, m2);
        if (const int s = det.sign(); s != 0) return s;
    }
    throw std::logic_error("tangent_det_sign: could not separate from zero");
}

namespace {

// Enclosure of z(cos(k*pi/N)) by Horner with outward rounding.
Interval eval_at_angle(const ExactPoly& z, const AngleCos& a, mpfr_prec_t p) {
    Interval x(p);
    // cos(theta) = sin(theta + pi/2) = sin((2k+N) * pi / (2N)).
    x.sin_pi_ratio(2 * a.k + a.N, 2 * a.N);
    Interval acc(p), c(p);
    const auto& cs = z.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        Interval t(p);
        t.mul(acc, x);
        c.set(*it);
        acc.add(t, c);
    }
    return acc;
}

} // namespace

int compare_poly_at_angles(const ExactPoly& z, const AngleCos& a, const AngleCos& b) {
    for (mpfr_prec_t p = kSeedPrec; p <= kPrecCap; p *= 2) {
        const Interval va = eval_at_angle(z, a, p);
        const Interval vb = eval_at_angle(z, b, p);
        if (const int s = va.cmp(vb); s != 0) return s;
    }
    throw ZFailsToSeparate("z takes indistinguishable values at " + a.str() +
                           " and " + b.str());
}

} // namespace chebknots
