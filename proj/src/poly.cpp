// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#include "cheb/poly.hpp"

#include <algorithm>
#include <cstring>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

namespace chebknots {

namespace {
const mpq_class kZeroQ = 0;
} // namespace

ExactPoly::ExactPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

ExactPoly::ExactPoly(std::initializer_list<mpq_class> coeffs) : coeffs_(coeffs) {
    trim();
}

void ExactPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::constant(const mpq_class& c) {
    ExactPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

ExactPoly ExactPoly::monomial(const mpq_class& c, std::size_t n) {
    ExactPoly p;
    if (c != 0) {
        p.coeffs_.assign(n + 1, mpq_class(0));
        p.coeffs_[n] = c;
    }
    return p;
}

const mpq_class& ExactPoly::coeff(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : kZeroQ;
}

const mpq_class& ExactPoly::leading_coeff() const {
    if (coeffs_.empty()) return kZeroQ;
    return coeffs_.back();
}

bool ExactPoly::integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string ExactPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long e = degree(); e >= 0; --e) {
        const mpq_class& c = coeff(static_cast<std::size_t>(e));
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) out << a.get_str();
        if (e >= 1) {
            out << "t";
            if (e >= 2) out << "^" << e;
        }
    }
    return out.str();
}

ExactPoly add(const ExactPoly& p, const ExactPoly& q) {
    std::vector<mpq_class> r(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t n = 0; n < r.size(); ++n) r[n] = p.coeff(n) + q.coeff(n);
    return ExactPoly(std::move(r));
}

ExactPoly sub(const ExactPoly& p, const ExactPoly& q) {
    std::vector<mpq_class> r(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t n = 0; n < r.size(); ++n) r[n] = p.coeff(n) - q.coeff(n);
    return ExactPoly(std::move(r));
}

ExactPoly mul(const mpq_class& c, const ExactPoly& p) {
    std::vector<mpq_class> r(p.coeffs());
    for (auto& x : r) x *= c;
    return ExactPoly(std::move(r));
}

namespace {

ExactPoly mul_naive(const ExactPoly& p, const ExactPoly& q) {
    std::vector<mpq_class> r(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j)
            r[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
    return ExactPoly(std::move(r));
}

std::size_t max_coeff_bits(const ExactPoly& p) {
    std::size_t bits = 1;
    for (const auto& c : p.coeffs())
        bits = std::max(bits, mpz_sizeinbase(c.get_num().get_mpz_t(), 2));
    return bits;
}

// Pack integer coefficients into one big integer with byte-aligned slots of
// `slot_bytes` bytes: value = sum |sign-separated coeff| * 2^(8*slot_bytes*i).
// Positive and negative parts go to separate accumulators, combined by one
// subtraction, so each slot holds a nonnegative magnitude.
mpz_class pack(const ExactPoly& p, std::size_t slot_bytes) {
    const std::size_t n = p.coeffs().size();
    std::vector<unsigned char> pos(n * slot_bytes, 0), neg(n * slot_bytes, 0);
    bool has_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class& z = p.coeffs()[i].get_num();
        if (z == 0) continue;
        unsigned char* dst = (z > 0 ? pos.data() : (has_neg = true, neg.data()));
        std::size_t written = 0;
        mpz_export(dst + i * slot_bytes, &written, -1, 1, 0, 0, z.get_mpz_t());
    }
    mpz_class a, b;
    mpz_import(a.get_mpz_t(), pos.size(), -1, 1, 0, 0, pos.data());
    if (has_neg) {
        mpz_import(b.get_mpz_t(), neg.size(), -1, 1, 0, 0, neg.data());
        a -= b;
    }
    return a;
}

// Inverse of pack for a product: recover centered digits of |v| slot by slot,
// then apply the overall sign. Digits are centered into
// (-2^(S-1), 2^(S-1)) with carry propagation.
ExactPoly unpack(const mpz_class& v, std::size_t slot_bytes, std::size_t nterms) {
    const int sign = sgn(v);
    if (sign == 0) return ExactPoly();
    mpz_class mag = abs(v);
    const std::size_t bytes = nterms * slot_bytes + 16;
    std::vector<unsigned char> buf(bytes, 0);
    std::size_t written = 0;
    mpz_export(buf.data(), &written, -1, 1, 0, 0, mag.get_mpz_t());

    mpz_class half;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(8 * slot_bytes - 1));
    const mpz_class full = 2 * half;

    std::vector<mpq_class> coeffs(nterms);
    mpz_class carry = 0;
    for (std::size_t i = 0; i < nterms; ++i) {
        mpz_class d;
        mpz_import(d.get_mpz_t(), slot_bytes, -1, 1, 0, 0, buf.data() + i * slot_bytes);
        d += carry;
        if (d >= half) {
            d -= full;
            carry = 1;
        } else {
            carry = 0;
        }
        coeffs[i] = mpq_class(sign > 0 ? d : mpz_class(-d));
    }
    return ExactPoly(std::move(coeffs));
}

// Kronecker substitution: evaluate both integer polynomials at 2^(8*slot),
// multiply once in GMP, and read the product coefficients back out of the
// digit slots. Exact; the slot width is sized from coefficient bounds.
ExactPoly mul_kronecker(const ExactPoly& p, const ExactPoly& q) {
    const std::size_t terms = std::min(p.coeffs().size(), q.coeffs().size());
    std::size_t bits = max_coeff_bits(p) + max_coeff_bits(q) + 3;
    std::size_t t = terms;
    while (t > 0) {
        ++bits;
        t >>= 1;
    }
    const std::size_t slot_bytes = (bits + 7) / 8;
    const mpz_class prod = pack(p, slot_bytes) * pack(q, slot_bytes);
    return unpack(prod, slot_bytes, p.coeffs().size() + q.coeffs().size() - 1);
}

} // namespace

ExactPoly mul(const ExactPoly& p, const ExactPoly& q) {
    if (p.is_zero() || q.is_zero()) return ExactPoly();
    const std::size_t work = p.coeffs().size() * q.coeffs().size();
    if (work >= 4096 && p.integral() && q.integral()) return mul_kronecker(p, q);
    return mul_naive(p, q);
}

ExactPoly compose(const ExactPoly& p, const ExactPoly& q) {
    ExactPoly acc;
    for (long e = p.degree(); e >= 0; --e) {
        acc = mul(acc, q);
        acc = add(acc, ExactPoly::constant(p.coeff(static_cast<std::size_t>(e))));
    }
    return acc;
}

ExactPoly derivative(const ExactPoly& p) {
    if (p.coeffs().size() <= 1) return ExactPoly();
    std::vector<mpq_class> r(p.coeffs().size() - 1);
    for (std::size_t n = 1; n < p.coeffs().size(); ++n)
        r[n - 1] = mpq_class(static_cast<long>(n)) * p.coeffs()[n];
    return ExactPoly(std::move(r));
}

ExactPoly exact_div(const ExactPoly& p, const ExactPoly& q) {
    if (q.is_zero()) throw NonzeroRemainder("exact_div: division by zero polynomial");
    if (p.is_zero()) return ExactPoly();
    if (p.degree() < q.degree())
        throw NonzeroRemainder("exact_div: divisor degree exceeds dividend degree");
    std::vector<mpq_class> rem(p.coeffs());
    const long dq = q.degree();
    std::vector<mpq_class> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
    for (long e = p.degree(); e >= dq; --e) {
        mpq_class c = rem[static_cast<std::size_t>(e)] / q.leading_coeff();
        quot[static_cast<std::size_t>(e - dq)] = c;
        if (c == 0) continue;
        for (long k = 0; k <= dq; ++k)
            rem[static_cast<std::size_t>(e - dq + k)] -= c * q.coeff(static_cast<std::size_t>(k));
    }
    for (const auto& c : rem)
        if (c != 0) throw NonzeroRemainder("exact_div: nonzero remainder");
    return ExactPoly(std::move(quot));
}

mpq_class eval_rational(const ExactPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (long e = p.degree(); e >= 0; --e) {
        acc *= x;
        acc += p.coeff(static_cast<std::size_t>(e));
    }
    return acc;
}

namespace {

std::mutex g_cheb_mutex;
std::vector<ExactPoly> g_cheb_t; // g_cheb_t[n] = T_n
std::vector<ExactPoly> g_cheb_u; // g_cheb_u[n] = U_n

void extend_cheb_tables(std::size_t n) {
    if (g_cheb_t.empty()) {
        g_cheb_t = {ExactPoly::constant(1), ExactPoly::variable()};
        g_cheb_u = {ExactPoly::constant(1), ExactPoly({0, 2})};
    }
    const ExactPoly two_t({0, 2});
    while (g_cheb_t.size() <= n) {
        const std::size_t m = g_cheb_t.size();
        g_cheb_t.push_back(sub(mul(two_t, g_cheb_t[m - 1]), g_cheb_t[m - 2]));
        g_cheb_u.push_back(sub(mul(two_t, g_cheb_u[m - 1]), g_cheb_u[m - 2]));
    }
}

} // namespace

ExactPoly cheb_t(unsigned n) {
    std::lock_guard<std::mutex> lock(g_cheb_mutex);
    extend_cheb_tables(n);
    return g_cheb_t[n];
}

ExactPoly cheb_u(long n) {
    if (n < -1) throw std::domain_error("cheb_u: index below -1");
    if (n == -1) return ExactPoly();
    std::lock_guard<std::mutex> lock(g_cheb_mutex);
    extend_cheb_tables(static_cast<std::size_t>(n));
    return g_cheb_u[static_cast<std::size_t>(n)];
}

ExactPoly monic_cheb(unsigned n) {
    if (n < 1) throw std::domain_error("monic_cheb: index must be positive");
    // 2 T_n(t/2): scale coefficient of t^k by 2^(1-k).
    ExactPoly tn = cheb_t(n);
    std::vector<mpq_class> r(tn.coeffs());
    mpq_class scale = 2;
    for (auto& c : r) {
        c *= scale;
        scale /= 2;
    }
    return ExactPoly(std::move(r));
}

ExactPoly cheb_compose(unsigned n, const ExactPoly& q) {
    if (n == 0) return ExactPoly::constant(1);
    ExactPoly a = ExactPoly::constant(1); // T_m(q)
    ExactPoly b = q;                      // T_{m+1}(q)
    const mpq_class two = 2;
    bool started = false;
    for (int bit = 31; bit >= 0; --bit) {
        const bool set = (n >> bit) & 1u;
        if (!started) {
            if (set) started = true; // skip leading zeros; MSB maps m: 0 -> 1
            if (set && bit == 0) return b;
            if (set) {
                // after consuming the MSB, (a, b) should describe m = 1
                a = q;
                b = sub(mul(two, mul(q, q)), ExactPoly::constant(1));
            }
            continue;
        }
        if (set) {
            a = sub(mul(two, mul(a, b)), q);                  // T_{2m+1}
            b = sub(mul(two, mul(b, b)), ExactPoly::constant(1)); // T_{2m+2}
        } else {
            b = sub(mul(two, mul(a, b)), q);                  // T_{2m+1}
            a = sub(mul(two, mul(a, a)), ExactPoly::constant(1)); // T_{2m}
        }
        if (bit == 0) return a;
    }
    return a;
}

std::string poly_to_json(const ExactPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    return nlohmann::json{{"coeffs", coeffs}}.dump();
}

ExactPoly poly_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<mpq_class> coeffs;
    for (const auto& pair : j.at("coeffs")) {
        mpq_class c(mpz_class(pair.at(0).get<std::string>()),
                    mpz_class(pair.at(1).get<std::string>()));
        c.canonicalize();
        coeffs.push_back(c);
    }
    return ExactPoly(std::move(coeffs));
}

} // namespace chebknots
