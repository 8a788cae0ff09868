// Copyright 2026 the chebknots authors
// SPDX-License-Identifier: Apache-2.0

#include "cheb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cheb/errors.hpp"

namespace chebknots {

double AngleCos::approx() const {
    return std::cos(static_cast<double>(k) * M_PI / static_cast<double>(N));
}

std::string AngleCos::str() const {
    std::ostringstream out;
    out << "cos(" << k << "pi/" << N << ")";
    return out.str();
}

AngleCos cheb_eval_angle(long n, const AngleCos& a) {
    return AngleCos::make(n * a.k, a.N);
}

int sin_multiple_sign(long n, const AngleCos& a) {
    if (a.k <= 0 || a.k >= a.N)
        throw BoundaryAngle("sin_multiple_sign: angle " + a.str() + " is a multiple of pi");
    const long two_n = 2 * a.N;
    const long r = ((n * a.k) % two_n + two_n) % two_n;
    if (r == 0 || r == a.N) return 0;
    return r < a.N ? 1 : -1;
}

namespace {

void require_coprime_pair(const char* who, long i, long j) {
    if (i < 2 || i >= j || std::gcd(i, j) != 1)
        throw NotCoprime(std::string(who) + ": needs coprime 2 <= i < j");
}

// Minimal-|v| solution of i*u + j*v = 1.
std::pair<long, long> bezout_min_v(long i, long j) {
    long v = 0;
    while ((1 - j * v) % i != 0) ++v; // v = j^{-1} mod i, in [0, i-1]
    if (v > i - v) v -= i;            // fold to minimal |v|, ties positive
    return {(1 - j * v) / i, v};
}

} // namespace

std::vector<NodeData> nodes(long i, long j) {
    require_coprime_pair("nodes", i, j);
    const auto [u, v] = bezout_min_v(i, j);
    const long N = i * j;
    std::vector<NodeData> out;
    out.reserve(static_cast<std::size_t>((i - 1) * (j - 1) / 2));
    for (long lambda = 1; lambda < j; ++lambda)
        for (long mu = 1; mu < i; ++mu) {
            if ((lambda - mu) % 2 != 0) continue;
            AngleCos t1 = AngleCos::make(lambda * i * u + mu * j * v, N);
            AngleCos t2 = AngleCos::make(lambda * i * u - mu * j * v, N);
            if (t2 < t1) std::swap(t1, t2);
            out.push_back({lambda, mu, AngleCos::make(lambda, j),
                           AngleCos::make(mu, i), t1, t2});
        }
    return out;
}

std::vector<AngleCos> preimage_parameters(long i, long j) {
    require_coprime_pair("preimage_parameters", i, j);
    std::vector<AngleCos> out;
    for (long k = i * j - 1; k >= 1; --k)
        if (k % i != 0 && k % j != 0) out.push_back({k, i * j});
    return out;
}

bool check_parity(long i, long j) {
    const auto params = preimage_parameters(i, j);
    auto position = [&](const AngleCos& t) {
        const auto it = std::find(params.begin(), params.end(), t);
        return static_cast<long>(it - params.begin()); // params.size() if absent
    };
    for (const auto& n : nodes(i, j)) {
        const long p = position(n.t_low), q = position(n.t_high);
        if (p >= static_cast<long>(params.size()) ||
            q >= static_cast<long>(params.size()))
            return false;
        if ((p + q) % 2 == 0) return false;
    }
    return true;
}

ExactPoly alternating_z(long m, long n) {
    if (m < 3) throw NotCoprime("alternating_z: needs 3 <= m < n");
    require_coprime_pair("alternating_z", m, n);
    const ExactPoly f =
        exact_div(cheb_u(m * n - 1), mul(cheb_u(m - 1), cheb_u(n - 1)));
    return derivative(f);
}

std::vector<std::pair<mpq_class, mpq_class>>
curve_samples(long i, long j, std::size_t count, const mpq_class& t_min,
              const mpq_class& t_max) {
    std::vector<std::pair<mpq_class, mpq_class>> out;
    out.reserve(count);
    const ExactPoly& ti = cheb_t(static_cast<unsigned>(i));
    const ExactPoly& tj = cheb_t(static_cast<unsigned>(j));
    const mpq_class span = t_max - t_min;
    for (std::size_t s = 0; s < count; ++s) {
        mpq_class t = t_min + span * mpq_class(static_cast<long>(s),
                                               static_cast<long>(count - 1));
        t.canonicalize();
        out.emplace_back(eval_rational(ti, t), eval_rational(tj, t));
    }
    return out;
}

namespace {

nlohmann::json angle_json(const AngleCos& a) {
    return nlohmann::json{{"k", a.k}, {"N", a.N}, {"approx", a.approx()}};
}

} // namespace

std::string nodes_to_json(long i, long j, const std::vector<NodeData>& ns) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& n : ns)
        arr.push_back({{"lambda", n.lambda},
                       {"mu", n.mu},
                       {"x", angle_json(n.x)},
                       {"y", angle_json(n.y)},
                       {"t_low", angle_json(n.t_low)},
                       {"t_high", angle_json(n.t_high)}});
    return nlohmann::json{{"schema", "chebknots/nodes/v1"},
                          {"i", i},
                          {"j", j},
                          {"count", ns.size()},
                          {"nodes", arr}}
        .dump();
}

} // namespace chebknots
