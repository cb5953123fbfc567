// poly_mod.cpp

#include "kappa/poly_mod.hpp"

#include <algorithm>
#include <stdexcept>

namespace kappa {

namespace fp {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

}  // namespace fp

void PolyMod::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyMod poly_from_int_coeffs(const std::vector<long long>& coeffs,
                             std::uint64_t p) {
    PolyMod f;
    f.p = p;
    f.c.reserve(coeffs.size());
    for (long long v : coeffs) {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        f.c.push_back(static_cast<std::uint64_t>(r));
    }
    f.normalize();
    return f;
}

PolyMod poly_mul(const PolyMod& a, const PolyMod& b) {
    PolyMod r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            r.c[i + j] = (r.c[i + j] + fp::mulmod(a.c[i], b.c[j], a.p)) % a.p;
        }
    }
    r.normalize();
    return r;
}

PolyMod poly_rem(PolyMod a, const PolyMod& m) {
    if (m.is_zero()) throw std::invalid_argument("poly_rem: zero modulus");
    std::uint64_t p = m.p;
    std::uint64_t lead_inv = fp::invmod(m.c.back(), p);
    while (a.degree() >= m.degree()) {
        std::uint64_t q = fp::mulmod(a.c.back(), lead_inv, p);
        std::size_t shift = a.c.size() - m.c.size();
        for (std::size_t i = 0; i < m.c.size(); ++i) {
            std::uint64_t sub = fp::mulmod(q, m.c[i], p);
            std::uint64_t& tgt = a.c[shift + i];
            tgt = (tgt >= sub) ? tgt - sub : tgt + p - sub;
        }
        a.normalize();
    }
    return a;
}

PolyMod poly_make_monic(PolyMod a) {
    if (a.is_zero()) return a;
    std::uint64_t inv = fp::invmod(a.c.back(), a.p);
    for (auto& v : a.c) v = fp::mulmod(v, inv, a.p);
    return a;
}

PolyMod poly_gcd(PolyMod a, PolyMod b) {
    while (!b.is_zero()) {
        PolyMod r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(std::move(a));
}

PolyMod poly_derivative(const PolyMod& a) {
    PolyMod d;
    d.p = a.p;
    for (std::size_t i = 1; i < a.c.size(); ++i)
        d.c.push_back(fp::mulmod(a.c[i], i % a.p, a.p));
    d.normalize();
    return d;
}

PolyMod poly_pow_mod(PolyMod a, std::uint64_t e, const PolyMod& m) {
    PolyMod r;
    r.p = m.p;
    r.c = {1 % m.p};
    r.normalize();
    a = poly_rem(std::move(a), m);
    while (e) {
        if (e & 1) r = poly_rem(poly_mul(r, a), m);
        a = poly_rem(poly_mul(a, a), m);
        e >>= 1;
    }
    return r;
}

PolyMod poly_xpow_mod(std::uint64_t e, const PolyMod& m) {
    PolyMod x;
    x.p = m.p;
    x.c = {0, 1};
    x.normalize();
    return poly_pow_mod(std::move(x), e, m);
}

PolyMod poly_divexact(const PolyMod& a, const PolyMod& b) {
    // Division known to be exact: synthetic long division, checking the
    // remainder vanishes.
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: zero divisor");
    PolyMod rem = a;
    PolyMod q;
    q.p = a.p;
    if (rem.degree() < b.degree()) {
        if (!rem.is_zero()) throw std::logic_error("poly_divexact: not divisible");
        return q;
    }
    q.c.assign(rem.c.size() - b.c.size() + 1, 0);
    std::uint64_t lead_inv = fp::invmod(b.c.back(), b.p);
    while (rem.degree() >= b.degree()) {
        std::uint64_t qc = fp::mulmod(rem.c.back(), lead_inv, b.p);
        std::size_t shift = rem.c.size() - b.c.size();
        q.c[shift] = qc;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::uint64_t sub = fp::mulmod(qc, b.c[i], b.p);
            std::uint64_t& tgt = rem.c[shift + i];
            tgt = (tgt >= sub) ? tgt - sub : tgt + b.p - sub;
        }
        rem.normalize();
    }
    if (!rem.is_zero()) throw std::logic_error("poly_divexact: not divisible");
    q.normalize();
    return q;
}

std::optional<std::vector<int>> distinct_degree_profile(
    const std::vector<long long>& coeffs, std::uint64_t p) {
    PolyMod f = poly_from_int_coeffs(coeffs, p);
    // Monic input polynomials stay monic mod p, so the degree never drops.
    PolyMod d = poly_derivative(f);
    PolyMod g = poly_gcd(f, d);
    if (g.degree() != 0) return std::nullopt;  // not squarefree (or f' = 0)

    std::vector<int> degrees;
    PolyMod remaining = poly_make_monic(f);
    // h tracks x^(p^i) mod remaining.
    PolyMod h;
    h.p = p;
    h.c = {0, 1};
    h.normalize();
    h = poly_rem(std::move(h), remaining);
    int i = 0;
    while (2 * (i + 1) <= remaining.degree()) {
        ++i;
        h = poly_pow_mod(std::move(h), p, remaining);
        // gcd(remaining, h - x) collects all irreducible factors of degree i.
        PolyMod hx = h;
        if (hx.c.size() < 2) hx.c.resize(2, 0);
        hx.c[1] = (hx.c[1] + p - 1) % p;
        hx.normalize();
        PolyMod gi = poly_gcd(remaining, hx);
        if (gi.degree() > 0) {
            for (int m = 0; m < gi.degree() / i; ++m) degrees.push_back(i);
            remaining = poly_divexact(remaining, gi);
            h = poly_rem(std::move(h), remaining);
        }
    }
    if (remaining.degree() > 0) degrees.push_back(remaining.degree());
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace kappa
