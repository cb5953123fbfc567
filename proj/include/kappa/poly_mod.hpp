// poly_mod.hpp
// Dense univariate polynomial arithmetic over F_p for machine-word primes
// (p < 2^63). Only what distinct-degree factorization needs: mul/rem,
// gcd, derivative, and x^e mod f by repeated squaring.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace kappa {

namespace fp {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a % p, p - 2, p);  // p prime
}

}  // namespace fp

// Coefficients ascending (c[i] is the x^i coefficient), normalized so the
// leading coefficient is nonzero; the zero polynomial has empty c.
struct PolyMod {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
};

PolyMod poly_from_int_coeffs(const std::vector<long long>& coeffs, std::uint64_t p);
PolyMod poly_mul(const PolyMod& a, const PolyMod& b);
PolyMod poly_rem(PolyMod a, const PolyMod& m);
PolyMod poly_gcd(PolyMod a, PolyMod b);          // monic gcd
PolyMod poly_derivative(const PolyMod& a);
PolyMod poly_make_monic(PolyMod a);
// x^e mod m  (m with degree >= 1)
PolyMod poly_xpow_mod(std::uint64_t e, const PolyMod& m);
// a^e mod m
PolyMod poly_pow_mod(PolyMod a, std::uint64_t e, const PolyMod& m);
PolyMod poly_divexact(const PolyMod& a, const PolyMod& b);

// Degrees (with multiplicity) of the irreducible factors of f mod p,
// or nullopt when f mod p is not squarefree (gcd(f, f') != 1).
std::optional<std::vector<int>> distinct_degree_profile(
    const std::vector<long long>& coeffs, std::uint64_t p);

}  // namespace kappa
