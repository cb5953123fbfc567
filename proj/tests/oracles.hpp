// oracles.hpp
// Independent naive reference implementations for the oracle-equivalence
// tests. Everything here works by trial division and direct loops and
// deliberately shares no code with the library.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// If n = p^k for prime p, returns p and sets k; otherwise returns 0.
inline std::uint64_t prime_power_base(std::uint64_t n, unsigned& k) {
    if (n < 2) return 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint64_t m = n;
        k = 0;
        while (m % p == 0) { m /= p; ++k; }
        return m == 1 ? p : 0;
    }
    k = 1;
    return n;  // n itself prime
}

// Cumulative tables over integer arguments: value[n] is the sum/product
// at x = n. Index 0 and 1 hold the empty value.
struct Tables {
    std::vector<double> psi;
    std::vector<double> big_psi;
    std::vector<double> mertens;
    std::vector<double> s1, s2, s3;
    std::vector<std::uint64_t> pi;
};

inline Tables build_tables(std::uint64_t limit) {
    Tables t;
    t.psi.assign(limit + 1, 0.0);
    t.big_psi.assign(limit + 1, 0.0);
    t.mertens.assign(limit + 1, 1.0);
    t.s1.assign(limit + 1, 0.0);
    t.s2.assign(limit + 1, 0.0);
    t.s3.assign(limit + 1, 0.0);
    t.pi.assign(limit + 1, 0);
    for (std::uint64_t n = 2; n <= limit; ++n) {
        t.psi[n] = t.psi[n - 1];
        t.big_psi[n] = t.big_psi[n - 1];
        t.mertens[n] = t.mertens[n - 1];
        t.s1[n] = t.s1[n - 1];
        t.s2[n] = t.s2[n - 1];
        t.s3[n] = t.s3[n - 1];
        t.pi[n] = t.pi[n - 1];
        unsigned k = 0;
        std::uint64_t p = prime_power_base(n, k);
        if (p == 0) continue;
        double pd = static_cast<double>(p);
        t.psi[n] += std::log(pd);
        t.big_psi[n] += 1.0 / (static_cast<double>(k) * static_cast<double>(n));
        if (k == 1) {
            double lp = std::log(pd);
            t.mertens[n] *= 1.0 - 1.0 / pd;
            t.s1[n] += lp;
            t.s2[n] += lp / pd;
            t.s3[n] += lp / (pd * (pd - 1.0));
            t.pi[n] += 1;
        }
    }
    return t;
}

inline double zeta_truncated(std::uint64_t x, int n) {
    double prod = 1.0;
    for (std::uint64_t p = 2; p <= x; ++p) {
        if (!is_prime(p)) continue;
        prod /= 1.0 - std::pow(static_cast<double>(p), -static_cast<double>(n));
    }
    return prod;
}

// Quadratic character chi_D(p) by Euler's criterion (odd p) and the
// D mod 8 rule (p = 2); 0 at p | D.
inline int quadratic_character(long long D, std::uint64_t p) {
    long long absD = D < 0 ? -D : D;
    if (absD % static_cast<long long>(p) == 0) return 0;
    if (p == 2) {
        int m = static_cast<int>(((D % 8) + 8) % 8);
        return (m == 1 || m == 7) ? 1 : -1;
    }
    long long r = D % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    // r^((p-1)/2) mod p
    std::uint64_t base = static_cast<std::uint64_t>(r), e = (p - 1) / 2, acc = 1;
    while (e) {
        if (e & 1) acc = (unsigned __int128)(acc)*base % p;
        base = (unsigned __int128)(base)*base % p;
        e >>= 1;
    }
    return acc == 1 ? 1 : -1;
}

// Sigma(x) for the quadratic field of fundamental discriminant D:
// a(p^m) = chi_D(p)^m, so the sum is over chi values only.
inline double sigma_quadratic(long long D, double x) {
    double sum = 0.0;
    std::uint64_t cut = static_cast<std::uint64_t>(std::floor(x));
    for (std::uint64_t n = 2; n <= cut; ++n) {
        unsigned k = 0;
        std::uint64_t p = prime_power_base(n, k);
        if (p == 0) continue;
        int chi = quadratic_character(D, p);
        if (chi == 0) continue;
        double a = (k % 2 == 0) ? 1.0 : static_cast<double>(chi);
        sum += a / (static_cast<double>(k) * static_cast<double>(n));
    }
    return sum;
}

}  // namespace oracle
