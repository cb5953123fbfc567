// prime_sums.hpp
// Exact finite sums and products over primes and prime powers. Each
// operation has a policy-driven double evaluation and, where the rigorous
// sweeps need it, an interval enclosure built from exact integer inputs.

#pragma once

#include "kappa/interval.hpp"
#include "kappa/precision.hpp"
#include "kappa/prime_table.hpp"

namespace kappa {

// psi(x) = sum over prime powers p^k <= x of ln p.
double psi(const PrimeTable& table, double x, const PrecisionPolicy& policy = {});
Interval psi_enclosure(const PrimeTable& table, double x);

// big_psi(x) = sum over prime powers p^k <= x of 1/(k p^k)
//            = sum_{n <= x} Lambda(n)/(n ln n).   Requires x >= 2.
double big_psi(const PrimeTable& table, double x, const PrecisionPolicy& policy = {});
Interval big_psi_enclosure(const PrimeTable& table, double x);

// prod_{p <= x} (1 - 1/p). Nonincreasing in x. Requires x >= 2.
double mertens_product(const PrimeTable& table, double x,
                       const PrecisionPolicy& policy = {});
Interval mertens_product_enclosure(const PrimeTable& table, double x);

// prod_{p <= x} (1 - p^-n)^-1 for n >= 2; value in (1, zeta(n)].
double zeta_truncated_product(const PrimeTable& table, double x, int n,
                              const PrecisionPolicy& policy = {});
Interval zeta_truncated_product_enclosure(const PrimeTable& table, double x, int n);

struct PrimeLogSums {
    double sum_log;            // sum_{p<=x} ln p
    double sum_log_over_p;     // sum_{p<=x} ln p / p
    double sum_log_over_p2;    // sum_{p<=x} ln p / (p(p-1))
};

// The three partial sums behind sum_{p<=x} ln p/(1 - 1/p). Requires x >= 2.
PrimeLogSums prime_log_sums(const PrimeTable& table, double x,
                            const PrecisionPolicy& policy = {});

// #{p <= x}; x >= 0.
std::uint64_t pi_count(const PrimeTable& table, double x);

}  // namespace kappa
