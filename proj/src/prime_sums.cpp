// prime_sums.cpp

#include "kappa/prime_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace kappa {

namespace {

std::uint64_t checked_cutoff(const PrimeTable& table, double x, double min_x,
                             const char* op) {
    if (!(x >= min_x))
        throw std::domain_error(std::string(op) + ": x below domain");
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range(std::string(op) + ": x exceeds table limit");
    return inclusive_floor(x);
}

// Accumulation strategies shared by all sums. Plain double, Neumaier
// compensated, or interval; terms are produced as exact-input lambdas so
// the interval strategy can widen from integer data.
template <class Term>
double accumulate_double(const PrimeTable& table, std::uint64_t cut,
                         const PrecisionPolicy& policy, bool prime_powers,
                         Term&& term) {
    if (policy.mode == Mode::FastFloat) {
        double s = 0.0;
        if (prime_powers)
            table.for_each_prime_power(cut, [&](std::uint64_t p, unsigned k,
                                                std::uint64_t pk) { s += term(p, k, pk); });
        else
            table.for_each_prime(cut, [&](std::uint64_t p) { s += term(p, 1u, p); });
        return s;
    }
    NeumaierSum s;
    if (prime_powers)
        table.for_each_prime_power(cut, [&](std::uint64_t p, unsigned k,
                                            std::uint64_t pk) { s.add(term(p, k, pk)); });
    else
        table.for_each_prime(cut, [&](std::uint64_t p) { s.add(term(p, 1u, p)); });
    return s.value();
}

template <class Term>
Interval accumulate_interval(const PrimeTable& table, std::uint64_t cut,
                             bool prime_powers, Term&& term) {
    Interval s(0.0);
    if (prime_powers)
        table.for_each_prime_power(
            cut, [&](std::uint64_t p, unsigned k, std::uint64_t pk) {
                s = s + term(p, k, pk);
            });
    else
        table.for_each_prime(cut,
                             [&](std::uint64_t p) { s = s + term(p, 1u, p); });
    return s;
}

// p^-n as a double expression; exact integer power while it fits.
double inv_prime_power(std::uint64_t p, int n) {
    double pd = static_cast<double>(p);
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= pd;
    return 1.0 / r;
}

}  // namespace

double psi(const PrimeTable& table, double x, const PrecisionPolicy& policy) {
    if (!(x > 0))
        throw std::domain_error("psi: x must be positive");
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range("psi: x exceeds table limit");
    std::uint64_t cut = inclusive_floor(x);
    if (cut < 2) return 0.0;
    return accumulate_double(table, cut, policy, true,
                             [](std::uint64_t p, unsigned, std::uint64_t) {
                                 return std::log(static_cast<double>(p));
                             });
}

Interval psi_enclosure(const PrimeTable& table, double x) {
    if (!(x > 0))
        throw std::domain_error("psi: x must be positive");
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range("psi: x exceeds table limit");
    std::uint64_t cut = inclusive_floor(x);
    if (cut < 2) return Interval(0.0);
    return accumulate_interval(table, cut, true,
                               [](std::uint64_t p, unsigned, std::uint64_t) {
                                   return log(Interval(static_cast<double>(p)));
                               });
}

double big_psi(const PrimeTable& table, double x, const PrecisionPolicy& policy) {
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "big_psi");
    return accumulate_double(table, cut, policy, true,
                             [](std::uint64_t, unsigned k, std::uint64_t pk) {
                                 return 1.0 / (static_cast<double>(k) *
                                               static_cast<double>(pk));
                             });
}

Interval big_psi_enclosure(const PrimeTable& table, double x) {
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "big_psi");
    return accumulate_interval(
        table, cut, true, [](std::uint64_t, unsigned k, std::uint64_t pk) {
            return 1.0 / Interval(static_cast<double>(k) * static_cast<double>(pk));
        });
}

double mertens_product(const PrimeTable& table, double x,
                       const PrecisionPolicy& policy) {
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "mertens_product");
    // Accumulate sum of ln(1 - 1/p); exact summation order, ascending p.
    double s = accumulate_double(table, cut, policy, false,
                                 [](std::uint64_t p, unsigned, std::uint64_t) {
                                     return std::log1p(-1.0 / static_cast<double>(p));
                                 });
    return std::exp(s);
}

Interval mertens_product_enclosure(const PrimeTable& table, double x) {
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "mertens_product");
    Interval s = accumulate_interval(
        table, cut, false, [](std::uint64_t p, unsigned, std::uint64_t) {
            return log1p(-1.0 / Interval(static_cast<double>(p)));
        });
    return exp(s);
}

double zeta_truncated_product(const PrimeTable& table, double x, int n,
                              const PrecisionPolicy& policy) {
    if (n < 2)
        throw std::domain_error("zeta_truncated_product: n must be >= 2");
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "zeta_truncated_product");
    double s = accumulate_double(table, cut, policy, false,
                                 [n](std::uint64_t p, unsigned, std::uint64_t) {
                                     return -std::log1p(-inv_prime_power(p, n));
                                 });
    return std::exp(s);
}

Interval zeta_truncated_product_enclosure(const PrimeTable& table, double x,
                                          int n) {
    if (n < 2)
        throw std::domain_error("zeta_truncated_product: n must be >= 2");
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "zeta_truncated_product");
    Interval s = accumulate_interval(
        table, cut, false, [n](std::uint64_t p, unsigned, std::uint64_t) {
            Interval pd(static_cast<double>(p));
            Interval inv = 1.0 / pow(pd, static_cast<double>(n));
            return -log1p(-inv);
        });
    return exp(s);
}

PrimeLogSums prime_log_sums(const PrimeTable& table, double x,
                            const PrecisionPolicy& policy) {
    std::uint64_t cut = checked_cutoff(table, x, 2.0, "prime_log_sums");
    if (policy.mode == Mode::FastFloat) {
        double s1 = 0, s2 = 0, s3 = 0;
        table.for_each_prime(cut, [&](std::uint64_t p) {
            double pd = static_cast<double>(p);
            double lp = std::log(pd);
            s1 += lp;
            s2 += lp / pd;
            s3 += lp / (pd * (pd - 1.0));
        });
        return {s1, s2, s3};
    }
    NeumaierSum s1, s2, s3;
    table.for_each_prime(cut, [&](std::uint64_t p) {
        double pd = static_cast<double>(p);
        double lp = std::log(pd);
        s1.add(lp);
        s2.add(lp / pd);
        s3.add(lp / (pd * (pd - 1.0)));
    });
    return {s1.value(), s2.value(), s3.value()};
}

std::uint64_t pi_count(const PrimeTable& table, double x) {
    if (!(x >= 0))
        throw std::domain_error("pi_count: x must be >= 0");
    return table.pi(x);
}

}  // namespace kappa
