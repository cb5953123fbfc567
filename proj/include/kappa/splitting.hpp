// splitting.hpp
// Prime-splitting data of a number field read off its defining polynomial,
// the coefficients a(p^k) of the degree-(n-1) factor of its zeta quotient,
// and the truncated logarithmic sum Sigma(x) built from them.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kappa/precision.hpp"
#include "kappa/prime_table.hpp"

namespace kappa {

// Monic integer polynomial, coefficients constant-first, degree >= 2.
// Irreducibility is an input contract; construction spot-checks it with a
// rational-root test (monic => any rational root is an integer dividing
// the constant term).
class DefiningPolynomial {
public:
    explicit DefiningPolynomial(std::vector<long long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

private:
    std::vector<long long> coeffs_;
};

// Residue degrees of the primes above p. `trusted` is false when f mod p
// is not squarefree (p may divide the index), in which case `degrees` is
// empty and a user-supplied decomposition is required.
struct SplittingProfile {
    std::uint64_t p = 0;
    std::vector<int> degrees;
    bool trusted = false;
};

// User-supplied residue degrees for a prime where the polynomial cannot be
// trusted (p ramified or dividing the index). Sourced from field tables.
struct BadPrimeDecomposition {
    std::uint64_t p = 0;
    std::vector<int> degrees;
};

// Raised when Sigma(x) (or a coefficient query) meets a prime whose
// profile is untrusted and no decomposition was supplied.
class BadPrimeError : public std::runtime_error {
public:
    explicit BadPrimeError(std::vector<std::uint64_t> primes);
    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    std::vector<std::uint64_t> primes_;
};

// Factor degrees of f mod p via distinct-degree factorization.
// Throws std::invalid_argument if p is not prime.
SplittingProfile degree_profile(const DefiningPolynomial& f, std::uint64_t p);

// a(p^m) = (sum of residue degrees dividing m) - 1; value in [-1, n-1].
int a_rho(const SplittingProfile& profile, unsigned m);
int a_rho(const BadPrimeDecomposition& decomposition, unsigned m);

// Sigma(x) = sum over prime powers p^m <= x of a(p^m)/(m p^m).
// `bad` supplies decompositions for primes the polynomial cannot decide;
// a missing one raises BadPrimeError listing every offending prime <= x.
double sigma(const DefiningPolynomial& f,
             const std::vector<BadPrimeDecomposition>& bad,
             const PrimeTable& table, double x,
             const PrecisionPolicy& policy = {});

}  // namespace kappa
