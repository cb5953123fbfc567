// splitting.cpp

#include "kappa/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kappa/poly_mod.hpp"

namespace kappa {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (a % n == 0) continue;
        std::uint64_t x = fp::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = fp::mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// Evaluates f at an integer argument, saturating on overflow (a saturated
// value is never zero, which is all the rational-root test needs).
bool is_integer_root(const std::vector<long long>& c, long long r) {
    __int128 acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * r + c[i];
        if (acc > static_cast<__int128>(1) << 100 ||
            acc < -(static_cast<__int128>(1) << 100))
            return false;
    }
    return acc == 0;
}

}  // namespace

DefiningPolynomial::DefiningPolynomial(std::vector<long long> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 3)
        throw std::invalid_argument("DefiningPolynomial: degree must be >= 2");
    if (coeffs_.back() != 1)
        throw std::invalid_argument("DefiningPolynomial: polynomial must be monic");
    long long a0 = coeffs_.front();
    if (a0 == 0)
        throw std::invalid_argument("DefiningPolynomial: reducible (root at 0)");
    // Rational-root spot check: integer roots divide the constant term.
    long long bound = std::llabs(a0);
    for (long long d = 1; d * d <= bound; ++d) {
        if (bound % d != 0) continue;
        for (long long r : {d, -d, bound / d, -(bound / d)}) {
            if (is_integer_root(coeffs_, r))
                throw std::invalid_argument(
                    "DefiningPolynomial: reducible (integer root found)");
        }
    }
}

BadPrimeError::BadPrimeError(std::vector<std::uint64_t> primes)
    : std::runtime_error([&primes] {
          std::ostringstream os;
          os << "missing decomposition for prime(s):";
          for (auto p : primes) os << ' ' << p;
          return os.str();
      }()),
      primes_(std::move(primes)) {}

SplittingProfile degree_profile(const DefiningPolynomial& f, std::uint64_t p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("degree_profile: p is not prime");
    SplittingProfile profile;
    profile.p = p;
    auto degrees = distinct_degree_profile(f.coeffs(), p);
    if (!degrees) return profile;  // untrusted, degrees empty
    profile.degrees = std::move(*degrees);
    profile.trusted = true;
    return profile;
}

namespace {

int a_rho_from_degrees(const std::vector<int>& degrees, unsigned m) {
    int s = 0;
    for (int f : degrees)
        if (m % static_cast<unsigned>(f) == 0) s += f;
    return s - 1;
}

}  // namespace

int a_rho(const SplittingProfile& profile, unsigned m) {
    if (!profile.trusted) throw BadPrimeError({profile.p});
    return a_rho_from_degrees(profile.degrees, m);
}

int a_rho(const BadPrimeDecomposition& decomposition, unsigned m) {
    return a_rho_from_degrees(decomposition.degrees, m);
}

double sigma(const DefiningPolynomial& f,
             const std::vector<BadPrimeDecomposition>& bad,
             const PrimeTable& table, double x, const PrecisionPolicy& policy) {
    if (!(x >= 2.0)) return 0.0;
    if (x > static_cast<double>(table.limit()))
        throw std::out_of_range("sigma: x exceeds table limit");
    std::uint64_t cut = inclusive_floor(x);

    std::map<std::uint64_t, const BadPrimeDecomposition*> bad_by_p;
    for (const auto& b : bad) bad_by_p[b.p] = &b;

    // Resolve the degree multiset for every prime <= x first, failing
    // loudly with the complete list of unresolvable primes.
    std::vector<std::pair<std::uint64_t, std::vector<int>>> degrees_by_p;
    std::vector<std::uint64_t> missing;
    table.for_each_prime(cut, [&](std::uint64_t p) {
        if (auto it = bad_by_p.find(p); it != bad_by_p.end()) {
            degrees_by_p.emplace_back(p, it->second->degrees);
            return;
        }
        SplittingProfile profile = degree_profile(f, p);
        if (!profile.trusted) {
            missing.push_back(p);
            return;
        }
        degrees_by_p.emplace_back(p, std::move(profile.degrees));
    });
    if (!missing.empty()) throw BadPrimeError(std::move(missing));

    // Summation in ascending prime-power order: merge the m = 1 stream
    // (already sorted by p) with the sorted higher-power events.
    struct Term {
        std::uint64_t value;
        double contribution;
    };
    std::vector<Term> higher;
    for (const auto& [p, degrees] : degrees_by_p) {
        if (p > cut / p) continue;
        std::uint64_t pk = p * p;
        unsigned m = 2;
        while (true) {
            int a = a_rho_from_degrees(degrees, m);
            if (a != 0)
                higher.push_back({pk, static_cast<double>(a) /
                                          (static_cast<double>(m) *
                                           static_cast<double>(pk))});
            if (pk > cut / p) break;
            pk *= p;
            ++m;
        }
    }
    std::sort(higher.begin(), higher.end(),
              [](const Term& a, const Term& b) { return a.value < b.value; });

    NeumaierSum comp;
    double plain = 0.0;
    bool fast = policy.mode == Mode::FastFloat;
    auto add = [&](double v) {
        if (fast)
            plain += v;
        else
            comp.add(v);
    };
    std::size_t next = 0;
    for (const auto& [p, degrees] : degrees_by_p) {
        while (next < higher.size() && higher[next].value < p)
            add(higher[next++].contribution);
        int a = a_rho_from_degrees(degrees, 1);
        if (a != 0) add(static_cast<double>(a) / static_cast<double>(p));
    }
    while (next < higher.size()) add(higher[next++].contribution);
    return fast ? plain : comp.value();
}

}  // namespace kappa
