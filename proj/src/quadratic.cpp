// quadratic.cpp

#include "kappa/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "kappa/constants.hpp"
#include "kappa/precision.hpp"

namespace kappa {

namespace {

// (2|b) for odd b: +1 if b = +-1 mod 8, -1 if b = +-3 mod 8.
int two_symbol(long long b) {
    int m = static_cast<int>(((b % 8) + 8) % 8);
    return (m == 1 || m == 7) ? 1 : -1;
}

}  // namespace

int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if ((a & 1) == 0 && (n & 1) == 0) return 0;
    int k = 1;
    int v = 0;
    while ((n & 1) == 0) { n >>= 1; ++v; }
    if (v & 1) k = two_symbol(a);
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // n odd positive now; fold a's sign: (-1|n) = (-1)^((n-1)/2).
    if (a < 0) {
        a = -a;
        if (n % 4 == 3) k = -k;
    }
    a %= n;
    while (a != 0) {
        v = 0;
        while ((a & 1) == 0) { a >>= 1; ++v; }
        if (v & 1) k *= two_symbol(n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;  // quadratic reciprocity
        std::swap(a, n);
        a %= n;
    }
    return n == 1 ? k : 0;
}

bool is_fundamental_discriminant(long long D) {
    if (D == 1 || D == 0) return false;
    auto squarefree = [](long long n) {
        for (long long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long long m = ((D % 4) + 4) % 4;
    if (m == 1) return squarefree(std::llabs(D));
    if (m == 0) {
        long long q = D / 4;
        long long qm = ((q % 4) + 4) % 4;
        return (qm == 2 || qm == 3) && squarefree(std::llabs(q));
    }
    return false;
}

namespace {

// chi_D values on 1..len (completely multiplicative, computed through the
// smallest-prime-factor chain); values in {-1, 0, 1} as int8.
void fill_character(long long D, const std::vector<std::uint32_t>& spf,
                    std::size_t len, std::vector<signed char>& chi) {
    chi.assign(len + 1, 0);
    if (len >= 1) chi[1] = 1;
    for (std::size_t a = 2; a <= len; ++a) {
        std::uint32_t p = spf[a];
        if (p == a) {
            chi[a] = static_cast<signed char>(
                kronecker_symbol(D, static_cast<long long>(a)));
        } else {
            chi[a] = static_cast<signed char>(chi[p] * chi[a / p]);
        }
    }
}

std::vector<std::uint32_t> smallest_prime_factors(std::size_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::size_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (std::size_t j = i; j <= n; j += i)
                if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

struct QuadraticData {
    long long h;      // class number (imaginary case; 0 when not computed)
    double kappa;
};

QuadraticData quadratic_data(long long D, const std::vector<std::uint32_t>& spf,
                             std::vector<signed char>& chi_scratch) {
    long long absD = std::llabs(D);
    if (D < 0) {
        if (D == -3) return {1, 2.0 * kPi / (6.0 * std::sqrt(3.0))};
        if (D == -4) return {1, 2.0 * kPi / (4.0 * 2.0)};
        std::size_t half = static_cast<std::size_t>((absD - 1) / 2);
        fill_character(D, spf, half, chi_scratch);
        long long s = 0;
        for (std::size_t a = 1; a <= half; ++a) s += chi_scratch[a];
        int chi2 = static_cast<int>(absD % 2 == 0 ? 0 : two_symbol(D));
        long long den = 2 - chi2;
        if (s <= 0 || s % den != 0)
            throw std::logic_error("quadratic class number sum not divisible");
        long long h = s / den;
        return {h, 2.0 * kPi * static_cast<double>(h) /
                       (2.0 * std::sqrt(static_cast<double>(absD)))};
    }
    // Real case: kappa = -(2/sqrt D) sum_{0<a<D/2} chi(a) ln sin(pi a/D).
    std::size_t half = static_cast<std::size_t>((absD - 1) / 2);
    fill_character(D, spf, half, chi_scratch);
    NeumaierSum sum;
    double dd = static_cast<double>(absD);
    for (std::size_t a = 1; a <= half; ++a) {
        if (chi_scratch[a] == 0) continue;
        double t = std::log(std::sin(kPi * static_cast<double>(a) / dd));
        sum.add(chi_scratch[a] > 0 ? t : -t);
    }
    return {0, -2.0 * sum.value() / std::sqrt(dd)};
}

FieldRecord make_record(long long D, const QuadraticData& data) {
    FieldRecord rec;
    long long absD = std::llabs(D);
    long long d = (((D % 4) + 4) % 4 == 1) ? D : D / 4;
    rec.label = "Q(sqrt(" + std::to_string(d) + "))";
    rec.n_K = 2;
    rec.disc = Disc::parse(std::to_string(D));
    rec.kappa = data.kappa;
    if (D < 0) {
        rec.r1 = 0;
        rec.r2 = 1;
        rec.w = D == -3 ? 6 : (D == -4 ? 4 : 2);
        rec.h = data.h;
        rec.reg = 1.0;
    } else {
        rec.r1 = 2;
        rec.r2 = 0;
        rec.w = 2;
        // Only the product h * reg is pinned by the residue; the corpus
        // stores h = 1 with the product folded into reg (kappa overrides).
        rec.h = 1;
        rec.reg = data.kappa * std::sqrt(static_cast<double>(absD)) / 2.0;
    }
    // Defining polynomial with index 1: x^2 - x + (1-D)/4 or x^2 - D/4.
    std::vector<long long> coeffs;
    if ((((D % 4) + 4) % 4) == 1)
        coeffs = {(1 - D) / 4, -1, 1};
    else
        coeffs = {-(D / 4), 0, 1};
    rec.poly.emplace(std::move(coeffs));
    // Ramified primes: p | D, decomposition one prime of residue degree 1.
    long long rest = absD;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        rec.bad_primes.push_back({static_cast<std::uint64_t>(p), {1}});
        while (rest % p == 0) rest /= p;
    }
    if (rest > 1)
        rec.bad_primes.push_back({static_cast<std::uint64_t>(rest), {1}});
    return rec;
}

}  // namespace

double quadratic_residue(long long D) {
    if (!is_fundamental_discriminant(D))
        throw std::invalid_argument("quadratic_residue: not a fundamental discriminant");
    auto spf = smallest_prime_factors(
        static_cast<std::size_t>(std::max<long long>(2, std::llabs(D) / 2 + 1)));
    std::vector<signed char> scratch;
    return quadratic_data(D, spf, scratch).kappa;
}

long long quadratic_class_number(long long D) {
    if (!(D < 0) || !is_fundamental_discriminant(D))
        throw std::invalid_argument(
            "quadratic_class_number: need a fundamental discriminant < 0");
    auto spf = smallest_prime_factors(
        static_cast<std::size_t>(std::max<long long>(2, std::llabs(D) / 2 + 1)));
    std::vector<signed char> scratch;
    return quadratic_data(D, spf, scratch).h;
}

std::vector<FieldRecord> generate_quadratic_fields(long long max_abs_disc,
                                                   unsigned threads) {
    if (max_abs_disc < 3)
        throw std::invalid_argument("generate_quadratic_fields: bound must be >= 3");

    std::vector<long long> discs;
    for (long long a = 3; a <= max_abs_disc; ++a) {
        for (long long D : {a, -a}) {
            if (is_fundamental_discriminant(D)) discs.push_back(D);
        }
    }

    auto spf = smallest_prime_factors(
        static_cast<std::size_t>(max_abs_disc / 2 + 2));

    std::vector<FieldRecord> records(discs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        std::vector<signed char> scratch;
        for (std::size_t i = begin; i < end; ++i)
            records[i] = make_record(discs[i], quadratic_data(discs[i], spf, scratch));
    };

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || discs.size() < 64) {
        work(0, discs.size());
    } else {
        unsigned n = static_cast<unsigned>(
            std::min<std::size_t>(threads, discs.size()));
        std::vector<std::thread> pool;
        std::size_t per = (discs.size() + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::size_t b = t * per, e = std::min(discs.size(), b + per);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

}  // namespace kappa
