// bounds.cpp

#include "kappa/bounds.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace kappa {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kEE = 15.154262241479264189760430272629911905528;  // e^e

// Euler-Maclaurin tail for sum_{k>K} k^-n:
//   T = K^{1-n}/(n-1) - K^-n/2 + n K^{-n-1}/12,
// and the true tail lies in [T - n(n+1)(n+2) K^{-n-3}/720, T].
// K = 1e4 keeps the remainder under 1e-19 even at n = 2; larger n get a
// smaller K so K^n stays well inside double range.
constexpr double kZetaCut = 1.0e4;

struct ZetaEntry {
    double value;
    Interval enclosure;
};

ZetaEntry compute_zeta(int n) {
    if (n >= 64) {
        // zeta(n) - 1 < 2^(1-n): below double resolution from 1.
        Interval enc{1.0, 1.0 + std::pow(2.0, 1 - n)};
        return {1.0, enc};
    }
    int K = n >= 10 ? 64 : static_cast<int>(kZetaCut);
    Interval sum(1.0);  // k = 1 term
    // Sum descending so small terms accumulate first; interval arithmetic
    // carries the rounding both ways.
    {
        Interval acc(0.0);
        for (int k = K; k >= 2; --k)
            acc = acc + 1.0 / pow(Interval(static_cast<double>(k)),
                                  static_cast<double>(n));
        sum = sum + acc;
    }
    double Kd = static_cast<double>(K);
    Interval Kn = pow(Interval(Kd), static_cast<double>(n));
    Interval t_main = 1.0 / (Interval(static_cast<double>(n - 1)) *
                             pow(Interval(Kd), static_cast<double>(n - 1)));
    Interval t_half = 0.5 / Kn;
    Interval t_b2 = static_cast<double>(n) / (12.0 * Kn * Kd);
    Interval upper_tail = t_main - t_half + t_b2;
    Interval rem = Interval(static_cast<double>(n) * (n + 1) * (n + 2)) /
                   (720.0 * Kn * Kd * Kd * Kd);
    Interval tail{(upper_tail - rem).lo, upper_tail.hi};
    Interval enc = sum + tail;
    return {enc.mid(), enc};
}

const ZetaEntry& zeta_entry(int n) {
    if (n < 2) throw std::domain_error("zeta_value: n must be >= 2");
    static std::map<int, ZetaEntry> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_zeta(n)).first;
    return it->second;
}

}  // namespace

double zeta_value(int n) { return zeta_entry(n).value; }
Interval zeta_value_enclosure(int n) { return zeta_entry(n).enclosure; }

double smoothing_error(double x, double h) {
    if (!(x > 1.0)) throw std::domain_error("smoothing_error: x must be > 1");
    if (!(h > 0.0 && h < x))
        throw std::domain_error("smoothing_error: need 0 < h < x");
    double lx = std::log(x);
    return h / (x * lx) + 3.0 * (lx + h / x + 2.0) / (4.0 * kPi * std::sqrt(x));
}

double log_l_envelope(double t) {
    if (!(t >= 0.0)) throw std::domain_error("log_l_envelope: t must be >= 0");
    double head = std::log(std::pow(kPi, 1.5) * kZeta3Half / (6.0 * std::sqrt(2.0)));
    return 3.0 * (head + 0.5 * std::log(1.5 + std::sqrt(9.0 + t * t)));
}

double contour_weight(double x, double mu) {
    if (!(std::log(x) > 2.0))
        throw std::domain_error("contour_weight: x must exceed e^2");
    if (!(mu > 0.0 && mu < 1.0))
        throw std::domain_error("contour_weight: mu must lie in (0,1)");
    double lx = std::log(x);
    return (mu + 2.0 / (lx - 2.0)) +
           2.0 * std::pow(1.0 + std::pow(x, -mu), 0.5 + 1.0 / lx) / lx;
}

namespace {

void check_coeff_domain(double x, double mu, const char* op) {
    double lx = std::log(x);
    if (!(lx > 2.0)) throw std::domain_error(std::string(op) + ": x must exceed e^2");
    if (!(mu > 0.0 && mu < 0.5))
        throw std::domain_error(std::string(op) + ": mu must lie in (0,1/2)");
    // x^mu <= sqrt(x)/ln^2 x, compared in exponent space with a relative
    // guard so the boundary choice mu_star(x) itself is admissible.
    double mu_max = 0.5 - 2.0 * std::log(lx) / lx;
    if (mu > mu_max * (1.0 + 1e-12) + 1e-15)
        throw std::domain_error(std::string(op) + ": x^mu exceeds sqrt(x)/ln^2 x");
}

}  // namespace

double coeff_smoothing(double x, double mu) {
    check_coeff_domain(x, mu, "coeff_smoothing");
    double lx = std::log(x);
    return 1.0 + 3.0 * std::pow(x, mu - 0.5) * (lx + std::pow(x, -mu) + 2.0) * lx /
                     (4.0 * kPi);
}

double coeff_degree(double x, double mu) {
    check_coeff_domain(x, mu, "coeff_degree");
    double lx = std::log(x);
    double xmu = std::pow(x, mu);
    double head = std::log(std::pow(kPi, 1.5) * kZeta3Half / (6.0 * std::sqrt(2.0))) +
                  0.5 * std::log(1.5 + std::sqrt(9.0 + xmu * xmu));
    double weight = 0.5 + 2.0 / (lx - 2.0) +
                    2.0 * std::pow(1.0 + 1.0 / xmu, 0.5 + 1.0 / lx) / lx;
    return (3.0 * kE / (kPi * lx)) * head * weight * (1.0 + 1.0 / (mu * lx));
}

double coeff_disc(double x, double mu) {
    check_coeff_domain(x, mu, "coeff_disc");
    double lx = std::log(x);
    return (3.0 * kE / (4.0 * kPi)) *
           (1.0 + 4.0 / (lx - 2.0) +
            4.0 * std::pow(1.0 + std::pow(x, -mu), 0.5 + 1.0 / lx) / lx);
}

double mu_star(double x) {
    if (!(x > kEE)) throw std::domain_error("mu_star: x must exceed e^e");
    double lx = std::log(x);
    double mu = 0.5 - 2.0 * std::log(lx) / lx;
    if (!(mu > 0.0 && mu < 0.5))
        throw std::domain_error("mu_star: value outside (0,1/2)");
    return mu;
}

double short_sum_bound(double x, int n_K, double ln_abs_disc) {
    if (!(x >= kShortSumMinX))
        throw std::domain_error("short_sum_bound: x must be >= 5e5");
    double lx = std::log(x);
    double rx = std::sqrt(x);
    double degree_term = (3.0 * kE / (8.0 * kPi) + kShortSumDegree / lx) *
                         lx * lx * lx / rx * static_cast<double>(n_K - 1);
    double disc_term = (3.0 * kE / (4.0 * kPi) + kShortSumDisc / lx) *
                       lx * lx / rx * ln_abs_disc;
    return degree_term + disc_term;
}

double short_sum_bound_sharp(double x, int n_K, double ln_abs_disc) {
    if (!(x >= kShortSumMinX))
        throw std::domain_error("short_sum_bound_sharp: x must be >= 5e5");
    double lx = std::log(x);
    double rx = std::sqrt(x);
    double mu = mu_star(x);
    double xmu = std::pow(x, mu);
    double degree = (coeff_smoothing(x, mu) / (xmu * lx) +
                     coeff_degree(x, mu) * lx * lx * lx / rx) *
                    static_cast<double>(n_K - 1);
    double disc = coeff_disc(x, mu) * lx * lx / rx * ln_abs_disc;
    return degree + disc;
}

double exponent_factor(double t) {
    if (!(t > kEE)) throw std::domain_error("exponent_factor: t must exceed e^e");
    return 1.0 + 4.0 * std::log(std::log(std::log(t))) / std::log(std::log(t));
}

double x_of_disc(double abs_disc) {
    if (!(abs_disc > kEE))
        throw std::domain_error("x_of_disc: |disc| must exceed e^e");
    double l = std::log(abs_disc);
    double ll = std::log(l);
    return l * l * std::pow(ll, 8.0);
}

namespace {

void check_theorem_log_domain(int n_K, double log_abs_disc, const char* op) {
    if (n_K < 2) throw std::domain_error(std::string(op) + ": n_K must be >= 2");
    if (!(log_abs_disc >= std::log(kMinDiscMain)))
        throw std::domain_error(std::string(op) + ": |disc| must be >= 14");
}

template <class R>
R theorem_upper_core(int n_K, R log_abs_disc, double c) {
    using std::log, std::exp;
    R L = log(log_abs_disc);
    R exponent = (1.0 + c / L) * log(L);
    return exp(static_cast<double>(n_K - 1) *
               (log(2.0 * detail::const_of<R>(kExpGamma)) + exponent));
}

template <class R>
R theorem_lower_core(int n_K, R log_abs_disc, double c) {
    using std::log, std::exp;
    R L = log(log_abs_disc);
    R exponent = (1.0 + c * static_cast<double>(n_K - 1) / L) * log(L);
    return detail::zeta_of<R>(n_K) *
           exp(-(log(2.0 * detail::const_of<R>(kExpGamma)) + exponent));
}

}  // namespace

double theorem_upper(int n_K, double abs_disc, double c) {
    if (!(abs_disc >= kMinDiscMain))
        throw std::domain_error("theorem_upper: |disc| must be >= 14");
    return theorem_upper_from_log(n_K, std::log(abs_disc), c);
}

double theorem_upper_from_log(int n_K, double log_abs_disc, double c) {
    check_theorem_log_domain(n_K, log_abs_disc, "theorem_upper");
    return theorem_upper_core<double>(n_K, log_abs_disc, c);
}

Interval theorem_upper_enclosure(int n_K, Interval log_abs_disc, double c) {
    check_theorem_log_domain(n_K, log_abs_disc.lo, "theorem_upper");
    return theorem_upper_core<Interval>(n_K, log_abs_disc, c);
}

double theorem_lower(int n_K, double abs_disc, double c) {
    if (!(abs_disc >= kMinDiscMain))
        throw std::domain_error("theorem_lower: |disc| must be >= 14");
    return theorem_lower_from_log(n_K, std::log(abs_disc), c);
}

double theorem_lower_from_log(int n_K, double log_abs_disc, double c) {
    check_theorem_log_domain(n_K, log_abs_disc, "theorem_lower");
    return theorem_lower_core<double>(n_K, log_abs_disc, c);
}

Interval theorem_lower_enclosure(int n_K, Interval log_abs_disc, double c) {
    check_theorem_log_domain(n_K, log_abs_disc.lo, "theorem_lower");
    return theorem_lower_core<Interval>(n_K, log_abs_disc, c);
}

UncondBounds uncond_bounds(int n_K, double abs_disc) {
    if (!(abs_disc >= 3.0))
        throw std::domain_error("uncond_bounds: |disc| must be >= 3");
    return uncond_bounds_from_log(n_K, std::log(abs_disc));
}

UncondBounds uncond_bounds_from_log(int n_K, double log_abs_disc) {
    if (n_K < 2) throw std::domain_error("uncond_bounds: n_K must be >= 2");
    if (!(log_abs_disc >= std::log(3.0)))
        throw std::domain_error("uncond_bounds: |disc| must be >= 3");
    double lower = kUncondLower * std::exp(-0.5 * log_abs_disc);
    double upper = std::pow(kE * log_abs_disc / (2.0 * (n_K - 1)),
                            static_cast<double>(n_K - 1));
    return {lower, upper};
}

ComparisonBounds comparison_bounds(int n_K, double abs_disc) {
    return comparison_bounds_from_log(n_K, std::log(abs_disc));
}

ComparisonBounds comparison_bounds_from_log(int n_K, double log_abs_disc) {
    check_theorem_log_domain(n_K, log_abs_disc, "comparison_bounds");
    double L = std::log(log_abs_disc);
    ComparisonBounds out;
    out.cho_kim_lower = zeta_value(n_K) / (2.0 * kExpGamma * L);
    out.cho_kim_upper = std::pow(2.0 * kExpGamma * L, static_cast<double>(n_K - 1));
    if (log_abs_disc >= std::log(kPalSimMinDisc))
        out.pal_simonic_upper =
            std::pow(2.0 * std::exp(kGamma + kPalSimConst / L),
                     static_cast<double>(n_K - 1));
    return out;
}

namespace {

double lnln_checked(double log_abs_disc, const char* op) {
    double L = std::log(log_abs_disc);
    if (std::fabs(std::log(L)) < 1e-14)
        throw std::domain_error(std::string(op) + ": pole at ln ln |disc| = 1");
    return L;
}

}  // namespace

double min_constant_upper(double kappa, int n_K, double abs_disc) {
    if (!(abs_disc >= kMinDiscMain))
        throw std::domain_error("min_constant_upper: |disc| must be >= 14");
    return min_constant_upper_from_log(kappa, n_K, std::log(abs_disc));
}

double min_constant_upper_from_log(double kappa, int n_K, double log_abs_disc) {
    if (!(kappa > 0.0))
        throw std::domain_error("min_constant_upper: kappa must be > 0");
    if (n_K < 2) throw std::domain_error("min_constant_upper: n_K must be >= 2");
    double L = lnln_checked(log_abs_disc, "min_constant_upper");
    // kappa^(1/(n-1)) = 2 e^gamma L^(1 + c/L)  =>  solve the exponent for c.
    double target = std::log(kappa) / (n_K - 1) - std::log(2.0 * kExpGamma);
    return L * (target / std::log(L) - 1.0);
}

double min_constant_lower(double kappa, int n_K, double abs_disc) {
    if (!(abs_disc >= kMinDiscMain))
        throw std::domain_error("min_constant_lower: |disc| must be >= 14");
    return min_constant_lower_from_log(kappa, n_K, std::log(abs_disc));
}

double min_constant_lower_from_log(double kappa, int n_K, double log_abs_disc) {
    if (!(kappa > 0.0))
        throw std::domain_error("min_constant_lower: kappa must be > 0");
    if (n_K < 2) throw std::domain_error("min_constant_lower: n_K must be >= 2");
    double L = lnln_checked(log_abs_disc, "min_constant_lower");
    // zeta(n)/(2 e^gamma kappa) = L^(1 + c(n-1)/L).
    double target = std::log(zeta_value(n_K) / (2.0 * kExpGamma * kappa));
    return (L / (n_K - 1)) * (target / std::log(L) - 1.0);
}

}  // namespace kappa
