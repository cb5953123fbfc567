// bounds.hpp
// Closed-form evaluation of every explicit bound function, plus the
// closed-form inversion that finds the minimal constant making the main
// residue bounds an equality for a given field.
//
// Functions used by the rigorous sweeps are templated over the scalar type
// (double or Interval); the rest are plain double.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "kappa/constants.hpp"
#include "kappa/interval.hpp"

namespace kappa {

// zeta(n) for integer n >= 2, by direct series with an Euler-Maclaurin
// tail correction; absolute error below 1e-15 for every n. Cached.
double zeta_value(int n);
Interval zeta_value_enclosure(int n);

namespace detail {
template <class R>
R zeta_of(int n) {
    if constexpr (std::is_same_v<R, Interval>)
        return zeta_value_enclosure(n);
    else
        return zeta_value(n);
}
template <class R>
R const_of(double v) {
    if constexpr (std::is_same_v<R, Interval>)
        return enclose_constant(v);
    else
        return v;
}
}  // namespace detail

// ---------------------------------------------------------------------
// Conditional envelopes for the prime sums (domains as stated).
// ---------------------------------------------------------------------

// 3(ln x + 2)/(8 pi sqrt x), the deviation envelope of
// sum_{n<=x} Lambda(n)/(n ln n) from ln ln x + gamma. Requires x >= e.
template <class R>
R psi_error_bound(R x) {
    using std::log, std::sqrt;
    R lx = log(x);
    return 3.0 * (lx + 2.0) / (8.0 * detail::const_of<R>(kPi) * sqrt(x));
}

inline void check_at_least(double x, double lo, const char* op) {
    if (!(x >= lo)) throw std::domain_error(std::string(op) + ": x below domain");
}

inline double psi_error_bound_checked(double x) {
    check_at_least(x, std::numbers::e, "psi_error_bound");
    return psi_error_bound(x);
}

// (n_K - 1)(ln ln x + gamma + psi_error_bound(x)). Requires x >= e.
template <class R>
R sigma_upper_bound(R x, int n_K) {
    using std::log;
    return static_cast<double>(n_K - 1) *
           (log(log(x)) + detail::const_of<R>(kGamma) + psi_error_bound(x));
}

// ln( zeta(n_K)/(e^gamma ln x) (1 - 3 ln x/(8 pi sqrt x)) )
//   - (n_K - 1)/ln x * (1 + ln^2 x/(8 pi sqrt x) + 1.3 ln x/x).
// Requires x >= 59 (which keeps the inner factor positive).
template <class R>
R sigma_lower_bound(R x, int n_K) {
    using std::log, std::sqrt;
    R lx = log(x);
    R pi8 = 8.0 * detail::const_of<R>(kPi);
    R inner = 1.0 - 3.0 * lx / (pi8 * sqrt(x));
    R lead = log(detail::zeta_of<R>(n_K) *
                 detail::const_of<R>(kExpMinusGamma) / lx * inner);
    R tail = static_cast<double>(n_K - 1) / lx *
             (1.0 + lx * lx / (pi8 * sqrt(x)) + kSigmaLowerTail * lx / x);
    return lead - tail;
}

// e^-gamma/ln x (1 - 3 ln x/(8 pi sqrt x)), valid lower envelope of
// prod_{p<=x}(1 - 1/p) for x >= 23.8 under RH.
template <class R>
R mertens_lower_bound(R x) {
    using std::log, std::sqrt;
    R lx = log(x);
    return detail::const_of<R>(kExpMinusGamma) / lx *
           (1.0 - 3.0 * lx / (8.0 * detail::const_of<R>(kPi) * sqrt(x)));
}

// zeta(n) exp(-(1/(x ln x))(1 + 1/(2 ln x))), valid lower envelope of
// prod_{p<=x}(1 - p^-n)^-1 for x >= 59, n >= 2 (unconditional).
template <class R>
R zeta_product_lower_bound(R x, int n) {
    using std::log, std::exp;
    R lx = log(x);
    return detail::zeta_of<R>(n) * exp(-(1.0 / (x * lx)) * (1.0 + 0.5 / lx));
}

// ---------------------------------------------------------------------
// Short-sum machinery (double only; exercised by grid checks).
// ---------------------------------------------------------------------

// G(x,h) = h/(x ln x) + 3(ln x + h/x + 2)/(4 pi sqrt x); x > 1, 0 < h < x.
double smoothing_error(double x, double h);

// H(t) at the contour parameter fixed to 1/2:
//   3 [ ln(pi^{3/2} zeta(3/2)/(6 sqrt 2)) + ln(3/2 + sqrt(9 + t^2))/2 ].
double log_l_envelope(double t);

// J(x,mu) = (mu + 2/(ln x - 2)) + 2 (1 + x^-mu)^{1/2 + 1/ln x}/ln x;
// x > e^2, 0 < mu < 1.
double contour_weight(double x, double mu);

// The three bounded coefficient functions of the short-sum error term:
// coeff_smoothing multiplies (n_K-1)/(x^mu ln x), coeff_degree multiplies
// (n_K-1)(ln x)^3/sqrt(x), coeff_disc multiplies (ln x)^2 ln|D|/sqrt(x).
// Domain: x > e^2, 0 < mu < 1/2, x^mu <= sqrt(x)/ln^2 x.
double coeff_smoothing(double x, double mu);
double coeff_degree(double x, double mu);
double coeff_disc(double x, double mu);

// mu with x^mu = sqrt(x)/ln^2 x, i.e. 1/2 - 2 ln ln x/ln x; the returned
// value must land in (0, 1/2).
double mu_star(double x);

// Stated short-sum bound:
//   (3e/(8 pi) + 1.45/ln x)(ln x)^3/sqrt(x) (n_K - 1)
// + (3e/(4 pi) + 6.01/ln x)(ln x)^2/sqrt(x) ln|D|.     Requires x >= 5e5.
double short_sum_bound(double x, int n_K, double ln_abs_disc);
// Sharper composite assembled from F1..F3 at mu_star (internal cross-check;
// pointwise below short_sum_bound).
double short_sum_bound_sharp(double x, int n_K, double ln_abs_disc);

// ---------------------------------------------------------------------
// Main residue bounds and their inversion.
// ---------------------------------------------------------------------

// 1 + 4 ln ln ln t/ln ln t; t > e^e. Maximum 1 + 4/e at t = exp(e^e).
// x_of_disc(D) = (ln D)^{2 exponent_factor(D)}.
double exponent_factor(double t);

// x(D) = (ln D)^2 (ln ln D)^8; D > e^e.
double x_of_disc(double abs_disc);

// Upper bound (2 e^gamma (ln ln D)^{1 + c/ln ln D})^{n_K - 1}; D >= 14.
double theorem_upper(int n_K, double abs_disc, double c = kThmConst);
double theorem_upper_from_log(int n_K, double log_abs_disc, double c = kThmConst);
Interval theorem_upper_enclosure(int n_K, Interval log_abs_disc, double c = kThmConst);

// Lower bound zeta(n_K)/(2 e^gamma (ln ln D)^{1 + c (n_K-1)/ln ln D}).
double theorem_lower(int n_K, double abs_disc, double c = kThmConst);
double theorem_lower_from_log(int n_K, double log_abs_disc, double c = kThmConst);
Interval theorem_lower_enclosure(int n_K, Interval log_abs_disc, double c = kThmConst);

// Unconditional comparison: 0.36232/sqrt(D) and (e ln D/(2(n_K-1)))^{n_K-1}.
struct UncondBounds {
    double lower;
    double upper;
};
UncondBounds uncond_bounds(int n_K, double abs_disc);
UncondBounds uncond_bounds_from_log(int n_K, double log_abs_disc);

// Literature comparators. The asymptotic main terms are reported without
// their o(1); the conditional upper comparator is present only on its
// stated domain |D| >= 5.4e6.
struct ComparisonBounds {
    double cho_kim_lower;                  // zeta(n_K)/(2 e^gamma ln ln D)
    double cho_kim_upper;                  // (2 e^gamma ln ln D)^{n_K-1}
    std::optional<double> pal_simonic_upper;  // (2 e^{gamma+2.475/ln ln D})^{n_K-1}
};
ComparisonBounds comparison_bounds(int n_K, double abs_disc);
ComparisonBounds comparison_bounds_from_log(int n_K, double log_abs_disc);

// The unique c with kappa = theorem_upper(n_K, D, c) (affine inversion of
// the exponent). Negative values mean the field satisfies the c = 0 bound
// with room to spare. Throws std::domain_error at the ln ln D = 1 pole.
double min_constant_upper(double kappa, int n_K, double abs_disc);
double min_constant_upper_from_log(double kappa, int n_K, double log_abs_disc);

// Mirror for the lower bound (exponent carries the extra n_K - 1 factor).
double min_constant_lower(double kappa, int n_K, double abs_disc);
double min_constant_lower_from_log(double kappa, int n_K, double log_abs_disc);

}  // namespace kappa
