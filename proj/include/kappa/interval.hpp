// interval.hpp
// Small directed-rounding interval type used for the rigorous verification
// mode. Every arithmetic result is widened outward by a fixed number of
// ulps that dominates the worst-case rounding error of the operation:
//   +, -, *, /, sqrt : correctly rounded by IEEE-754, 1 ulp suffices
//   exp, log, log1p, pow : glibc libm is faithful to < 1 ulp; we widen by 2
// The enclosures are therefore valid on any platform whose libm stays
// within 2 ulps for these functions.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kappa {

namespace detail {
inline double step_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i)
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}
inline double step_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i)
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}
inline constexpr int kArithUlps = 1;  // IEEE-correct ops
inline constexpr int kLibmUlps = 2;   // transcendental libm calls
}  // namespace detail

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}  // exact double (integers, literals)
    Interval(double l, double h) : lo(l), hi(h) {}

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

// Encloses a quantity whose nearest-double representation is `v`: the true
// value lies within one ulp of it.
inline Interval enclose_constant(double v) {
    return {detail::step_down(v, 1), detail::step_up(v, 1)};
}

inline Interval operator+(Interval a, Interval b) {
    return {detail::step_down(a.lo + b.lo, detail::kArithUlps),
            detail::step_up(a.hi + b.hi, detail::kArithUlps)};
}
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }
inline Interval operator-(Interval a, Interval b) { return a + (-b); }

inline Interval operator*(Interval a, Interval b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::min(std::min(p1, p2), std::min(p3, p4));
    double hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return {detail::step_down(lo, detail::kArithUlps),
            detail::step_up(hi, detail::kArithUlps)};
}

inline Interval operator/(Interval a, Interval b) {
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw std::domain_error("Interval: division by interval containing 0");
    double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
    double lo = std::min(std::min(q1, q2), std::min(q3, q4));
    double hi = std::max(std::max(q1, q2), std::max(q3, q4));
    return {detail::step_down(lo, detail::kArithUlps),
            detail::step_up(hi, detail::kArithUlps)};
}

inline Interval operator+(Interval a, double b) { return a + Interval(b); }
inline Interval operator+(double a, Interval b) { return Interval(a) + b; }
inline Interval operator-(Interval a, double b) { return a - Interval(b); }
inline Interval operator-(double a, Interval b) { return Interval(a) - b; }
inline Interval operator*(Interval a, double b) { return a * Interval(b); }
inline Interval operator*(double a, Interval b) { return Interval(a) * b; }
inline Interval operator/(Interval a, double b) { return a / Interval(b); }
inline Interval operator/(double a, Interval b) { return Interval(a) / b; }

inline Interval sqrt(Interval a) {
    if (a.lo < 0.0) throw std::domain_error("Interval: sqrt of negative");
    return {detail::step_down(std::sqrt(a.lo), detail::kArithUlps),
            detail::step_up(std::sqrt(a.hi), detail::kArithUlps)};
}

inline Interval log(Interval a) {
    if (a.lo <= 0.0) throw std::domain_error("Interval: log of non-positive");
    return {detail::step_down(std::log(a.lo), detail::kLibmUlps),
            detail::step_up(std::log(a.hi), detail::kLibmUlps)};
}

inline Interval log1p(Interval a) {
    if (a.lo <= -1.0) throw std::domain_error("Interval: log1p below -1");
    return {detail::step_down(std::log1p(a.lo), detail::kLibmUlps),
            detail::step_up(std::log1p(a.hi), detail::kLibmUlps)};
}

inline Interval exp(Interval a) {
    return {detail::step_down(std::exp(a.lo), detail::kLibmUlps),
            detail::step_up(std::exp(a.hi), detail::kLibmUlps)};
}

inline Interval fabs(Interval a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, std::max(-a.lo, a.hi)};
}

// base > 0 only; monotone in both arguments, evaluated as exp(e * log(b)).
inline Interval pow(Interval base, Interval e) { return exp(e * log(base)); }
inline Interval pow(Interval base, double e) { return pow(base, Interval(e)); }

inline std::ostream& operator<<(std::ostream& os, Interval a) {
    return os << '[' << a.lo << ',' << a.hi << ']';
}

}  // namespace kappa
