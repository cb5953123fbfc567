// precision.hpp
// Numeric contract shared by every real-valued evaluation in the library:
// accumulation mode, inequality slack, and the integer-cutoff convention
// for sums over prime powers.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kappa {

// How real-valued sums/products are evaluated and how inequality verdicts
// are decided.
//   FastFloat — plain double accumulation, slack-based verdicts.
//   Extended  — compensated (Neumaier) summation, slack-based verdicts.
//   Interval  — outward-rounded enclosures, rigorous verdicts (slack unused).
enum class Mode { FastFloat, Extended, Interval };

struct PrecisionPolicy {
    Mode mode = Mode::Extended;
    double slack = 1e-12;   // relative tolerance for inequality verdicts

    void validate() const {
        if (!(slack > 0.0))
            throw std::invalid_argument("PrecisionPolicy: slack must be > 0");
    }
};

inline Mode parse_mode(const std::string& s) {
    if (s == "fast" || s == "fast-float") return Mode::FastFloat;
    if (s == "extended") return Mode::Extended;
    if (s == "interval") return Mode::Interval;
    throw std::invalid_argument("unknown precision mode: " + s);
}

// Neumaier's improved Kahan summation. The correction term is folded in
// only when the value is read, so add() stays branch-light.
class NeumaierSum {
public:
    void add(double v) {
        double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Largest integer n with n <= x, rounding toward inclusion when x sits
// within one ulp below an integer. Guards sums indexed by "n <= x" against
// grid points like x = 59.999999999999999 that are meant to be 60.
inline std::uint64_t inclusive_floor(double x) {
    if (!(x >= 0.0)) return 0;
    double f = std::floor(x);
    double next_int = f + 1.0;
    if (std::nextafter(x, std::numeric_limits<double>::infinity()) >= next_int)
        return static_cast<std::uint64_t>(next_int);
    return static_cast<std::uint64_t>(f);
}

}  // namespace kappa
