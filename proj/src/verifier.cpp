// verifier.cpp

#include "kappa/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <thread>

#include "kappa/bounds.hpp"
#include "kappa/constants.hpp"
#include "kappa/prime_sums.hpp"

namespace kappa {

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0 && hi >= lo))
        throw std::invalid_argument("geometric_grid: need 0 < lo <= hi");
    std::vector<double> grid;
    if (n < 2 || lo == hi) {
        grid.push_back(lo);
        if (hi > lo) grid.push_back(hi);
        return grid;
    }
    grid.reserve(n);
    double ratio = std::log(hi / lo);
    for (std::size_t i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n - 1);
        grid.push_back(i == 0 ? lo : (i == n - 1 ? hi : lo * std::exp(t * ratio)));
    }
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

// Running accumulator that carries the policy's double value and, in
// interval mode, a rigorous enclosure alongside.
struct RunningSum {
    Mode mode;
    double plain = 0.0;
    NeumaierSum comp;
    Interval iv{0.0};

    explicit RunningSum(Mode m) : mode(m) {}

    template <class TermInterval>
    void add(double v, TermInterval&& make_interval) {
        if (mode == Mode::FastFloat) {
            plain += v;
        } else {
            comp.add(v);
            if (mode == Mode::Interval) iv = iv + make_interval();
        }
    }
    double value() const { return mode == Mode::FastFloat ? plain : comp.value(); }
};

struct SweepState {
    SweepReport report;
    double slack;
    bool rigorous;

    SweepState(std::string name, const PrecisionPolicy& policy)
        : slack(policy.slack), rigorous(policy.mode == Mode::Interval) {
        report.name = std::move(name);
        report.min_margin = std::numeric_limits<double>::infinity();
        report.min_ratio = std::numeric_limits<double>::infinity();
        report.rigorous = rigorous;
    }

    // margin: bound minus deviation (>= 0 means pass); scale: the bound
    // magnitude used for the slack allowance; ratio: optional tightness.
    void record(double x, double margin, double scale, double ratio) {
        ++report.points;
        if (margin < report.min_margin) {
            report.min_margin = margin;
            report.argmin_x = x;
        }
        if (ratio < report.min_ratio) report.min_ratio = ratio;
        bool violated = rigorous ? margin < 0.0
                                 : margin < -slack * std::fabs(scale);
        if (violated) ++report.violations;
    }
};

void check_grid_domain(const std::vector<double>& grid, double lo,
                       const PrimeTable& table, const char* op) {
    if (grid.empty())
        throw std::invalid_argument(std::string(op) + ": empty grid");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument(std::string(op) + ": grid must be sorted");
    if (grid.front() < lo)
        throw std::domain_error(std::string(op) + ": grid begins below domain");
    if (grid.back() > static_cast<double>(table.limit()))
        throw std::out_of_range(std::string(op) + ": grid exceeds table limit");
}

}  // namespace

SweepReport verify_psi_theorem(const PrimeTable& table,
                               const std::vector<double>& grid,
                               const PrecisionPolicy& policy) {
    check_grid_domain(grid, std::numbers::e, table, "verify_psi_theorem");
    double lo = grid.front(), hi = grid.back();
    std::uint64_t cut = inclusive_floor(hi);

    SweepState state("psi-approximation", policy);
    RunningSum sum(policy.mode);
    Interval gammaI = gamma_interval();

    constexpr double kInf = std::numeric_limits<double>::infinity();
    auto evaluate = [&](double x) {
        if (policy.mode == Mode::Interval) {
            Interval xi(x);
            Interval dev = fabs(sum.iv - log(log(xi)) - gammaI);
            Interval bound = psi_error_bound(xi);
            Interval margin = bound - dev;
            state.record(x, margin.lo, 0.0, kInf);
        } else {
            double dev = std::fabs(sum.value() - std::log(std::log(x)) - kGamma);
            double bound = psi_error_bound(x);
            state.record(x, bound - dev, bound, kInf);
        }
    };

    std::size_t g = 0;
    table.for_each_prime_power(cut, [&](std::uint64_t, unsigned k, std::uint64_t pk) {
        double q = static_cast<double>(pk);
        while (g < grid.size() && grid[g] < q) {
            if (grid[g] >= lo) evaluate(grid[g]);
            ++g;
        }
        bool in_window = q >= lo && q <= hi;
        if (in_window) evaluate(q);  // left limit: sum without this jump
        sum.add(1.0 / (static_cast<double>(k) * static_cast<double>(pk)),
                [&] { return 1.0 / Interval(static_cast<double>(k) *
                                            static_cast<double>(pk)); });
        if (in_window) evaluate(q);  // right value: jump included
        while (g < grid.size() && grid[g] == q) {  // grid point on the jump
            evaluate(grid[g]);
            ++g;
        }
    });
    for (; g < grid.size(); ++g) evaluate(grid[g]);
    return state.report;
}

SweepReport verify_mertens_lemma(const PrimeTable& table,
                                 const std::vector<double>& grid,
                                 const PrecisionPolicy& policy) {
    check_grid_domain(grid, 23.8, table, "verify_mertens_lemma");
    double lo = grid.front(), hi = grid.back();
    std::uint64_t cut = inclusive_floor(hi);

    SweepState state("mertens-product-lower", policy);
    RunningSum logsum(policy.mode);

    auto evaluate = [&](double x) {
        if (policy.mode == Mode::Interval) {
            Interval lhs = exp(logsum.iv);
            Interval rhs = mertens_lower_bound(Interval(x));
            Interval margin = lhs - rhs;
            state.record(x, margin.lo, 0.0, lhs.lo / rhs.hi);
        } else {
            double lhs = std::exp(logsum.value());
            double rhs = mertens_lower_bound(x);
            state.record(x, lhs - rhs, rhs, lhs / rhs);
        }
    };

    std::size_t g = 0;
    table.for_each_prime(cut, [&](std::uint64_t p) {
        double q = static_cast<double>(p);
        while (g < grid.size() && grid[g] < q) {
            if (grid[g] >= lo) evaluate(grid[g]);
            ++g;
        }
        bool in_window = q >= lo && q <= hi;
        if (in_window) evaluate(q);
        logsum.add(std::log1p(-1.0 / static_cast<double>(p)),
                   [&] { return log1p(-1.0 / Interval(static_cast<double>(p))); });
        if (in_window) evaluate(q);
        while (g < grid.size() && grid[g] == q) {
            evaluate(grid[g]);
            ++g;
        }
    });
    for (; g < grid.size(); ++g) evaluate(grid[g]);
    return state.report;
}

std::vector<SweepReport> verify_zeta_product_lemma(
    const PrimeTable& table, const std::vector<double>& grid,
    const std::vector<int>& n_range, const PrecisionPolicy& policy) {
    check_grid_domain(grid, 59.0, table, "verify_zeta_product_lemma");
    double lo = grid.front(), hi = grid.back();
    std::uint64_t cut = inclusive_floor(hi);

    std::vector<SweepReport> reports;
    for (int n : n_range) {
        if (n < 2)
            throw std::domain_error("verify_zeta_product_lemma: n must be >= 2");
        SweepState state("zeta-product-lower(n=" + std::to_string(n) + ")", policy);
        RunningSum logsum(policy.mode);

        auto evaluate = [&](double x) {
            if (policy.mode == Mode::Interval) {
                Interval lhs = exp(logsum.iv);
                Interval rhs = zeta_product_lower_bound(Interval(x), n);
                Interval margin = lhs - rhs;
                state.record(x, margin.lo, 0.0, lhs.lo / rhs.hi);
            } else {
                double lhs = std::exp(logsum.value());
                double rhs = zeta_product_lower_bound(x, n);
                state.record(x, lhs - rhs, rhs, lhs / rhs);
            }
        };

        std::size_t g = 0;
        table.for_each_prime(cut, [&](std::uint64_t p) {
            double q = static_cast<double>(p);
            while (g < grid.size() && grid[g] < q) {
                if (grid[g] >= lo) evaluate(grid[g]);
                ++g;
            }
            bool in_window = q >= lo && q <= hi;
            if (in_window) evaluate(q);
            double pd = static_cast<double>(p);
            double inv = 1.0;
            for (int i = 0; i < n; ++i) inv /= pd;
            logsum.add(-std::log1p(-inv), [&] {
                Interval invI = 1.0 / pow(Interval(pd), static_cast<double>(n));
                return -log1p(-invI);
            });
            if (in_window) evaluate(q);
            while (g < grid.size() && grid[g] == q) {
                evaluate(grid[g]);
                ++g;
            }
        });
        for (; g < grid.size(); ++g) evaluate(grid[g]);
        reports.push_back(state.report);
    }
    return reports;
}

// ---------------------------------------------------------------------
// Field verification
// ---------------------------------------------------------------------

namespace {

std::string join_notes(const std::vector<std::string>& notes) {
    std::string out;
    for (std::size_t i = 0; i < notes.size(); ++i) {
        if (i) out += "; ";
        out += notes[i];
    }
    return out;
}

}  // namespace

BoundReport verify_field(const FieldRecord& rec, const PrecisionPolicy& policy) {
    BoundReport report;
    report.label = rec.label;
    std::vector<std::string> notes;
    // Provenance of the residue: a stored value is exact as given, the
    // formula value is limited by the regulator's input precision.
    notes.push_back(rec.kappa ? "kappa=stored" : "kappa=class-number-formula");

    double kappa_value = residue(rec);
    report.kappa = kappa_value;
    double abs_disc = rec.disc.abs_as_double();
    double log_disc = rec.disc.log_abs();
    double L = std::log(log_disc);
    bool in_domain = abs_disc >= kMinDiscMain;

    // Bounds with the constant zeroed (these also serve as the asymptotic
    // comparator main terms). Evaluated for every field so the corpus can
    // classify constant-zero exceptions even below the theorem domain.
    double upper_0 = std::pow(2.0 * kExpGamma * L, rec.n_K - 1);
    double lower_0 = zeta_value(rec.n_K) / (2.0 * kExpGamma * L);
    bool pass_upper_0 = kappa_value <= upper_0 * (1.0 + policy.slack);
    bool pass_lower_0 = kappa_value >= lower_0 * (1.0 - policy.slack);
    if (pass_upper_0 && pass_lower_0) {
        notes.push_back("const0=pass");
    } else {
        std::string sides;
        if (!pass_upper_0) sides = "upper";
        if (!pass_lower_0) sides += sides.empty() ? "lower" : ",lower";
        notes.push_back("const0=fail(" + sides + ")");
    }

    if (in_domain) {
        if (policy.mode == Mode::Interval) {
            Interval kI = residue_enclosure(rec);
            Interval logI = rec.disc.log_abs_enclosure();
            Interval upper = theorem_upper_enclosure(rec.n_K, logI);
            Interval lower = theorem_lower_enclosure(rec.n_K, logI);
            report.upper_19 = upper.mid();
            report.lower_19 = lower.mid();
            report.pass_upper = kI.hi <= upper.lo;
            report.pass_lower = kI.lo >= lower.hi;
        } else {
            report.upper_19 = theorem_upper_from_log(rec.n_K, log_disc);
            report.lower_19 = theorem_lower_from_log(rec.n_K, log_disc);
            report.pass_upper = kappa_value <= report.upper_19 * (1.0 + policy.slack);
            report.pass_lower = kappa_value >= report.lower_19 * (1.0 - policy.slack);
        }
    } else {
        notes.push_back("below-domain |disc| < 14; flags unset");
    }

    constexpr double kEE = 15.154262241479264;  // e^e
    if (abs_disc > kEE) {
        report.x_used = x_of_disc(abs_disc);
    } else {
        report.x_used = 0.0;
        notes.push_back("x_of_disc undefined (|disc| <= e^e)");
    }

    try {
        report.c_min_upper = min_constant_upper_from_log(kappa_value, rec.n_K, log_disc);
        report.c_min_lower = min_constant_lower_from_log(kappa_value, rec.n_K, log_disc);
    } catch (const std::domain_error&) {
        report.c_min_upper = std::numeric_limits<double>::quiet_NaN();
        report.c_min_lower = std::numeric_limits<double>::quiet_NaN();
        notes.push_back("min-constant pole (ln ln |disc| = 1)");
    }

    ComparatorRecord comp;
    UncondBounds ub = uncond_bounds_from_log(rec.n_K, log_disc);
    comp.uncond_lower = ub.lower;
    comp.uncond_upper = ub.upper;
    comp.cho_kim_lower = lower_0;
    comp.cho_kim_upper = upper_0;
    if (abs_disc >= kPalSimMinDisc)
        comp.pal_simonic_upper = std::pow(
            2.0 * std::exp(kGamma + kPalSimConst / L), rec.n_K - 1);
    report.comparators = comp;

    report.notes = join_notes(notes);
    return report;
}

ShortSumReport verify_short_sum(const FieldRecord& rec, const PrimeTable& table,
                                double x, const PrecisionPolicy& policy,
                                std::optional<double> kappa_override) {
    if (!rec.poly)
        throw std::invalid_argument("verify_short_sum: record has no polynomial");
    ShortSumReport out;
    out.label = rec.label;
    out.x = x;
    out.sigma_value = sigma(*rec.poly, rec.bad_primes, table, x, policy);
    double kappa_value = kappa_override ? *kappa_override : residue(rec);
    out.ln_kappa = std::log(kappa_value);
    out.deviation = std::fabs(out.ln_kappa - out.sigma_value);
    out.bound = short_sum_bound(x, rec.n_K, rec.disc.log_abs());
    out.margin = out.bound - out.deviation;
    out.pass = out.margin >= -policy.slack * out.bound;
    return out;
}

CorpusSummary run_corpus(const std::vector<FieldRecord>& records,
                         const CorpusOptions& options) {
    CorpusSummary summary;
    summary.total = records.size();
    summary.reports.resize(records.size());

    bool with_short_sum = options.table != nullptr &&
                          options.short_sum_x >= kShortSumMinX;

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            BoundReport rep = verify_field(records[i], options.policy);
            if (with_short_sum && records[i].poly) {
                ShortSumReport ss = verify_short_sum(
                    records[i], *options.table, options.short_sum_x, options.policy);
                rep.notes += ss.pass ? "; shortsum=pass" : "; shortsum=fail";
            }
            summary.reports[i] = std::move(rep);
        }
    };

    unsigned threads = options.threads;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || records.size() < 32) {
        work(0, records.size());
    } else {
        unsigned n = static_cast<unsigned>(
            std::min<std::size_t>(threads, records.size()));
        std::vector<std::thread> pool;
        std::size_t per = (records.size() + n - 1) / n;
        for (unsigned t = 0; t < n; ++t) {
            std::size_t b = t * per, e = std::min(records.size(), b + per);
            if (b >= e) break;
            pool.emplace_back(work, b, e);
        }
        for (auto& th : pool) th.join();
    }

    std::stable_sort(summary.reports.begin(), summary.reports.end(),
                     [](const BoundReport& a, const BoundReport& b) {
                         return a.label < b.label;
                     });
    return summarize_reports(std::move(summary.reports));
}

CorpusSummary summarize_reports(std::vector<BoundReport> reports) {
    CorpusSummary summary;
    summary.total = reports.size();
    for (const auto& r : reports) {
        bool below = r.notes.find("below-domain") != std::string::npos;
        if (below) {
            summary.below_domain.push_back(r.label);
        } else {
            ++summary.in_domain;
            if (r.pass_upper && r.pass_lower) ++summary.pass_19;
        }
        if (r.notes.find("const0=pass") != std::string::npos)
            ++summary.pass_0;
        else
            summary.const0_exceptions.push_back(r.label);
    }
    summary.reports = std::move(reports);
    return summary;
}

void print_sweep(std::ostream& out, const SweepReport& report) {
    out << (report.pass() ? "[PASS] " : "[FAIL] ") << report.name << ": points="
        << report.points << " violations=" << report.violations
        << " min_margin=" << report.min_margin << " at x=" << report.argmin_x;
    if (std::isfinite(report.min_ratio)) out << " min_ratio=" << report.min_ratio;
    if (report.rigorous) out << " (rigorous)";
    out << '\n';
}

void print_summary(std::ostream& out, const CorpusSummary& summary) {
    out << "fields: " << summary.total << "  in-domain(|disc|>=14): "
        << summary.in_domain << "  pass@const19: " << summary.pass_19
        << "  pass@const0: " << summary.pass_0 << '\n';
    out << "const0 exceptions (" << summary.const0_exceptions.size() << "):";
    for (const auto& l : summary.const0_exceptions) out << ' ' << l;
    out << '\n';
    if (!summary.below_domain.empty()) {
        out << "below-domain fields (" << summary.below_domain.size() << "):";
        for (const auto& l : summary.below_domain) out << ' ' << l;
        out << '\n';
    }
}

}  // namespace kappa
