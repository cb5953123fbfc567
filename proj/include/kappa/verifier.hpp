// verifier.hpp
// Sweeps that check the conditional envelopes against the exact prime
// sums, per-field verification of the residue bounds, and corpus runs
// with aggregate summaries.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kappa/field_store.hpp"
#include "kappa/precision.hpp"
#include "kappa/prime_table.hpp"

namespace kappa {

struct SweepReport {
    std::string name;
    std::size_t points = 0;      // evaluation points (grid + both jump sides)
    std::size_t violations = 0;
    double min_margin = 0.0;     // bound minus deviation (or lhs minus rhs)
    double argmin_x = 0.0;
    double min_ratio = 0.0;      // lhs/rhs at its tightest (lemma sweeps)
    bool rigorous = false;       // margins are interval lower bounds

    bool pass() const { return violations == 0; }
};

// Geometric grid of n points spanning [lo, hi], endpoints included.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

// |big_psi(x) - ln ln x - gamma| <= psi_error_bound(x) at every grid point
// and both sides of every prime-power jump in [min(grid), max(grid)].
// Requires min(grid) >= e, max(grid) <= table.limit().
SweepReport verify_psi_theorem(const PrimeTable& table,
                               const std::vector<double>& grid,
                               const PrecisionPolicy& policy = {});

// mertens_product(x) >= mertens_lower_bound(x) on [23.8, max(grid)].
SweepReport verify_mertens_lemma(const PrimeTable& table,
                                 const std::vector<double>& grid,
                                 const PrecisionPolicy& policy = {});

// zeta_truncated_product(x, n) >= zeta_product_lower_bound(x, n) for each
// n in n_range over [59, max(grid)].
std::vector<SweepReport> verify_zeta_product_lemma(
    const PrimeTable& table, const std::vector<double>& grid,
    const std::vector<int>& n_range, const PrecisionPolicy& policy = {});

// Theorem check for one field: residue vs the two bounds at the published
// constant, minimal replacement constants, comparators. Never throws on a
// validated record; fields with |disc| < 14 come back flagged in notes
// with pass flags unset.
BoundReport verify_field(const FieldRecord& rec, const PrecisionPolicy& policy = {});

struct ShortSumReport {
    std::string label;
    double x = 0.0;
    double sigma_value = 0.0;
    double ln_kappa = 0.0;
    double deviation = 0.0;   // |ln kappa - Sigma(x)|
    double bound = 0.0;
    double margin = 0.0;      // bound - deviation
    bool pass = false;
};

// |ln kappa - Sigma(x)| <= short_sum_bound(x, n_K, ln|disc|); requires the
// record to carry a defining polynomial and decompositions for every
// untrusted prime <= x. kappa_override replaces the record residue (used
// by the forced-violation test).
ShortSumReport verify_short_sum(const FieldRecord& rec, const PrimeTable& table,
                                double x, const PrecisionPolicy& policy = {},
                                std::optional<double> kappa_override = {});

struct CorpusOptions {
    PrecisionPolicy policy{};
    unsigned threads = 0;            // 0 = hardware concurrency
    const PrimeTable* table = nullptr;  // enables short-sum checks when set
    double short_sum_x = 0.0;           // and this is >= 5e5
};

struct CorpusSummary {
    std::vector<BoundReport> reports;   // sorted by label
    std::size_t total = 0;
    std::size_t in_domain = 0;          // |disc| >= 14
    std::size_t pass_19 = 0;            // both bounds at the published constant
    std::size_t pass_0 = 0;             // both bounds with the constant zeroed
    std::vector<std::string> const0_exceptions;  // labels failing at 0
    std::vector<std::string> below_domain;       // labels with |disc| < 14
};

CorpusSummary run_corpus(const std::vector<FieldRecord>& records,
                         const CorpusOptions& options = {});

// Human-readable digest of a corpus summary / sweep reports.
void print_summary(std::ostream& out, const CorpusSummary& summary);
void print_sweep(std::ostream& out, const SweepReport& report);

// Reconstructs the aggregate counters from report rows (as read back from
// a report file; verdicts at constant zero ride in the notes field).
CorpusSummary summarize_reports(std::vector<BoundReport> reports);

}  // namespace kappa
