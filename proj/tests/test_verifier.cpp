#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "kappa/bounds.hpp"
#include "kappa/constants.hpp"
#include "kappa/quadratic.hpp"
#include "kappa/verifier.hpp"

using namespace kappa;

namespace {
const PrimeTable& table_1e5() {
    static PrimeTable t = PrimeTable::sieve(100'000);
    return t;
}

FieldRecord quadratic_record(long long D) {
    auto fields = generate_quadratic_fields(std::llabs(D));
    for (auto& rec : fields) {
        if ((rec.disc.negative() ? -1 : 1) *
                static_cast<long long>(rec.disc.abs_as_double()) == D)
            return rec;
    }
    throw std::runtime_error("discriminant not found");
}
}  // namespace

TEST_CASE("geometric grid endpoints and growth") {
    auto g = geometric_grid(2.0, 2048.0, 11);
    REQUIRE(g.size() == 11);
    CHECK(g.front() == 2.0);
    CHECK(g.back() == 2048.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("psi sweep at the single point e") {
    std::vector<double> grid{std::numbers::e};
    auto rep = verify_psi_theorem(table_1e5(), grid);
    CHECK(rep.pass());
    // |1/2 - gamma| vs 9/(8 pi sqrt e): margin = 0.21720 - 0.07722.
    CHECK(rep.min_margin == doctest::Approx(0.2171977934 - 0.0772156649).epsilon(1e-6));
}

TEST_CASE("psi sweep over the full table, three modes") {
    auto grid = geometric_grid(std::numbers::e, 1e5, 2000);
    for (Mode m : {Mode::FastFloat, Mode::Extended, Mode::Interval}) {
        PrecisionPolicy policy{m, 1e-12};
        auto rep = verify_psi_theorem(table_1e5(), grid, policy);
        CHECK(rep.pass());
        CHECK(rep.min_margin > 0.0);
        CHECK(rep.rigorous == (m == Mode::Interval));
        CHECK(rep.points > 2 * 9592);  // both sides of every prime jump
    }
}

TEST_CASE("psi sweep margins are reproducible") {
    auto grid = geometric_grid(std::numbers::e, 5e4, 500);
    auto a = verify_psi_theorem(table_1e5(), grid);
    auto b = verify_psi_theorem(table_1e5(), grid);
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.argmin_x == b.argmin_x);
}

TEST_CASE("psi sweep rejects out-of-domain grids") {
    CHECK_THROWS_AS(verify_psi_theorem(table_1e5(), {2.0, 10.0}), std::domain_error);
    CHECK_THROWS_AS(verify_psi_theorem(table_1e5(), {3.0, 2e5}), std::out_of_range);
    CHECK_THROWS_AS(verify_psi_theorem(table_1e5(), {}), std::invalid_argument);
}

TEST_CASE("mertens sweep holds with its tightest point at the domain edge") {
    auto grid = geometric_grid(23.8, 1e5, 2000);
    auto rep = verify_mertens_lemma(table_1e5(), grid);
    CHECK(rep.pass());
    CHECK(rep.min_margin > 0.0);
    CHECK(rep.argmin_x == 23.8);  // hand-checked: margin ~1.9e-4 there
    CHECK(rep.min_margin == doctest::Approx(1.9e-4).epsilon(0.2));

    PrecisionPolicy rigorous{Mode::Interval, 1e-12};
    auto rrep = verify_mertens_lemma(table_1e5(), grid, rigorous);
    CHECK(rrep.pass());
}

TEST_CASE("zeta product sweeps across the degree range") {
    auto grid = geometric_grid(59.0, 1e5, 1000);
    auto reps = verify_zeta_product_lemma(table_1e5(), grid, {2, 3, 4, 5, 6, 7, 8});
    REQUIRE(reps.size() == 7);
    for (const auto& rep : reps) {
        CHECK(rep.pass());
        CHECK(rep.min_ratio >= 1.0);
        CHECK(rep.min_ratio < 1.01);  // tight but not equal
    }
}

TEST_CASE("field verification: the exceptional imaginary field") {
    auto rec = quadratic_record(-163);
    auto rep = verify_field(rec);
    CHECK(rep.pass_upper);
    CHECK(rep.pass_lower);
    CHECK(rep.c_min_lower > 0.0);  // exception to the zeroed constant
    CHECK(rep.notes.find("const0=fail(lower)") != std::string::npos);
    CHECK(rep.x_used == doctest::Approx(x_of_disc(163.0)));
    REQUIRE(rep.comparators.has_value());
    CHECK_FALSE(rep.comparators->pal_simonic_upper.has_value());
}

TEST_CASE("field verification: below-domain field is reported, not dropped") {
    auto rec = quadratic_record(5);
    auto rep = verify_field(rec);
    CHECK_FALSE(rep.pass_upper);
    CHECK_FALSE(rep.pass_lower);
    CHECK(rep.notes.find("below-domain") != std::string::npos);
    CHECK(std::isfinite(rep.c_min_lower));  // still informative
    CHECK(rep.notes.find("const0=fail") != std::string::npos);
}

TEST_CASE("field verification on a large synthetic discriminant") {
    FieldRecord rec;
    rec.label = "big";
    rec.n_K = 2;
    rec.r1 = 2;
    rec.r2 = 0;
    rec.disc = Disc::parse("123456789012345678901234567890123456789012345678901");
    rec.h = 1;
    rec.reg = 1.0;
    rec.w = 2;
    rec.kappa = 1.0;
    validate_record(rec);
    auto rep = verify_field(rec);
    CHECK(rep.pass_upper);
    CHECK(rep.pass_lower);
    CHECK(rep.notes.find("kappa=stored") != std::string::npos);
    REQUIRE(rep.comparators.has_value());
    CHECK(rep.comparators->pal_simonic_upper.has_value());
    CHECK(std::isfinite(rep.x_used));
    // ln|disc| = 50 full digits plus the leading window.
    double expect_log = rec.disc.log_abs();
    CHECK(rep.x_used ==
          doctest::Approx(x_of_disc(std::exp(expect_log))).epsilon(1e-9));
}

TEST_CASE("residue provenance is recorded in notes") {
    auto rec = quadratic_record(17);
    auto stored = verify_field(rec);
    CHECK(stored.notes.find("kappa=stored") != std::string::npos);
    rec.kappa.reset();
    auto formula = verify_field(rec);
    CHECK(formula.notes.find("kappa=class-number-formula") != std::string::npos);
}

TEST_CASE("precision policy rejects nonpositive slack") {
    PrecisionPolicy bad{Mode::Extended, 0.0};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PrecisionPolicy good{Mode::Extended, 1e-9};
    CHECK_NOTHROW(good.validate());
}

TEST_CASE("field verification: ordinary real quadratic passes at 19") {
    auto rec = quadratic_record(17);
    auto rep = verify_field(rec);
    CHECK(rep.pass_upper);
    CHECK(rep.pass_lower);
    CHECK(rep.notes.find("const0=pass") != std::string::npos);
    CHECK(rep.upper_19 > rep.kappa);
    CHECK(rep.lower_19 < rep.kappa);
}

TEST_CASE("pass flags are monotone in the constant past e^e") {
    auto rec = quadratic_record(-20);
    double kappa_value = residue(rec);
    double log_disc = rec.disc.log_abs();
    double c_eq = min_constant_upper_from_log(kappa_value, 2, log_disc);
    for (double delta : {1e-6, 1e-3, 1.0}) {
        CHECK(kappa_value <= theorem_upper_from_log(2, log_disc, c_eq + delta));
        CHECK(kappa_value >= theorem_upper_from_log(2, log_disc, c_eq - delta));
    }
    double cl_eq = min_constant_lower_from_log(kappa_value, 2, log_disc);
    for (double delta : {1e-6, 1e-3, 1.0}) {
        CHECK(kappa_value >= theorem_lower_from_log(2, log_disc, cl_eq + delta));
        CHECK(kappa_value <= theorem_lower_from_log(2, log_disc, cl_eq - delta));
    }
}

TEST_CASE("interval-mode field verdicts agree with slack verdicts") {
    PrecisionPolicy rigorous{Mode::Interval, 1e-12};
    for (long long D : {-163LL, 17LL, -20LL, 401LL}) {
        auto rec = quadratic_record(D);
        auto a = verify_field(rec);
        auto b = verify_field(rec, rigorous);
        CHECK(a.pass_upper == b.pass_upper);
        CHECK(a.pass_lower == b.pass_lower);
    }
}

TEST_CASE("short-sum forced violation fails as designed") {
    auto rec = quadratic_record(5);
    PrimeTable table = PrimeTable::sieve(500'000);
    auto good = verify_short_sum(rec, table, 5e5);
    CHECK(good.pass);
    double bad_kappa = residue(rec) * std::exp(2.0 * good.bound);
    auto bad = verify_short_sum(rec, table, 5e5, {}, bad_kappa);
    CHECK_FALSE(bad.pass);
    CHECK(bad.deviation > bad.bound);
}

TEST_CASE("corpus run: parallel equals serial and ordering is by label") {
    auto fields = generate_quadratic_fields(2000);
    CorpusOptions serial;
    serial.threads = 1;
    CorpusOptions parallel;
    parallel.threads = 4;
    auto a = run_corpus(fields, serial);
    auto b = run_corpus(fields, parallel);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].label == b.reports[i].label);
        CHECK(a.reports[i].kappa == b.reports[i].kappa);
        CHECK(a.reports[i].c_min_upper == b.reports[i].c_min_upper);
        CHECK(a.reports[i].notes == b.reports[i].notes);
    }
    CHECK(std::is_sorted(a.reports.begin(), a.reports.end(),
                         [](const BoundReport& x, const BoundReport& y) {
                             return x.label < y.label;
                         }));
}

TEST_CASE("corpus run at |disc| <= 10^4 reproduces the exception set") {
    auto fields = generate_quadratic_fields(10'000);
    auto summary = run_corpus(fields, {});
    CHECK(summary.pass_19 == summary.in_domain);
    // Exceptions: Q(sqrt(-163)) plus the fundamental discs in [-4, 8].
    std::vector<std::string> expected{"Q(sqrt(-1))", "Q(sqrt(-163))",
                                      "Q(sqrt(-3))", "Q(sqrt(2))", "Q(sqrt(5))"};
    auto got = summary.const0_exceptions;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("empty corpus gives an empty summary") {
    auto summary = run_corpus({}, {});
    CHECK(summary.total == 0);
    CHECK(summary.reports.empty());
    CHECK(summary.const0_exceptions.empty());
}

TEST_CASE("summary survives the report-file round trip") {
    auto fields = generate_quadratic_fields(500);
    auto summary = run_corpus(fields, {});
    std::ostringstream out;
    write_reports(out, summary.reports);
    std::istringstream in(out.str());
    auto again = summarize_reports(read_reports(in));
    CHECK(again.total == summary.total);
    CHECK(again.pass_19 == summary.pass_19);
    CHECK(again.pass_0 == summary.pass_0);
    CHECK(again.const0_exceptions == summary.const0_exceptions);
    CHECK(again.below_domain == summary.below_domain);
}
