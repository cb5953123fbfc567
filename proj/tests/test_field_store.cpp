#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "kappa/constants.hpp"
#include "kappa/field_store.hpp"

using namespace kappa;

namespace {
bool close_rel(double a, double b, double rel = 1e-12) {
    return std::fabs(a - b) <= rel * std::max({std::fabs(a), std::fabs(b), 1e-30});
}
}  // namespace

TEST_CASE("disc parsing and logarithm") {
    auto d = Disc::parse("-163");
    CHECK(d.negative());
    CHECK(d.digits() == "163");
    CHECK(d.abs_as_double() == 163.0);
    CHECK(close_rel(d.log_abs(), std::log(163.0)));

    auto big = Disc::parse("123456789012345678901234567890");
    CHECK(close_rel(big.log_abs(), 29.0 * std::log(10.0) + std::log(1.2345678901234568),
                    1e-12));
    CHECK(big.log_abs_enclosure().contains(big.log_abs()));

    CHECK(Disc::parse("007").digits() == "7");
    CHECK_FALSE(Disc::parse("-0").negative());
    CHECK_THROWS_AS(Disc::parse("12x"), std::invalid_argument);
    CHECK_THROWS_AS(Disc::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Disc::parse("0").log_abs(), std::domain_error);
}

TEST_CASE("record parsing accepts the golden-ratio field") {
    std::istringstream in(
        "label,degree,r1,r2,disc,class_number,regulator,torsion,kappa,poly,bad_primes\n"
        "Q(sqrt(5)),2,2,0,5,1,0.48121182505960345,2,,-1 -1 1,5:1\n");
    auto recs = parse_records(in, RecordFormat::Csv);
    REQUIRE(recs.size() == 1);
    const auto& r = recs[0];
    CHECK(r.label == "Q(sqrt(5))");
    CHECK(r.n_K == 2);
    CHECK(r.w == 2);
    REQUIRE(r.poly.has_value());
    CHECK(r.poly->degree() == 2);
    REQUIRE(r.bad_primes.size() == 1);
    CHECK(r.bad_primes[0].p == 5);
    CHECK(r.bad_primes[0].degrees == std::vector<int>{1});
    CHECK(close_rel(residue(r), 0.430408940964004038889433233, 1e-12));
}

TEST_CASE("record validation rejections carry line numbers") {
    std::istringstream bad_sig(
        "label,degree,r1,r2,disc,class_number,regulator,torsion\n"
        "x,2,1,1,8,1,1.0,2\n");  // r1 + 2 r2 = 3 != 2
    CHECK_THROWS_WITH_AS(parse_records(bad_sig, RecordFormat::Csv),
                         doctest::Contains("line 2"), std::invalid_argument);

    std::istringstream bad_sign(
        "label,degree,r1,r2,disc,class_number,regulator,torsion\n"
        "x,2,2,0,-5,1,1.0,2\n");  // r2 = 0 needs positive disc
    CHECK_THROWS_AS(parse_records(bad_sign, RecordFormat::Csv), std::invalid_argument);

    std::istringstream bad_disc(
        "label,degree,r1,r2,disc,class_number,regulator,torsion\n"
        "x,2,2,0,1,1,1.0,2\n");  // |disc| < 3
    CHECK_THROWS_AS(parse_records(bad_disc, RecordFormat::Csv), std::invalid_argument);
}

TEST_CASE("jsonl records round-trip against csv") {
    std::istringstream in(
        "{\"label\":\"Q(i)\",\"degree\":2,\"r1\":0,\"r2\":1,\"disc\":-4,"
        "\"class_number\":1,\"regulator\":1.0,\"torsion\":4,"
        "\"poly\":[1,0,1],\"bad_primes\":[{\"p\":2,\"degrees\":[1]}]}\n");
    auto recs = parse_records(in, RecordFormat::JsonLines);
    REQUIRE(recs.size() == 1);
    CHECK(close_rel(residue(recs[0]), kPi / 4.0, 1e-14));

    std::ostringstream out;
    write_records(out, recs, RecordFormat::JsonLines);
    std::istringstream back(out.str());
    auto again = parse_records(back, RecordFormat::JsonLines);
    REQUIRE(again.size() == 1);
    CHECK(again[0].label == recs[0].label);
    CHECK(again[0].disc.to_string() == "-4");
    CHECK(again[0].bad_primes.size() == 1);
}

TEST_CASE("record csv write/parse is the identity on valid data") {
    std::istringstream in(
        "label,degree,r1,r2,disc,class_number,regulator,torsion,kappa,poly,bad_primes\n"
        "Q(sqrt(5)),2,2,0,5,1,0.48121182505960345,2,0.43040894096400404,-1 -1 1,5:1\n"
        "Q(cbrt(2)),3,1,1,-108,1,1.3473773483293841,2,,-2 0 0 1,2:1;3:1\n");
    auto recs = parse_records(in, RecordFormat::Csv);
    REQUIRE(recs.size() == 2);
    std::ostringstream out;
    write_records(out, recs, RecordFormat::Csv);
    std::istringstream back(out.str());
    auto again = parse_records(back, RecordFormat::Csv);
    REQUIRE(again.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(again[i].label == recs[i].label);
        CHECK(again[i].n_K == recs[i].n_K);
        CHECK(again[i].disc.to_string() == recs[i].disc.to_string());
        CHECK(again[i].h == recs[i].h);
        CHECK(again[i].reg == recs[i].reg);
        CHECK(again[i].w == recs[i].w);
        CHECK(again[i].kappa == recs[i].kappa);
        CHECK(again[i].poly->coeffs() == recs[i].poly->coeffs());
        CHECK(again[i].bad_primes.size() == recs[i].bad_primes.size());
        for (std::size_t j = 0; j < again[i].bad_primes.size(); ++j) {
            CHECK(again[i].bad_primes[j].p == recs[i].bad_primes[j].p);
            CHECK(again[i].bad_primes[j].degrees == recs[i].bad_primes[j].degrees);
        }
    }
}

TEST_CASE("residue at reference fields") {
    FieldRecord r163;
    r163.label = "Q(sqrt(-163))";
    r163.n_K = 2;
    r163.r1 = 0;
    r163.r2 = 1;
    r163.disc = Disc::parse("-163");
    r163.h = 1;
    r163.reg = 1.0;
    r163.w = 2;
    validate_record(r163);
    CHECK(close_rel(residue(r163), kPi / std::sqrt(163.0), 1e-14));
    CHECK(residue_enclosure(r163).contains(residue(r163)));

    // Direct kappa column overrides the formula.
    r163.kappa = 0.125;
    CHECK(residue(r163) == 0.125);
}

TEST_CASE("residue is linear in the class number") {
    FieldRecord r;
    r.label = "t";
    r.n_K = 2;
    r.r1 = 2;
    r.r2 = 0;
    r.disc = Disc::parse("40");
    r.h = 2;
    r.reg = 1.2512275687180646;
    r.w = 2;
    double base = residue(r);
    r.h = 4;
    CHECK(close_rel(residue(r), 2.0 * base, 1e-15));
}

TEST_CASE("imaginary quadratic residues follow 2 pi h/(w sqrt disc)") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> dd(5, 4000);
    std::uniform_int_distribution<long long> hh(1, 50);
    for (int i = 0; i < 200; ++i) {
        long long absd = dd(rng) * 4 + 3;  // some negative-looking disc
        FieldRecord r;
        r.label = "t";
        r.n_K = 2;
        r.r1 = 0;
        r.r2 = 1;
        r.disc = Disc::parse("-" + std::to_string(absd));
        r.h = hh(rng);
        r.reg = 1.0;
        r.w = 2;
        CHECK(close_rel(residue(r),
                        2.0 * kPi * static_cast<double>(r.h) /
                            (2.0 * std::sqrt(static_cast<double>(absd))),
                        1e-13));
    }
}

TEST_CASE("reports round-trip losslessly") {
    std::vector<BoundReport> reports;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> val(1e-8, 1e8);
    for (int i = 0; i < 500; ++i) {
        BoundReport r;
        r.label = "field-" + std::to_string(i) + (i % 7 == 0 ? ",comma" : "");
        r.kappa = val(rng);
        r.x_used = val(rng);
        r.upper_19 = val(rng);
        r.lower_19 = val(rng);
        r.pass_upper = i % 2 == 0;
        r.pass_lower = i % 3 == 0;
        r.c_min_upper = val(rng) - 5e7;
        r.c_min_lower = val(rng) - 5e7;
        if (i % 2 == 0) {
            ComparatorRecord c;
            c.uncond_lower = val(rng);
            c.uncond_upper = val(rng);
            c.cho_kim_lower = val(rng);
            c.cho_kim_upper = val(rng);
            if (i % 4 == 0) c.pal_simonic_upper = val(rng);
            r.comparators = c;
        }
        r.notes = i % 5 == 0 ? "const0=pass; \"quoted\"" : "const0=fail(lower)";
        reports.push_back(std::move(r));
    }
    std::ostringstream out;
    write_reports(out, reports);
    std::istringstream in(out.str());
    auto again = read_reports(in);
    REQUIRE(again.size() == reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(again[i].label == reports[i].label);
        CHECK(again[i].kappa == reports[i].kappa);  // bit-identical via %.17g
        CHECK(again[i].x_used == reports[i].x_used);
        CHECK(again[i].upper_19 == reports[i].upper_19);
        CHECK(again[i].lower_19 == reports[i].lower_19);
        CHECK(again[i].pass_upper == reports[i].pass_upper);
        CHECK(again[i].pass_lower == reports[i].pass_lower);
        CHECK(again[i].c_min_upper == reports[i].c_min_upper);
        CHECK(again[i].c_min_lower == reports[i].c_min_lower);
        CHECK(again[i].comparators.has_value() == reports[i].comparators.has_value());
        if (again[i].comparators) {
            CHECK(again[i].comparators->uncond_lower ==
                  reports[i].comparators->uncond_lower);
            CHECK(again[i].comparators->pal_simonic_upper ==
                  reports[i].comparators->pal_simonic_upper);
        }
        CHECK(again[i].notes == reports[i].notes);
    }
}

TEST_CASE("empty report list gives a header-only file") {
    std::ostringstream out;
    write_reports(out, {});
    std::string text = out.str();
    CHECK(text.substr(0, 5) == "label");
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    std::istringstream in(text);
    CHECK(read_reports(in).empty());
}
