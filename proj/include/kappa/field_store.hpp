// field_store.hpp
// Number-field records (invariants as published in field databases), the
// class-number-formula residue, and the report files the verifier writes.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kappa/interval.hpp"
#include "kappa/splitting.hpp"

namespace kappa {

// Signed integer of arbitrary size kept as validated decimal text. Only
// ln|value| and moderate-size comparisons enter the bounds, so the numeric
// accessors are a double view (exact up to 2^53, +inf past double range)
// and a windowed logarithm good to ~1e-16 relative.
class Disc {
public:
    Disc() = default;
    static Disc parse(const std::string& text);  // throws on malformed input

    bool negative() const { return negative_; }
    const std::string& digits() const { return digits_; }
    std::string to_string() const { return (negative_ ? "-" : "") + digits_; }

    double abs_as_double() const;
    double log_abs() const;  // ln|value|; value must be nonzero
    Interval log_abs_enclosure() const;

    bool abs_at_least(double threshold) const { return abs_as_double() >= threshold; }

private:
    bool negative_ = false;
    std::string digits_ = "0";  // no sign, no leading zeros
};

struct FieldRecord {
    std::string label;
    int n_K = 0;
    int r1 = 0;
    int r2 = 0;
    Disc disc;
    long long h = 0;          // class number
    double reg = 0.0;         // regulator
    int w = 0;                // torsion order
    std::optional<double> kappa;  // residue, when supplied directly
    std::optional<DefiningPolynomial> poly;
    std::vector<BadPrimeDecomposition> bad_primes;
};

// Validates the record invariants: r1 + 2 r2 = n_K, |disc| >= 3,
// sign(disc) = (-1)^r2, positive h/reg/w. Throws std::invalid_argument.
void validate_record(const FieldRecord& rec);

enum class RecordFormat { Csv, JsonLines };

// Parses the field file format (CSV header
// label,degree,r1,r2,disc,class_number,regulator,torsion[,kappa][,poly][,bad_primes]
// or JSON-lines with the same field names). Rejections carry line numbers.
std::vector<FieldRecord> parse_records(std::istream& in, RecordFormat format);

std::string format_record_csv_header();
std::string format_record_csv_row(const FieldRecord& rec);
void write_records(std::ostream& out, const std::vector<FieldRecord>& recs,
                   RecordFormat format);

// kappa = 2^r1 (2 pi)^r2 h reg / (w sqrt|disc|), unless the record carries
// the residue directly.
double residue(const FieldRecord& rec);
Interval residue_enclosure(const FieldRecord& rec);

// Comparator values attached to a report row; absent fields serialize as
// empty columns.
struct ComparatorRecord {
    double uncond_lower = 0.0;
    double uncond_upper = 0.0;
    double cho_kim_lower = 0.0;
    double cho_kim_upper = 0.0;
    std::optional<double> pal_simonic_upper;
};

struct BoundReport {
    std::string label;
    double kappa = 0.0;
    double x_used = 0.0;
    double upper_19 = 0.0;
    double lower_19 = 0.0;
    bool pass_upper = false;
    bool pass_lower = false;
    double c_min_upper = 0.0;
    double c_min_lower = 0.0;
    std::optional<ComparatorRecord> comparators;
    std::string notes;
};

// Report CSV: the BoundReport fields in declaration order (comparators
// flattened into their five columns); reals carry 17 significant digits so
// write -> read is lossless.
void write_reports(std::ostream& out, const std::vector<BoundReport>& reports);
std::vector<BoundReport> read_reports(std::istream& in);

}  // namespace kappa
