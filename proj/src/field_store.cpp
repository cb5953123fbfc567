// field_store.cpp

#include "kappa/field_store.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "kappa/constants.hpp"

namespace kappa {

using json = nlohmann::json;

// ---------------------------------------------------------------------
// Disc
// ---------------------------------------------------------------------

Disc Disc::parse(const std::string& text) {
    Disc d;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        d.negative_ = text[i] == '-';
        ++i;
    }
    if (i >= text.size())
        throw std::invalid_argument("disc: empty integer");
    std::string digits;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("disc: malformed integer '" + text + "'");
        digits += text[i];
    }
    std::size_t nz = digits.find_first_not_of('0');
    d.digits_ = nz == std::string::npos ? "0" : digits.substr(nz);
    if (d.digits_ == "0") d.negative_ = false;
    return d;
}

double Disc::abs_as_double() const {
    if (digits_.size() > 18) {
        double v = 0.0;
        for (char c : digits_) {
            v = v * 10.0 + (c - '0');
            if (v > 1e300) return std::numeric_limits<double>::infinity();
        }
        return v;
    }
    std::uint64_t v = 0;
    for (char c : digits_) v = v * 10 + static_cast<std::uint64_t>(c - '0');
    return static_cast<double>(v);
}

double Disc::log_abs() const {
    if (digits_ == "0") throw std::domain_error("disc: log of zero");
    // ln(value) = ln(leading 18-digit window) + (#dropped digits) ln 10.
    constexpr std::size_t kWindow = 18;
    std::size_t take = std::min(digits_.size(), kWindow);
    std::uint64_t head = 0;
    for (std::size_t i = 0; i < take; ++i)
        head = head * 10 + static_cast<std::uint64_t>(digits_[i] - '0');
    double dropped = static_cast<double>(digits_.size() - take);
    return std::log(static_cast<double>(head)) +
           dropped * 2.302585092994045684017991454684364208;
}

Interval Disc::log_abs_enclosure() const {
    // The windowed log is exact to one ulp of each factor; widen a little
    // more to cover the truncated digits (relative 1e-18 on the head).
    double v = log_abs();
    Interval enc = enclose_constant(v);
    return {detail::step_down(enc.lo, 2), detail::step_up(enc.hi, 2)};
}

// ---------------------------------------------------------------------
// Record validation
// ---------------------------------------------------------------------

void validate_record(const FieldRecord& rec) {
    if (rec.n_K < 2)
        throw std::invalid_argument("record " + rec.label + ": degree must be >= 2");
    if (rec.r1 < 0 || rec.r2 < 0 || rec.r1 + 2 * rec.r2 != rec.n_K)
        throw std::invalid_argument("record " + rec.label +
                                    ": r1 + 2 r2 != degree");
    if (!rec.disc.abs_at_least(3.0))
        throw std::invalid_argument("record " + rec.label + ": |disc| must be >= 3");
    bool want_negative = (rec.r2 % 2) == 1;
    if (rec.disc.negative() != want_negative)
        throw std::invalid_argument("record " + rec.label +
                                    ": disc sign inconsistent with r2");
    if (rec.h <= 0)
        throw std::invalid_argument("record " + rec.label + ": class number must be > 0");
    if (!(rec.reg > 0.0))
        throw std::invalid_argument("record " + rec.label + ": regulator must be > 0");
    if (rec.w <= 0)
        throw std::invalid_argument("record " + rec.label + ": torsion must be > 0");
    if (rec.poly && rec.poly->degree() != rec.n_K)
        throw std::invalid_argument("record " + rec.label +
                                    ": polynomial degree != field degree");
    if (rec.kappa && !(*rec.kappa > 0.0))
        throw std::invalid_argument("record " + rec.label + ": kappa must be > 0");
}

// ---------------------------------------------------------------------
// CSV plumbing
// ---------------------------------------------------------------------

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
    }
}

long long parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
    }
}

std::vector<long long> parse_poly_text(const std::string& s) {
    std::vector<long long> coeffs;
    std::istringstream is(s);
    long long v;
    while (is >> v) coeffs.push_back(v);
    if (!is.eof()) throw std::invalid_argument("malformed poly '" + s + "'");
    return coeffs;
}

// bad_primes text: "p:f1+f2;q:f1" etc.
std::vector<BadPrimeDecomposition> parse_bad_primes_text(const std::string& s) {
    std::vector<BadPrimeDecomposition> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("malformed bad_primes '" + s + "'");
        BadPrimeDecomposition b;
        b.p = static_cast<std::uint64_t>(
            parse_int(trim(item.substr(0, colon)), "bad prime"));
        std::istringstream ds(item.substr(colon + 1));
        std::string deg;
        while (std::getline(ds, deg, '+'))
            b.degrees.push_back(static_cast<int>(parse_int(trim(deg), "residue degree")));
        if (b.degrees.empty())
            throw std::invalid_argument("bad_primes entry without degrees: '" + s + "'");
        out.push_back(std::move(b));
    }
    return out;
}

std::string format_bad_primes_text(const std::vector<BadPrimeDecomposition>& bad) {
    std::string out;
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(bad[i].p);
        out += ':';
        for (std::size_t j = 0; j < bad[i].degrees.size(); ++j) {
            if (j) out += '+';
            out += std::to_string(bad[i].degrees[j]);
        }
    }
    return out;
}

std::string format_poly_text(const DefiningPolynomial& poly) {
    std::string out;
    for (std::size_t i = 0; i < poly.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(poly.coeffs()[i]);
    }
    return out;
}

std::string real17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FieldRecord record_from_fields(const std::vector<std::string>& header,
                               const std::vector<std::string>& fields) {
    if (fields.size() > header.size())
        throw std::invalid_argument("row has more columns than header");
    FieldRecord rec;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string& key = header[i];
        std::string value = trim(fields[i]);
        if (value.empty()) continue;
        if (key == "label") rec.label = value;
        else if (key == "degree") rec.n_K = static_cast<int>(parse_int(value, "degree"));
        else if (key == "r1") rec.r1 = static_cast<int>(parse_int(value, "r1"));
        else if (key == "r2") rec.r2 = static_cast<int>(parse_int(value, "r2"));
        else if (key == "disc") rec.disc = Disc::parse(value);
        else if (key == "class_number") rec.h = parse_int(value, "class_number");
        else if (key == "regulator") rec.reg = parse_real(value, "regulator");
        else if (key == "torsion") rec.w = static_cast<int>(parse_int(value, "torsion"));
        else if (key == "kappa") rec.kappa = parse_real(value, "kappa");
        else if (key == "poly") rec.poly.emplace(parse_poly_text(value));
        else if (key == "bad_primes") rec.bad_primes = parse_bad_primes_text(value);
        else throw std::invalid_argument("unknown column '" + key + "'");
    }
    return rec;
}

FieldRecord record_from_json(const json& j) {
    FieldRecord rec;
    rec.label = j.value("label", std::string{});
    rec.n_K = j.at("degree").get<int>();
    rec.r1 = j.at("r1").get<int>();
    rec.r2 = j.at("r2").get<int>();
    if (j.at("disc").is_string())
        rec.disc = Disc::parse(j.at("disc").get<std::string>());
    else
        rec.disc = Disc::parse(std::to_string(j.at("disc").get<long long>()));
    rec.h = j.at("class_number").get<long long>();
    rec.reg = j.at("regulator").get<double>();
    rec.w = j.at("torsion").get<int>();
    if (j.contains("kappa") && !j.at("kappa").is_null())
        rec.kappa = j.at("kappa").get<double>();
    if (j.contains("poly") && !j.at("poly").is_null()) {
        if (j.at("poly").is_string())
            rec.poly.emplace(parse_poly_text(j.at("poly").get<std::string>()));
        else
            rec.poly.emplace(j.at("poly").get<std::vector<long long>>());
    }
    if (j.contains("bad_primes") && !j.at("bad_primes").is_null()) {
        const json& bp = j.at("bad_primes");
        if (bp.is_string()) {
            rec.bad_primes = parse_bad_primes_text(bp.get<std::string>());
        } else {
            for (const auto& item : bp) {
                BadPrimeDecomposition b;
                b.p = item.at("p").get<std::uint64_t>();
                b.degrees = item.at("degrees").get<std::vector<int>>();
                rec.bad_primes.push_back(std::move(b));
            }
        }
    }
    return rec;
}

}  // namespace

std::vector<FieldRecord> parse_records(std::istream& in, RecordFormat format) {
    std::vector<FieldRecord> records;
    std::string line;
    std::size_t lineno = 0;

    if (format == RecordFormat::Csv) {
        std::vector<std::string> header;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty() || t[0] == '#') continue;
            if (header.empty()) {
                header = csv_split(t);
                for (auto& h : header) h = trim(h);
                continue;
            }
            try {
                FieldRecord rec = record_from_fields(header, csv_split(t));
                validate_record(rec);
                records.push_back(std::move(rec));
            } catch (const std::exception& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                            e.what());
            }
        }
        if (header.empty() && lineno > 0)
            throw std::invalid_argument("csv input without header");
    } else {
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (t.empty()) continue;
            try {
                FieldRecord rec = record_from_json(json::parse(t));
                validate_record(rec);
                records.push_back(std::move(rec));
            } catch (const std::exception& e) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                            e.what());
            }
        }
    }
    return records;
}

std::string format_record_csv_header() {
    return "label,degree,r1,r2,disc,class_number,regulator,torsion,kappa,poly,bad_primes";
}

std::string format_record_csv_row(const FieldRecord& rec) {
    std::ostringstream os;
    os << csv_escape(rec.label) << ',' << rec.n_K << ',' << rec.r1 << ',' << rec.r2
       << ',' << rec.disc.to_string() << ',' << rec.h << ',' << real17(rec.reg) << ','
       << rec.w << ',';
    if (rec.kappa) os << real17(*rec.kappa);
    os << ',';
    if (rec.poly) os << csv_escape(format_poly_text(*rec.poly));
    os << ',';
    if (!rec.bad_primes.empty()) os << csv_escape(format_bad_primes_text(rec.bad_primes));
    return os.str();
}

void write_records(std::ostream& out, const std::vector<FieldRecord>& recs,
                   RecordFormat format) {
    if (format == RecordFormat::Csv) {
        out << format_record_csv_header() << '\n';
        for (const auto& rec : recs) out << format_record_csv_row(rec) << '\n';
        return;
    }
    for (const auto& rec : recs) {
        json j;
        j["label"] = rec.label;
        j["degree"] = rec.n_K;
        j["r1"] = rec.r1;
        j["r2"] = rec.r2;
        j["disc"] = rec.disc.to_string();
        j["class_number"] = rec.h;
        j["regulator"] = rec.reg;
        j["torsion"] = rec.w;
        if (rec.kappa) j["kappa"] = *rec.kappa;
        if (rec.poly) j["poly"] = rec.poly->coeffs();
        if (!rec.bad_primes.empty()) {
            json bp = json::array();
            for (const auto& b : rec.bad_primes)
                bp.push_back({{"p", b.p}, {"degrees", b.degrees}});
            j["bad_primes"] = bp;
        }
        out << j.dump() << '\n';
    }
}

// ---------------------------------------------------------------------
// Residue
// ---------------------------------------------------------------------

double residue(const FieldRecord& rec) {
    if (rec.kappa) return *rec.kappa;
    double num = std::pow(2.0, rec.r1) * std::pow(2.0 * kPi, rec.r2) *
                 static_cast<double>(rec.h) * rec.reg;
    double den = static_cast<double>(rec.w) * std::exp(0.5 * rec.disc.log_abs());
    return num / den;
}

Interval residue_enclosure(const FieldRecord& rec) {
    if (rec.kappa) return enclose_constant(*rec.kappa);
    Interval two_pi = 2.0 * pi_interval();
    Interval num = Interval(std::pow(2.0, rec.r1)) *
                   pow(two_pi, static_cast<double>(rec.r2)) *
                   Interval(static_cast<double>(rec.h)) * enclose_constant(rec.reg);
    Interval den = Interval(static_cast<double>(rec.w)) *
                   exp(0.5 * rec.disc.log_abs_enclosure());
    return num / den;
}

// ---------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------

void write_reports(std::ostream& out, const std::vector<BoundReport>& reports) {
    out << "label,kappa,x_used,upper_19,lower_19,pass_upper,pass_lower,"
           "c_min_upper,c_min_lower,uncond_lower,uncond_upper,cho_kim_lower,"
           "cho_kim_upper,pal_simonic_upper,notes\n";
    for (const auto& r : reports) {
        out << csv_escape(r.label) << ',' << real17(r.kappa) << ','
            << real17(r.x_used) << ',' << real17(r.upper_19) << ','
            << real17(r.lower_19) << ',' << (r.pass_upper ? 1 : 0) << ','
            << (r.pass_lower ? 1 : 0) << ',' << real17(r.c_min_upper) << ','
            << real17(r.c_min_lower) << ',';
        if (r.comparators) {
            const auto& c = *r.comparators;
            out << real17(c.uncond_lower) << ',' << real17(c.uncond_upper) << ','
                << real17(c.cho_kim_lower) << ',' << real17(c.cho_kim_upper) << ',';
            if (c.pal_simonic_upper) out << real17(*c.pal_simonic_upper);
            out << ',';
        } else {
            out << ",,,,,";
        }
        out << csv_escape(r.notes) << '\n';
    }
}

std::vector<BoundReport> read_reports(std::istream& in) {
    std::vector<BoundReport> reports;
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        auto f = csv_split(t);
        if (f.size() != 15)
            throw std::invalid_argument("report line " + std::to_string(lineno) +
                                        ": expected 15 columns");
        BoundReport r;
        r.label = f[0];
        r.kappa = parse_real(f[1], "kappa");
        r.x_used = parse_real(f[2], "x_used");
        r.upper_19 = parse_real(f[3], "upper_19");
        r.lower_19 = parse_real(f[4], "lower_19");
        r.pass_upper = f[5] == "1";
        r.pass_lower = f[6] == "1";
        r.c_min_upper = parse_real(f[7], "c_min_upper");
        r.c_min_lower = parse_real(f[8], "c_min_lower");
        bool any_comp = !f[9].empty() || !f[10].empty() || !f[11].empty() ||
                        !f[12].empty() || !f[13].empty();
        if (any_comp) {
            ComparatorRecord c;
            c.uncond_lower = parse_real(f[9], "uncond_lower");
            c.uncond_upper = parse_real(f[10], "uncond_upper");
            c.cho_kim_lower = parse_real(f[11], "cho_kim_lower");
            c.cho_kim_upper = parse_real(f[12], "cho_kim_upper");
            if (!f[13].empty()) c.pal_simonic_upper = parse_real(f[13], "pal_simonic_upper");
            r.comparators = c;
        }
        r.notes = f[14];
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace kappa
