// kappa_cli.cpp
// Command-line front end. Subcommands mirror the library surface:
//   psi, mertens, zeta-product, sigma, bounds, min-const,
//   verify-lemmas, verify-fields, report
// Exit codes: 0 all-pass, 1 bound violation, 2 usage/IO error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kappa/bounds.hpp"
#include "kappa/constants.hpp"
#include "kappa/field_store.hpp"
#include "kappa/prime_sums.hpp"
#include "kappa/prime_table.hpp"
#include "kappa/quadratic.hpp"
#include "kappa/verifier.hpp"

namespace {

struct CommonOpts {
    std::uint64_t limit = 1'000'000;
    std::string precision = "extended";
    double slack = 1e-12;
    std::size_t grid_points = 10'000;
    unsigned threads = 0;

    kappa::PrecisionPolicy policy() const {
        kappa::PrecisionPolicy p;
        p.mode = kappa::parse_mode(precision);
        p.slack = slack;
        p.validate();
        return p;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_limit = true) {
    if (with_limit)
        cmd->add_option("--limit", opts.limit, "sieve upper bound")
            ->envname("KAPPA_LIMIT");
    cmd->add_option("--precision", opts.precision,
                    "numeric mode: fast|extended|interval")
        ->envname("KAPPA_PRECISION");
    cmd->add_option("--slack", opts.slack, "relative inequality slack")
        ->envname("KAPPA_SLACK");
    cmd->add_option("--grid-points", opts.grid_points, "sweep grid size")
        ->envname("KAPPA_GRID_POINTS");
    cmd->add_option("--threads", opts.threads, "worker threads (0 = cores)")
        ->envname("KAPPA_THREADS");
}

kappa::RecordFormat parse_format(const std::string& f) {
    if (f == "csv") return kappa::RecordFormat::Csv;
    if (f == "jsonl") return kappa::RecordFormat::JsonLines;
    throw CLI::ValidationError("--format must be csv or jsonl");
}

std::vector<kappa::FieldRecord> load_records(const std::string& path,
                                             const std::string& format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return kappa::parse_records(in, parse_format(format));
}

int run_psi(const CommonOpts& opts, double x) {
    auto table = kappa::PrimeTable::sieve(opts.limit, opts.threads);
    auto policy = opts.policy();
    double value = kappa::big_psi(table, x, policy);
    double approx = std::log(std::log(x)) + kappa::kGamma;
    double bound = kappa::psi_error_bound_checked(x);
    double margin = bound - std::fabs(value - approx);
    std::printf("big_psi          %.17g\n", value);
    std::printf("lnln_x_plus_gamma %.17g\n", approx);
    std::printf("bound            %.17g\n", bound);
    std::printf("margin           %.17g\n", margin);
    std::printf("psi              %.17g\n", kappa::psi(table, x, policy));
    return margin >= -opts.slack * bound ? 0 : 1;
}

int run_mertens(const CommonOpts& opts, double x) {
    auto table = kappa::PrimeTable::sieve(opts.limit, opts.threads);
    double lhs = kappa::mertens_product(table, x, opts.policy());
    double rhs = kappa::mertens_lower_bound(x);
    std::printf("product          %.17g\n", lhs);
    std::printf("lower_bound      %.17g\n", rhs);
    std::printf("margin           %.17g\n", lhs - rhs);
    if (x < 23.8) {
        std::printf("note             bound stated for x >= 23.8\n");
        return 0;
    }
    return lhs >= rhs * (1.0 - opts.slack) ? 0 : 1;
}

int run_zeta_product(const CommonOpts& opts, double x, int n) {
    auto table = kappa::PrimeTable::sieve(opts.limit, opts.threads);
    double lhs = kappa::zeta_truncated_product(table, x, n, opts.policy());
    double zn = kappa::zeta_value(n);
    std::printf("product          %.17g\n", lhs);
    std::printf("zeta_n           %.17g\n", zn);
    if (x >= 59.0) {
        double rhs = kappa::zeta_product_lower_bound(x, n);
        std::printf("lower_bound      %.17g\n", rhs);
        std::printf("margin           %.17g\n", lhs - rhs);
        return lhs >= rhs * (1.0 - opts.slack) ? 0 : 1;
    }
    std::printf("note             bound stated for x >= 59\n");
    return 0;
}

int run_sigma(const CommonOpts& opts, const std::string& input,
              const std::string& format, double x) {
    auto records = load_records(input, format);
    auto table = kappa::PrimeTable::sieve(
        std::max<std::uint64_t>(opts.limit, kappa::inclusive_floor(x)),
        opts.threads);
    auto policy = opts.policy();
    int worst = 0;
    for (const auto& rec : records) {
        if (!rec.poly) {
            std::printf("%s: skipped (no polynomial)\n", rec.label.c_str());
            continue;
        }
        try {
            auto rep = kappa::verify_short_sum(rec, table, x, policy);
            std::printf("%s: sigma=%.17g ln_kappa=%.17g deviation=%.17g "
                        "bound=%.17g margin=%.17g %s\n",
                        rep.label.c_str(), rep.sigma_value, rep.ln_kappa,
                        rep.deviation, rep.bound, rep.margin,
                        rep.pass ? "PASS" : "FAIL");
            if (!rep.pass) worst = 1;
        } catch (const kappa::BadPrimeError& e) {
            std::printf("%s: ERROR %s\n", rec.label.c_str(), e.what());
            worst = 2;
        }
    }
    return worst;
}

int run_bounds(int n_K, const std::string& disc_text, double c) {
    auto disc = kappa::Disc::parse(disc_text);
    double abs_disc = disc.abs_as_double();
    double log_disc = disc.log_abs();
    std::printf("upper(const=%g)  %.17g\n", c,
                kappa::theorem_upper_from_log(n_K, log_disc, c));
    std::printf("lower(const=%g)  %.17g\n", c,
                kappa::theorem_lower_from_log(n_K, log_disc, c));
    std::printf("upper(const=0)   %.17g\n",
                kappa::theorem_upper_from_log(n_K, log_disc, 0.0));
    std::printf("lower(const=0)   %.17g\n",
                kappa::theorem_lower_from_log(n_K, log_disc, 0.0));
    auto ub = kappa::uncond_bounds_from_log(n_K, log_disc);
    std::printf("uncond_lower     %.17g\n", ub.lower);
    std::printf("uncond_upper     %.17g\n", ub.upper);
    auto cb = kappa::comparison_bounds_from_log(n_K, log_disc);
    std::printf("cho_kim_lower    %.17g\n", cb.cho_kim_lower);
    std::printf("cho_kim_upper    %.17g\n", cb.cho_kim_upper);
    if (cb.pal_simonic_upper)
        std::printf("pal_simonic_upper %.17g\n", *cb.pal_simonic_upper);
    if (abs_disc > 15.154262241479264)
        std::printf("x_of_disc        %.17g\n", kappa::x_of_disc(abs_disc));
    return 0;
}

int run_min_const(double kappa_value, int n_K, const std::string& disc_text) {
    auto disc = kappa::Disc::parse(disc_text);
    double log_disc = disc.log_abs();
    std::printf("c_min_upper      %.17g\n",
                kappa::min_constant_upper_from_log(kappa_value, n_K, log_disc));
    std::printf("c_min_lower      %.17g\n",
                kappa::min_constant_lower_from_log(kappa_value, n_K, log_disc));
    return 0;
}

int run_verify_lemmas(const CommonOpts& opts) {
    auto table = kappa::PrimeTable::sieve(opts.limit, opts.threads);
    auto policy = opts.policy();
    double hi = static_cast<double>(opts.limit);
    bool ok = true;

    auto psi_grid = kappa::geometric_grid(std::numbers::e, hi, opts.grid_points);
    auto psi_report = kappa::verify_psi_theorem(table, psi_grid, policy);
    kappa::print_sweep(std::cout, psi_report);
    ok = ok && psi_report.pass();

    auto mertens_grid = kappa::geometric_grid(23.8, hi, opts.grid_points);
    auto mertens_report = kappa::verify_mertens_lemma(table, mertens_grid, policy);
    kappa::print_sweep(std::cout, mertens_report);
    ok = ok && mertens_report.pass();

    auto zeta_grid = kappa::geometric_grid(59.0, hi, opts.grid_points);
    for (const auto& rep : kappa::verify_zeta_product_lemma(
             table, zeta_grid, {2, 3, 4, 5, 6, 7, 8}, policy)) {
        kappa::print_sweep(std::cout, rep);
        ok = ok && rep.pass();
    }
    return ok ? 0 : 1;
}

int run_verify_fields(const CommonOpts& opts, const std::string& input,
                      const std::string& format, const std::string& output,
                      long long gen_quadratic, double short_sum_x) {
    std::vector<kappa::FieldRecord> records;
    if (gen_quadratic > 0)
        records = kappa::generate_quadratic_fields(gen_quadratic, opts.threads);
    if (!input.empty()) {
        auto more = load_records(input, format);
        records.insert(records.end(), more.begin(), more.end());
    }
    if (records.empty())
        throw std::runtime_error("verify-fields: no input (use --input or --gen-quadratic)");

    kappa::CorpusOptions copts;
    copts.policy = opts.policy();
    copts.threads = opts.threads;
    std::optional<kappa::PrimeTable> table;
    if (short_sum_x > 0) {
        table.emplace(kappa::PrimeTable::sieve(
            std::max<std::uint64_t>(opts.limit, kappa::inclusive_floor(short_sum_x)),
            opts.threads));
        copts.table = &*table;
        copts.short_sum_x = short_sum_x;
    }

    auto summary = kappa::run_corpus(records, copts);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        kappa::write_reports(out, summary.reports);
    }
    kappa::print_summary(std::cout, summary);

    bool ok = summary.pass_19 == summary.in_domain;
    if (copts.table != nullptr)
        ok = ok && std::none_of(summary.reports.begin(), summary.reports.end(),
                                [](const kappa::BoundReport& r) {
                                    return r.notes.find("shortsum=fail") !=
                                           std::string::npos;
                                });
    return ok ? 0 : 1;
}

int run_report(const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    auto summary = kappa::summarize_reports(kappa::read_reports(in));
    kappa::print_summary(std::cout, summary);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit residue-bound verification for number fields"};
    app.require_subcommand(1);

    CommonOpts opts;

    double x = 1'000'000.0;
    int n = 2;
    int n_K = 2;
    double kappa_value = 1.0;
    double c = kappa::kThmConst;
    double short_sum_x = 0.0;
    long long gen_quadratic = 0;
    std::string input, output, disc_text;
    std::string format = "csv";

    auto* cmd_psi = app.add_subcommand("psi", "prime-power logarithmic sum vs envelope");
    add_common(cmd_psi, opts);
    cmd_psi->add_option("--x", x, "evaluation point")->required();

    auto* cmd_mertens = app.add_subcommand("mertens", "Euler product vs lower bound");
    add_common(cmd_mertens, opts);
    cmd_mertens->add_option("--x", x, "evaluation point")->required();

    auto* cmd_zeta = app.add_subcommand("zeta-product", "truncated zeta Euler product");
    add_common(cmd_zeta, opts);
    cmd_zeta->add_option("--x", x, "evaluation point")->required();
    cmd_zeta->add_option("--n", n, "exponent (>= 2)")->required();

    auto* cmd_sigma = app.add_subcommand("sigma", "field coefficient sum vs short-sum bound");
    add_common(cmd_sigma, opts);
    cmd_sigma->add_option("--input", input, "field records file")->required();
    cmd_sigma->add_option("--format", format, "csv|jsonl")->envname("KAPPA_FORMAT");
    cmd_sigma->add_option("--x", x, "truncation point")->required();

    auto* cmd_bounds = app.add_subcommand("bounds", "residue bounds for one field shape");
    cmd_bounds->add_option("--n", n_K, "field degree")->required();
    cmd_bounds->add_option("--disc", disc_text, "discriminant (signed integer)")->required();
    cmd_bounds->add_option("--const", c, "replacement constant (default 19)");

    auto* cmd_minconst = app.add_subcommand("min-const", "minimal replacement constants");
    cmd_minconst->add_option("--kappa", kappa_value, "residue value")->required();
    cmd_minconst->add_option("--n", n_K, "field degree")->required();
    cmd_minconst->add_option("--disc", disc_text, "discriminant")->required();

    auto* cmd_lemmas = app.add_subcommand("verify-lemmas", "run the three envelope sweeps");
    add_common(cmd_lemmas, opts);

    auto* cmd_fields = app.add_subcommand("verify-fields", "per-field theorem verification");
    add_common(cmd_fields, opts);
    cmd_fields->add_option("--input", input, "field records file");
    cmd_fields->add_option("--format", format, "csv|jsonl")->envname("KAPPA_FORMAT");
    cmd_fields->add_option("--output", output, "report CSV destination");
    cmd_fields->add_option("--gen-quadratic", gen_quadratic,
                           "generate all quadratic fields with |disc| <= N");
    cmd_fields->add_option("--short-sum-x", short_sum_x,
                           "also run the short-sum check at this x (>= 5e5)");

    auto* cmd_report = app.add_subcommand("report", "summarize an existing report CSV");
    cmd_report->add_option("--input", input, "report CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 2;
    }

    try {
        if (cmd_psi->parsed()) return run_psi(opts, x);
        if (cmd_mertens->parsed()) return run_mertens(opts, x);
        if (cmd_zeta->parsed()) return run_zeta_product(opts, x, n);
        if (cmd_sigma->parsed()) return run_sigma(opts, input, format, x);
        if (cmd_bounds->parsed()) return run_bounds(n_K, disc_text, c);
        if (cmd_minconst->parsed()) return run_min_const(kappa_value, n_K, disc_text);
        if (cmd_lemmas->parsed()) return run_verify_lemmas(opts);
        if (cmd_fields->parsed())
            return run_verify_fields(opts, input, format, output, gen_quadratic,
                                     short_sum_x);
        if (cmd_report->parsed()) return run_report(input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
