// cycloqsp: exact phase-angle schedules for odd-degree monomials, with
// symbolic, numeric and group-theoretic verification commands.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycloqsp/cli.hpp"

namespace {

using cycloqsp::cli::CommandReport;
using cycloqsp::cli::Format;

Format parse_format(const std::string& name) {
    return name == "csv" ? Format::csv : Format::json;
}

void print_summary(const CommandReport& report, Format format) {
    if (format == Format::json) {
        nlohmann::json rec;
        rec["command"] = report.command;
        rec["parameters"] = report.parameters;
        rec["verdict"] = cycloqsp::cli::to_string(report.verdict);
        rec["details"] = report.details;
        rec["wall_ms"] = report.wall_ms;
        rec["summary"] = true;
        std::cout << rec.dump() << "\n";
    } else {
        // Keep stdout limited to the CSV document; the summary goes to stderr.
        std::cerr << report.command << " [" << report.parameters
                  << "]: " << cycloqsp::cli::to_string(report.verdict) << " ("
                  << report.details << ", " << report.wall_ms << " ms)\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact QSP phase schedules for odd monomials"};
    app.require_subcommand(1);

    std::string format_name = "json";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    int degree = 0;
    int n_min = 1;
    int n_max = 1;
    int samples = 200;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    bool include_even = false;

    auto* angles = app.add_subcommand("angles", "Print the phase schedule for an odd degree");
    angles->add_option("--degree,-n", degree, "Monomial degree (odd)")->required();

    auto* verify_exact =
        app.add_subcommand("verify-exact", "Symbolically verify the monomial identity over a degree range");
    verify_exact->add_option("--min", n_min, "Smallest degree")->required();
    verify_exact->add_option("--max", n_max, "Largest degree")->required();
    verify_exact->add_flag("--include-even", include_even,
                           "Also run even degrees (expected to fail)");

    auto* verify_numeric =
        app.add_subcommand("verify-numeric", "Seeded residual sweep against x^n on [-1, 1]");
    verify_numeric->add_option("--degree,-n", degree, "Monomial degree (odd)")->required();
    verify_numeric->add_option("--samples", samples, "Number of sample points")
        ->capture_default_str();
    verify_numeric->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify_numeric->add_option("--tol", tol, "Maximum tolerated absolute error")
        ->capture_default_str();

    auto* check_lemmas =
        app.add_subcommand("check-lemmas", "Exhaustive group-layer checks for one order");
    check_lemmas->add_option("--degree,-n", degree, "Order n (>= 3)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // invalid invocation
    }

    const Format format = parse_format(format_name);
    CommandReport report;
    if (app.got_subcommand(angles)) {
        report = cycloqsp::cli::cmd_angles(degree, format, std::cout);
    } else if (app.got_subcommand(verify_exact)) {
        report = cycloqsp::cli::cmd_verify_exact(n_min, n_max, include_even, format, std::cout);
    } else if (app.got_subcommand(verify_numeric)) {
        report = cycloqsp::cli::cmd_verify_numeric(degree, samples, seed, tol, format, std::cout);
    } else {
        report = cycloqsp::cli::cmd_check_lemmas(degree, format, std::cout);
    }

    if (report.verdict == cycloqsp::cli::Verdict::error) {
        std::cerr << report.command << ": " << report.details << "\n";
    } else {
        print_summary(report, format);
    }
    return report.exit_code();
}
