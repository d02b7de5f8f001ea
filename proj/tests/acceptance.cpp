// Acceptance suite: every release criterion in one binary, one printed
// PASS/FAIL line per criterion. Run directly or through ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cycloqsp/cli.hpp"
#include "cycloqsp/dihedral.hpp"
#include "cycloqsp/polymat.hpp"
#include "cycloqsp/qsp.hpp"

using namespace cycloqsp;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report_line(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

TEST_CASE("1: exact monomial identity for all odd degrees up to 51") {
    const auto start = Clock::now();
    std::ostringstream out;
    const auto report = cli::cmd_verify_exact(1, 51, false, cli::Format::json, out);
    const double total = seconds_since(start);

    bool ok = report.verdict == cli::Verdict::pass;
    double worst_ms = 0.0;
    int checked = 0;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) {
        const auto rec = nlohmann::json::parse(line);
        ++checked;
        ok = ok && rec["verdict"] == "holds";
        worst_ms = std::max(worst_ms, rec["wall_ms"].get<double>());
    }
    ok = ok && checked == 26 && total < 60.0 && worst_ms < 10000.0;

    std::ostringstream detail;
    detail << checked << " odd degrees in [1,51], total " << total << " s, slowest degree "
           << worst_ms / 1000.0 << " s";
    report_line(1, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("2: numeric residuals stay below 1e-9 up to degree 101") {
    const auto start = Clock::now();
    bool ok = true;
    double worst = 0.0;
    int worst_n = 0;
    for (int n = 1; n <= 101; n += 2) {
        const auto sweep = residual_sweep(n, 200, 7);
        if (sweep.max_abs_error > worst) {
            worst = sweep.max_abs_error;
            worst_n = n;
        }
        ok = ok && sweep.max_abs_error <= 1e-9;
    }
    const double total = seconds_since(start);
    ok = ok && total < 30.0;

    std::ostringstream detail;
    detail << "200 samples per degree, worst max|err| = " << worst << " at n = " << worst_n
           << ", total " << total << " s";
    report_line(2, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("3: even degrees fail with a nonzero constant-in-x slice") {
    bool ok = true;
    for (int n : {2, 4, 6}) {
        const auto verdict = verify_theorem(n);
        ok = ok && !verdict.holds;
        ok = ok && !verdict.top_left.coefficient_of_x(0).empty();
    }
    const auto expected = BivariatePoly::monomial(2, 2, 0, -CyclotomicNumber::one(2)) +
                          BivariatePoly::monomial(2, 0, 2, -CyclotomicNumber::one(2));
    ok = ok && verify_theorem(2).top_left == expected;
    report_line(3, ok, "n in {2,4,6} fail; n=2 witness is -(x^2 + y^2) exactly");
    CHECK(ok);
}

TEST_CASE("4: normal form equals direct group multiplication for all sign functions") {
    const auto start = Clock::now();
    bool ok = true;
    long long cases = 0;
    for (int n = 3; n <= 11; ++n) {
        for (const auto& f : enumerate_all(n)) {
            ++cases;
            ok = ok && normal_form_product(f) == interleaved_product_direct(f);
            ok = ok && (normal_form_product(f).refl() == 0) == f.in_a0();
        }
    }
    const double total = seconds_since(start);
    ok = ok && total < 5.0;
    std::ostringstream detail;
    detail << cases << " functions over n in [3,11], " << total << " s";
    report_line(4, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("5: evaluation-function identities hold exhaustively for odd orders") {
    const auto start = Clock::now();
    bool ok = true;
    long long cases = 0;
    for (int n : {3, 5, 7, 9}) {
        for (const auto& f : a0_functions(n)) {
            ok = ok && big_f(f) % 2 != 0;
            for (int k = 0; k < n; ++k) {
                ++cases;
                const auto verdict = check_lemma2(f, k);
                ok = ok && verdict.star_negation && verdict.star_shift &&
                     verdict.shift_rule.has_value() && *verdict.shift_rule;
            }
        }
    }
    const double total = seconds_since(start);
    ok = ok && total < 10.0;
    std::ostringstream detail;
    detail << cases << " (f, k) pairs over n in {3,5,7,9}, all F odd, " << total << " s";
    report_line(5, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("6: the alternating order-four function has F = 0") {
    const bool ok = big_f(SignFunction::from_string("+-+-")) == 0;
    report_line(6, ok, "F(+-+-) = 0 at n = 4");
    CHECK(ok);
}

TEST_CASE("7: orbit sums vanish off the constants for odd orders") {
    const auto start = Clock::now();
    bool ok = true;
    long long checked = 0;
    for (int n : {3, 5, 7, 9}) {
        for (const auto& f : a0_functions(n)) {
            ++checked;
            const auto sum = orbit_sum(f);
            if (f.is_constant()) {
                ok = ok && sum == identity_matrix(n);
            } else {
                ok = ok && sum == zero_matrix(n);
            }
        }
    }
    const double total = seconds_since(start);
    ok = ok && total < 10.0;
    std::ostringstream detail;
    detail << checked << " product-one functions over n in {3,5,7,9}, " << total << " s";
    report_line(7, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("8: coefficient slices match the group-layer class sums") {
    bool ok = true;
    long long cases = 0;
    for (int n : {3, 5, 7, 9, 11}) {
        for (int k = 0; k < n; ++k) {
            ++cases;
            ok = ok && derivative_cross_check(n, k).pass;
        }
        // top slice: the unit monomial coefficient
        ok = ok && derivative_cross_check(n, n).pass;
        const auto lead = qsp_product_symbolic(n).e11.coefficient_of_x(n);
        ok = ok && lead.size() == 1 && lead.count(0) == 1 &&
             lead.at(0) == CyclotomicNumber::one(n);
    }
    std::ostringstream detail;
    detail << cases << " (n, k) slices plus the unit leading coefficient";
    report_line(8, ok, detail.str());
    CHECK(ok);
}

TEST_CASE("9: the representation is faithful and multiplicative") {
    bool ok = true;
    for (int n = 3; n <= 12; ++n) {
        const auto elements = all_group_elements(n);
        for (size_t i = 0; i < elements.size(); ++i) {
            for (size_t j = 0; j < elements.size(); ++j) {
                ok = ok && rep_phi(elements[i] * elements[j]) ==
                               rep_phi(elements[i]) * rep_phi(elements[j]);
                if (j > i) ok = ok && rep_phi(elements[i]) != rep_phi(elements[j]);
            }
        }
    }
    report_line(9, ok, "injective homomorphism on all pairs for n in [3,12]");
    CHECK(ok);
}

TEST_CASE("10: symbolic and float products agree at random complex points") {
    std::mt19937_64 rng(2718);
    // components in [-0.7, 0.7] keep |k| <= 1 and the rounding budget tight
    const auto draw = [&rng]() {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return 1.4 * u - 0.7;
    };
    bool ok = true;
    double worst = 0.0;
    for (int n = 1; n <= 15; n += 2) {
        const auto p = qsp_product_symbolic(n);
        const auto schedule = monomial_phases(n);
        for (int trial = 0; trial < 50; ++trial) {
            const std::complex<double> k1(draw(), draw());
            const std::complex<double> k2(draw(), draw());
            const auto num = evaluate_qsp_general(schedule, k1, k2);
            const double diff = std::max(
                std::max(std::abs(p.e11.eval(k1, k2) - num.e11),
                         std::abs(p.e12.eval(k1, k2) - num.e12)),
                std::max(std::abs(p.e21.eval(k1, k2) - num.e21),
                         std::abs(p.e22.eval(k1, k2) - num.e22)));
            worst = std::max(worst, diff);
            ok = ok && diff < 1e-9;
        }
    }
    std::ostringstream detail;
    detail << "50 points per odd n <= 15, worst entrywise gap " << worst;
    report_line(10, ok, detail.str());
    CHECK(ok);
}
