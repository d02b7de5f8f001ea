#include "cycloqsp/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "cycloqsp/dihedral.hpp"
#include "cycloqsp/polymat.hpp"
#include "cycloqsp/qsp.hpp"

namespace cycloqsp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::error: return "error";
    }
    return "error";
}

int CommandReport::exit_code() const {
    switch (verdict) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::error: return 2;
    }
    return 2;
}

// ---------------------------------------------------------------------------
// angles

CommandReport cmd_angles(int degree, Format format, std::ostream& out) {
    const auto start = Clock::now();
    CommandReport report;
    report.command = "angles";
    report.parameters = "degree=" + std::to_string(degree) +
                        " format=" + (format == Format::json ? "json" : "csv");
    try {
        const auto schedule = monomial_phases(degree);
        if (format == Format::json) {
            out << schedule_to_json(schedule) << "\n";
        } else {
            out << schedule_to_csv(schedule);
        }
        report.verdict = Verdict::pass;
        report.details = std::to_string(schedule.angles.size()) + " angles";
    } catch (const std::exception& e) {
        report.verdict = Verdict::error;
        report.details = e.what();
    }
    report.wall_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// verify-exact

CommandReport cmd_verify_exact(int n_min, int n_max, bool include_even, Format format,
                               std::ostream& out) {
    const auto start = Clock::now();
    CommandReport report;
    report.command = "verify-exact";
    {
        std::ostringstream os;
        os << "min=" << n_min << " max=" << n_max
           << " include_even=" << (include_even ? "true" : "false");
        report.parameters = os.str();
    }
    if (n_min < 1 || n_min > n_max) {
        report.verdict = Verdict::error;
        report.details = "require 1 <= min <= max";
        report.wall_ms = ms_since(start);
        return report;
    }

    if (format == Format::csv) {
        out << "n,verdict,wall_ms,witness\n";
    }
    int checked = 0;
    int failed = 0;
    std::string first_witness;
    for (int n = n_min; n <= n_max; ++n) {
        if (n % 2 == 0 && !include_even) continue;
        const auto n_start = Clock::now();
        const auto verdict = verify_theorem(n);
        const double n_ms = ms_since(n_start);
        ++checked;
        if (!verdict.holds) {
            ++failed;
            if (first_witness.empty()) {
                first_witness = "n=" + std::to_string(n) + ": " + verdict.top_left.to_string();
            }
        }
        if (format == Format::json) {
            json rec;
            rec["command"] = "verify-exact";
            rec["n"] = n;
            rec["verdict"] = verdict.holds ? "holds" : "fails";
            rec["wall_ms"] = n_ms;
            if (!verdict.holds) {
                rec["witness"] = verdict.top_left.to_string();
            }
            out << rec.dump() << "\n";
        } else {
            out << n << "," << (verdict.holds ? "holds" : "fails") << ","
                << format_double(n_ms) << ","
                << (verdict.holds ? "" : csv_escape(verdict.top_left.to_string())) << "\n";
        }
        out.flush();
    }
    report.verdict = failed == 0 ? Verdict::pass : Verdict::fail;
    report.details = failed == 0
                         ? std::to_string(checked) + " degrees verified"
                         : std::to_string(failed) + " of " + std::to_string(checked) +
                               " degrees failed; " + first_witness;
    report.wall_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// verify-numeric

CommandReport cmd_verify_numeric(int degree, int samples, std::uint64_t seed, double tol,
                                 Format format, std::ostream& out) {
    const auto start = Clock::now();
    CommandReport report;
    report.command = "verify-numeric";
    {
        std::ostringstream os;
        os << "degree=" << degree << " samples=" << samples << " seed=" << seed
           << " tol=" << format_double(tol);
        report.parameters = os.str();
    }
    try {
        const auto result = residual_sweep(degree, samples, seed);
        const bool ok = result.max_abs_error <= tol;
        if (format == Format::json) {
            json rec;
            rec["command"] = "verify-numeric";
            rec["degree"] = degree;
            rec["samples"] = samples;
            rec["seed"] = seed;
            rec["tol"] = tol;
            rec["max_abs_error"] = result.max_abs_error;
            rec["argmax_x"] = result.worst_x;
            rec["verdict"] = ok ? "pass" : "fail";
            out << rec.dump() << "\n";
        } else {
            out << "degree,samples,seed,tol,max_abs_error,argmax_x,verdict\n";
            out << degree << "," << samples << "," << seed << "," << format_double(tol)
                << "," << format_double(result.max_abs_error) << ","
                << format_double(result.worst_x) << "," << (ok ? "pass" : "fail") << "\n";
        }
        report.verdict = ok ? Verdict::pass : Verdict::fail;
        report.details = "max_abs_error=" + format_double(result.max_abs_error) +
                         " at x=" + format_double(result.worst_x);
    } catch (const std::exception& e) {
        report.verdict = Verdict::error;
        report.details = e.what();
    }
    report.wall_ms = ms_since(start);
    return report;
}

// ---------------------------------------------------------------------------
// check-lemmas

namespace {

struct CheckOutcome {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    std::string offending;  // first failing sign function, if any
    std::string note;
    std::vector<std::string> extra_strings;  // e.g. zero-F witnesses
    bool informational = false;
};

void emit_check(const CheckOutcome& c, int degree, Format format, std::ostream& out) {
    if (format == Format::json) {
        json rec;
        rec["command"] = "check-lemmas";
        rec["degree"] = degree;
        rec["check"] = c.name;
        rec["cases"] = c.cases;
        rec["failures"] = c.failures;
        rec["verdict"] = c.informational ? "info" : (c.failures == 0 ? "pass" : "fail");
        if (!c.offending.empty()) rec["offending"] = c.offending;
        if (!c.note.empty()) rec["note"] = c.note;
        if (!c.extra_strings.empty()) rec["functions"] = c.extra_strings;
        out << rec.dump() << "\n";
    } else {
        std::string detail = c.note;
        if (!c.offending.empty()) detail += (detail.empty() ? "" : " ") + ("offending=" + c.offending);
        if (!c.extra_strings.empty()) {
            detail += detail.empty() ? "" : " ";
            for (size_t i = 0; i < c.extra_strings.size(); ++i) {
                if (i > 0) detail += " ";
                detail += c.extra_strings[i];
            }
        }
        out << degree << "," << c.name << "," << c.cases << "," << c.failures << ","
            << (c.informational ? "info" : (c.failures == 0 ? "pass" : "fail")) << ","
            << csv_escape(detail) << "\n";
    }
    out.flush();
}

}  // namespace

CommandReport cmd_check_lemmas(int degree, Format format, std::ostream& out) {
    const auto start = Clock::now();
    CommandReport report;
    report.command = "check-lemmas";
    report.parameters = "degree=" + std::to_string(degree);
    if (degree < 3) {
        report.verdict = Verdict::error;
        report.details = "require degree >= 3";
        report.wall_ms = ms_since(start);
        return report;
    }
    if (degree > 16) {
        report.verdict = Verdict::error;
        report.details = "exhaustive sweep over 2^n sign functions is capped at n = 16";
        report.wall_ms = ms_since(start);
        return report;
    }

    const int n = degree;
    const bool odd = n % 2 == 1;
    if (format == Format::csv) {
        out << "degree,check,cases,failures,verdict,detail\n";
    }

    std::vector<CheckOutcome> checks;

    // Normal form vs direct group multiplication, all 2^n functions.
    {
        CheckOutcome c;
        c.name = "normal_form_oracle";
        for (const auto& f : enumerate_all(n)) {
            ++c.cases;
            if (normal_form_product(f) != interleaved_product_direct(f)) {
                ++c.failures;
                if (c.offending.empty()) c.offending = f.to_string();
            }
        }
        checks.push_back(std::move(c));
    }

    // Reflection exponent vanishes exactly on the product-one class.
    {
        CheckOutcome c;
        c.name = "reflection_parity";
        for (const auto& f : enumerate_all(n)) {
            ++c.cases;
            if ((normal_form_product(f).refl() == 0) != f.in_a0()) {
                ++c.failures;
                if (c.offending.empty()) c.offending = f.to_string();
            }
        }
        checks.push_back(std::move(c));
    }

    const auto a0 = a0_functions(n);

    // The three evaluation-function identities over the product-one class.
    {
        CheckOutcome star_neg, shift_rule, star_shift;
        star_neg.name = "lemma2_star_negation";
        shift_rule.name = "lemma2_shift_rule";
        star_shift.name = "lemma2_star_shift";
        for (const auto& f : a0) {
            for (int k = 0; k < n; ++k) {
                const auto verdict = check_lemma2(f, k);
                ++star_neg.cases;
                if (!verdict.star_negation) {
                    ++star_neg.failures;
                    if (star_neg.offending.empty()) star_neg.offending = f.to_string();
                }
                if (verdict.shift_rule.has_value()) {
                    ++shift_rule.cases;
                    if (!*verdict.shift_rule) {
                        ++shift_rule.failures;
                        if (shift_rule.offending.empty()) shift_rule.offending = f.to_string();
                    }
                }
                ++star_shift.cases;
                if (!verdict.star_shift) {
                    ++star_shift.failures;
                    if (star_shift.offending.empty()) star_shift.offending = f.to_string();
                }
            }
        }
        star_neg.note = std::to_string(a0.size()) + " functions in the product-one class";
        checks.push_back(std::move(star_neg));
        if (odd) checks.push_back(std::move(shift_rule));
        checks.push_back(std::move(star_shift));
    }

    if (odd) {
        // F is odd (hence nonzero) on the product-one class.
        CheckOutcome c;
        c.name = "big_f_odd";
        for (const auto& f : a0) {
            ++c.cases;
            if (big_f(f) % 2 == 0) {
                ++c.failures;
                if (c.offending.empty()) c.offending = f.to_string();
            }
        }
        checks.push_back(std::move(c));

        // Orbit sums: zero matrix off the constants, identity at f = +1.
        CheckOutcome o;
        o.name = "orbit_sum";
        for (const auto& f : a0) {
            ++o.cases;
            const auto sum = orbit_sum(f);
            const bool ok = f.is_constant() ? sum == identity_matrix(n)
                                            : sum == zero_matrix(n);
            if (!ok) {
                ++o.failures;
                if (o.offending.empty()) o.offending = f.to_string();
            }
        }
        checks.push_back(std::move(o));
    } else {
        // Even order: the vanishing argument is unavailable. Surface the
        // zero-F witnesses without failing the command.
        CheckOutcome c;
        c.name = "even_degeneracy";
        c.informational = true;
        c.note = "known even-n degeneracy: F = 0 on the listed functions";
        for (const auto& f : a0) {
            ++c.cases;
            if (big_f(f) == 0) {
                c.extra_strings.push_back(f.to_string());
            }
        }
        checks.push_back(std::move(c));
    }

    long long failures = 0;
    std::string first_offender;
    for (const auto& c : checks) {
        emit_check(c, n, format, out);
        if (!c.informational) {
            failures += c.failures;
            if (first_offender.empty() && !c.offending.empty()) {
                first_offender = c.name + ": " + c.offending;
            }
        }
    }
    report.verdict = failures == 0 ? Verdict::pass : Verdict::fail;
    report.details = failures == 0
                         ? std::to_string(a0.size()) + " functions in the product-one class checked"
                         : std::to_string(failures) + " failures; first " + first_offender;
    report.wall_ms = ms_since(start);
    return report;
}

}  // namespace cycloqsp::cli
