// Batch commands behind the cycloqsp binary: angle generation, exact and
// numeric verification, and the exhaustive lemma checks. Each command
// streams line-delimited records to the given stream and returns a report
// whose exit code is 0 (all checks pass), 1 (a mathematical check failed)
// or 2 (invalid invocation).

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cycloqsp::cli {

enum class Format { json, csv };

enum class Verdict { pass, fail, error };

std::string to_string(Verdict v);

struct CommandReport {
    std::string command;
    std::string parameters;  // echo of the invocation
    Verdict verdict = Verdict::error;
    std::string details;  // witness text on failure, metrics otherwise
    double wall_ms = 0.0;

    int exit_code() const;
};

/// Serialize the phase schedule for an odd degree. Even or non-positive
/// degrees are invalid invocations (exit 2).
CommandReport cmd_angles(int degree, Format format, std::ostream& out);

/// Run the exact theorem check for every selected n in [n_min, n_max]:
/// odd n always, even n only with include_even (expected to fail there).
/// One record per n with per-n timing; failing records carry the top-left
/// witness polynomial.
CommandReport cmd_verify_exact(int n_min, int n_max, bool include_even, Format format,
                               std::ostream& out);

/// Seeded residual sweep against x^degree; fails when the max absolute
/// error exceeds tol. The record carries the max error and its location.
CommandReport cmd_verify_numeric(int degree, int samples, std::uint64_t seed, double tol,
                                 Format format, std::ostream& out);

/// Exhaustive group-layer checks for one order: the normal-form oracle over
/// all 2^n sign functions, the evaluation-function identities over the
/// product-one class, and (odd n) F-oddness plus orbit-sum vanishing. For
/// even n the zero-F witnesses are reported under a known-degeneracy heading
/// without failing the command.
CommandReport cmd_check_lemmas(int degree, Format format, std::ostream& out);

}  // namespace cycloqsp::cli
