// Closed-form phase schedules for odd-degree monomials, numeric evaluation
// of the interleaved rotation sequence, and the exact coefficient
// cross-check tying the symbolic product to the group layer.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cycloqsp/mat2.hpp"

namespace cycloqsp {

/// Ordered phase angles implementing x -> x^n for odd n: the i-th angle is
/// 2*pi*i/n reduced to [0, 2*pi), so the last one is 0. `multiples` carries
/// the same data as exact integer multiples of 2*pi/n.
struct PhaseSchedule {
    int degree = 0;
    std::vector<double> angles;  // radians, angles[i-1] for the i-th phase
    std::vector<int> multiples;  // angles[i] == 2*pi*multiples[i]/degree

    /// The fixed operator convention the angles are stated in.
    static const char* convention();
};

/// Phase schedule for the monomial x^n. Throws std::domain_error for even n
/// (the construction only covers odd degrees) and std::invalid_argument for
/// n < 1.
PhaseSchedule monomial_phases(int n);

/// One numeric probe of the schedule at a signal value x.
struct QspSample {
    double x = 0.0;
    std::complex<double> value;
    double target = 0.0;  // x^n
    double abs_error = 0.0;
};

/// Top-left entry of the interleaved product with the unitary signal
/// instantiation k1 = x, k2 = i*sqrt(1-x^2). Requires |x| <= 1 (throws
/// std::domain_error). Equals x^n up to rounding.
std::complex<double> evaluate_qsp_unit_circle(const PhaseSchedule& schedule, double x);

/// Full product matrix for arbitrary complex (k1, k2); the identity behind
/// the schedule is polynomial, so the top-left entry equals k1^n up to
/// rounding at any complex point.
Mat2<std::complex<double>> evaluate_qsp_general(const PhaseSchedule& schedule,
                                                std::complex<double> k1,
                                                std::complex<double> k2);

/// Exact comparison of the deg_x = k slice of the symbolic product against
/// the class sum built from the group layer: x^k y^{n-k} times the sum of
/// the represented normal forms over all sign functions with n-k minus
/// values. Requires odd n >= 3 and 0 <= k <= n.
struct CrossCheckVerdict {
    bool pass = false;
    std::string witness;  // left/right serialization on mismatch
};
CrossCheckVerdict derivative_cross_check(int n, int k);

/// Deterministic residual sweep: `count` signal values drawn from a seeded
/// mt19937_64 (x = 2*((g() >> 11) * 2^-53) - 1), each evaluated against
/// x^n. Ties in the max-reduction are broken toward the larger x so the
/// result does not depend on evaluation order.
struct SweepResult {
    double max_abs_error = 0.0;
    double worst_x = 0.0;
    int samples = 0;
};
SweepResult residual_sweep(int n, int count, std::uint64_t seed);

/// JSON document with fields degree, convention, angles_radians,
/// angles_as_multiples_of_2pi_over_n.
std::string schedule_to_json(const PhaseSchedule& schedule);

/// CSV with header "index,angle_radians" and one row per phase, index
/// starting at 1.
std::string schedule_to_csv(const PhaseSchedule& schedule);

}  // namespace cycloqsp
