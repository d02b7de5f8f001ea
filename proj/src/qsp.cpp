#include "cycloqsp/qsp.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cycloqsp/dihedral.hpp"
#include "cycloqsp/polymat.hpp"

namespace cycloqsp {

const char* PhaseSchedule::convention() {
    return "U = T S(e^{i phi_1}) T S(e^{i phi_2}) ... T S(e^{i phi_n}), "
           "multiplied left to right, with T = [[k1, k2], [k2, k1]] and "
           "S(z) = diag(z, conj(z)); on the unit circle k1 = cos(theta), "
           "k2 = i sin(theta)";
}

PhaseSchedule monomial_phases(int n) {
    if (n < 1) {
        throw std::invalid_argument("monomial_phases: degree must be >= 1");
    }
    if (n % 2 == 0) {
        throw std::domain_error(
            "monomial_phases: degree must be odd; the root-of-unity schedule "
            "does not exist for even-degree monomials");
    }
    PhaseSchedule s;
    s.degree = n;
    s.angles.reserve(static_cast<size_t>(n));
    s.multiples.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int m = i % n;  // the n-th angle wraps to 0
        s.multiples.push_back(m);
        s.angles.push_back(2.0 * std::numbers::pi * static_cast<double>(m) /
                           static_cast<double>(n));
    }
    return s;
}

Mat2<std::complex<double>> evaluate_qsp_general(const PhaseSchedule& schedule,
                                                std::complex<double> k1,
                                                std::complex<double> k2) {
    using C = std::complex<double>;
    const Mat2<C> signal{k1, k2, k2, k1};
    Mat2<C> acc = signal;
    const size_t n = schedule.angles.size();
    for (size_t i = 0; i < n; ++i) {
        const C z = std::polar(1.0, schedule.angles[i]);
        const Mat2<C> phase{z, C(0.0), C(0.0), std::conj(z)};
        acc = acc * phase;
        if (i + 1 < n) {
            acc = acc * signal;
        }
    }
    return acc;
}

std::complex<double> evaluate_qsp_unit_circle(const PhaseSchedule& schedule, double x) {
    if (std::abs(x) > 1.0) {
        throw std::domain_error("evaluate_qsp_unit_circle: |x| must be <= 1");
    }
    const std::complex<double> k2(0.0, std::sqrt(1.0 - x * x));
    return evaluate_qsp_general(schedule, std::complex<double>(x, 0.0), k2).e11;
}

CrossCheckVerdict derivative_cross_check(int n, int k) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("derivative_cross_check: n must be odd and >= 3");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("derivative_cross_check: k must be in [0, n]");
    }

    const auto product = qsp_product_symbolic(n);

    // Left side: the deg_x = k slice of every entry.
    const auto slice = [&](const BivariatePoly& p) {
        BivariatePoly out(n);
        for (const auto& [deg_y, coeff] : p.coefficient_of_x(k)) {
            out = out + BivariatePoly::monomial(n, k, deg_y, coeff);
        }
        return out;
    };
    const Mat2<BivariatePoly> lhs{slice(product.e11), slice(product.e12),
                                  slice(product.e21), slice(product.e22)};

    // Right side: choosing the x-branch in k of the n signal factors leaves
    // y X at the other n-k positions, so the slice is x^k y^{n-k} times the
    // represented interleaved product summed over the class with n-k minus
    // values.
    auto class_sum = zero_matrix(n);
    for (const auto& f : enumerate_class(n, n - k)) {
        class_sum = class_sum + rep_phi(normal_form_product(f));
    }
    const auto embed = [&](const CyclotomicNumber& c) {
        return BivariatePoly::monomial(n, k, n - k, c);
    };
    const Mat2<BivariatePoly> rhs{embed(class_sum.e11), embed(class_sum.e12),
                                  embed(class_sum.e21), embed(class_sum.e22)};

    CrossCheckVerdict verdict;
    verdict.pass = (lhs == rhs);
    if (!verdict.pass) {
        std::ostringstream os;
        os << "slice[deg_x=" << k << "] of product:\n"
           << "  e11: " << lhs.e11.to_string() << "\n  e12: " << lhs.e12.to_string()
           << "\n  e21: " << lhs.e21.to_string() << "\n  e22: " << lhs.e22.to_string()
           << "\nclass sum (" << (n - k) << " minus values):\n"
           << "  e11: " << rhs.e11.to_string() << "\n  e12: " << rhs.e12.to_string()
           << "\n  e21: " << rhs.e21.to_string() << "\n  e22: " << rhs.e22.to_string();
        verdict.witness = os.str();
    }
    return verdict;
}

SweepResult residual_sweep(int n, int count, std::uint64_t seed) {
    if (count < 1) {
        throw std::invalid_argument("residual_sweep: sample count must be >= 1");
    }
    const auto schedule = monomial_phases(n);
    std::mt19937_64 rng(seed);
    SweepResult result;
    result.samples = count;
    for (int i = 0; i < count; ++i) {
        // Fixed mapping from raw engine output so the sweep is reproducible
        // across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double x = 2.0 * u - 1.0;
        const std::complex<double> value = evaluate_qsp_unit_circle(schedule, x);
        const double target = std::pow(x, n);
        const double err = std::abs(value - std::complex<double>(target, 0.0));
        if (err > result.max_abs_error ||
            (err == result.max_abs_error && x > result.worst_x)) {
            result.max_abs_error = err;
            result.worst_x = x;
        }
    }
    return result;
}

std::string schedule_to_json(const PhaseSchedule& schedule) {
    nlohmann::json doc;
    doc["degree"] = schedule.degree;
    doc["convention"] = PhaseSchedule::convention();
    doc["angles_radians"] = schedule.angles;
    doc["angles_as_multiples_of_2pi_over_n"] = schedule.multiples;
    return doc.dump();
}

std::string schedule_to_csv(const PhaseSchedule& schedule) {
    std::ostringstream os;
    os << "index,angle_radians\n";
    char buf[40];
    for (size_t i = 0; i < schedule.angles.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", schedule.angles[i]);
        os << (i + 1) << "," << buf << "\n";
    }
    return os.str();
}

}  // namespace cycloqsp
