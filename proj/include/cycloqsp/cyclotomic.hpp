// Exact arithmetic in Z[w], w a primitive n-th root of unity.
//
// Elements are stored on the power basis 1, w, ..., w^(phi(n)-1) and kept
// canonically reduced modulo the n-th cyclotomic polynomial, so equality in
// Z[w] is plain coefficient-list equality and zero-testing is structural.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cycloqsp {

using Integer = boost::multiprecision::cpp_int;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. Carrier for cyclotomic polynomials; the highest-degree
/// stored coefficient is nonzero unless the polynomial is zero.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return monomial(0, 1); }
    static IntPoly monomial(int degree, Integer coeff);
    /// t^n - 1
    static IntPoly power_minus_one(int n);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

    struct DivMod;
    /// Euclidean division by a monic divisor. Exact over the integers;
    /// throws std::invalid_argument if the divisor is zero or not monic.
    DivMod divmod(const IntPoly& divisor) const;

    std::string to_string() const;

   private:
    void normalize();

    std::vector<Integer> coeffs_;  // coeffs_[i] multiplies t^i
};

struct IntPoly::DivMod {
    IntPoly quotient;
    IntPoly remainder;
};

/// The n-th cyclotomic polynomial, computed by dividing t^n - 1 by the
/// product of the cyclotomic polynomials of the proper divisors of n.
/// Throws std::invalid_argument for n < 1.
IntPoly cyclotomic_polynomial(int n);

/// Exact element of Z[w] for w = e^{2*pi*i/n}, reduced modulo the n-th
/// cyclotomic polynomial. The coefficient vector always has length
/// deg(Phi_n) = phi(n). Immutable after construction; all operations are
/// pure. Arithmetic between different orders throws std::invalid_argument
/// rather than coercing.
class CyclotomicNumber {
   public:
    /// Zero of the given order.
    explicit CyclotomicNumber(int order);

    static CyclotomicNumber zero(int order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(int order) { return from_integer(order, 1); }
    static CyclotomicNumber from_integer(int order, Integer value);
    /// w^k, any integer k (reduced mod n).
    static CyclotomicNumber from_power(int order, long long k);
    /// From a raw coefficient vector of length phi(n) (already reduced).
    static CyclotomicNumber from_coeffs(int order, std::vector<Integer> coeffs);

    int order() const { return order_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    CyclotomicNumber operator+(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator*(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-() const;
    bool operator==(const CyclotomicNumber& rhs) const {
        return order_ == rhs.order_ && coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const CyclotomicNumber& rhs) const { return !(*this == rhs); }

    /// this * w^k without a full convolution.
    CyclotomicNumber times_root_power(long long k) const;

    /// Image under w -> w^{-1} (complex conjugation restricted to Z[w]).
    CyclotomicNumber conj() const;

    /// Floating-point value sum c_i * e^{2*pi*i*i/n}. The absolute error is
    /// bounded by a small multiple of (sum |c_i|) * machine epsilon.
    std::complex<double> to_complex() const;

    /// Coefficient vector over the w-power basis, e.g. "[-1, -1]".
    std::string to_string() const;

   private:
    CyclotomicNumber(int order, std::vector<Integer> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    int order_;
    std::vector<Integer> coeffs_;
};

inline CyclotomicNumber conj(const CyclotomicNumber& a) { return a.conj(); }

}  // namespace cycloqsp
