// 2x2 matrix over an arbitrary ring. Entries only need +, *, unary - and ==;
// instantiated with CyclotomicNumber, BivariatePoly and std::complex<double>.

#pragma once

#include <utility>

namespace cycloqsp {

template <typename R>
struct Mat2 {
    R e11, e12, e21, e22;

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2{a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return Mat2{a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                    a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }

    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
    }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }

    Mat2 transpose() const { return Mat2{e11, e21, e12, e22}; }

    /// Swap the rows (left multiplication by [[0,1],[1,0]]).
    Mat2 swap_rows() const { return Mat2{e21, e22, e11, e12}; }
};

/// Conjugate transpose; resolves conj(entry) by ADL (CyclotomicNumber and
/// std::complex both provide one).
template <typename R>
Mat2<R> conj_transpose(const Mat2<R>& m) {
    using std::conj;
    return Mat2<R>{conj(m.e11), conj(m.e21), conj(m.e12), conj(m.e22)};
}

}  // namespace cycloqsp
