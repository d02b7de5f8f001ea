#include "cycloqsp/polymat.hpp"

#include <sstream>
#include <stdexcept>

namespace cycloqsp {

namespace {

void check_same_order(const BivariatePoly& a, const BivariatePoly& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("BivariatePoly: order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

}  // namespace

void BivariatePoly::insert_term(int deg_x, int deg_y, CyclotomicNumber c) {
    if (c.order() != order_) {
        throw std::invalid_argument("BivariatePoly: coefficient order mismatch");
    }
    if (c.is_zero()) return;
    terms_.emplace(Key{deg_x, deg_y}, std::move(c));
}

BivariatePoly BivariatePoly::monomial(int order, int deg_x, int deg_y, CyclotomicNumber coeff) {
    if (deg_x < 0 || deg_y < 0) {
        throw std::invalid_argument("BivariatePoly: negative exponent");
    }
    BivariatePoly p(order);
    p.insert_term(deg_x, deg_y, std::move(coeff));
    return p;
}

int BivariatePoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) {
        deg = std::max(deg, key.first + key.second);
    }
    return deg;
}

CyclotomicNumber BivariatePoly::coefficient(int deg_x, int deg_y) const {
    auto it = terms_.find(Key{deg_x, deg_y});
    if (it == terms_.end()) {
        return CyclotomicNumber::zero(order_);
    }
    return it->second;
}

std::map<int, CyclotomicNumber> BivariatePoly::coefficient_of_x(int k) const {
    std::map<int, CyclotomicNumber> slice;
    for (auto it = terms_.lower_bound(Key{k, 0}); it != terms_.end() && it->first.first == k; ++it) {
        slice.emplace(it->first.second, it->second);
    }
    return slice;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& rhs) const {
    check_same_order(*this, rhs);
    BivariatePoly out(order_);
    out.terms_ = terms_;
    for (const auto& [key, c] : rhs.terms_) {
        auto it = out.terms_.find(key);
        if (it == out.terms_.end()) {
            out.terms_.emplace(key, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& rhs) const {
    return *this + (-rhs);
}

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly out(order_);
    for (const auto& [key, c] : terms_) {
        out.terms_.emplace(key, -c);
    }
    return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& rhs) const {
    check_same_order(*this, rhs);
    BivariatePoly out(order_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            Key key{ka.first + kb.first, ka.second + kb.second};
            CyclotomicNumber prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = out.terms_.find(key);
            if (it == out.terms_.end()) {
                out.terms_.emplace(key, std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

BivariatePoly BivariatePoly::shifted(int dx, int dy) const {
    BivariatePoly out(order_);
    for (const auto& [key, c] : terms_) {
        out.terms_.emplace(Key{key.first + dx, key.second + dy}, c);
    }
    return out;
}

BivariatePoly BivariatePoly::times_root_power(long long k) const {
    BivariatePoly out(order_);
    for (const auto& [key, c] : terms_) {
        out.terms_.emplace(key, c.times_root_power(k));
    }
    return out;
}

std::complex<double> BivariatePoly::eval(std::complex<double> x, std::complex<double> y) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [key, c] : terms_) {
        std::complex<double> term = c.to_complex();
        for (int i = 0; i < key.first; ++i) term *= x;
        for (int i = 0; i < key.second; ++i) term *= y;
        acc += term;
    }
    return acc;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << "; ";
        first = false;
        os << "x^" << key.first << " y^" << key.second << ": " << c.to_string();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Matrix constructors and the symbolic product

Mat2<BivariatePoly> signal_matrix_symbolic(int order) {
    return Mat2<BivariatePoly>{BivariatePoly::var_x(order), BivariatePoly::var_y(order),
                               BivariatePoly::var_y(order), BivariatePoly::var_x(order)};
}

Mat2<CyclotomicNumber> phase_matrix(int order, long long i) {
    return Mat2<CyclotomicNumber>{
        CyclotomicNumber::from_power(order, i), CyclotomicNumber::zero(order),
        CyclotomicNumber::zero(order), CyclotomicNumber::from_power(order, -i)};
}

Mat2<BivariatePoly> lift_to_poly(const Mat2<CyclotomicNumber>& m) {
    return Mat2<BivariatePoly>{BivariatePoly::constant(m.e11), BivariatePoly::constant(m.e12),
                               BivariatePoly::constant(m.e21), BivariatePoly::constant(m.e22)};
}

Mat2<CyclotomicNumber> zero_matrix(int order) {
    auto z = CyclotomicNumber::zero(order);
    return Mat2<CyclotomicNumber>{z, z, z, z};
}

Mat2<CyclotomicNumber> identity_matrix(int order) {
    auto z = CyclotomicNumber::zero(order);
    auto o = CyclotomicNumber::one(order);
    return Mat2<CyclotomicNumber>{o, z, z, o};
}

namespace {

// P <- P * [[x, y], [y, x]]; each product with a variable is an exponent
// remap, so this costs one merge per entry.
Mat2<BivariatePoly> mul_right_by_signal(const Mat2<BivariatePoly>& p) {
    return Mat2<BivariatePoly>{
        p.e11.shifted(1, 0) + p.e12.shifted(0, 1), p.e11.shifted(0, 1) + p.e12.shifted(1, 0),
        p.e21.shifted(1, 0) + p.e22.shifted(0, 1), p.e21.shifted(0, 1) + p.e22.shifted(1, 0)};
}

// P <- P * diag(w^i, w^{-i}): scale the columns.
Mat2<BivariatePoly> mul_right_by_phase(const Mat2<BivariatePoly>& p, long long i) {
    return Mat2<BivariatePoly>{p.e11.times_root_power(i), p.e12.times_root_power(-i),
                               p.e21.times_root_power(i), p.e22.times_root_power(-i)};
}

}  // namespace

Mat2<BivariatePoly> qsp_product_symbolic(int order) {
    if (order < 1) {
        throw std::invalid_argument("qsp_product_symbolic: order must be >= 1");
    }
    Mat2<BivariatePoly> acc = signal_matrix_symbolic(order);
    for (int i = 1; i <= order; ++i) {
        acc = mul_right_by_phase(acc, i);
        if (i < order) {
            acc = mul_right_by_signal(acc);
        }
    }
    return acc;
}

TheoremVerdict verify_theorem(int order) {
    auto product = qsp_product_symbolic(order);
    auto expected =
        BivariatePoly::monomial(order, order, 0, CyclotomicNumber::one(order));
    return TheoremVerdict{product.e11 == expected, std::move(product.e11)};
}

}  // namespace cycloqsp
