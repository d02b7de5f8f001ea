#include "cycloqsp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cycloqsp {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly IntPoly::monomial(int degree, Integer coeff) {
    if (degree < 0) {
        throw std::invalid_argument("IntPoly: negative degree");
    }
    std::vector<Integer> c(static_cast<size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::power_minus_one(int n) {
    if (n < 1) {
        throw std::invalid_argument("IntPoly: exponent must be positive");
    }
    std::vector<Integer> c(static_cast<size_t>(n) + 1);
    c[0] = -1;
    c.back() = 1;
    return IntPoly(std::move(c));
}

const Integer& IntPoly::coeff(int i) const {
    static const Integer kZero = 0;
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) {
        return kZero;
    }
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) c[i] += rhs.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) c[i] -= rhs.coeffs_[i];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) {
        return IntPoly();
    }
    std::vector<Integer> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPoly(std::move(c));
}

IntPoly::DivMod IntPoly::divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) {
        throw std::invalid_argument("IntPoly: division by zero polynomial");
    }
    if (divisor.coeffs_.back() != 1) {
        throw std::invalid_argument("IntPoly: divisor must be monic");
    }
    std::vector<Integer> rem = coeffs_;
    const int d = divisor.degree();
    std::vector<Integer> quot;
    if (degree() >= d) {
        quot.resize(static_cast<size_t>(degree() - d) + 1);
    }
    for (int k = degree(); k >= d; --k) {
        Integer factor = rem[static_cast<size_t>(k)];
        if (factor == 0) continue;
        quot[static_cast<size_t>(k - d)] = factor;
        for (int j = 0; j <= d; ++j) {
            rem[static_cast<size_t>(k - d + j)] -= factor * divisor.coeffs_[static_cast<size_t>(j)];
        }
    }
    return DivMod{IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> d;
    for (int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
    if (n < 1) {
        throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    }
    // Phi_d for each divisor d of n, ascending: Phi_d = (t^d - 1) / prod of
    // the Phi_e over proper divisors e of d.
    std::map<int, IntPoly> phi;
    for (int d : divisors_of(n)) {
        IntPoly prod = IntPoly::one();
        for (const auto& [e, p] : phi) {
            if (d % e == 0) prod = prod * p;
        }
        auto dm = IntPoly::power_minus_one(d).divmod(prod);
        if (!dm.remainder.is_zero()) {
            throw std::logic_error("cyclotomic_polynomial: inexact divisor recursion");
        }
        phi.emplace(d, std::move(dm.quotient));
    }
    return phi.at(n);
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

namespace {

// Per-order reduction data: Phi_n and the reduced form of every power w^k
// needed by arithmetic (k < max(n, 2*phi(n) - 1)). Contexts are immutable
// once built and cached behind a mutex.
struct RingContext {
    int order = 0;
    int phi = 0;
    IntPoly phi_poly;
    // rows[k] = coefficients of t^k mod Phi_n, length phi.
    std::vector<std::vector<Integer>> rows;
};

const RingContext& ring_context(int order) {
    if (order < 1) {
        throw std::invalid_argument("CyclotomicNumber: order must be >= 1");
    }
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const RingContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) {
        return *it->second;
    }

    auto ctx = std::make_unique<RingContext>();
    ctx->order = order;
    ctx->phi_poly = cyclotomic_polynomial(order);
    ctx->phi = ctx->phi_poly.degree();
    const int phi = ctx->phi;
    const int max_power = std::max(order, 2 * phi - 1);
    ctx->rows.resize(static_cast<size_t>(max_power));
    for (int k = 0; k < max_power; ++k) {
        auto& row = ctx->rows[static_cast<size_t>(k)];
        row.assign(static_cast<size_t>(phi), 0);
        if (k < phi) {
            row[static_cast<size_t>(k)] = 1;
        } else {
            // t^k = t * t^(k-1), then fold the overflow coefficient back via
            // t^phi = -(lower part of Phi_n).
            const auto& prev = ctx->rows[static_cast<size_t>(k - 1)];
            Integer top = prev[static_cast<size_t>(phi - 1)];
            for (int j = phi - 1; j > 0; --j) {
                row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
            }
            row[0] = 0;
            if (top != 0) {
                for (int j = 0; j < phi; ++j) {
                    row[static_cast<size_t>(j)] -= top * ctx->phi_poly.coeff(j);
                }
            }
        }
    }
    const RingContext& ref = *ctx;
    cache.emplace(order, std::move(ctx));
    return ref;
}

void check_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("CyclotomicNumber: order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
    }
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(int order) : order_(order) {
    const auto& ctx = ring_context(order);
    coeffs_.assign(static_cast<size_t>(ctx.phi), 0);
}

CyclotomicNumber CyclotomicNumber::from_integer(int order, Integer value) {
    CyclotomicNumber a(order);
    a.coeffs_[0] = std::move(value);
    return a;
}

CyclotomicNumber CyclotomicNumber::from_power(int order, long long k) {
    const auto& ctx = ring_context(order);
    long long e = k % order;
    if (e < 0) e += order;
    return CyclotomicNumber(order, ctx.rows[static_cast<size_t>(e)]);
}

CyclotomicNumber CyclotomicNumber::from_coeffs(int order, std::vector<Integer> coeffs) {
    const auto& ctx = ring_context(order);
    if (coeffs.size() != static_cast<size_t>(ctx.phi)) {
        throw std::invalid_argument("CyclotomicNumber: coefficient vector must have length phi(n)");
    }
    return CyclotomicNumber(order, std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& rhs) const {
    check_same_order(*this, rhs);
    std::vector<Integer> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] += rhs.coeffs_[i];
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& rhs) const {
    check_same_order(*this, rhs);
    std::vector<Integer> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] -= rhs.coeffs_[i];
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Integer> c(coeffs_);
    for (auto& x : c) {
        x = -x;
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& rhs) const {
    check_same_order(*this, rhs);
    const auto& ctx = ring_context(order_);
    const int phi = ctx.phi;
    // Convolve, then fold powers >= phi back via the precomputed rows.
    std::vector<Integer> conv(static_cast<size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (rhs.coeffs_[static_cast<size_t>(j)] == 0) continue;
            conv[static_cast<size_t>(i + j)] +=
                coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(j)];
        }
    }
    std::vector<Integer> c(conv.begin(), conv.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        const Integer& top = conv[static_cast<size_t>(k)];
        if (top == 0) continue;
        const auto& row = ctx.rows[static_cast<size_t>(k)];
        for (int j = 0; j < phi; ++j) {
            if (row[static_cast<size_t>(j)] != 0) {
                c[static_cast<size_t>(j)] += top * row[static_cast<size_t>(j)];
            }
        }
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::times_root_power(long long k) const {
    const auto& ctx = ring_context(order_);
    const int phi = ctx.phi;
    long long e = k % order_;
    if (e < 0) e += order_;
    std::vector<Integer> c(static_cast<size_t>(phi));
    for (int j = 0; j < phi; ++j) {
        const Integer& cj = coeffs_[static_cast<size_t>(j)];
        if (cj == 0) continue;
        const long long p = (j + e) % order_;
        if (p < phi) {
            c[static_cast<size_t>(p)] += cj;
        } else {
            const auto& row = ctx.rows[static_cast<size_t>(p)];
            for (int i = 0; i < phi; ++i) {
                if (row[static_cast<size_t>(i)] != 0) {
                    c[static_cast<size_t>(i)] += cj * row[static_cast<size_t>(i)];
                }
            }
        }
    }
    return CyclotomicNumber(order_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::conj() const {
    const auto& ctx = ring_context(order_);
    const int phi = ctx.phi;
    std::vector<Integer> c(static_cast<size_t>(phi));
    for (int j = 0; j < phi; ++j) {
        const Integer& cj = coeffs_[static_cast<size_t>(j)];
        if (cj == 0) continue;
        const int p = (order_ - j) % order_;
        const auto& row = ctx.rows[static_cast<size_t>(p)];
        for (int i = 0; i < phi; ++i) {
            if (row[static_cast<size_t>(i)] != 0) {
                c[static_cast<size_t>(i)] += cj * row[static_cast<size_t>(i)];
            }
        }
    }
    return CyclotomicNumber(order_, std::move(c));
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const double c = coeffs_[i].convert_to<double>();
        const double angle = step * static_cast<double>(i);
        acc += c * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) os << ", ";
        os << coeffs_[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace cycloqsp
