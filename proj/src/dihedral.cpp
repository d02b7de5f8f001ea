#include "cycloqsp/dihedral.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cycloqsp/polymat.hpp"

namespace cycloqsp {

namespace {

int mod_order(long long v, int order) {
    long long m = v % order;
    if (m < 0) m += order;
    return static_cast<int>(m);
}

void check_same_order(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": order mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// DihedralElement

DihedralElement::DihedralElement(int order, int refl, int shift) : order_(order) {
    if (order < 1) {
        throw std::invalid_argument("DihedralElement: order must be >= 1");
    }
    refl_ = mod_order(refl, 2);
    shift_ = mod_order(shift, order);
}

DihedralElement DihedralElement::operator*(const DihedralElement& rhs) const {
    check_same_order(order_, rhs.order_, "DihedralElement");
    const int a1 = rhs.refl_ == 1 ? -shift_ : shift_;
    return DihedralElement(order_, refl_ + rhs.refl_, a1 + rhs.shift_);
}

DihedralElement DihedralElement::inverse() const {
    // (r^b c^a)^{-1} = c^{-a} r^b = r^b c^{(-1)^b (-a)}; reflections are
    // involutions.
    return DihedralElement(order_, refl_, refl_ == 1 ? shift_ : -shift_);
}

std::string DihedralElement::to_string() const {
    std::ostringstream os;
    os << "r^" << refl_ << " c^" << shift_;
    return os.str();
}

std::vector<DihedralElement> all_group_elements(int order) {
    std::vector<DihedralElement> out;
    out.reserve(2 * static_cast<size_t>(order));
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < order; ++a) {
            out.emplace_back(order, b, a);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// SignFunction

SignFunction::SignFunction(int order, std::vector<int8_t> values)
    : order_(order), values_(std::move(values)) {
    if (order < 1) {
        throw std::invalid_argument("SignFunction: order must be >= 1");
    }
    if (values_.size() != static_cast<size_t>(order)) {
        throw std::invalid_argument("SignFunction: value vector must have length n");
    }
    for (int8_t v : values_) {
        if (v != 1 && v != -1) {
            throw std::invalid_argument("SignFunction: values must be +1 or -1");
        }
    }
}

SignFunction SignFunction::constant(int order, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("SignFunction: constant must be +1 or -1");
    }
    return SignFunction(order, std::vector<int8_t>(static_cast<size_t>(order),
                                                   static_cast<int8_t>(sign)));
}

SignFunction SignFunction::from_string(std::string_view text) {
    std::vector<int8_t> values;
    values.reserve(text.size());
    for (char ch : text) {
        if (ch == '+') {
            values.push_back(1);
        } else if (ch == '-') {
            values.push_back(-1);
        } else {
            throw std::invalid_argument("SignFunction: expected a string over {+, -}");
        }
    }
    const int order = static_cast<int>(values.size());
    return SignFunction(order, std::move(values));
}

int SignFunction::value(long long i) const {
    return values_[static_cast<size_t>(mod_order(i, order_))];
}

int SignFunction::minus_count() const {
    return static_cast<int>(std::count(values_.begin(), values_.end(), -1));
}

bool SignFunction::in_a0() const { return minus_count() % 2 == 0; }

bool SignFunction::is_constant() const {
    return std::all_of(values_.begin(), values_.end(),
                       [&](int8_t v) { return v == values_[0]; });
}

bool SignFunction::operator<(const SignFunction& rhs) const {
    if (order_ != rhs.order_) return order_ < rhs.order_;
    // +1 before -1, index 0 most significant.
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] != rhs.values_[i]) return values_[i] > rhs.values_[i];
    }
    return false;
}

std::string SignFunction::to_string() const {
    std::string s;
    s.reserve(values_.size());
    for (int8_t v : values_) {
        s.push_back(v == 1 ? '+' : '-');
    }
    return s;
}

// ---------------------------------------------------------------------------
// Operations

int gamma(const SignFunction& f) {
    const int n = f.order();
    long long total = 0;
    int partial = 1;  // f(1)...f(i); the i = 0 summand vanishes regardless
    for (int i = 1; i < n; ++i) {
        partial *= f.value(i);
        total += static_cast<long long>(i) * partial;
    }
    return mod_order(total, n);
}

SignFunction star(const SignFunction& f) {
    const int n = f.order();
    std::vector<int8_t> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        values[static_cast<size_t>(i)] = static_cast<int8_t>(f.value(1 - i));
    }
    return SignFunction(n, std::move(values));
}

SignFunction act(const DihedralElement& g, const SignFunction& f) {
    check_same_order(g.order(), f.order(), "act");
    const int n = f.order();
    // g = r^b c^a acts as tau(r)^b tau(c^a).
    std::vector<int8_t> values(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        values[static_cast<size_t>(i)] = static_cast<int8_t>(f.value(i - g.shift()));
    }
    SignFunction shifted(n, std::move(values));
    return g.refl() == 1 ? star(shifted) : shifted;
}

long long big_f(const SignFunction& f) {
    const int n = f.order();
    int full = 1;
    for (int j = 1; j <= n; ++j) {
        full *= f.value(j);
    }
    long long total = full;  // i = 0 term, by the empty-product convention
    int partial = 1;
    for (int i = 1; i < n; ++i) {
        partial *= f.value(i);
        total += partial;
    }
    return total;
}

DihedralElement normal_form_product(const SignFunction& f) {
    const int n = f.order();
    int bits = 0;
    int full = 1;
    for (int i = 0; i < n; ++i) {
        bits += sign_to_bit(f.value(i));
        full *= f.value(i);
    }
    const int g = gamma(f);
    return DihedralElement(n, bits % 2, full == 1 ? g : -g);
}

DihedralElement interleaved_product_direct(const SignFunction& f) {
    const int n = f.order();
    DihedralElement acc = DihedralElement::identity(n);
    for (int i = 1; i <= n; ++i) {
        acc = acc * DihedralElement(n, sign_to_bit(f.value(i)), i);
    }
    return acc;
}

std::vector<SignFunction> enumerate_all(int order) {
    if (order < 1) {
        throw std::invalid_argument("enumerate_all: order must be >= 1");
    }
    if (order > 24) {
        throw std::invalid_argument("enumerate_all: refusing to enumerate 2^n for n > 24");
    }
    std::vector<SignFunction> out;
    out.reserve(static_cast<size_t>(1) << order);
    const uint32_t count = static_cast<uint32_t>(1) << order;
    for (uint32_t mask = 0; mask < count; ++mask) {
        std::vector<int8_t> values(static_cast<size_t>(order));
        for (int i = 0; i < order; ++i) {
            // index 0 is the most significant position so the enumeration is
            // lexicographic with +1 < -1
            const bool minus = (mask >> (order - 1 - i)) & 1u;
            values[static_cast<size_t>(i)] = minus ? -1 : 1;
        }
        out.emplace_back(order, std::move(values));
    }
    return out;
}

std::vector<SignFunction> enumerate_class(int order, int k) {
    if (k < 0) {
        throw std::invalid_argument("enumerate_class: k must be non-negative");
    }
    std::vector<SignFunction> out;
    if (k > order) return out;  // the class is empty
    for (auto& f : enumerate_all(order)) {
        if (f.minus_count() == k) out.push_back(std::move(f));
    }
    return out;
}

std::vector<SignFunction> a0_functions(int order) {
    std::vector<SignFunction> out;
    for (auto& f : enumerate_all(order)) {
        if (f.in_a0()) out.push_back(std::move(f));
    }
    return out;
}

std::vector<SignFunction> orbit(const SignFunction& f) {
    std::set<SignFunction> seen;
    for (const auto& g : all_group_elements(f.order())) {
        seen.insert(act(g, f));
    }
    return std::vector<SignFunction>(seen.begin(), seen.end());
}

Mat2<CyclotomicNumber> rep_phi(const DihedralElement& g) {
    const int n = g.order();
    if (n < 3) {
        throw std::domain_error("rep_phi: the 2x2 representation requires order >= 3");
    }
    // phi(r^b c^a) = X^b S(w^a).
    auto m = phase_matrix(n, g.shift());
    return g.refl() == 1 ? m.swap_rows() : m;
}

Mat2<CyclotomicNumber> orbit_sum(const SignFunction& f) {
    const int n = f.order();
    if (n % 2 == 0) {
        throw std::domain_error("orbit_sum: only defined for odd orders");
    }
    if (n < 3) {
        throw std::domain_error("orbit_sum: requires order >= 3");
    }
    auto acc = zero_matrix(n);
    for (const auto& member : orbit(f)) {
        acc = acc + rep_phi(normal_form_product(member));
    }
    return acc;
}

Lemma2Verdict check_lemma2(const SignFunction& f, int k) {
    const int n = f.order();
    if (!f.in_a0()) {
        throw std::invalid_argument("check_lemma2: f must have value product +1");
    }
    k = mod_order(k, n);

    Lemma2Verdict verdict;
    const int gamma_f = gamma(f);
    verdict.star_negation = gamma(star(f)) == mod_order(-gamma_f, n);

    if (n % 2 == 1) {
        const long long F = big_f(f);
        int tail = 1;  // f(1)...f(n-k)
        for (int j = 1; j <= n - k; ++j) {
            tail *= f.value(j);
        }
        const int lhs = gamma(act(DihedralElement::rotation(n, k), f));
        const int rhs = mod_order((gamma_f + F * k) * tail, n);
        verdict.shift_rule = (lhs == rhs);
    }

    const int lhs_star = gamma(act(DihedralElement::rotation(n, k), star(f)));
    const int rhs_star = mod_order(-gamma(act(DihedralElement::rotation(n, -k), f)), n);
    verdict.star_shift = lhs_star == rhs_star;
    return verdict;
}

}  // namespace cycloqsp
