// The dihedral group D_2n acting on sign functions Z_n -> {-1, +1}: the
// evaluation function, the interleaved-product normal form, orbits, and the
// 2x2 representation. This is the machinery behind the vanishing of all
// sub-leading monomials in the symbolic product.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycloqsp/cyclotomic.hpp"
#include "cycloqsp/mat2.hpp"

namespace cycloqsp {

/// Element of the dihedral group of order 2n in the normal form
/// r^refl c^shift (reflection left of rotation), with the defining relation
/// c r = r c^{-1}.
class DihedralElement {
   public:
    DihedralElement(int order, int refl, int shift);

    static DihedralElement identity(int order) { return DihedralElement(order, 0, 0); }
    static DihedralElement rotation(int order, int k) { return DihedralElement(order, 0, k); }
    static DihedralElement reflection(int order) { return DihedralElement(order, 1, 0); }

    int order() const { return order_; }
    int refl() const { return refl_; }
    int shift() const { return shift_; }

    /// (r^b1 c^a1)(r^b2 c^a2) = r^{b1+b2} c^{(-1)^{b2} a1 + a2}.
    DihedralElement operator*(const DihedralElement& rhs) const;
    DihedralElement inverse() const;
    bool operator==(const DihedralElement& rhs) const {
        return order_ == rhs.order_ && refl_ == rhs.refl_ && shift_ == rhs.shift_;
    }
    bool operator!=(const DihedralElement& rhs) const { return !(*this == rhs); }

    /// "r^b c^a"
    std::string to_string() const;

   private:
    int order_;
    int refl_;   // 0 or 1
    int shift_;  // in [0, order)
};

/// All 2n elements of D_2n, rotations first, deterministic order.
std::vector<DihedralElement> all_group_elements(int order);

/// A function Z_n -> {-1, +1}, stored as its value vector indexed by
/// 0..n-1 and evaluated with the periodic extension elsewhere. Ordering is
/// lexicographic over the value vector with +1 < -1, which fixes the
/// enumeration and orbit orders everywhere.
class SignFunction {
   public:
    SignFunction(int order, std::vector<int8_t> values);

    static SignFunction constant(int order, int sign);
    /// Parse "+--" style strings (index 0 first).
    static SignFunction from_string(std::string_view text);

    int order() const { return order_; }
    /// f(i) for any integer i, via the periodic extension.
    int value(long long i) const;
    const std::vector<int8_t>& values() const { return values_; }

    /// Size of the preimage of -1 (the class index k).
    int minus_count() const;
    /// Whether the product of all values is +1.
    bool in_a0() const;
    bool is_constant() const;

    bool operator==(const SignFunction& rhs) const {
        return order_ == rhs.order_ && values_ == rhs.values_;
    }
    bool operator!=(const SignFunction& rhs) const { return !(*this == rhs); }
    bool operator<(const SignFunction& rhs) const;

    /// "+--" (index 0 first).
    std::string to_string() const;

   private:
    int order_;
    std::vector<int8_t> values_;
};

/// The isomorphism {-1,+1} -> Z_2 with [+1] = 0 and [-1] = 1.
inline int sign_to_bit(int sign) { return sign == 1 ? 0 : 1; }

/// Evaluation function: sum over i in Z_n of i * f(1)...f(i), mod n.
int gamma(const SignFunction& f);

/// f*(i) = f(1 - i).
SignFunction star(const SignFunction& f);

/// Group action: rotations pre-compose with the inverse shift
/// ((c^k.f)(i) = f(i - k)), the reflection sends f to f*.
SignFunction act(const DihedralElement& g, const SignFunction& f);

/// F = sum over i in Z_n of f(1)...f(i), with the empty product at i = 0
/// read as the full product f(1)...f(n). Odd (hence nonzero) whenever n is
/// odd and f has product +1; may vanish for even n.
long long big_f(const SignFunction& f);

/// Normal form of the interleaved product r^{[f(1)]} c^1 ... r^{[f(n)]} c^n.
/// The reflection exponent is the parity of |f^{-1}(-1)|; the rotation
/// exponent is gamma(f) when the product of values is +1 and -gamma(f)
/// otherwise (pushing each c^i left past the remaining reflections picks up
/// the sign f(i+1)...f(n), which folds to the gamma partial products only up
/// to the full product).
DihedralElement normal_form_product(const SignFunction& f);

/// The same product r^{[f(1)]} c^1 ... r^{[f(n)]} c^n evaluated by direct
/// left-to-right group multiplication, with no appeal to the closed form.
/// Agreement with normal_form_product is the group-layer oracle.
DihedralElement interleaved_product_direct(const SignFunction& f);

/// All sign functions of the given order with exactly k values -1,
/// lexicographic (+1 < -1); empty for k > n.
std::vector<SignFunction> enumerate_class(int order, int k);

/// All 2^n sign functions, lexicographic.
std::vector<SignFunction> enumerate_all(int order);

/// The even classes (product of values +1), lexicographic.
std::vector<SignFunction> a0_functions(int order);

/// Orbit of f under the whole group action, deduplicated and sorted.
std::vector<SignFunction> orbit(const SignFunction& f);

/// The 2x2 representation c -> diag(w, w^{-1}), r -> [[0,1],[1,0]].
/// Requires order >= 3 (the two-dimensional image is reducible below that);
/// throws std::domain_error otherwise.
Mat2<CyclotomicNumber> rep_phi(const DihedralElement& g);

/// Sum of rep_phi(normal_form_product(g)) over the orbit of f. Exactly the
/// zero matrix for non-constant f with value product +1 when the order is
/// odd; throws std::domain_error for even orders.
Mat2<CyclotomicNumber> orbit_sum(const SignFunction& f);

/// Per-identity results for the evaluation-function identities. The shift
/// rule only applies to odd orders and is left unset otherwise.
struct Lemma2Verdict {
    bool star_negation = false;             // gamma(f*) = -gamma(f)
    std::optional<bool> shift_rule;         // gamma(c^k.f) = (gamma(f) + F k) f(1)...f(n-k)
    bool star_shift = false;                // gamma(c^k.f*) = -gamma(c^{-k}.f)
    bool all_passed() const {
        return star_negation && star_shift && shift_rule.value_or(true);
    }
};

/// Checks the three identities for f (which must have value product +1;
/// throws std::invalid_argument otherwise) and a shift k in Z_n.
Lemma2Verdict check_lemma2(const SignFunction& f, int k);

}  // namespace cycloqsp
