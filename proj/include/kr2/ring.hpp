#pragma once

#include <vector>

#include "kr2/params.hpp"

namespace kr2 {

/// Which applicable y-level the normal-form rewrite picks first. Both
/// strategies terminate in the same canonical form; keeping both lets the
/// test suite check confluence instead of assuming it.
enum class ReduceOrder { TopDown, BottomUp };

/// Canonical representative of an element of C[X] = C[x,y,z,t]/(P).
///
/// Stored as the y-adic coefficient sequence p_0, p_1, ..., p_n in C[x,z,t]
/// with the rewrite y f^l -> -(x + t^a3) applied until, for every i >= 1, no
/// monomial of p_i is divisible by the leading monomial of f^l. This is the
/// remainder of division by P in the block order (y-degree first, then the
/// division order on x, z, t), so representatives of equal classes coincide.
class RingElement {
public:
    const ThreefoldParams& params() const { return params_; }
    const std::vector<MultiPoly>& y_coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// the polynomial sum of p_i y^i
    MultiPoly representative() const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

    std::string str() const { return representative().str(); }

private:
    friend RingElement normal_form(const ThreefoldParams&, const MultiPoly&, ReduceOrder);
    RingElement(ThreefoldParams params, std::vector<MultiPoly> coeffs)
        : params_(params), coeffs_(std::move(coeffs)) {}

    ThreefoldParams params_;
    std::vector<MultiPoly> coeffs_;  // empty <=> zero; back() nonzero otherwise
};

RingElement normal_form(const ThreefoldParams& params, const MultiPoly& g,
                        ReduceOrder order = ReduceOrder::TopDown);

/// g = h in C[X], i.e. g - h is a multiple of P
bool ring_eq(const ThreefoldParams& params, const MultiPoly& g, const MultiPoly& h);

/// Membership of Q(x, z, t) in I = (f^l, x + t^a3) of C[x,z,t], with an
/// explicit certificate Q = a_cofactor * f^l + b_cofactor * (x + t^a3).
struct IMembership {
    bool member = false;
    MultiPoly a_cofactor;
    MultiPoly b_cofactor;
};

IMembership ideal_I_membership(const ThreefoldParams& params, const MultiPoly& q);

/// Membership of g's class in J = f^l C[X], with witness g = f^l * witness.
struct JMembership {
    bool member = false;
    std::vector<MultiPoly> witness_coeffs;  // y-adic coefficients of the witness
};

JMembership ideal_J_membership(const ThreefoldParams& params, const MultiPoly& g);

}  // namespace kr2
