#pragma once

#include "kr2/poly.hpp"

namespace kr2 {

/// Shape parameters (d, l, a2, a3) of the hypersurface
///   x + y (x^d + z^a2)^l + t^a3 = 0
/// with d >= 2, l >= 1, 2 <= a2 <= a3, gcd(a2, d) = gcd(a2, a3) = 1.
struct ThreefoldParams {
    long d = 0;
    long l = 0;
    long a2 = 0;
    long a3 = 0;

    friend bool operator==(const ThreefoldParams& a, const ThreefoldParams& b) {
        return a.d == b.d && a.l == b.l && a.a2 == b.a2 && a.a3 == b.a3;
    }
    friend bool operator!=(const ThreefoldParams& a, const ThreefoldParams& b) { return !(a == b); }
};

/// Validates the constraints; throws ConstraintViolation naming the first
/// failing condition.
ThreefoldParams make_params(long d, long l, long a2, long a3);

/// f = x^d + z^a2 (its zero set is the cusp curve in the (x, z)-plane)
MultiPoly cusp_poly(const ThreefoldParams& p);

/// f^l, the coefficient of y in the defining polynomial
MultiPoly cusp_poly_power(const ThreefoldParams& p);

/// P = x + y f^l + t^a3, fully expanded
MultiPoly defining_poly(const ThreefoldParams& p);

/// x + t^a3, the degree-zero part of P in y
MultiPoly shifted_x(const ThreefoldParams& p);

/// torus weights (a2*a3, -(d*l - 1)*a2*a3, d*a3, a2) making P quasi-homogeneous
WeightVector weights(const ThreefoldParams& p);

}  // namespace kr2
