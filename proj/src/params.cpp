#include "kr2/params.hpp"

#include <numeric>
#include <string>

namespace kr2 {

ThreefoldParams make_params(long d, long l, long a2, long a3) {
    if (d < 2) throw ConstraintViolation("d >= 2 fails (d = " + std::to_string(d) + ")");
    if (l < 1) throw ConstraintViolation("l >= 1 fails (l = " + std::to_string(l) + ")");
    if (a2 < 2) throw ConstraintViolation("a2 >= 2 fails (a2 = " + std::to_string(a2) + ")");
    if (a2 > a3)
        throw ConstraintViolation("a2 <= a3 fails (a2 = " + std::to_string(a2) +
                                  ", a3 = " + std::to_string(a3) + ")");
    if (std::gcd(a2, d) != 1)
        throw ConstraintViolation("gcd(a2, d) = " + std::to_string(std::gcd(a2, d)) + " != 1");
    if (std::gcd(a2, a3) != 1)
        throw ConstraintViolation("gcd(a2, a3) = " + std::to_string(std::gcd(a2, a3)) + " != 1");
    return ThreefoldParams{d, l, a2, a3};
}

MultiPoly cusp_poly(const ThreefoldParams& p) {
    MultiPoly f;
    f.add_term(Monomial::var(Var::X, static_cast<std::uint32_t>(p.d)), Scalar(1));
    f.add_term(Monomial::var(Var::Z, static_cast<std::uint32_t>(p.a2)), Scalar(1));
    return f;
}

MultiPoly cusp_poly_power(const ThreefoldParams& p) {
    return cusp_poly(p).pow(static_cast<std::uint32_t>(p.l));
}

MultiPoly defining_poly(const ThreefoldParams& p) {
    MultiPoly out = MultiPoly::variable(Var::Y) * cusp_poly_power(p);
    out.add_term(Monomial::var(Var::X), Scalar(1));
    out.add_term(Monomial::var(Var::T, static_cast<std::uint32_t>(p.a3)), Scalar(1));
    return out;
}

MultiPoly shifted_x(const ThreefoldParams& p) {
    MultiPoly out;
    out.add_term(Monomial::var(Var::X), Scalar(1));
    out.add_term(Monomial::var(Var::T, static_cast<std::uint32_t>(p.a3)), Scalar(1));
    return out;
}

WeightVector weights(const ThreefoldParams& p) {
    WeightVector w;
    w.w[0] = p.a2 * p.a3;
    w.w[1] = -(p.d * p.l - 1) * p.a2 * p.a3;
    w.w[2] = p.d * p.a3;
    w.w[3] = p.a2;
    return w;
}

}  // namespace kr2
