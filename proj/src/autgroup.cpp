#include "kr2/autgroup.hpp"

#include <numeric>

namespace kr2 {

namespace {

// binomial coefficients as exact scalars
Scalar binomial(long n, long k) {
    Rational out(1);
    for (long i = 0; i < k; ++i) out = out * Rational(n - i) / Rational(i + 1);
    return Scalar(out);
}

// H_p = -((t + f^l p)^{a3} - t^{a3}) / f^l, expanded without division:
// every binomial term with k >= 1 carries f^{l(k-1)} explicitly.
MultiPoly y_image_correction(const ThreefoldParams& params, const MultiPoly& p) {
    MultiPoly f = cusp_poly(params);
    MultiPoly out;
    MultiPoly p_pow = MultiPoly::constant(Scalar(1));
    for (long k = 1; k <= params.a3; ++k) {
        p_pow = p_pow * p;
        if (p_pow.is_zero()) break;
        MultiPoly term = binomial(params.a3, k) *
                         (MultiPoly::term(Monomial::var(Var::T, static_cast<std::uint32_t>(params.a3 - k)),
                                          Scalar(1)) *
                          f.pow(static_cast<std::uint32_t>(params.l * (k - 1))) * p_pow);
        out -= term;
    }
    return out;
}

// scale x and z by the given factors (images stay inside C[x,z])
MultiPoly scale_xz(const MultiPoly& p, const Scalar& cx, const Scalar& cz) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Scalar scaled = c * cx.pow(m[Var::X]) * cz.pow(m[Var::Z]);
        out.add_term(m, scaled);
    }
    return out;
}

// Bezout pair (u, v) with u a + v b = 1; requires gcd(a, b) = 1
std::pair<long, long> bezout_pair(long a, long b) {
    long old_r = a, r = b;
    long old_s = 1, s = 0;
    long old_t = 0, t = 1;
    while (r != 0) {
        long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r != 1 && old_r != -1) throw Error("bezout_pair: inputs are not coprime");
    if (old_r == -1) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

long cocycle_exponent(const ThreefoldParams& p) { return p.a2 * (p.d * p.l * p.a3 - 1); }

}  // namespace

const char* aut_reject_name(AutReject r) {
    switch (r) {
        case AutReject::XImageNotMonomial: return "image of x is not c*x";
        case AutReject::ZImageNotMonomial: return "image of z is not c*z";
        case AutReject::TImageShape: return "image of t is not c*t + g(x,z)";
        case AutReject::NotDivisibleByFl: return "f^l does not divide the shear part of t";
        case AutReject::InconsistentTorus: return "x/z/t scalings are not powers of one mu";
        case AutReject::YImageMismatch: return "image of y does not match the induced map";
    }
    return "?";
}

Automorphism::Automorphism(ThreefoldParams params, MultiPoly p, Scalar mu)
    : params_(params), p_(std::move(p)), mu_(std::move(mu)) {
    if (mu_.is_zero()) throw InvalidArgument("automorphism scale mu must be nonzero");
    if (!p_.in_vars({Var::X, Var::Z}))
        throw InvalidArgument("automorphism shear polynomial must lie in C[x,z]");
}

Automorphism Automorphism::identity(const ThreefoldParams& params) {
    return Automorphism(params, MultiPoly(), Scalar(1));
}

SubstitutionData generator_images(const Automorphism& a) {
    const ThreefoldParams& pr = a.params();
    const Scalar& mu = a.scale();
    SubstitutionData s;
    s.x = mu.pow(pr.a2 * pr.a3) * MultiPoly::variable(Var::X);
    s.z = mu.pow(pr.d * pr.a3) * MultiPoly::variable(Var::Z);
    MultiPoly t_shifted = MultiPoly::variable(Var::T) + cusp_poly_power(pr) * a.shear();
    s.t = mu.pow(pr.a2) * t_shifted;
    MultiPoly y_shifted = MultiPoly::variable(Var::Y) + y_image_correction(pr, a.shear());
    s.y = mu.pow(-(pr.d * pr.l - 1) * pr.a2 * pr.a3) * y_shifted;
    return s;
}

Automorphism compose(const Automorphism& a1, const Automorphism& a2) {
    if (a1.params() != a2.params()) throw ParamMismatch();
    const ThreefoldParams& pr = a1.params();
    const Scalar& mu1 = a1.scale();
    MultiPoly twisted = scale_xz(a2.shear(), mu1.pow(pr.a2 * pr.a3), mu1.pow(pr.d * pr.a3));
    MultiPoly p = a1.shear() + mu1.pow(cocycle_exponent(pr)) * twisted;
    return Automorphism(pr, std::move(p), mu1 * a2.scale());
}

Automorphism inverse(const Automorphism& a) {
    const ThreefoldParams& pr = a.params();
    Scalar mu_inv = a.scale().inverse();
    MultiPoly unscaled = scale_xz(a.shear(), mu_inv.pow(pr.a2 * pr.a3), mu_inv.pow(pr.d * pr.a3));
    MultiPoly p = -(a.scale().pow(-cocycle_exponent(pr)) * unscaled);
    return Automorphism(pr, std::move(p), std::move(mu_inv));
}

RingElement apply_aut(const Automorphism& a, const MultiPoly& g) {
    return normal_form(a.params(), substitute(g, generator_images(a).as_map()));
}

RingElement apply_aut(const Automorphism& a, const RingElement& g) {
    if (a.params() != g.params()) throw ParamMismatch();
    return apply_aut(a, g.representative());
}

Automorphism lift_from_A(const ThreefoldParams& params, MultiPoly p) {
    return Automorphism(params, std::move(p), Scalar(1));
}

Automorphism decompose(const ThreefoldParams& params, const SubstitutionData& s) {
    auto single_var_coeff = [](const MultiPoly& image, Var v) -> Scalar {
        if (image.term_count() != 1) return Scalar(0);
        const auto& [m, c] = *image.terms().begin();
        return m == Monomial::var(v) ? c : Scalar(0);
    };

    Scalar cx = single_var_coeff(s.x, Var::X);
    if (cx.is_zero()) throw NotAnAutomorphismError(AutReject::XImageNotMonomial);
    Scalar cz = single_var_coeff(s.z, Var::Z);
    if (cz.is_zero()) throw NotAnAutomorphismError(AutReject::ZImageNotMonomial);

    // split the t-image into c_t * t plus a pure (x, z) part
    Scalar ct(0);
    MultiPoly shear_part;
    for (const auto& [m, c] : s.t.terms()) {
        if (m == Monomial::var(Var::T)) {
            ct = c;
        } else if (m[Var::Y] == 0 && m[Var::T] == 0) {
            shear_part.add_term(m, c);
        } else {
            throw NotAnAutomorphismError(AutReject::TImageShape);
        }
    }
    if (ct.is_zero()) throw NotAnAutomorphismError(AutReject::TImageShape);

    std::optional<MultiPoly> quotient = exact_div(shear_part, cusp_poly_power(params));
    if (!quotient) throw NotAnAutomorphismError(AutReject::NotDivisibleByFl);

    // the torus acts faithfully: mu = c_t^u c_z^v with u a2 + v d a3 = 1
    auto [u, v] = bezout_pair(params.a2, params.d * params.a3);
    Scalar mu = ct.pow(u) * cz.pow(v);
    if (cx != mu.pow(params.a2 * params.a3) || cz != mu.pow(params.d * params.a3) ||
        ct != mu.pow(params.a2))
        throw NotAnAutomorphismError(AutReject::InconsistentTorus);

    MultiPoly p = mu.pow(-params.a2) * *quotient;
    Automorphism candidate(params, std::move(p), std::move(mu));

    // x, z, t reproduce s by construction; the y-image must agree as a class
    SubstitutionData expect = generator_images(candidate);
    if (!ring_eq(params, s.y, expect.y)) throw NotAnAutomorphismError(AutReject::YImageMismatch);
    return candidate;
}

SurfacePoint act_on_point(const Automorphism& a, const SurfacePoint& pt) {
    if (a.params() != pt.params) throw ParamMismatch();
    SubstitutionData s = generator_images(a);
    std::map<Var, Scalar> bind{{Var::X, pt.x}, {Var::Y, pt.y}, {Var::Z, pt.z}, {Var::T, pt.t}};
    return make_point(pt.params, evaluate(s.x, bind), evaluate(s.y, bind), evaluate(s.z, bind),
                      evaluate(s.t, bind));
}

}  // namespace kr2
