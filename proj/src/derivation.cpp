#include "kr2/derivation.hpp"

namespace kr2 {

namespace {

MultiPoly dy_image(const ThreefoldParams& p) {
    return MultiPoly::term(Monomial::var(Var::T, static_cast<std::uint32_t>(p.a3 - 1)),
                           Scalar(p.a3));
}

// the raw derivative before normal form: q * (D(y) dg/dy - f^l dg/dt)
MultiPoly raw_apply(const ThreefoldParams& p, const MultiPoly& q, const MultiPoly& g) {
    return q * (dy_image(p) * g.derivative(Var::Y) - cusp_poly_power(p) * g.derivative(Var::T));
}

}  // namespace

Derivation::Derivation(ThreefoldParams params, MultiPoly q) : params_(params), q_(std::move(q)) {
    if (!q_.in_vars({Var::X, Var::Z}))
        throw InvalidArgument("derivation multiplier must lie in C[x,z]");
}

Derivation Derivation::canonical(const ThreefoldParams& params) {
    return Derivation(params, MultiPoly::constant(Scalar(1)));
}

RingElement apply(const Derivation& der, const MultiPoly& g) {
    return normal_form(der.params(), raw_apply(der.params(), der.multiplier(), g));
}

RingElement apply(const Derivation& der, const RingElement& g) {
    if (der.params() != g.params()) throw ParamMismatch();
    return apply(der, g.representative());
}

bool jacobian_check(const ThreefoldParams& params) {
    MultiPoly P = defining_poly(params);
    MultiPoly dPdy = P.derivative(Var::Y);
    MultiPoly dPdt = P.derivative(Var::T);
    auto det = [&](const MultiPoly& g) {
        return dPdt * g.derivative(Var::Y) - dPdy * g.derivative(Var::T);
    };
    Derivation d = Derivation::canonical(params);
    for (Var v : kVars) {
        MultiPoly g = MultiPoly::variable(v);
        if (normal_form(params, det(g)) != apply(d, g)) return false;
    }
    return true;
}

long nilpotency_index(const Derivation& der, const RingElement& g, std::optional<long> cap) {
    long limit = cap.value_or(der.params().a3 +
                              static_cast<long>(g.y_coeffs().size()) * der.params().a3 + 4);
    if (limit < 1) throw InvalidArgument("nilpotency cap must be >= 1");
    RingElement cur = g;
    for (long n = 0; n <= limit; ++n) {
        if (cur.is_zero()) return n;
        cur = apply(der, cur);
    }
    throw CapExceeded(limit);
}

Automorphism exp_lnd(const Derivation& der) {
    return Automorphism(der.params(), -der.multiplier(), Scalar(1));
}

SubstitutionData exp_generator_images(const Derivation& der) {
    const ThreefoldParams& pr = der.params();
    SubstitutionData out;
    MultiPoly* slots[4] = {&out.x, &out.y, &out.z, &out.t};
    for (Var v : kVars) {
        MultiPoly acc = MultiPoly::variable(v);
        MultiPoly iterate = acc;
        Scalar factorial(1);
        MultiPoly q_pow = MultiPoly::constant(Scalar(1));
        // the sum ends at a3: D^{a3+1} kills every generator
        for (long k = 1; k <= pr.a3 + 1 && !iterate.is_zero(); ++k) {
            iterate = raw_apply(pr, MultiPoly::constant(Scalar(1)), iterate);
            q_pow = q_pow * der.multiplier();
            factorial *= Scalar(k);
            acc += factorial.inverse() * (q_pow * iterate);
        }
        *slots[static_cast<std::size_t>(v)] = std::move(acc);
    }
    return out;
}

}  // namespace kr2
