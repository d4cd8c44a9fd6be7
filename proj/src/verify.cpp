#include "kr2/verify.hpp"

#include "kr2/membership_oracle.hpp"
#include "kr2/parser.hpp"

namespace kr2 {

namespace sample {

Rational rational(SplitMix64& rng, long max_abs_num, long max_den) {
    long num = rng.below(2 * max_abs_num + 1) - max_abs_num;
    long den = 1 + rng.below(max_den);
    return Rational(num, den);
}

Rational nonzero_rational(SplitMix64& rng, long max_abs_num, long max_den) {
    while (true) {
        Rational r = rational(rng, max_abs_num, max_den);
        if (r != 0) return r;
    }
}

Scalar scalar(SplitMix64& rng, const CycloContextPtr& ctx) {
    if (!ctx || rng.below(2) == 0) return Scalar(rational(rng));
    std::vector<Rational> coeffs;
    for (long i = 0; i < ctx->degree(); ++i) coeffs.push_back(rational(rng, 3, 2));
    return Scalar::cyclotomic(ctx, std::move(coeffs));
}

MultiPoly poly(SplitMix64& rng, std::initializer_list<Var> vars, long max_degree,
               long max_terms) {
    MultiPoly out;
    long terms = 1 + rng.below(max_terms);
    for (long i = 0; i < terms; ++i) {
        Monomial m;
        long budget = max_degree;
        for (Var v : vars) {
            long e = rng.below(budget + 1);
            m[v] = static_cast<std::uint32_t>(e);
            budget -= e;
        }
        out.add_term(m, Scalar(rational(rng)));
    }
    return out;
}

Scalar group_scale(SplitMix64& rng, const CycloContextPtr& ctx) {
    static const Rational choices[] = {Rational(1),  Rational(-1),   Rational(2),
                                       Rational(-2), Rational(1, 2), Rational(-1, 2)};
    long extra = ctx ? ctx->degree() : 0;
    long pick = rng.below(6 + extra);
    if (pick < 6) return Scalar(choices[pick]);
    return Scalar::zeta(ctx).pow(1 + pick - 6);
}

Automorphism automorphism(SplitMix64& rng, const ThreefoldParams& params,
                          const CycloContextPtr& ctx, long max_degree) {
    MultiPoly p = poly(rng, {Var::X, Var::Z}, max_degree, 3);
    return Automorphism(params, std::move(p), group_scale(rng, ctx));
}

SurfacePoint big_orbit_point(SplitMix64& rng, const ThreefoldParams& params) {
    while (true) {
        Scalar x(rational(rng, 3, 2));
        Scalar z(rational(rng, 3, 2));
        Scalar t(rational(rng, 3, 2));
        Scalar f0 = x.pow(params.d) + z.pow(params.a2);
        if (f0.is_zero()) continue;
        Scalar y = -(x + t.pow(params.a3)) / f0.pow(params.l);
        return make_point(params, x, y, z, t);
    }
}

SurfacePoint cusp_point(SplitMix64& rng, const ThreefoldParams& params) {
    // base witness on the cusp: x = -1, z = +-1 (sign fixed by parity), t = 1
    Scalar z_base = params.d % 2 == 1 ? Scalar(1) : Scalar(-1);
    SurfacePoint base =
        make_point(params, Scalar(-1), Scalar(rational(rng, 5, 2)), z_base, Scalar(1));
    Automorphism torus(params, MultiPoly(), Scalar(nonzero_rational(rng, 3, 2)));
    return act_on_point(torus, base);
}

SurfacePoint point(SplitMix64& rng, const ThreefoldParams& params) {
    switch (rng.below(5)) {
        case 0: return make_point(params, Scalar(0), Scalar(0), Scalar(0), Scalar(0));
        case 1:
            return make_point(params, Scalar(0), Scalar(nonzero_rational(rng, 5, 2)), Scalar(0),
                              Scalar(0));
        case 2: return cusp_point(rng, params);
        default: return big_orbit_point(rng, params);
    }
}

}  // namespace sample

namespace {

struct Check {
    std::string name;
    std::function<bool(SplitMix64&, std::string&)> run;
};

MultiPoly poly_of(const RingElement& e) { return e.representative(); }

bool images_equal_in_ring(const ThreefoldParams& params, const SubstitutionData& a,
                          const SubstitutionData& b) {
    return ring_eq(params, a.x, b.x) && ring_eq(params, a.y, b.y) && ring_eq(params, a.z, b.z) &&
           ring_eq(params, a.t, b.t);
}

SubstitutionData substituted_images(const Automorphism& outer, const Automorphism& inner) {
    // images of outer o inner: push inner's images through outer
    SubstitutionData oi = generator_images(outer);
    SubstitutionData ii = generator_images(inner);
    auto outer_map = oi.as_map();
    SubstitutionData out;
    out.x = substitute(ii.x, outer_map);
    out.y = substitute(ii.y, outer_map);
    out.z = substitute(ii.z, outer_map);
    out.t = substitute(ii.t, outer_map);
    return out;
}

}  // namespace

std::vector<PropertyResult> run_verify_suite(const VerifyOptions& options) {
    const ThreefoldParams& P = options.params;
    const CycloContextPtr& ctx = options.cyclo;
    std::vector<Check> checks;

    auto add = [&](std::string name, std::function<bool(SplitMix64&, std::string&)> fn) {
        checks.push_back({std::move(name), std::move(fn)});
    };

    // ---- scalars ----
    add("scalars.field_axioms", [&](SplitMix64& rng, std::string& why) {
        CycloContextPtr field = ctx ? ctx : CycloContext::make(3);
        for (int i = 0; i < 20; ++i) {
            Scalar a = sample::scalar(rng, field);
            Scalar b = sample::scalar(rng, field);
            Scalar c = sample::scalar(rng, field);
            if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) {
                why = "associativity failed";
                return false;
            }
            if (a + b != b + a || a * b != b * a) {
                why = "commutativity failed";
                return false;
            }
            if (a * (b + c) != a * b + a * c) {
                why = "distributivity failed";
                return false;
            }
            if (!a.is_zero() && !(a * a.inverse()).is_one()) {
                why = "a * a^-1 != 1";
                return false;
            }
        }
        return true;
    });

    add("scalars.cyclotomic_minimal_poly", [&](SplitMix64&, std::string& why) {
        for (long n = 1; n <= 12; ++n) {
            auto phi = cyclotomic_minimal_poly(n);
            if (static_cast<long>(phi.size()) != euler_phi(n) + 1 || phi.back() != 1) {
                why = "degree or leading coefficient wrong at n=" + std::to_string(n);
                return false;
            }
            CycloContextPtr c = CycloContext::make(n);
            if (!Scalar::zeta(c).pow(n).is_one()) {
                why = "zeta^n != 1 at n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    add("scalars.rational_normalization", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 30; ++i) {
            Rational a = sample::rational(rng, 40, 24);
            Rational b = sample::nonzero_rational(rng, 40, 24);
            Rational q = a / b;
            if (denominator(q) <= 0 || gcd(numerator(q), denominator(q)) != 1) {
                why = "result not in reduced form";
                return false;
            }
        }
        return true;
    });

    // ---- polynomials ----
    add("poly.exact_div_roundtrip", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 15; ++i) {
            MultiPoly a = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 4);
            MultiPoly b = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 3);
            if (b.is_zero()) continue;
            auto q = exact_div(a * b, b);
            if (!q || *q != a) {
                why = "exact_div(a*b, b) != a";
                return false;
            }
        }
        return true;
    });

    add("poly.substitute_is_homomorphism", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            MultiPoly a = sample::poly(rng, {Var::X, Var::Z, Var::T}, 3);
            MultiPoly b = sample::poly(rng, {Var::X, Var::Z, Var::T}, 3);
            std::map<Var, MultiPoly> sigma{{Var::X, sample::poly(rng, {Var::X, Var::Z}, 2)},
                                           {Var::Z, sample::poly(rng, {Var::Z, Var::T}, 2)},
                                           {Var::T, sample::poly(rng, {Var::X, Var::T}, 2)}};
            if (substitute(a * b, sigma) != substitute(a, sigma) * substitute(b, sigma) ||
                substitute(a + b, sigma) != substitute(a, sigma) + substitute(b, sigma)) {
                why = "substitution not multiplicative/additive";
                return false;
            }
        }
        return true;
    });

    add("poly.weight_additivity", [&](SplitMix64& rng, std::string& why) {
        WeightVector w = weights(P);
        for (int i = 0; i < 12; ++i) {
            // weighted-homogeneous samples: single weighted-degree monomial mixes
            MultiPoly a = MultiPoly::term(Monomial{{static_cast<std::uint32_t>(rng.below(3)),
                                                    static_cast<std::uint32_t>(rng.below(2)),
                                                    static_cast<std::uint32_t>(rng.below(3)),
                                                    static_cast<std::uint32_t>(rng.below(3))}},
                                          Scalar(sample::nonzero_rational(rng)));
            MultiPoly b = cusp_poly(P).pow(static_cast<std::uint32_t>(rng.below(2) + 1));
            auto wa = weight_of(a, w), wb = weight_of(b, w), wab = weight_of(a * b, w);
            if (!wa || !wb || !wab || *wab != *wa + *wb) {
                why = "weight(a*b) != weight(a) + weight(b)";
                return false;
            }
        }
        return true;
    });

    add("poly.evaluate_substitute_commute", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            MultiPoly a = sample::poly(rng, {Var::X, Var::Z, Var::T}, 3);
            std::map<Var, MultiPoly> sigma{{Var::X, sample::poly(rng, {Var::X, Var::Z}, 2)},
                                           {Var::Z, sample::poly(rng, {Var::Z}, 2)},
                                           {Var::T, sample::poly(rng, {Var::X, Var::T}, 2)}};
            std::map<Var, Scalar> pt{{Var::X, Scalar(sample::rational(rng))},
                                     {Var::Z, Scalar(sample::rational(rng))},
                                     {Var::T, Scalar(sample::rational(rng))}};
            std::map<Var, Scalar> pushed;
            for (auto& [v, img] : sigma) pushed.emplace(v, evaluate(img, pt));
            if (evaluate(substitute(a, sigma), pt) != evaluate(a, pushed)) {
                why = "evaluate(substitute) != evaluate at pushed point";
                return false;
            }
        }
        return true;
    });

    // ---- coordinate ring ----
    add("ring.normal_form_idempotent", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 15; ++i) {
            MultiPoly g = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 6, 6);
            RingElement nf = normal_form(P, g);
            if (normal_form(P, nf.representative()) != nf) {
                why = "renormalizing a normal form changed it";
                return false;
            }
        }
        return true;
    });

    add("ring.normal_form_confluent", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 15; ++i) {
            MultiPoly g = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 6, 6);
            MultiPoly noise = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 3) *
                              cusp_poly_power(P) * MultiPoly::variable(Var::Y);
            g += noise;  // make sure rewrites actually fire
            if (normal_form(P, g, ReduceOrder::TopDown) !=
                normal_form(P, g, ReduceOrder::BottomUp)) {
                why = "rewrite order changed the normal form";
                return false;
            }
        }
        return true;
    });

    add("ring.normal_form_ignores_relation", [&](SplitMix64& rng, std::string& why) {
        MultiPoly defining = defining_poly(P);
        for (int i = 0; i < 15; ++i) {
            MultiPoly g = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 5, 5);
            MultiPoly r = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 3);
            if (normal_form(P, g + r * defining) != normal_form(P, g)) {
                why = "normal_form(g + r P) != normal_form(g)";
                return false;
            }
        }
        return true;
    });

    add("ring.ideal_i_matches_linear_oracle", [&](SplitMix64& rng, std::string& why) {
        BoundedMembershipOracle oracle(P, 8);
        MultiPoly fl = cusp_poly_power(P);
        MultiPoly gen2 = shifted_x(P);
        for (int i = 0; i < 30; ++i) {
            MultiPoly q;
            if (rng.below(2) == 0) {
                q = sample::poly(rng, {Var::X, Var::Z, Var::T}, 8, 5);
            } else {
                long slack_a = 8 - fl.total_degree(), slack_b = 8 - P.a3;
                q = sample::poly(rng, {Var::X, Var::Z}, slack_a, 3) * fl +
                    sample::poly(rng, {Var::X, Var::Z, Var::T}, slack_b, 3) * gen2;
            }
            if (q.total_degree() > 8) continue;
            IMembership got = ideal_I_membership(P, q);
            if (got.member != oracle.contains(q)) {
                why = "decision disagrees with the linear-system oracle";
                return false;
            }
            if (got.member && got.a_cofactor * fl + got.b_cofactor * gen2 != q) {
                why = "certificate does not re-multiply to the input";
                return false;
            }
        }
        return true;
    });

    add("ring.ideal_j_witness_verifies", [&](SplitMix64& rng, std::string& why) {
        MultiPoly fl = cusp_poly_power(P);
        for (int i = 0; i < 10; ++i) {
            MultiPoly h = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 4, 4);
            MultiPoly g = fl * h;
            JMembership got = ideal_J_membership(P, g);
            if (!got.member) {
                why = "a constructed member of J was rejected";
                return false;
            }
            MultiPoly witness;
            for (std::size_t k = 0; k < got.witness_coeffs.size(); ++k)
                witness += got.witness_coeffs[k] * MultiPoly::variable(Var::Y).pow(
                                                       static_cast<std::uint32_t>(k));
            if (!ring_eq(P, fl * witness, g)) {
                why = "witness does not satisfy g = f^l h";
                return false;
            }
        }
        return true;
    });

    // ---- derivations ----
    add("lnd.kills_defining_polynomial", [&](SplitMix64&, std::string& why) {
        if (!apply(Derivation::canonical(P), defining_poly(P)).is_zero()) {
            why = "D(P) did not normalize to 0";
            return false;
        }
        return true;
    });

    add("lnd.leibniz", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 8; ++i) {
            Derivation d(P, sample::poly(rng, {Var::X, Var::Z}, 2, 2));
            MultiPoly g = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 3);
            MultiPoly h = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 3);
            MultiPoly lhs = poly_of(apply(d, g * h));
            MultiPoly rhs = poly_of(apply(d, g)) * h + g * poly_of(apply(d, h));
            if (!ring_eq(P, lhs, rhs)) {
                why = "D(gh) != D(g) h + g D(h) in the ring";
                return false;
            }
        }
        return true;
    });

    add("lnd.nilpotency_of_y", [&](SplitMix64&, std::string& why) {
        Derivation d = Derivation::canonical(P);
        RingElement y = normal_form(P, MultiPoly::variable(Var::Y));
        if (nilpotency_index(d, y) != P.a3 + 1) {
            why = "index of y is not a3 + 1";
            return false;
        }
        RingElement iter = y;
        for (long k = 0; k < P.a3; ++k) iter = apply(d, iter);
        Scalar factorial(1);
        for (long k = 2; k <= P.a3; ++k) factorial *= Scalar(k);
        MultiPoly expect =
            factorial * (-cusp_poly_power(P)).pow(static_cast<std::uint32_t>(P.a3 - 1));
        if (!ring_eq(P, iter.representative(), expect)) {
            why = "D^{a3}(y) != a3! (-f^l)^{a3-1}";
            return false;
        }
        return true;
    });

    add("lnd.exp_one_parameter_group", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            MultiPoly q1 = sample::poly(rng, {Var::X, Var::Z}, 3, 3);
            MultiPoly q2 = sample::poly(rng, {Var::X, Var::Z}, 3, 3);
            Automorphism lhs = compose(exp_lnd(Derivation(P, q1)), exp_lnd(Derivation(P, q2)));
            Automorphism rhs = exp_lnd(Derivation(P, q1 + q2));
            if (lhs != rhs) {
                why = "exp(q) exp(q') != exp(q + q')";
                return false;
            }
        }
        return true;
    });

    add("lnd.exp_is_automorphism", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 8; ++i) {
            Derivation d(P, sample::poly(rng, {Var::X, Var::Z}, 3, 3));
            SubstitutionData images = exp_generator_images(d);
            if (!normal_form(P, substitute(defining_poly(P), images.as_map())).is_zero()) {
                why = "exp images do not preserve the relation";
                return false;
            }
            if (!images_equal_in_ring(P, images, generator_images(exp_lnd(d)))) {
                why = "exp sum images differ from the group element's images";
                return false;
            }
        }
        return true;
    });

    add("lnd.kernel_contains_xz_only", [&](SplitMix64& rng, std::string& why) {
        Derivation d = Derivation::canonical(P);
        for (int i = 0; i < 8; ++i) {
            MultiPoly g = sample::poly(rng, {Var::X, Var::Z}, 4);
            if (!apply(d, g).is_zero()) {
                why = "an element of C[x,z] was not killed";
                return false;
            }
        }
        if (apply(d, MultiPoly::variable(Var::T)).is_zero() ||
            apply(d, MultiPoly::variable(Var::Y)).is_zero()) {
            why = "t or y is killed but should not be";
            return false;
        }
        return true;
    });

    // ---- automorphism group ----
    add("aut.group_axioms", [&](SplitMix64& rng, std::string& why) {
        Automorphism id = Automorphism::identity(P);
        for (int i = 0; i < 10; ++i) {
            Automorphism a = sample::automorphism(rng, P, ctx);
            Automorphism b = sample::automorphism(rng, P, ctx);
            Automorphism c = sample::automorphism(rng, P, ctx);
            if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
                why = "composition is not associative";
                return false;
            }
            if (compose(a, id) != a || compose(id, a) != a) {
                why = "identity law failed";
                return false;
            }
            if (compose(a, inverse(a)) != id || compose(inverse(a), a) != id) {
                why = "inverse law failed";
                return false;
            }
        }
        return true;
    });

    add("aut.compose_matches_substitution", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            Automorphism a = sample::automorphism(rng, P, ctx);
            Automorphism b = sample::automorphism(rng, P, ctx);
            SubstitutionData via_subst = substituted_images(a, b);
            if (!images_equal_in_ring(P, via_subst, generator_images(compose(a, b)))) {
                why = "formula and substitution images disagree";
                return false;
            }
            if (decompose(P, via_subst) != compose(a, b)) {
                why = "decomposed substitution images differ from the formula";
                return false;
            }
        }
        return true;
    });

    add("aut.decompose_roundtrip", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            Automorphism a = sample::automorphism(rng, P, ctx);
            if (decompose(P, generator_images(a)) != a) {
                why = "decompose(generator_images(a)) != a";
                return false;
            }
        }
        return true;
    });

    add("aut.shears_form_normal_subgroup", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            Automorphism g = sample::automorphism(rng, P, ctx);
            Automorphism a = lift_from_A(P, sample::poly(rng, {Var::X, Var::Z}, 2, 3));
            Automorphism conj = compose(g, compose(a, inverse(g)));
            if (!conj.scale().is_one()) {
                why = "conjugate of a shear has mu != 1";
                return false;
            }
        }
        return true;
    });

    add("aut.shears_abelian_additive", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            MultiPoly p1 = sample::poly(rng, {Var::X, Var::Z}, 2, 3);
            MultiPoly p2 = sample::poly(rng, {Var::X, Var::Z}, 2, 3);
            Automorphism a = lift_from_A(P, p1), b = lift_from_A(P, p2);
            if (compose(a, b) != compose(b, a) || compose(a, b).shear() != p1 + p2) {
                why = "shears do not commute and add";
                return false;
            }
        }
        return true;
    });

    add("aut.preserves_relation", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 8; ++i) {
            Automorphism a = sample::automorphism(rng, P, ctx);
            if (!apply_aut(a, defining_poly(P)).is_zero()) {
                why = "image of P did not normalize to 0";
                return false;
            }
        }
        return true;
    });

    add("aut.stabilizes_xz_subring", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 8; ++i) {
            Automorphism a = sample::automorphism(rng, P, ctx);
            MultiPoly g = sample::poly(rng, {Var::X, Var::Z}, 3);
            MultiPoly image = apply_aut(a, g).representative();
            if (!image.in_vars({Var::X, Var::Z})) {
                why = "image of an (x,z)-polynomial left C[x,z]";
                return false;
            }
        }
        return true;
    });

    if (ctx && ctx->order() == 3 && P == ThreefoldParams{3, 1, 2, 3}) {
        add("aut.torus_root_of_unity", [&](SplitMix64&, std::string& why) {
            Scalar mu = Scalar::zeta(ctx).pow(2);
            Automorphism a(P, MultiPoly(), mu);
            SubstitutionData s = generator_images(a);
            MultiPoly zeta_t = Scalar::zeta(ctx) * MultiPoly::variable(Var::T);
            if (s.x != MultiPoly::variable(Var::X) || s.z != MultiPoly::variable(Var::Z) ||
                s.t != zeta_t) {
                why = "(0, zeta^2) does not fix x, z and send t to zeta t";
                return false;
            }
            Automorphism cube = compose(a, compose(a, a));
            if (!cube.is_identity() || compose(a, a).is_identity() || a.is_identity()) {
                why = "(0, zeta^2) does not have order exactly 3";
                return false;
            }
            return true;
        });
    }

    // ---- geometry ----
    add("geo.orbit_key_invariance", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 12; ++i) {
            SurfacePoint pt = sample::point(rng, P);
            Automorphism a = sample::automorphism(rng, P, nullptr, 2);
            if (orbit_classify(act_on_point(a, pt)) != orbit_classify(pt)) {
                why = "classification changed under the group action";
                return false;
            }
        }
        return true;
    });

    add("geo.shears_fix_cusp_fibers", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 10; ++i) {
            SurfacePoint pt = sample::cusp_point(rng, P);
            Automorphism a = lift_from_A(P, sample::poly(rng, {Var::X, Var::Z}, 2, 3));
            SurfacePoint moved = act_on_point(a, pt);
            if (moved.x != pt.x || moved.y != pt.y || moved.z != pt.z || moved.t != pt.t) {
                why = "a shear moved a point of the cusp fiber";
                return false;
            }
        }
        return true;
    });

    add("geo.fiber_multiplicity_realized", [&](SplitMix64&, std::string& why) {
        // over Q(zeta_{a3}) the fiber over the base cusp point splits into
        // the a3 distinct roots of t^{a3} = 1
        CycloContextPtr roots = CycloContext::make(P.a3);
        Scalar x0(-1);
        Scalar z0 = P.d % 2 == 1 ? Scalar(1) : Scalar(-1);
        FiberType ft = fiber_type(P, x0, z0);
        if (ft.tag != FiberTag::MultiLine || ft.count != P.a3) {
            why = "base cusp point not classified as a3 lines";
            return false;
        }
        std::vector<Scalar> seen;
        for (long j = 0; j < P.a3; ++j) {
            Scalar t = Scalar::zeta(roots).pow(j);
            if (!(x0 + t.pow(P.a3)).is_zero()) {
                why = "candidate root does not solve x0 + t^a3 = 0";
                return false;
            }
            for (const Scalar& s : seen)
                if (s == t) {
                    why = "roots are not distinct";
                    return false;
                }
            seen.push_back(t);
        }
        return true;
    });

    add("geo.classifier_totality", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 12; ++i) {
            SurfacePoint pt = sample::point(rng, P);
            OrbitClass c = orbit_classify(pt);
            bool has_proj = c.projective_key.has_value();
            bool has_cusp = c.cusp_key.has_value();
            bool ok = (c.tag == OrbitTag::BigOrbit && has_proj && !has_cusp) ||
                      (c.tag == OrbitTag::CuspFamily && !has_proj && has_cusp) ||
                      ((c.tag == OrbitTag::Origin || c.tag == OrbitTag::PuncturedLine) &&
                       !has_proj && !has_cusp);
            if (!ok) {
                why = "tag and key shape inconsistent";
                return false;
            }
            if (c.tag == OrbitTag::BigOrbit) {
                const auto& [alpha, beta] = *c.projective_key;
                if (!(alpha.is_one() || (alpha.is_zero() && beta.is_one())) ||
                    (alpha.is_one() && beta.is_one())) {
                    why = "projective key not normalized or equal to [1:1]";
                    return false;
                }
            }
        }
        return true;
    });

    // ---- parser ----
    add("cli.parser_roundtrip", [&](SplitMix64& rng, std::string& why) {
        for (int i = 0; i < 15; ++i) {
            MultiPoly p = sample::poly(rng, {Var::X, Var::Y, Var::Z, Var::T}, 5, 6);
            if (ctx && rng.below(3) == 0)
                p = p + MultiPoly::constant(sample::scalar(rng, ctx)) *
                            MultiPoly::variable(Var::X);
            if (parse_poly(p.str(), ctx) != p) {
                why = "printing then parsing changed the polynomial";
                return false;
            }
        }
        return true;
    });

    // run everything with per-property deterministic seeding
    std::vector<PropertyResult> results;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        SplitMix64 rng(options.seed ^ (0x51ED2700F1A4D7BDULL + 0x2545F4914F6CDD1DULL * i));
        PropertyResult r;
        r.name = checks[i].name;
        try {
            r.pass = checks[i].run(rng, r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace kr2
