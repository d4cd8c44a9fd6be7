#include "kr2/ring.hpp"

namespace kr2 {

namespace {

std::vector<MultiPoly> y_levels(const MultiPoly& g) {
    std::vector<MultiPoly> levels(g.degree_in(Var::Y) + 1);
    for (const auto& [m, c] : g.terms()) {
        Monomial stripped = m;
        stripped[Var::Y] = 0;
        levels[m[Var::Y]].add_term(stripped, c);
    }
    return levels;
}

void prune(std::vector<MultiPoly>& levels) {
    while (!levels.empty() && levels.back().is_zero()) levels.pop_back();
}

// One rewrite at level i: split p_i = q f^l + r by division, keep r, push
// -q (x + t^a3) down to level i-1. Each step subtracts q y^{i-1} P, so the
// residue class never changes. Returns true when it made progress.
bool reduce_level(std::vector<MultiPoly>& levels, std::size_t i, const MultiPoly& fl,
                  const MultiPoly& gen2) {
    auto [q, r] = divmod(levels[i], fl);
    if (q.is_zero()) return false;
    levels[i] = std::move(r);
    levels[i - 1] -= q * gen2;
    return true;
}

}  // namespace

MultiPoly RingElement::representative() const {
    MultiPoly out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (const auto& [m, c] : coeffs_[i].terms()) {
            Monomial lifted = m;
            lifted[Var::Y] = static_cast<std::uint32_t>(i);
            out.add_term(lifted, c);
        }
    }
    return out;
}

RingElement normal_form(const ThreefoldParams& params, const MultiPoly& g, ReduceOrder order) {
    MultiPoly fl = cusp_poly_power(params);
    MultiPoly gen2 = shifted_x(params);
    std::vector<MultiPoly> levels = y_levels(g);

    if (order == ReduceOrder::TopDown) {
        // one downward sweep: nothing is ever added back above the cursor
        for (std::size_t i = levels.size(); i-- > 1;) reduce_level(levels, i, fl, gen2);
    } else {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 1; i < levels.size(); ++i)
                changed = reduce_level(levels, i, fl, gen2) || changed;
        }
    }
    prune(levels);
    return RingElement(params, std::move(levels));
}

bool ring_eq(const ThreefoldParams& params, const MultiPoly& g, const MultiPoly& h) {
    return normal_form(params, g) == normal_form(params, h);
}

IMembership ideal_I_membership(const ThreefoldParams& params, const MultiPoly& q) {
    if (q.uses(Var::Y)) throw InvalidArgument("ideal I lives in C[x,z,t]; input has y");
    MultiPoly fl = cusp_poly_power(params);
    MultiPoly gen2 = shifted_x(params);

    // modulo (x + t^a3) the ring is C[z,t] with x -> -t^a3, and I becomes the
    // principal ideal generated by the image of f^l
    MultiPoly minus_t_a3 =
        MultiPoly::term(Monomial::var(Var::T, static_cast<std::uint32_t>(params.a3)), Scalar(-1));
    std::map<Var, MultiPoly> to_zt{{Var::X, minus_t_a3},
                                   {Var::Z, MultiPoly::variable(Var::Z)},
                                   {Var::T, MultiPoly::variable(Var::T)}};
    MultiPoly q_bar = substitute(q, to_zt);
    MultiPoly fl_bar = substitute(fl, to_zt);

    std::optional<MultiPoly> a_bar = q_bar.is_zero() ? MultiPoly() : exact_div(q_bar, fl_bar);
    if (!a_bar) return {};

    // back-substitution: Q - A f^l vanishes under x -> -t^a3, hence is an
    // exact multiple of x + t^a3
    MultiPoly residue = q - *a_bar * fl;
    std::optional<MultiPoly> b = residue.is_zero() ? MultiPoly() : exact_div(residue, gen2);
    if (!b) throw Error("ideal I certificate reconstruction failed");
    return {true, std::move(*a_bar), std::move(*b)};
}

JMembership ideal_J_membership(const ThreefoldParams& params, const MultiPoly& g) {
    // J = f^l C[X] pulls back to (f^l, x + t^a3) C[x,z,t][y], so the class of
    // g lies in J exactly when every y-adic coefficient of its normal form
    // lies in I. Certificates per level assemble into the witness via
    // (x + t^a3) y^i = -f^l y^{i+1} in C[X].
    RingElement nf = normal_form(params, g);
    std::vector<MultiPoly> witness(nf.y_coeffs().size() + 1);
    for (std::size_t i = 0; i < nf.y_coeffs().size(); ++i) {
        IMembership cert = ideal_I_membership(params, nf.y_coeffs()[i]);
        if (!cert.member) return {};
        witness[i] += cert.a_cofactor;
        witness[i + 1] -= cert.b_cofactor;
    }
    while (!witness.empty() && witness.back().is_zero()) witness.pop_back();
    return {true, std::move(witness)};
}

}  // namespace kr2
