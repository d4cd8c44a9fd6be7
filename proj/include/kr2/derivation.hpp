#pragma once

#include <optional>

#include "kr2/autgroup.hpp"

namespace kr2 {

/// A locally nilpotent derivation q(x, z) * D where D is the irreducible one,
///   D = a3 t^{a3-1} d/dy - f^l d/dt,
/// so D(x) = D(z) = 0, D(t) = -f^l, D(y) = a3 t^{a3-1}. Every locally
/// nilpotent derivation of the ring has this form (semi-rigidity), which is
/// why the multiplier q is the whole state.
class Derivation {
public:
    Derivation(ThreefoldParams params, MultiPoly q);
    static Derivation canonical(const ThreefoldParams& params);  // q = 1

    const ThreefoldParams& params() const { return params_; }
    const MultiPoly& multiplier() const { return q_; }

private:
    ThreefoldParams params_;
    MultiPoly q_;  // in x, z
};

/// Leibniz extension on a polynomial representative, then normal form.
RingElement apply(const Derivation& der, const MultiPoly& g);
RingElement apply(const Derivation& der, const RingElement& g);

/// The irreducible derivation re-derived from the Jacobian determinant
///   g -> dP/dt * dg/dy - dP/dy * dg/dt
/// (rows ordered so the signs reproduce D); true when it matches D on all
/// four generators.
bool jacobian_check(const ThreefoldParams& params);

/// Smallest n with der^n(g) = 0. The default cap is
/// a3 + y-degree(g) * a3 + 4; exceeding the cap raises CapExceeded.
long nilpotency_index(const Derivation& der, const RingElement& g,
                      std::optional<long> cap = std::nullopt);

/// The finite exponential sum exp(q D) as a group element: (-q, 1).
Automorphism exp_lnd(const Derivation& der);

/// Generator images computed directly from the exponential sum
/// sum_k q^k D^k(.) / k!; an independent route to generator_images(exp_lnd).
SubstitutionData exp_generator_images(const Derivation& der);

}  // namespace kr2
