#pragma once

#include "kr2/geometry.hpp"
#include "kr2/ring.hpp"

namespace kr2 {

/// Raw images of the four generators, as given to `decompose`.
struct SubstitutionData {
    MultiPoly x, y, z, t;
    std::map<Var, MultiPoly> as_map() const {
        return {{Var::X, x}, {Var::Y, y}, {Var::Z, z}, {Var::T, t}};
    }
};

enum class AutReject {
    XImageNotMonomial,
    ZImageNotMonomial,
    TImageShape,       // t-image is not c t + g(x, z)
    NotDivisibleByFl,  // the shear part of the t-image is not a multiple of f^l
    InconsistentTorus, // c_x, c_z, c_t are not the weight powers of one mu
    YImageMismatch,
};

const char* aut_reject_name(AutReject r);

struct NotAnAutomorphismError : Error {
    AutReject reason;
    explicit NotAnAutomorphismError(AutReject r)
        : Error(std::string("not an automorphism of X: ") + aut_reject_name(r)), reason(r) {}
};

/// Element (p, mu) of A x| G_m with the convention a = phi_p o sigma_mu as
/// ring maps, i.e. a(g) = phi_p(sigma_mu(g)). sigma_mu is the weight action
/// and phi_p the shear t -> t + f^l p(x, z). Explicitly:
///   x -> mu^{a2 a3} x,  z -> mu^{d a3} z,  t -> mu^{a2} (t + f^l p),
///   y -> mu^{-(dl-1) a2 a3} (y + H_p),
/// where H_p = -((t + f^l p)^{a3} - t^{a3}) / f^l is a polynomial.
class Automorphism {
public:
    Automorphism(ThreefoldParams params, MultiPoly p, Scalar mu);
    static Automorphism identity(const ThreefoldParams& params);

    const ThreefoldParams& params() const { return params_; }
    const MultiPoly& shear() const { return p_; }
    const Scalar& scale() const { return mu_; }

    bool is_identity() const { return p_.is_zero() && mu_.is_one(); }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.params_ == b.params_ && a.p_ == b.p_ && a.mu_ == b.mu_;
    }
    friend bool operator!=(const Automorphism& a, const Automorphism& b) { return !(a == b); }

private:
    ThreefoldParams params_;
    MultiPoly p_;  // in x, z
    Scalar mu_;    // nonzero
};

SubstitutionData generator_images(const Automorphism& a);

/// (p1, mu1) * (p2, mu2) = (p1 + mu1^K p2(mu1^{a2 a3} x, mu1^{d a3} z), mu1 mu2)
/// with cocycle exponent K = a2 (d l a3 - 1); realizes a1 o a2 on the ring.
Automorphism compose(const Automorphism& a1, const Automorphism& a2);

Automorphism inverse(const Automorphism& a);

/// substitute the generator images into g, then reduce to normal form
RingElement apply_aut(const Automorphism& a, const MultiPoly& g);
RingElement apply_aut(const Automorphism& a, const RingElement& g);

/// Validates the theorem shape of raw generator images and extracts (p, mu);
/// throws NotAnAutomorphismError with the failing check otherwise. mu is
/// recovered from c_t^u c_z^v with u a2 + v d a3 = 1 (Bezout).
Automorphism decompose(const ThreefoldParams& params, const SubstitutionData& s);

/// the unique extension of the shear t -> t + f^l p: the element (p, 1)
Automorphism lift_from_A(const ThreefoldParams& params, MultiPoly p);

/// Coordinates of the image point under the pullback convention: coordinates
/// are evaluated through the generator images, so
/// act_on_point(compose(a, b), pt) = act_on_point(b, act_on_point(a, pt)).
SurfacePoint act_on_point(const Automorphism& a, const SurfacePoint& pt);

}  // namespace kr2
