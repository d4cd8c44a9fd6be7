#include "kr2/geometry.hpp"

namespace kr2 {

SurfacePoint make_point(const ThreefoldParams& params, Scalar x, Scalar y, Scalar z, Scalar t) {
    std::map<Var, Scalar> bind{{Var::X, x}, {Var::Y, y}, {Var::Z, z}, {Var::T, t}};
    if (!evaluate(defining_poly(params), bind).is_zero()) throw NotOnX();
    return SurfacePoint{params, std::move(x), std::move(y), std::move(z), std::move(t)};
}

FiberType fiber_type(const ThreefoldParams& params, const Scalar& x0, const Scalar& z0) {
    Scalar f0 = x0.pow(params.d) + z0.pow(params.a2);
    // f0 = 0 with x0 = 0 forces z0 = 0, the fiber over the origin
    if (!f0.is_zero() || x0.is_zero()) return {FiberTag::Line, 1};
    return {FiberTag::MultiLine, params.a3};
}

const char* orbit_tag_name(OrbitTag tag) {
    switch (tag) {
        case OrbitTag::Origin: return "Origin";
        case OrbitTag::PuncturedLine: return "PuncturedLine";
        case OrbitTag::BigOrbit: return "BigOrbit";
        case OrbitTag::CuspFamily: return "CuspFamily";
    }
    return "?";
}

OrbitClass orbit_classify(const SurfacePoint& pt) {
    bool xzt_zero = pt.x.is_zero() && pt.z.is_zero() && pt.t.is_zero();
    if (xzt_zero) {
        if (pt.y.is_zero()) return {OrbitTag::Origin, {}, {}};
        return {OrbitTag::PuncturedLine, {}, {}};
    }
    Scalar f0 = pt.x.pow(pt.params.d) + pt.z.pow(pt.params.a2);
    if (!f0.is_zero()) {
        // the curve alpha x^d + beta z^a2 = 0 through the shadow of the point
        Scalar alpha = pt.z.pow(pt.params.a2);
        Scalar beta = -pt.x.pow(pt.params.d);
        std::pair<Scalar, Scalar> key =
            alpha.is_zero() ? std::pair<Scalar, Scalar>{Scalar(0), Scalar(1)}
                            : std::pair<Scalar, Scalar>{Scalar(1), beta / alpha};
        return {OrbitTag::BigOrbit, std::move(key), {}};
    }
    // cusp fiber: x != 0 here (x = 0 with f0 = 0 lands in the branches above)
    Scalar v = pt.y * pt.t.pow((pt.params.d * pt.params.l - 1) * pt.params.a3);
    return {OrbitTag::CuspFamily, {}, std::move(v)};
}

bool same_orbit(const SurfacePoint& p1, const SurfacePoint& p2) {
    if (p1.params != p2.params) throw ParamMismatch();
    return orbit_classify(p1) == orbit_classify(p2);
}

}  // namespace kr2
