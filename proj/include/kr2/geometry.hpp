#pragma once

#include <optional>
#include <utility>

#include "kr2/params.hpp"

namespace kr2 {

/// A point of the hypersurface; construction checks the defining equation exactly.
struct SurfacePoint {
    ThreefoldParams params;
    Scalar x, y, z, t;
};

SurfacePoint make_point(const ThreefoldParams& params, Scalar x, Scalar y, Scalar z, Scalar t);

enum class FiberTag { Line, MultiLine };

/// Fiber of the projection to the (x, z)-plane: one affine line, or a3
/// disjoint lines over cusp points with x != 0.
struct FiberType {
    FiberTag tag = FiberTag::Line;
    long count = 1;
    friend bool operator==(const FiberType& a, const FiberType& b) {
        return a.tag == b.tag && a.count == b.count;
    }
};

FiberType fiber_type(const ThreefoldParams& params, const Scalar& x0, const Scalar& z0);

enum class OrbitTag { Origin, PuncturedLine, BigOrbit, CuspFamily };

const char* orbit_tag_name(OrbitTag tag);

/// Orbit of the full automorphism group through a point, with an exact key
/// separating orbits inside each family:
///  - BigOrbit: the projective pair [z^a2 : -x^d], normalized so the first
///    nonzero coordinate is 1 (never [1 : 1], that locus is the cusp family);
///  - CuspFamily: the weight-zero invariant v = y t^{(dl-1) a3}.
struct OrbitClass {
    OrbitTag tag = OrbitTag::Origin;
    std::optional<std::pair<Scalar, Scalar>> projective_key;  // BigOrbit only
    std::optional<Scalar> cusp_key;                           // CuspFamily only

    friend bool operator==(const OrbitClass& a, const OrbitClass& b) {
        return a.tag == b.tag && a.projective_key == b.projective_key && a.cusp_key == b.cusp_key;
    }
    friend bool operator!=(const OrbitClass& a, const OrbitClass& b) { return !(a == b); }
};

OrbitClass orbit_classify(const SurfacePoint& pt);

/// Equal tag and key; answers orbit equality over the algebraic closure even
/// when coordinates are rational. Throws ParamMismatch on different params.
bool same_orbit(const SurfacePoint& p1, const SurfacePoint& p2);

}  // namespace kr2
