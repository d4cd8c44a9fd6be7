#include "kr2/json_io.hpp"

namespace kr2 {

namespace {

// exact integers: int64 when possible, decimal string beyond
Json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

}  // namespace

Json scalar_json(const Scalar& s) {
    if (s.is_rational()) {
        Json j = Json::object();
        j["num"] = bigint_json(numerator(s.rational()));
        j["den"] = bigint_json(denominator(s.rational()));
        return j;
    }
    Json j = Json::object();
    j["cyclo"] = s.context()->order();
    Json coeffs = Json::array();
    for (const Rational& c : s.coeffs()) {
        Json e = Json::object();
        e["num"] = bigint_json(numerator(c));
        e["den"] = bigint_json(denominator(c));
        coeffs.push_back(std::move(e));
    }
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json ring_element_json(const RingElement& e) {
    Json coeffs = Json::array();
    for (const MultiPoly& p : e.y_coeffs()) coeffs.push_back(p.str());
    Json j = Json::object();
    j["y_coeffs"] = std::move(coeffs);
    return j;
}

Json automorphism_json(const Automorphism& a) {
    Json j = Json::object();
    j["p"] = a.shear().str();
    j["mu"] = scalar_json(a.scale());
    return j;
}

Json substitution_json(const SubstitutionData& s) {
    Json j = Json::object();
    j["x"] = s.x.str();
    j["y"] = s.y.str();
    j["z"] = s.z.str();
    j["t"] = s.t.str();
    return j;
}

Json orbit_json(const OrbitClass& c) {
    Json j = Json::object();
    j["tag"] = orbit_tag_name(c.tag);
    if (c.projective_key) {
        Json key = Json::array();
        key.push_back(scalar_json(c.projective_key->first));
        key.push_back(scalar_json(c.projective_key->second));
        j["key"] = std::move(key);
    } else if (c.cusp_key) {
        j["key"] = scalar_json(*c.cusp_key);
    }
    return j;
}

Json fiber_json(const FiberType& f) {
    Json j = Json::object();
    j["tag"] = f.tag == FiberTag::Line ? "Line" : "MultiLine";
    j["count"] = f.count;
    return j;
}

Json point_json(const SurfacePoint& pt) {
    Json j = Json::object();
    j["x"] = scalar_json(pt.x);
    j["y"] = scalar_json(pt.y);
    j["z"] = scalar_json(pt.z);
    j["t"] = scalar_json(pt.t);
    return j;
}

}  // namespace kr2
