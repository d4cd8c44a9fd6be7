#pragma once

#include <json.hpp>

#include "kr2/autgroup.hpp"
#include "kr2/derivation.hpp"

namespace kr2 {

/// Field order follows the documented schemas, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Json ring_element_json(const RingElement& e);
Json automorphism_json(const Automorphism& a);
Json substitution_json(const SubstitutionData& s);
Json orbit_json(const OrbitClass& c);
Json fiber_json(const FiberType& f);
Json point_json(const SurfacePoint& pt);

}  // namespace kr2
