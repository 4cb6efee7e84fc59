#pragma once

#include <string_view>

#include "orthantkit/cube_checks.hpp"
#include "orthantkit/cube_complex.hpp"
#include "vendor_json.hpp"

namespace orthantkit::cube {

/// {"cubes":[{"dim":n,"id":...}], "gluings":[{"cube":id,"face":slot,"to":id,
/// "iso":[...]}], "labels":{edge:label}, "orientations":{edge:+-1}}.
/// Entry j of "iso" is +-(target coordinate + 1), negative when reflected.
nlohmann::json to_json(const CubeComplex& x);

/// Builds and finalizes a complex from the schema above. Throws InputError on
/// schema violations and MalformedComplex on inconsistent gluings.
CubeComplex complex_from_json(const nlohmann::json& doc);
CubeComplex parse_complex(std::string_view text);

nlohmann::json to_json(const CubeComplex& x, const NpcReport& r);
nlohmann::json to_json(const CubeComplex& x, const HyperplaneSet& h);
nlohmann::json to_json(const CubeComplex& x, const SpecialnessReport& r);

}  // namespace orthantkit::cube
