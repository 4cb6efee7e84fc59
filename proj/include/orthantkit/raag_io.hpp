#pragma once

#include <string_view>

#include "orthantkit/ball.hpp"
#include "orthantkit/rays.hpp"
#include "vendor_json.hpp"

namespace orthantkit::raag {

/// "word@a,b" names the coset word * G({a,b}); an empty word is the identity.
StandardSubcomplex parse_subcomplex(const Raag& r, std::string_view text);

/// "period", "prefix|period" or "base|prefix|period", each part a word.
PeriodicRay parse_ray(const Raag& r, std::string_view text);

nlohmann::json to_json(const Raag& r, const StandardSubcomplex& c);
nlohmann::json to_json(const Raag& r, const WallId& w);
nlohmann::json to_json(const Raag& r, const CubeAt& c);
nlohmann::json to_json(const DevelopedBall& b);
nlohmann::json to_json(const Raag& r, const PeriodicRay& ray);
nlohmann::json to_json(const Raag& r, const MirrorLine& line);
nlohmann::json to_json(const DevelopedBall& b, const Orthant& o);
nlohmann::json to_json(const DevelopedBall& b, const CoarseIntersection& ci);

}  // namespace orthantkit::raag
