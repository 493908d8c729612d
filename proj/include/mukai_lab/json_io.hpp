#pragma once

#include <nlohmann/json_fwd.hpp>

#include "mukai_lab/hilbert.hpp"
#include "mukai_lab/mukai.hpp"
#include "mukai_lab/theta.hpp"
#include "mukai_lab/walls.hpp"

namespace mukai_lab {

using nlohmann::json;

// Integers serialize as JSON numbers inside the 53-bit safe range and as
// decimal strings outside it; rationals as canonical "p/q" strings (q > 1)
// or as plain integers when the denominator is one. Parsers accept both.
json int_to_json(const Int& v);
Int int_from_json(const json& j);
json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json vec_to_json(const IntVec& v);
IntVec vec_from_json(const json& j);

json to_json(const MukaiElement& v);
MukaiElement mukai_element_from_json(const SurfaceModel& s, const json& j);

json to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const json& j);

json to_json(const HilbClass& h);
HilbClass hilb_from_json(const SurfaceModel& s, const json& j);

json to_json(const WallClass& w);
json to_json(const IsometryReport& r);

}  // namespace mukai_lab
