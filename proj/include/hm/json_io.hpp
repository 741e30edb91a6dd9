#ifndef HM_JSON_IO_HPP
#define HM_JSON_IO_HPP

#include <json.hpp>

#include "hm/interval_union.hpp"
#include "hm/measure.hpp"

namespace hm {

// Measure spec: {"atoms":[{"x":..,"w":..}], "density":[{"a":..,"b":..,"h":..}]},
// both arrays optional. Round-trips exactly (doubles serialized shortest
// round-trip by nlohmann).
nlohmann::json measure_to_json(const Measure& mu);
Measure measure_from_json(const nlohmann::json& j);

// Set spec: {"intervals": [[a,b], ...]}. The {"cantor": ...} form is
// resolved in the cantor module.
nlohmann::json set_to_json(const IntervalUnion& e);
IntervalUnion set_from_json(const nlohmann::json& j);

}  // namespace hm

#endif
