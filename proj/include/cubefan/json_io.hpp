#pragma once

#include "json.hpp"

#include "cubefan/census.hpp"
#include "cubefan/fan.hpp"
#include "cubefan/wall.hpp"

namespace cubefan {

// {"n":..., "rays":[{"label":"{1,2}","vector":[1,1]},...],
//  "maximal_cones":[["{1}","{1,2}"],...]}
nlohmann::json fan_to_json(const Fan& f);

// {"base":[...], "neighbors":[...,...], "coefficients":[...], "number":...}
nlohmann::json wall_to_json(const Fan& f, const Wall& w);
nlohmann::json walls_to_json(const Fan& f, const std::vector<Wall>& walls);

nlohmann::json census_record_to_json(const CensusRecord& r);

} // namespace cubefan
