#pragma once

#include "normclass/classes/census.hpp"
#include "normclass/classes/curve.hpp"
#include "normclass/classes/surface.hpp"

#include <json.hpp>

namespace normclass {

using Json = nlohmann::ordered_json;

Json to_json(const ProjPoint& p);
Json to_json(const ChowClass& c);
Json to_json(const Census& c);
Json to_json(const NormalClassReport& r);
Json to_json(const CurveReport& r);

} // namespace normclass
