#pragma once

#include <nlohmann/json.hpp>

#include "freelip/deleeuw.hpp"
#include "freelip/extremal.hpp"
#include "freelip/kr_solver.hpp"

namespace freelip {

// All serialized rationals are "p/q" strings in lowest terms ("p" when the
// denominator is 1); parsers also accept plain integer strings. Pair keys
// use "x->y" with point labels. nlohmann's default object keeps keys
// sorted, so dumps are canonical and byte-stable.

nlohmann::json space_to_json(const FiniteMetricSpace& space);
SpacePtr space_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FreeElement& m);
FreeElement element_from_json(SpacePtr space, const nlohmann::json& j);

nlohmann::json function_to_json(const LipschitzFunction& f);
LipschitzFunction function_from_json(SpacePtr space, const nlohmann::json& j);

nlohmann::json measure_to_json(const DeLeeuwMeasure& mu);
DeLeeuwMeasure measure_from_json(SpacePtr space, const nlohmann::json& j);

nlohmann::json solution_to_json(const NormSolution& s);

nlohmann::json certificate_to_json(const SpacePtr& space,
                                   const ExtremalityCertificate& cert);

}  // namespace freelip
