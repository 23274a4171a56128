#pragma once

#include <string>

#include <json.hpp>

#include "qgl3/decomp.hpp"
#include "qgl3/ext.hpp"
#include "qgl3/homs.hpp"
#include "qgl3/structure.hpp"
#include "qgl3/translate.hpp"

namespace qgl3 {

using Json = nlohmann::json;

/// "a,b", or "a,b,c" in GL3 coordinates when gl3 is set.
Weight parse_weight(const std::string& text, bool gl3 = false);

Json to_json(Weight w);
Weight weight_from_json(const Json& j);

/// Sorted list of [a, b, coefficient] triples.
Json to_json(const FormalChar& x);
FormalChar char_from_json(const Json& j);

Json to_json(const DecompResult& d);
DecompResult decomp_from_json(const Json& j);

Json to_json(const ModuleGraph& g);
ModuleGraph graph_from_json(const Json& j);

Json to_json(const ExtValue& v);
ExtValue ext_from_json(const Json& j);

Json to_json(const HomWitness& w);
HomWitness witness_from_json(const Json& j);
Json hom_record(Weight lam, Weight mu, const std::optional<HomWitness>& w);

Json to_json(const OffWallFactorList& list);
OffWallFactorList factor_list_from_json(const Json& j);

Json to_json(const WallCrossing& c);

}  // namespace qgl3
