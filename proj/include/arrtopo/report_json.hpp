#pragma once

#include "arrtopo/census.hpp"
#include "arrtopo/comparison.hpp"
#include "arrtopo/growth.hpp"
#include "arrtopo/homology.hpp"
#include "arrtopo/signature.hpp"

#include <json.hpp>

namespace arrtopo {

using Json = nlohmann::ordered_json;

/// {"betti":[...],"torsion":[[...],...]}; factors beyond int64 become strings.
Json to_json(const HomologyReport& h);

/// {"check":..,"pass":..,"lhs":..,"rhs":..,"per_degree":[..]} plus
/// "relative" and "detail" when present.
Json to_json(const ComparisonReport& r);

Json to_json(const DiagramSignature& s);
Json to_json(const CensusReport& r);
Json to_json(const GrowthFit& g);

} // namespace arrtopo
