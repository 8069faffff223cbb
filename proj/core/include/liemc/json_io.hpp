#pragma once

#include <nlohmann/json.hpp>

#include "liemc/analysis.hpp"
#include "liemc/field_tower.hpp"
#include "liemc/fsubspace.hpp"
#include "liemc/maxclass.hpp"

namespace liemc {

using Json = nlohmann::json;

Json to_json(const FieldTower& tower);
FieldTower tower_from_json(const Json& j);

Json to_json(const EElement& e);
EElement element_from_json(const FieldTower& tower, const Json& j);

Json to_json(const FSubspace& s);
FSubspace subspace_from_json(const FieldTower& tower, const Json& j);

Json to_json(const CentraliserLine& line);
CentraliserLine line_from_json(const FieldTower& tower, const Json& j);

/// {"tower": ..., "N": int, "lines": [[a-coeffs, b-coeffs], ...]}
Json algebra_to_json(const FieldTower& tower, const std::vector<CentraliserLine>& lines, int depth);
Json to_json(const MaxClassAlgebra& m);
MaxClassAlgebra algebra_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const SearchResult& r, const FieldTower& tower, int depth, int max_distinct, std::uint64_t budget);

/// {"algebra": ..., "L1": [[int]], "N": int, "r_max": int, "seed": int};
/// N, r_max and seed are optional.
AnalysisJob job_from_json(const Json& j);
Json to_json(const AnalysisJob& job);

Json to_json(const AnalysisReport& r);

}  // namespace liemc
