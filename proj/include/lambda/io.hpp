#pragma once

// JSON encoding. Rationals are always strings "p/q"; group values are arrays
// of rationals; points are arrays of group values, one per simple root.
// Reading errors throw BuildingError with code InvalidInput.

#include <string>
#include <vector>

#include <json.hpp>

#include "lambda/base_change.hpp"
#include "lambda/chart_complex.hpp"
#include "lambda/group_actions.hpp"

namespace lb::io {

using Json = nlohmann::ordered_json;

Json to_json(const GroupValue& v);
GroupValue group_value_from_json(const Json& j, std::size_t rank);

Json to_json(const Point& p);
Point point_from_json(const Json& j, const ModelSpace& space);

/// {"chart": id, "coords": [...]}.
Json to_json(const BuildingPoint& p);
BuildingPoint building_point_from_json(const Json& j, const ModelSpace& space);
/// Command-line literal CHART:[[...], ...].
BuildingPoint parse_point_literal(const std::string& text, const ModelSpace& space);

Json to_json(const HalfApartment& h, const RootSystem& rs);
Json to_json(const ConvexSet& k, const RootSystem& rs);
HalfApartment half_apartment_from_json(const Json& j, const ModelSpace& space);
ConvexSet convex_set_from_json(const Json& j, const ModelSpace& space);

/// {"word": [1-based indices], "translation": [...]}.
Json to_json(const AffineMap& m, const RootSystem& rs);
AffineMap affine_map_from_json(const Json& j, const ModelSpace& space);

Json to_json(const AtlasSpec& spec);
AtlasSpec atlas_from_json(const Json& j);
AtlasSpec read_atlas(const std::string& path);
Json read_json(const std::string& path);

Json to_json(const Witness& w);
Json to_json(const ChamberClasses& c, const ChartComplex& cc);
Json to_json(const AxiomReport& r);

/// A list of isometries, or a list of affine maps for single-chart complexes,
/// optionally wrapped as {"generators": [...]}.
std::vector<Isometry> generators_from_json(const Json& j, const ChartComplex& cc);
/// {"points": [...]} or a bare list; entries are objects or point literals.
std::vector<BuildingPoint> witnesses_from_json(const Json& j, const ModelSpace& space);

}  // namespace lb::io
