#pragma once

// Finite isometry groups acting on chart complexes, orbits, and the layered
// fixed-point algorithm: one archimedean layer of Λ at a time, from the
// leading index of the orbit radius downwards.

#include <map>
#include <string>
#include <vector>

#include "lambda/chart_complex.hpp"

namespace lb {

/// (f, a) ↦ (chart_map[f], maps[f]·a).
struct Isometry {
  std::map<std::string, std::string> chart_map;
  std::map<std::string, AffineMap> maps;

  friend bool operator==(const Isometry&, const Isometry&) = default;
};

/// The isometry of a single-chart complex given by an affine map.
Isometry single_chart_isometry(const ChartComplex& cc, const AffineMap& m);

/// Throws BuildingError InvalidIsometry unless the chart map is a bijection
/// and the maps carry every gluing onto the gluing of the image charts.
void check_isometry(const ChartComplex& cc, const Isometry& g);

BuildingPoint apply(const ChartComplex& cc, const Isometry& g, const BuildingPoint& p);
/// a ∘ b.
Isometry compose(const ChartComplex& cc, const Isometry& a, const Isometry& b);

/// LAMBDA_BUILDINGS_ORBIT_CAP if set to a positive integer, else 10000.
std::size_t default_orbit_cap();

/// All elements generated by gens, identity first. Throws BuildingError
/// NotFiniteGroup when more than cap elements appear.
std::vector<Isometry> enumerate_group(const ChartComplex& cc, const std::vector<Isometry>& gens, std::size_t cap);

/// Canonical representatives of the orbit of x0, x0's first. Throws
/// BuildingError OrbitCapExceeded when more than cap points appear.
std::vector<BuildingPoint> orbit(const ChartComplex& cc, const std::vector<Isometry>& gens, const BuildingPoint& x0,
                                 std::size_t cap);

struct OrbitBound {
  std::vector<BuildingPoint> orbit;
  GroupValue g0;
};

/// g0 = max distance from x0 to the orbit. Throws std::invalid_argument on an empty orbit.
OrbitBound orbit_bound(const ChartComplex& cc, const std::vector<BuildingPoint>& orbit, const BuildingPoint& x0);

/// Centroid of a finite set of points of one apartment.
Point archimedean_fixed_point(const ModelSpace& space, const std::vector<Point>& points);

/// Midpoint of a pair realizing the diameter of a finite point set in a
/// rank-one complex (the first such pair in input order).
BuildingPoint tree_circumcenter(const ChartComplex& cc, const std::vector<BuildingPoint>& points);

struct Layer {
  std::size_t level = 0;  // leading index of g0
  GroupValue g0;
  BuildingPoint point;    // base point after this layer
};

struct FixedPointResult {
  BuildingPoint point;
  std::vector<Layer> trace;
};

/// Supported: single-chart complexes of any type, and multi-chart complexes
/// over A1. Throws BuildingError UnsupportedComplexClass or NotFiniteGroup.
FixedPointResult fixed_point(const ChartComplex& cc, const std::vector<Isometry>& gens, const BuildingPoint& x0,
                             std::size_t cap);

}  // namespace lb
