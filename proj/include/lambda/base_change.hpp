#pragma once

// Base change of buildings along order morphisms e: Λ → Λ′. Epimorphisms
// (truncations) and monomorphisms (coordinate injections) both act on the
// model space coordinatewise, keeping the spherical Weyl part.

#include <map>
#include <string>
#include <vector>

#include "lambda/chart_complex.hpp"

namespace lb {

GroupValue map_value(const GroupMorphism& e, const GroupValue& v);
Point map_point(const GroupMorphism& e, const Point& x);
HalfApartment map_half_apartment(const GroupMorphism& e, const HalfApartment& h);
ConvexSet map_convex(const GroupMorphism& e, const ConvexSet& k);
AffineMap map_affine(const GroupMorphism& e, const AffineMap& m);
BuildingPoint map_point(const GroupMorphism& e, const BuildingPoint& p);

struct MetricCheck {
  GroupValue d;        // d(x, y) in the source
  GroupValue d_image;  // d′(φx, φy) in the target
  GroupValue e_d;      // e(d(x, y))
  bool holds() const { return d_image == e_d; }
};

/// Throws std::logic_error if d′(φx, φy) ≠ e(d(x, y)).
MetricCheck metric_check(const ModelSpace& source, const GroupMorphism& e, const Point& x, const Point& y);

/// Image complex over Λ′ with the same chart ids; re-validated. Throws
/// std::invalid_argument unless e is an epimorphism (resp. monomorphism).
ChartComplex epi_complex(const GroupMorphism& e, const ChartComplex& cc);
ChartComplex mono_complex(const GroupMorphism& e, const ChartComplex& cc);
/// Epimorphism factor first, then the monomorphism factor.
ChartComplex compose_functors(const GroupMorphism& m, const ChartComplex& cc);

/// Same chart ids, same boundary class structure (class of every raw chamber
/// and adjacency).
bool boundary_preserved(const ChartComplex& a, const ChartComplex& b);

/// The fiber φ⁻¹(φ(x)) of an epimorphism as a complex over ker(e). Fiber chart
/// f is parametrized by z ↦ offsets[f] + z, with z in the kernel coordinates.
struct FiberComplex {
  ChartComplex complex;
  BuildingPoint anchor;
  std::map<std::string, Point> offsets;
  std::size_t keep = 0;
};

FiberComplex fiber(const GroupMorphism& e, const ChartComplex& cc, const BuildingPoint& x);
/// The source point represented by a fiber point.
BuildingPoint fiber_to_source(const FiberComplex& fb, const BuildingPoint& z);

struct ResidueFiberReport {
  std::size_t fiber_classes = 0;
  std::size_t residue_classes = 0;
  /// Residue class matched to each fiber boundary class.
  std::vector<std::size_t> matching;
  bool bijection = false;
  bool adjacency_preserved = false;
  bool perfect() const { return bijection && adjacency_preserved; }
};

ResidueFiberReport residue_fiber_iso(const GroupMorphism& e, const ChartComplex& cc, const BuildingPoint& x);

}  // namespace lb
