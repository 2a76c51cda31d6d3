#pragma once

// Fixtures, random generators and brute-force oracles shared by the unit
// tests and the acceptance runner.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lambda/base_change.hpp"
#include "lambda/chart_complex.hpp"
#include "lambda/group_actions.hpp"

namespace lb::test {

/// Group value from integers, most significant first.
GroupValue gv(std::initializer_list<long> coords);
GroupValue gv(std::initializer_list<Rational> coords);
Point pt(std::initializer_list<GroupValue> coords);

std::shared_ptr<const RootSystem> root_system(RootType t, std::size_t rank);
ModelSpace model(RootType t, std::size_t rank, std::size_t group_rank);

/// Three charts over A1: A = legs 1∪2, B = legs 1∪3, C = legs 2∪3, glued at
/// the common center 0.
AtlasSpec tripod_spec(std::size_t group_rank);
AtlasSpec single_chart_spec(RootType t, std::size_t rank, std::size_t group_rank);
/// Two unglued A1 charts.
AtlasSpec disjoint_spec(std::size_t group_rank);

/// Tripod point on leg 1, 2 or 3 at parameter s (s ≥ 0) from the center.
BuildingPoint leg_point(int leg, const GroupValue& s);

struct Mutant {
  std::string name;
  AtlasSpec spec;
  /// Code expected from validate, or empty when validate succeeds and
  /// check_axioms must fail `axiom`.
  std::string code;
  std::string axiom;
};

/// Seeded defects of the tripod (and a loop atlas for the triple axiom).
std::vector<Mutant> tripod_mutants();
/// Witness points used for the axiom checks of the tripod and its mutants.
std::vector<BuildingPoint> tripod_witnesses(std::size_t group_rank);

struct Random {
  std::mt19937_64 gen;
  explicit Random(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| ≤ range·q, q ∈ 1..den.
  Rational rational(long range, long den = 4);
  GroupValue value(std::size_t rank, long range = 5, long den = 4);
  Point point(const ModelSpace& space, long range = 5, long den = 4);
  AffineMap affine(const ModelSpace& space, long range = 5);
  /// A random point of the tripod, as (chart, coordinates) in some chart containing it.
  BuildingPoint tripod_point(std::size_t group_rank, long range = 5);
};

/// A finite group of affine maps on a single apartment over ℚ².
struct AffineGroupCase {
  std::string name;
  RootType type;
  std::size_t rank;
  std::vector<AffineMap> gens;
  Point x0;
  std::size_t order;
};
/// Reflections, rotations and full Weyl groups about lex-valued centers.
std::vector<AffineGroupCase> affine_group_cases();
/// x ↦ w̄(x − c) + c.
AffineMap about(const ModelSpace& space, std::size_t w, const Point& c);

/// Tripod isometries (group rank r): the rotation leg 1 → 2 → 3 → 1 and the
/// swap of legs 1 and 2.
Isometry tripod_rotation(std::size_t group_rank);
Isometry tripod_swap(std::size_t group_rank);

/// Searches the grid {k/den : |k| ≤ bound·den}² of A2 simple-root coordinates
/// over Λ = ℚ for a point of K.
std::optional<Point> grid_search(const ModelSpace& a2q, const ConvexSet& k, long bound, long den);

/// Whether base + t·v ∈ K for t = 2⁻⁴⁰ along every extreme ray v of the
/// germ's cone and along their sum (Λ = ℚ).
bool ray_oracle(const ModelSpace& space, const Germ& g, const ConvexSet& k);

/// Average of g·x0 over every element g of the group generated by the maps,
/// enumerated independently of the library's orbit code.
Point direct_centroid(const ModelSpace& space, const std::vector<AffineMap>& gens, const Point& x0);

}  // namespace lb::test
