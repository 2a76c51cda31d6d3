#pragma once

// The model apartment 𝔸(R, Λ): Λ-combinations of simple roots, the affine
// Weyl group sW ⋉ 𝔸, half-apartments and exact convex geometry.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "lambda/linear_system.hpp"
#include "lambda/ordered_group.hpp"
#include "lambda/root_system.hpp"

namespace lb {

/// Coordinates in the simple-root basis, one group value per simple root.
struct Point {
  std::vector<GroupValue> coords;

  Point() = default;
  explicit Point(std::vector<GroupValue> c) : coords(std::move(c)) {}
  static Point zero(std::size_t dim, std::size_t group_rank);

  std::size_t dim() const { return coords.size(); }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Rational& s);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, const Rational& s) { return a *= s; }
  Point operator-() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);
};

/// x ↦ w̄·x + translation, with w̄ given by its Weyl group index.
struct AffineMap {
  std::size_t linear = 0;
  Point translation;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// {x : ⟨x, β∨⟩ ≥ offset}; an absent offset stands for −∞ (the whole space).
struct HalfApartment {
  std::size_t root = 0;
  std::optional<GroupValue> offset;

  friend bool operator==(const HalfApartment&, const HalfApartment&) = default;
};

struct ConvexSet {
  std::vector<HalfApartment> constraints;
};

ConvexSet intersect(const ConvexSet& a, const ConvexSet& b);

/// Direction data of a Weyl simplex: the cone w̄·F_J where F_J is the face of
/// the fundamental chamber keeping the simple roots in `face` as inequalities
/// and holding the others at equality. face = full mask is a chamber.
struct Direction {
  std::size_t weyl = 0;
  std::uint32_t face = 0;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;
};

struct WeylSimplex {
  Point base;
  Direction direction;
};

struct Germ {
  Point base;
  Direction direction;
};

struct ExitSimplex {
  Point y;
  WeylSimplex simplex;
};

class ModelSpace {
 public:
  ModelSpace(std::shared_ptr<const RootSystem> rs, std::size_t group_rank);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& root_system() const { return rs_; }
  std::size_t dim() const { return rs_->rank(); }
  std::size_t group_rank() const { return rank_; }

  Point origin() const { return Point::zero(dim(), rank_); }
  /// Throws std::invalid_argument unless the shape matches this space.
  void check(const Point& x) const;

  GroupValue pairing(const Point& x, std::size_t root) const;
  /// Σ over positive roots of |⟨y − x, β∨⟩|.
  GroupValue distance(const Point& x, const Point& y) const;

  Point apply_linear(std::size_t w, const Point& x) const;
  Point apply(const AffineMap& m, const Point& x) const;
  AffineMap identity() const { return {0, origin()}; }
  /// a ∘ b.
  AffineMap compose(const AffineMap& a, const AffineMap& b) const;
  AffineMap inverse(const AffineMap& a) const;
  /// Reflection in the wall {⟨x, β∨⟩ = k}: x ↦ r_β x + kβ.
  AffineMap affine_reflection(std::size_t root, const GroupValue& k) const;

  bool contains(const HalfApartment& h, const Point& x) const;
  bool contains(const ConvexSet& k, const Point& x) const;
  HalfApartment image(const AffineMap& m, const HalfApartment& h) const;
  ConvexSet image(const AffineMap& m, const ConvexSet& k) const;
  ConvexSet preimage(const AffineMap& m, const ConvexSet& k) const { return image(inverse(m), k); }

  /// β∨ as a rational functional on simple-root coordinates.
  std::vector<Rational> functional(std::size_t root) const;
  /// The constraint rows of K over dim() Λ-valued variables.
  LinearSystem system(const ConvexSet& k) const;
  std::optional<Point> find_point(const LinearSystem& s) const;
  std::optional<Point> find_point(const ConvexSet& k) const { return find_point(system(k)); }
  bool is_empty(const ConvexSet& k) const { return !find_point(k); }
  /// A point of a outside b, if any.
  std::optional<Point> point_outside(const ConvexSet& a, const ConvexSet& b) const;
  bool subset(const ConvexSet& a, const ConvexSet& b) const { return !point_outside(a, b); }
  bool same_set(const ConvexSet& a, const ConvexSet& b) const { return subset(a, b) && subset(b, a); }
  /// A point of d where the two maps disagree, if any.
  std::optional<Point> disagreement(const AffineMap& a, const AffineMap& b, const ConvexSet& d) const;

  /// Per-root minimum of the pairings. Throws std::invalid_argument on an empty list.
  ConvexSet convex_hull(const std::vector<Point>& points) const;
  /// (1/n) Σ pᵢ. Throws std::invalid_argument on an empty list.
  Point centroid(const std::vector<Point>& points) const;

  /// w̄·ω_i in simple-root coordinates.
  std::vector<Rational> weight_image(std::size_t w, std::size_t i) const;
  /// Minimal-length representative of w̄ modulo the stabilizer of F_J,
  /// smallest group index among ties.
  Direction canonical(const Direction& d) const;
  /// All canonical directions with the given face, ordered by length then index.
  std::vector<Direction> directions(std::uint32_t face) const;
  std::uint32_t chamber_face() const { return rs_->full_mask(); }
  /// The cone −w̄F_J, canonicalized.
  Direction opposite(const Direction& d) const;
  Direction image(std::size_t w, const Direction& d) const { return canonical({rs_->multiply(w, d.weyl), d.face}); }

  ConvexSet simplex_set(const WeylSimplex& s) const;
  bool simplex_contains(const WeylSimplex& s, const Point& x) const { return contains(simplex_set(s), x); }

  /// Whether the germ of the simplex at its base lies in K. Throws
  /// std::domain_error if the base is not in K.
  bool germ_in_convex(const Germ& g, const ConvexSet& k) const;
  /// For x ∉ K: a point y ∈ K and a simplex S based at y containing x with
  /// S ∩ K = {y}. Throws std::domain_error if x ∈ K or K is empty.
  ExitSimplex exit_simplex(const ConvexSet& k, const Point& x) const;
  /// Parallelism of simplices of the same face type; throws
  /// std::invalid_argument when the types differ.
  bool parallel(const WeylSimplex& a, const WeylSimplex& b) const;
  /// Whether K contains a translate of the cone w̄F_J from each of its points.
  bool direction_in_recession(const Direction& d, const ConvexSet& k) const;
  bool direction_in_recession(std::size_t chamber, const ConvexSet& k) const {
    return direction_in_recession(Direction{chamber, chamber_face()}, k);
  }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::size_t rank_;
};

}  // namespace lb
