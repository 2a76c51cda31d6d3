#pragma once

// Finite lexicographic powers of the rationals, Λ = ℚ^k, ordered
// lexicographically with position 1 most significant. These are the finite
// Hahn products over a finite index set.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "lambda/rational.hpp"

namespace lb {

/// Leading index of the zero element.
inline constexpr std::size_t kInfiniteIndex = std::numeric_limits<std::size_t>::max();

class GroupValue {
 public:
  GroupValue() = default;
  explicit GroupValue(std::size_t rank) : coords_(rank) {}
  explicit GroupValue(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  GroupValue(std::initializer_list<Rational> coords) : coords_(coords) {}

  static GroupValue zero(std::size_t rank) { return GroupValue(rank); }
  /// The element with a single 1 at `position` (1-based).
  static GroupValue unit(std::size_t rank, std::size_t position);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  /// 1-based access, matching the position numbering used throughout.
  const Rational& at(std::size_t position) const { return coords_.at(position - 1); }
  Rational& at(std::size_t position) { return coords_.at(position - 1); }

  bool is_zero() const;
  int signum() const;

  GroupValue& operator+=(const GroupValue& other);
  GroupValue& operator-=(const GroupValue& other);
  GroupValue& operator*=(const Rational& scalar);

  friend GroupValue operator+(GroupValue a, const GroupValue& b) { return a += b; }
  friend GroupValue operator-(GroupValue a, const GroupValue& b) { return a -= b; }
  friend GroupValue operator*(GroupValue a, const Rational& s) { return a *= s; }
  friend GroupValue operator*(const Rational& s, GroupValue a) { return a *= s; }
  GroupValue operator-() const;

  friend bool operator==(const GroupValue& a, const GroupValue& b);
  /// Lexicographic group order. Throws std::invalid_argument on rank mismatch.
  friend std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b);

 private:
  std::vector<Rational> coords_;
};

enum class Order { Less, Equal, Greater };

/// Total-order verdict; throws std::invalid_argument on rank mismatch.
Order compare(const GroupValue& a, const GroupValue& b);

GroupValue abs(const GroupValue& a);
const GroupValue& max(const GroupValue& a, const GroupValue& b);

/// Smallest 1-based position with a nonzero entry; kInfiniteIndex for zero.
std::size_t leading_index(const GroupValue& a);

/// {λ : leading_index(λ) >= level}. Level rank+1 is the trivial subgroup and
/// level 1 is all of Λ.
struct ConvexSubgroup {
  std::size_t level = 1;
  std::size_t rank = 0;

  bool contains(const GroupValue& a) const;
  bool is_trivial() const { return level > rank; }
  friend bool operator==(const ConvexSubgroup&, const ConvexSubgroup&) = default;
};

/// M_g and N_g: the convex subgroups at and strictly below g's leading index.
/// M/N is archimedean (a copy of ℚ, carried by the entry at that position).
std::pair<ConvexSubgroup, ConvexSubgroup> convex_subgroups(const GroupValue& g);

/// Image of a ∈ M_g in M_g/N_g ≅ ℚ. Throws std::domain_error when g = 0 or
/// a ∉ M_g.
Rational standard_part(const GroupValue& a, const GroupValue& g);

/// An order-preserving morphism ℚ^k → ℚ^k' realized as truncation to the
/// `keep` most significant positions followed by an injection that sends
/// position i to positions[i] (strictly increasing, 1-based) scaled by
/// scales[i] > 0. Pure epimorphisms have target_rank = keep with identity
/// placement; pure monomorphisms have keep = source_rank.
class GroupMorphism {
 public:
  static GroupMorphism identity(std::size_t rank);
  /// Quotient by the convex subgroup of level keep+1.
  static GroupMorphism quotient_epi(std::size_t keep, std::size_t source_rank);
  static GroupMorphism mono(std::size_t source_rank, std::size_t target_rank,
                            std::vector<std::size_t> positions, std::vector<Rational> scales);
  static GroupMorphism general(std::size_t source_rank, std::size_t keep, std::size_t target_rank,
                               std::vector<std::size_t> positions, std::vector<Rational> scales);

  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  std::size_t keep() const { return keep_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  const std::vector<Rational>& scales() const { return scales_; }

  bool is_epi() const;
  bool is_mono() const { return keep_ == source_rank_; }
  /// Kernel as a convex subgroup of the source.
  ConvexSubgroup kernel() const { return {keep_ + 1, source_rank_}; }

  GroupValue apply(const GroupValue& a) const;

  friend bool operator==(const GroupMorphism&, const GroupMorphism&) = default;

 private:
  GroupMorphism() = default;
  std::size_t source_rank_ = 0;
  std::size_t keep_ = 0;
  std::size_t target_rank_ = 0;
  std::vector<std::size_t> positions_;
  std::vector<Rational> scales_;
};

inline GroupMorphism quotient_epi(std::size_t keep, std::size_t source_rank) {
  return GroupMorphism::quotient_epi(keep, source_rank);
}

inline GroupValue apply_morphism(const GroupMorphism& m, const GroupValue& a) { return m.apply(a); }

/// Epimorphism-then-monomorphism factorization: apply(mono, apply(epi, a)) == apply(m, a).
std::pair<GroupMorphism, GroupMorphism> decompose(const GroupMorphism& m);

/// Embeds a value of ker(quotient_epi(keep, rank)) ≅ ℚ^(rank-keep) back into ℚ^rank.
GroupValue embed_kernel(const GroupValue& kernel_value, std::size_t rank);
/// Kernel coordinates (positions keep+1..rank) of a.
GroupValue kernel_part(const GroupValue& a, std::size_t keep);

}  // namespace lb
