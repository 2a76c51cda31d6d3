#include "lambda/ordered_group.hpp"

#include <stdexcept>
#include <string>

namespace lb {

namespace {

void require_same_rank(const GroupValue& a, const GroupValue& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("group value rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                std::to_string(b.rank()));
  }
}

}  // namespace

GroupValue GroupValue::unit(std::size_t rank, std::size_t position) {
  GroupValue v(rank);
  v.at(position) = 1;
  return v;
}

bool GroupValue::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

int GroupValue::signum() const {
  for (const auto& c : coords_) {
    if (c != 0) return sgn(c);
  }
  return 0;
}

GroupValue& GroupValue::operator+=(const GroupValue& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

GroupValue& GroupValue::operator-=(const GroupValue& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

GroupValue& GroupValue::operator*=(const Rational& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

GroupValue GroupValue::operator-() const {
  GroupValue r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const GroupValue& a, const GroupValue& b) {
  require_same_rank(a, b);
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b) {
  require_same_rank(a, b);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Order compare(const GroupValue& a, const GroupValue& b) {
  const auto c = a <=> b;
  if (c < 0) return Order::Less;
  if (c > 0) return Order::Greater;
  return Order::Equal;
}

GroupValue abs(const GroupValue& a) { return a.signum() < 0 ? -a : a; }

const GroupValue& max(const GroupValue& a, const GroupValue& b) { return a < b ? b : a; }

std::size_t leading_index(const GroupValue& a) {
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a.coords()[i] != 0) return i + 1;
  }
  return kInfiniteIndex;
}

bool ConvexSubgroup::contains(const GroupValue& a) const {
  if (a.rank() != rank) throw std::invalid_argument("convex subgroup rank mismatch");
  return leading_index(a) >= level;
}

std::pair<ConvexSubgroup, ConvexSubgroup> convex_subgroups(const GroupValue& g) {
  const auto i = leading_index(g);
  if (i == kInfiniteIndex) throw std::domain_error("convex_subgroups: g must be nonzero");
  return {ConvexSubgroup{i, g.rank()}, ConvexSubgroup{i + 1, g.rank()}};
}

Rational standard_part(const GroupValue& a, const GroupValue& g) {
  const auto [m, n] = convex_subgroups(g);
  if (!m.contains(a)) throw std::domain_error("standard_part: value is not in M_g");
  return a.at(m.level);
}

GroupMorphism GroupMorphism::identity(std::size_t rank) { return quotient_epi(rank, rank); }

GroupMorphism GroupMorphism::quotient_epi(std::size_t keep, std::size_t source_rank) {
  if (keep > source_rank) {
    throw std::invalid_argument("quotient_epi: keep " + std::to_string(keep) + " exceeds rank " +
                                std::to_string(source_rank));
  }
  std::vector<std::size_t> positions(keep);
  for (std::size_t i = 0; i < keep; ++i) positions[i] = i + 1;
  return general(source_rank, keep, keep, std::move(positions), std::vector<Rational>(keep, Rational(1)));
}

GroupMorphism GroupMorphism::mono(std::size_t source_rank, std::size_t target_rank,
                                  std::vector<std::size_t> positions, std::vector<Rational> scales) {
  return general(source_rank, source_rank, target_rank, std::move(positions), std::move(scales));
}

GroupMorphism GroupMorphism::general(std::size_t source_rank, std::size_t keep, std::size_t target_rank,
                                     std::vector<std::size_t> positions, std::vector<Rational> scales) {
  if (keep > source_rank) throw std::invalid_argument("morphism: keep exceeds source rank");
  if (positions.size() != keep || scales.size() != keep) {
    throw std::invalid_argument("morphism: need one position and one scale per kept coordinate");
  }
  for (std::size_t i = 0; i < keep; ++i) {
    if (positions[i] < 1 || positions[i] > target_rank) {
      throw std::invalid_argument("morphism: position out of target range");
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw std::invalid_argument("morphism: positions must be strictly increasing");
    }
    if (scales[i] <= 0) throw std::invalid_argument("morphism: scales must be positive");
  }
  GroupMorphism m;
  m.source_rank_ = source_rank;
  m.keep_ = keep;
  m.target_rank_ = target_rank;
  m.positions_ = std::move(positions);
  m.scales_ = std::move(scales);
  return m;
}

bool GroupMorphism::is_epi() const {
  if (target_rank_ != keep_) return false;
  for (std::size_t i = 0; i < keep_; ++i) {
    if (positions_[i] != i + 1 || scales_[i] != 1) return false;
  }
  return true;
}

GroupValue GroupMorphism::apply(const GroupValue& a) const {
  if (a.rank() != source_rank_) {
    throw std::invalid_argument("apply_morphism: rank " + std::to_string(a.rank()) + " but source rank " +
                                std::to_string(source_rank_));
  }
  GroupValue out(target_rank_);
  for (std::size_t i = 0; i < keep_; ++i) out.at(positions_[i]) = a.coords()[i] * scales_[i];
  return out;
}

std::pair<GroupMorphism, GroupMorphism> decompose(const GroupMorphism& m) {
  return {GroupMorphism::quotient_epi(m.keep(), m.source_rank()),
          GroupMorphism::mono(m.keep(), m.target_rank(), m.positions(), m.scales())};
}

GroupValue embed_kernel(const GroupValue& kernel_value, std::size_t rank) {
  if (kernel_value.rank() > rank) throw std::invalid_argument("embed_kernel: kernel rank exceeds rank");
  const std::size_t offset = rank - kernel_value.rank();
  GroupValue out(rank);
  for (std::size_t i = 0; i < kernel_value.rank(); ++i) out.at(offset + i + 1) = kernel_value.coords()[i];
  return out;
}

GroupValue kernel_part(const GroupValue& a, std::size_t keep) {
  if (keep > a.rank()) throw std::invalid_argument("kernel_part: keep exceeds rank");
  return GroupValue(std::vector<Rational>(a.coords().begin() + static_cast<std::ptrdiff_t>(keep), a.coords().end()));
}

}  // namespace lb
