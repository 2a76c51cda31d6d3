#pragma once

// Crystallographic root systems in simple-root coordinates and their finite
// (spherical) Weyl groups, enumerated as integer matrices.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lambda/rational.hpp"

namespace lb {

enum class RootType { A, B, C, D, G };

/// An integer vector in the simple-root basis.
using Root = std::vector<int>;

/// Square integer matrix, row-major. Column j holds the image of α_j.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long> entries;

  static IntMatrix identity(std::size_t n);
  long operator()(std::size_t row, std::size_t col) const { return entries[row * n + col]; }
  long& operator()(std::size_t row, std::size_t col) { return entries[row * n + col]; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) { return a.entries <=> b.entries; }
};

Root apply(const IntMatrix& m, const Root& v);

/// w = r_{word[0]} r_{word[1]} ... with 0-based simple reflection indices.
struct SphericalWeylElement {
  IntMatrix matrix;
  std::vector<std::size_t> word;
};

class RootSystem {
 public:
  /// Supported: A1..A4, B2..B4, C2..C4, D3..D4, G2. Throws std::invalid_argument otherwise.
  RootSystem(RootType type, std::size_t rank);

  RootType type() const { return type_; }
  std::size_t rank() const { return rank_; }
  std::string label() const;

  /// ⟨α_i, α_j∨⟩, 0-based.
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  /// All roots; the positive ones come first, in order of height then
  /// lexicographically, followed by their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t positive_count() const { return roots_.size() / 2; }
  bool is_positive(std::size_t root_index) const { return root_index < positive_count(); }
  std::optional<std::size_t> root_index(const Root& r) const;
  std::size_t simple_root_index(std::size_t i) const;
  std::size_t negative(std::size_t root_index) const;

  /// ⟨α_j, β∨⟩ for every simple root α_j, i.e. the coroot of β as a
  /// functional on simple-root coordinates.
  const std::vector<int>& coroot_functional(std::size_t root_index) const { return functionals_[root_index]; }
  /// β∨ in the basis of simple coroots.
  const std::vector<int>& coroot_expansion(std::size_t root_index) const { return coroots_[root_index]; }
  /// ⟨x, β∨⟩ for a rational vector x in simple-root coordinates.
  Rational pairing(const std::vector<Rational>& x, std::size_t root_index) const;

  /// Fundamental weight ω_i in simple-root coordinates: ⟨ω_i, α_j∨⟩ = δ_ij.
  const std::vector<Rational>& fundamental_weight(std::size_t i) const { return weights_[i]; }

  // Weyl group: elements are addressed by index, identity first, in BFS
  // order, so every stored word is reduced.
  const std::vector<SphericalWeylElement>& weyl_group() const { return group_; }
  const SphericalWeylElement& element(std::size_t index) const { return group_[index]; }
  std::size_t identity_index() const { return 0; }
  std::size_t simple_reflection(std::size_t i) const { return simple_reflections_[i]; }
  std::optional<std::size_t> index_of(const IntMatrix& m) const;
  std::size_t element_from_word(const std::vector<std::size_t>& word) const;
  std::size_t multiply(std::size_t a, std::size_t b) const { return product_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t length(std::size_t a) const { return group_[a].word.size(); }
  std::size_t longest_element() const { return longest_; }
  /// Reflection r_β for a root β.
  std::size_t reflection(std::size_t root_index) const;
  /// Index of w·β.
  std::size_t act(std::size_t w, std::size_t root_index) const;
  /// Simple-root permutation with w₀ α_i = -α_{σ(i)}.
  std::size_t opposition(std::size_t i) const { return opposition_[i]; }
  /// Elements of the parabolic subgroup generated by the simple reflections
  /// whose bits are set in `mask`, as sorted group indices.
  const std::vector<std::size_t>& parabolic_subgroup(std::uint32_t mask) const { return parabolic_.at(mask); }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << rank_) - 1; }

 private:
  void build_cartan();
  void build_roots();
  void build_coroots();
  void build_group();

  RootType type_;
  std::size_t rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> root_lookup_;
  std::vector<std::vector<int>> functionals_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<Rational>> weights_;
  std::vector<SphericalWeylElement> group_;
  std::map<IntMatrix, std::size_t> group_lookup_;
  std::vector<std::size_t> simple_reflections_;
  std::vector<std::vector<std::size_t>> product_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> action_;
  std::vector<std::size_t> reflections_;
  std::vector<std::size_t> opposition_;
  std::vector<std::vector<std::size_t>> parabolic_;
  std::size_t longest_ = 0;
};

RootType parse_root_type(const std::string& letter);
std::string to_string(RootType t);

/// True iff w⁻¹β ∈ R⁺.
bool is_positive_after(const RootSystem& rs, std::size_t w, std::size_t root_index);

}  // namespace lb
