#pragma once

// Exact feasibility and minimization for systems of linear inequalities with
// rational coefficients and right-hand sides in an ordered ℚ-vector space
// Λ = ℚ^k (lex). Variables range over Λ. Decided by Fourier-Motzkin
// elimination; Λ is divisible and totally ordered, so every elimination step
// is exact and a witness can be back-substituted.

#include <optional>
#include <vector>

#include "lambda/ordered_group.hpp"

namespace lb {

/// Σ coeffs[j]·x_j ≥ bound, or > bound when strict.
struct LinearInequality {
  std::vector<Rational> coeffs;
  GroupValue bound;
  bool strict = false;
};

class LinearSystem {
 public:
  LinearSystem(std::size_t variables, std::size_t group_rank) : vars_(variables), rank_(group_rank) {}

  std::size_t variables() const { return vars_; }
  std::size_t group_rank() const { return rank_; }
  const std::vector<LinearInequality>& rows() const { return rows_; }

  void add(LinearInequality row);
  void add_greater_equal(std::vector<Rational> coeffs, GroupValue bound);
  void add_greater(std::vector<Rational> coeffs, GroupValue bound);
  /// Σ coeffs·x = value, as a pair of opposite inequalities.
  void add_equal(std::vector<Rational> coeffs, GroupValue value);

  bool satisfied_by(const std::vector<GroupValue>& x) const;

  /// A point satisfying every row, or nullopt when the system is infeasible.
  std::optional<std::vector<GroupValue>> solve() const;

  struct Minimum {
    GroupValue value;
    std::vector<GroupValue> argmin;
  };
  enum class MinStatus { Infeasible, Unbounded, NotAttained, Attained };
  struct MinResult {
    MinStatus status = MinStatus::Infeasible;
    std::optional<Minimum> minimum;
  };
  /// Minimizes Σ objective_j·x_j. The minimum of a feasible system bounded
  /// below is attained unless a strict row is binding.
  MinResult minimize(const std::vector<Rational>& objective) const;

 private:
  std::size_t vars_;
  std::size_t rank_;
  std::vector<LinearInequality> rows_;
};

}  // namespace lb
