#include "lambda/linear_system.hpp"

#include <map>
#include <stdexcept>

namespace lb {

namespace {

using Rows = std::vector<LinearInequality>;

// Scales the row so its first nonzero coefficient has absolute value 1.
// Returns false for a constant row (all coefficients zero).
bool normalize(LinearInequality& row) {
  for (const auto& c : row.coeffs) {
    if (c == 0) continue;
    const Rational s = 1 / (c < 0 ? Rational(-c) : c);
    for (auto& v : row.coeffs) v *= s;
    row.bound *= s;
    return true;
  }
  return false;
}

bool constant_row_holds(const LinearInequality& row) {
  const int s = row.bound.signum();
  return row.strict ? s < 0 : s <= 0;
}

// Normalizes, drops satisfied constant rows, keeps the strongest bound per
// coefficient vector. Returns false if a violated constant row is found.
bool simplify(Rows& rows) {
  std::map<std::vector<Rational>, LinearInequality> best;
  for (auto& row : rows) {
    if (!normalize(row)) {
      if (!constant_row_holds(row)) return false;
      continue;
    }
    auto it = best.find(row.coeffs);
    if (it == best.end()) {
      auto key = row.coeffs;
      best.emplace(std::move(key), std::move(row));
      continue;
    }
    auto& kept = it->second;
    const auto c = row.bound <=> kept.bound;
    if (c > 0 || (c == 0 && row.strict && !kept.strict)) kept = std::move(row);
  }
  rows.clear();
  for (auto& [k, row] : best) rows.push_back(std::move(row));
  return true;
}

Rows eliminate(const Rows& rows, std::size_t v) {
  Rows pos, neg, out;
  for (const auto& row : rows) {
    const int s = sgn(row.coeffs[v]);
    if (s > 0) pos.push_back(row);
    else if (s < 0) neg.push_back(row);
    else out.push_back(row);
  }
  for (const auto& p : pos) {
    const Rational ps = 1 / p.coeffs[v];
    for (const auto& q : neg) {
      const Rational qs = -1 / q.coeffs[v];
      LinearInequality r{std::vector<Rational>(p.coeffs.size()), p.bound * ps + q.bound * qs, p.strict || q.strict};
      for (std::size_t j = 0; j < r.coeffs.size(); ++j) r.coeffs[j] = p.coeffs[j] * ps + q.coeffs[j] * qs;
      r.coeffs[v] = 0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

struct Bound {
  GroupValue value;
  bool strict;
};

struct Stages {
  // stages[v] involves only variables 0..v-1.
  std::vector<Rows> stages;
  bool feasible = true;
};

Stages build_stages(Rows rows, std::size_t vars) {
  Stages s;
  s.stages.resize(vars + 1);
  if (!simplify(rows)) {
    s.feasible = false;
    return s;
  }
  s.stages[vars] = std::move(rows);
  for (std::size_t v = vars; v-- > 0;) {
    Rows next = eliminate(s.stages[v + 1], v);
    if (!simplify(next)) {
      s.feasible = false;
      return s;
    }
    s.stages[v] = std::move(next);
  }
  return s;
}

void bounds_for(const Rows& rows, std::size_t v, const std::vector<GroupValue>& x, std::optional<Bound>& lower,
                std::optional<Bound>& upper) {
  for (const auto& row : rows) {
    const Rational& c = row.coeffs[v];
    if (c == 0) continue;
    GroupValue rest = row.bound;
    for (std::size_t j = 0; j < v; ++j) {
      if (row.coeffs[j] != 0) rest -= x[j] * row.coeffs[j];
    }
    rest *= 1 / c;
    if (c > 0) {
      if (!lower || rest > lower->value || (rest == lower->value && row.strict)) lower = Bound{rest, row.strict};
    } else {
      if (!upper || rest < upper->value || (rest == upper->value && row.strict)) upper = Bound{rest, row.strict};
    }
  }
}

GroupValue choose(const std::optional<Bound>& lower, const std::optional<Bound>& upper, std::size_t rank) {
  const GroupValue unit = rank > 0 ? GroupValue::unit(rank, 1) : GroupValue(rank);
  if (lower && upper) {
    if (lower->value < upper->value) return (lower->value + upper->value) * Rational(1, 2);
    if (lower->value == upper->value && !lower->strict && !upper->strict) return lower->value;
    throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
  }
  if (lower) return lower->strict ? lower->value + unit : lower->value;
  if (upper) return upper->strict ? upper->value - unit : upper->value;
  return GroupValue(rank);
}

void back_substitute(const Stages& s, std::size_t vars, std::size_t rank, std::vector<GroupValue>& x,
                     std::size_t first) {
  for (std::size_t v = first; v < vars; ++v) {
    std::optional<Bound> lower, upper;
    bounds_for(s.stages[v + 1], v, x, lower, upper);
    x[v] = choose(lower, upper, rank);
  }
}

}  // namespace

void LinearSystem::add(LinearInequality row) {
  if (row.coeffs.size() != vars_) throw std::invalid_argument("linear row has wrong number of coefficients");
  if (row.bound.rank() != rank_) throw std::invalid_argument("linear row bound has wrong group rank");
  rows_.push_back(std::move(row));
}

void LinearSystem::add_greater_equal(std::vector<Rational> coeffs, GroupValue bound) {
  add({std::move(coeffs), std::move(bound), false});
}

void LinearSystem::add_greater(std::vector<Rational> coeffs, GroupValue bound) {
  add({std::move(coeffs), std::move(bound), true});
}

void LinearSystem::add_equal(std::vector<Rational> coeffs, GroupValue value) {
  std::vector<Rational> neg = coeffs;
  for (auto& c : neg) c = -c;
  add({std::move(coeffs), value, false});
  add({std::move(neg), -value, false});
}

bool LinearSystem::satisfied_by(const std::vector<GroupValue>& x) const {
  for (const auto& row : rows_) {
    GroupValue lhs(rank_);
    for (std::size_t j = 0; j < vars_; ++j) {
      if (row.coeffs[j] != 0) lhs += x[j] * row.coeffs[j];
    }
    if (row.strict ? !(lhs > row.bound) : !(lhs >= row.bound)) return false;
  }
  return true;
}

namespace {

// Λ = 0: every value is zero, so only the strict rows can fail.
bool trivial_group_feasible(const Rows& rows) {
  for (const auto& row : rows) {
    if (row.strict) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<GroupValue>> LinearSystem::solve() const {
  if (rank_ == 0) {
    if (!trivial_group_feasible(rows_)) return std::nullopt;
    return std::vector<GroupValue>(vars_, GroupValue(0));
  }
  const Stages s = build_stages(rows_, vars_);
  if (!s.feasible) return std::nullopt;
  std::vector<GroupValue> x(vars_, GroupValue(rank_));
  back_substitute(s, vars_, rank_, x, 0);
  if (!satisfied_by(x)) throw std::logic_error("Fourier-Motzkin witness fails the system");
  return x;
}

LinearSystem::MinResult LinearSystem::minimize(const std::vector<Rational>& objective) const {
  if (objective.size() != vars_) throw std::invalid_argument("objective has wrong number of coefficients");
  if (rank_ == 0) {
    MinResult r;
    if (trivial_group_feasible(rows_)) {
      r.status = MinStatus::Attained;
      r.minimum = Minimum{GroupValue(0), std::vector<GroupValue>(vars_, GroupValue(0))};
    }
    return r;
  }
  // Variable 0 carries the objective value t = Σ objective·x.
  Rows rows;
  for (const auto& row : rows_) {
    LinearInequality r{{Rational(0)}, row.bound, row.strict};
    r.coeffs.insert(r.coeffs.end(), row.coeffs.begin(), row.coeffs.end());
    rows.push_back(std::move(r));
  }
  LinearInequality up{{Rational(1)}, GroupValue(rank_), false};
  LinearInequality down{{Rational(-1)}, GroupValue(rank_), false};
  for (const auto& c : objective) {
    up.coeffs.push_back(-c);
    down.coeffs.push_back(c);
  }
  rows.push_back(std::move(up));
  rows.push_back(std::move(down));

  const std::size_t total = vars_ + 1;
  const Stages s = build_stages(std::move(rows), total);
  MinResult result;
  if (!s.feasible) return result;
  std::vector<GroupValue> x(total, GroupValue(rank_));
  std::optional<Bound> lower, upper;
  bounds_for(s.stages[1], 0, x, lower, upper);
  if (!lower) {
    result.status = MinStatus::Unbounded;
    return result;
  }
  if (lower->strict) {
    result.status = MinStatus::NotAttained;
    return result;
  }
  x[0] = lower->value;
  back_substitute(s, total, rank_, x, 1);
  std::vector<GroupValue> argmin(x.begin() + 1, x.end());
  if (!satisfied_by(argmin)) throw std::logic_error("Fourier-Motzkin minimizer fails the system");
  result.status = MinStatus::Attained;
  result.minimum = Minimum{x[0], std::move(argmin)};
  return result;
}

}  // namespace lb
