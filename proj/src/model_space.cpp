#include "lambda/model_space.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lb {

Point Point::zero(std::size_t dim, std::size_t group_rank) {
  return Point(std::vector<GroupValue>(dim, GroupValue(group_rank)));
}

Point& Point::operator+=(const Point& other) {
  if (dim() != other.dim()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  if (dim() != other.dim()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Point& Point::operator*=(const Rational& s) {
  for (auto& c : coords) c *= s;
  return *this;
}

Point Point::operator-() const {
  Point r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const auto c = a.coords[i] <=> b.coords[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ConvexSet intersect(const ConvexSet& a, const ConvexSet& b) {
  ConvexSet r = a;
  r.constraints.insert(r.constraints.end(), b.constraints.begin(), b.constraints.end());
  return r;
}

ModelSpace::ModelSpace(std::shared_ptr<const RootSystem> rs, std::size_t group_rank)
    : rs_(std::move(rs)), rank_(group_rank) {
  if (!rs_) throw std::invalid_argument("model space needs a root system");
}

void ModelSpace::check(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("point has wrong number of coordinates");
  for (const auto& c : x.coords) {
    if (c.rank() != rank_) throw std::invalid_argument("point coordinate has wrong group rank");
  }
}

GroupValue ModelSpace::pairing(const Point& x, std::size_t root) const {
  const auto& f = rs_->coroot_functional(root);
  GroupValue s(rank_);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (f[j] != 0) s += x.coords[j] * Rational(f[j]);
  }
  return s;
}

GroupValue ModelSpace::distance(const Point& x, const Point& y) const {
  const Point diff = y - x;
  GroupValue d(rank_);
  for (std::size_t r = 0; r < rs_->positive_count(); ++r) d += abs(pairing(diff, r));
  return d;
}

Point ModelSpace::apply_linear(std::size_t w, const Point& x) const {
  const auto& m = rs_->element(w).matrix;
  Point out = origin();
  for (std::size_t k = 0; k < dim(); ++k)
    for (std::size_t j = 0; j < dim(); ++j) {
      if (m(k, j) != 0) out.coords[k] += x.coords[j] * Rational(m(k, j));
    }
  return out;
}

Point ModelSpace::apply(const AffineMap& m, const Point& x) const { return apply_linear(m.linear, x) + m.translation; }

AffineMap ModelSpace::compose(const AffineMap& a, const AffineMap& b) const {
  return {rs_->multiply(a.linear, b.linear), apply(a, b.translation)};
}

AffineMap ModelSpace::inverse(const AffineMap& a) const {
  const auto inv = rs_->inverse(a.linear);
  return {inv, -apply_linear(inv, a.translation)};
}

AffineMap ModelSpace::affine_reflection(std::size_t root, const GroupValue& k) const {
  Point t = origin();
  const auto& beta = rs_->roots().at(root);
  for (std::size_t j = 0; j < dim(); ++j) t.coords[j] = k * Rational(beta[j]);
  return {rs_->reflection(root), t};
}

bool ModelSpace::contains(const HalfApartment& h, const Point& x) const {
  return !h.offset || pairing(x, h.root) >= *h.offset;
}

bool ModelSpace::contains(const ConvexSet& k, const Point& x) const {
  for (const auto& h : k.constraints) {
    if (!contains(h, x)) return false;
  }
  return true;
}

HalfApartment ModelSpace::image(const AffineMap& m, const HalfApartment& h) const {
  const auto root = rs_->act(m.linear, h.root);
  if (!h.offset) return {root, std::nullopt};
  return {root, *h.offset + pairing(m.translation, root)};
}

ConvexSet ModelSpace::image(const AffineMap& m, const ConvexSet& k) const {
  ConvexSet r;
  for (const auto& h : k.constraints) r.constraints.push_back(image(m, h));
  return r;
}

std::vector<Rational> ModelSpace::functional(std::size_t root) const {
  const auto& f = rs_->coroot_functional(root);
  return std::vector<Rational>(f.begin(), f.end());
}

LinearSystem ModelSpace::system(const ConvexSet& k) const {
  LinearSystem s(dim(), rank_);
  for (const auto& h : k.constraints) {
    if (h.offset) s.add_greater_equal(functional(h.root), *h.offset);
  }
  return s;
}

std::optional<Point> ModelSpace::find_point(const LinearSystem& s) const {
  auto x = s.solve();
  if (!x) return std::nullopt;
  return Point(std::move(*x));
}

std::optional<Point> ModelSpace::point_outside(const ConvexSet& a, const ConvexSet& b) const {
  for (const auto& h : b.constraints) {
    if (!h.offset) continue;
    LinearSystem s = system(a);
    s.add_greater(functional(rs_->negative(h.root)), -*h.offset);
    if (auto p = find_point(s)) return p;
  }
  return std::nullopt;
}

std::optional<Point> ModelSpace::disagreement(const AffineMap& a, const AffineMap& b, const ConvexSet& d) const {
  const auto& ma = rs_->element(a.linear).matrix;
  const auto& mb = rs_->element(b.linear).matrix;
  for (std::size_t k = 0; k < dim(); ++k) {
    std::vector<Rational> c(dim());
    for (std::size_t j = 0; j < dim(); ++j) c[j] = Rational(ma(k, j) - mb(k, j));
    const GroupValue delta = a.translation.coords[k] - b.translation.coords[k];
    // c·x + δ > 0, then c·x + δ < 0.
    for (int side : {1, -1}) {
      LinearSystem s = system(d);
      std::vector<Rational> row = c;
      for (auto& v : row) v *= side;
      s.add_greater(std::move(row), -delta * Rational(side));
      if (auto p = find_point(s)) return p;
    }
  }
  return std::nullopt;
}

ConvexSet ModelSpace::convex_hull(const std::vector<Point>& points) const {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty list");
  ConvexSet k;
  for (std::size_t r = 0; r < rs_->roots().size(); ++r) {
    GroupValue lo = pairing(points[0], r);
    for (std::size_t i = 1; i < points.size(); ++i) {
      GroupValue v = pairing(points[i], r);
      if (v < lo) lo = std::move(v);
    }
    k.constraints.push_back({r, std::move(lo)});
  }
  return k;
}

Point ModelSpace::centroid(const std::vector<Point>& points) const {
  if (points.empty()) throw std::invalid_argument("centroid of an empty list");
  Point s = origin();
  for (const auto& p : points) s += p;
  return s * (Rational(1) / static_cast<long>(points.size()));
}

std::vector<Rational> ModelSpace::weight_image(std::size_t w, std::size_t i) const {
  const auto& m = rs_->element(w).matrix;
  const auto& omega = rs_->fundamental_weight(i);
  std::vector<Rational> out(dim(), Rational(0));
  for (std::size_t k = 0; k < dim(); ++k)
    for (std::size_t j = 0; j < dim(); ++j) out[k] += omega[j] * Rational(m(k, j));
  return out;
}

Direction ModelSpace::canonical(const Direction& d) const {
  const std::uint32_t stabilizer = rs_->full_mask() & ~d.face;
  Direction best = d;
  for (const auto u : rs_->parabolic_subgroup(stabilizer)) {
    const auto w = rs_->multiply(d.weyl, u);
    const auto lw = rs_->length(w), lb = rs_->length(best.weyl);
    if (lw < lb || (lw == lb && w < best.weyl)) best.weyl = w;
  }
  return best;
}

std::vector<Direction> ModelSpace::directions(std::uint32_t face) const {
  std::vector<Direction> out;
  for (std::size_t w = 0; w < rs_->weyl_group().size(); ++w) {
    const Direction d{w, face};
    if (canonical(d) == d) out.push_back(d);
  }
  std::stable_sort(out.begin(), out.end(), [&](const Direction& a, const Direction& b) {
    return rs_->length(a.weyl) < rs_->length(b.weyl);
  });
  return out;
}

Direction ModelSpace::opposite(const Direction& d) const {
  std::uint32_t face = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (d.face & (std::uint32_t{1} << i)) face |= std::uint32_t{1} << rs_->opposition(i);
  }
  return canonical({rs_->multiply(d.weyl, rs_->longest_element()), face});
}

ConvexSet ModelSpace::simplex_set(const WeylSimplex& s) const {
  ConvexSet k;
  for (std::size_t i = 0; i < dim(); ++i) {
    const auto beta = rs_->act(s.direction.weyl, rs_->simple_root_index(i));
    const GroupValue o = pairing(s.base, beta);
    k.constraints.push_back({beta, o});
    if (!(s.direction.face & (std::uint32_t{1} << i))) k.constraints.push_back({rs_->negative(beta), -o});
  }
  return k;
}

bool ModelSpace::germ_in_convex(const Germ& g, const ConvexSet& k) const {
  if (!contains(k, g.base)) throw std::domain_error("germ base point is not in the convex set");
  for (const auto& h : k.constraints) {
    if (!h.offset || pairing(g.base, h.root) > *h.offset) continue;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(g.direction.face & (std::uint32_t{1} << i))) continue;
      if (rs_->pairing(weight_image(g.direction.weyl, i), h.root) < 0) return false;
    }
  }
  return true;
}

ExitSimplex ModelSpace::exit_simplex(const ConvexSet& k, const Point& x) const {
  if (contains(k, x)) throw std::domain_error("exit_simplex: point lies in the convex set");
  if (is_empty(k)) throw std::domain_error("exit_simplex: convex set is empty");
  const std::uint32_t full = rs_->full_mask();
  for (int size = 1; size <= static_cast<int>(dim()); ++size) {
    for (std::uint32_t face = 1; face <= full; ++face) {
      if (std::popcount(face) != size) continue;
      for (const auto& d : directions(face)) {
        const ConvexSet p = intersect(simplex_set({x, d}), k);
        const LinearSystem s = system(p);
        if (!s.solve()) continue;
        std::vector<Rational> objective(dim(), Rational(0));
        for (std::size_t i = 0; i < dim(); ++i) {
          if (!(face & (std::uint32_t{1} << i))) continue;
          const auto f = functional(rs_->act(d.weyl, rs_->simple_root_index(i)));
          for (std::size_t j = 0; j < dim(); ++j) objective[j] += f[j];
        }
        const auto res = s.minimize(objective);
        if (res.status != LinearSystem::MinStatus::Attained) {
          throw std::logic_error("exit_simplex: minimum over a closed cone section not attained");
        }
        Point y(res.minimum->argmin);
        return {y, WeylSimplex{std::move(y), opposite(d)}};
      }
    }
  }
  throw std::logic_error("exit_simplex: no simplex through x meets K");
}

bool ModelSpace::parallel(const WeylSimplex& a, const WeylSimplex& b) const {
  if (a.direction.face != b.direction.face) throw std::invalid_argument("parallel: simplices of different type");
  return canonical(a.direction) == canonical(b.direction);
}

bool ModelSpace::direction_in_recession(const Direction& d, const ConvexSet& k) const {
  for (const auto& h : k.constraints) {
    if (!h.offset) continue;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!(d.face & (std::uint32_t{1} << i))) continue;
      if (rs_->pairing(weight_image(d.weyl, i), h.root) < 0) return false;
    }
  }
  return true;
}

}  // namespace lb
