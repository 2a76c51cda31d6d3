#include "lambda/group_actions.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace lb {

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& message, Witness w = {}) {
  throw BuildingError(code, message, std::move(w));
}

Isometry identity_isometry(const ChartComplex& cc) {
  Isometry id;
  for (const auto& c : cc.charts()) {
    id.chart_map[c] = c;
    id.maps[c] = cc.space().identity();
  }
  return id;
}

}  // namespace

Isometry single_chart_isometry(const ChartComplex& cc, const AffineMap& m) {
  if (cc.charts().size() != 1) throw std::invalid_argument("plain affine generators need a single-chart complex");
  const auto& c = cc.charts().front();
  return Isometry{{{c, c}}, {{c, m}}};
}

void check_isometry(const ChartComplex& cc, const Isometry& g) {
  const auto& space = cc.space();
  std::set<std::string> images;
  for (const auto& c : cc.charts()) {
    const auto it = g.chart_map.find(c);
    if (it == g.chart_map.end()) fail("InvalidIsometry", "chart map does not cover chart " + c, {{c}, {}, {}});
    cc.chart_index(it->second);
    images.insert(it->second);
    const auto m = g.maps.find(c);
    if (m == g.maps.end()) fail("InvalidIsometry", "no affine map for chart " + c, {{c}, {}, {}});
    if (m->second.linear >= space.roots().weyl_group().size()) fail("InvalidIsometry", "bad Weyl element", {{c}, {}, {}});
    space.check(m->second.translation);
  }
  if (g.chart_map.size() != cc.charts().size() || images.size() != cc.charts().size()) {
    fail("InvalidIsometry", "chart map is not a permutation of the charts");
  }
  const std::size_t n = cc.charts().size();
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h) {
      if (f == h) continue;
      const auto& fid = cc.charts()[f];
      const auto& hid = cc.charts()[h];
      const auto fi = cc.chart_index(g.chart_map.at(fid));
      const auto hi = cc.chart_index(g.chart_map.at(hid));
      const Gluing* src = cc.gluing(f, h);
      const Gluing* dst = cc.gluing(fi, hi);
      if (!src && !dst) continue;
      Witness w{{fid, hid}, {}, "gluing not carried onto the gluing of the image charts"};
      if (!src || !dst) fail("InvalidIsometry", "isometry does not respect gluing " + fid + "-" + hid, w);
      const auto& mf = g.maps.at(fid);
      const auto& mh = g.maps.at(hid);
      if (!space.same_set(space.image(mf, src->region), dst->region)) {
        fail("InvalidIsometry", "isometry does not respect gluing " + fid + "-" + hid, w);
      }
      if (auto p = space.disagreement(space.compose(dst->map, mf), space.compose(mh, src->map), src->region)) {
        w.points.emplace_back(fid, p->coords);
        fail("InvalidIsometry", "isometry does not commute with transition " + fid + "-" + hid, w);
      }
    }
}

BuildingPoint apply(const ChartComplex& cc, const Isometry& g, const BuildingPoint& p) {
  cc.check(p);
  return {g.chart_map.at(p.chart), cc.space().apply(g.maps.at(p.chart), p.coords)};
}

Isometry compose(const ChartComplex& cc, const Isometry& a, const Isometry& b) {
  Isometry out;
  for (const auto& c : cc.charts()) {
    const auto& mid = b.chart_map.at(c);
    out.chart_map[c] = a.chart_map.at(mid);
    out.maps[c] = cc.space().compose(a.maps.at(mid), b.maps.at(c));
  }
  return out;
}

std::size_t default_orbit_cap() {
  if (const char* env = std::getenv("LAMBDA_BUILDINGS_ORBIT_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

std::vector<Isometry> enumerate_group(const ChartComplex& cc, const std::vector<Isometry>& gens, std::size_t cap) {
  std::vector<Isometry> elems{identity_isometry(cc)};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      Isometry next = compose(cc, g, elems[head]);
      if (std::find(elems.begin(), elems.end(), next) != elems.end()) continue;
      elems.push_back(std::move(next));
      if (elems.size() > cap) {
        fail("NotFiniteGroup", "generated group exceeds " + std::to_string(cap) + " elements");
      }
    }
  return elems;
}

std::vector<BuildingPoint> orbit(const ChartComplex& cc, const std::vector<Isometry>& gens, const BuildingPoint& x0,
                                 std::size_t cap) {
  std::vector<BuildingPoint> out{cc.canonical(x0)};
  std::set<std::pair<std::string, Point>> seen{{out[0].chart, out[0].coords}};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& g : gens) {
      BuildingPoint q = cc.canonical(apply(cc, g, out[head]));
      if (!seen.insert({q.chart, q.coords}).second) continue;
      out.push_back(std::move(q));
      if (out.size() > cap) {
        fail("OrbitCapExceeded", "orbit exceeds " + std::to_string(cap) + " points",
             {{x0.chart}, {{x0.chart, x0.coords.coords}}, {}});
      }
    }
  return out;
}

OrbitBound orbit_bound(const ChartComplex& cc, const std::vector<BuildingPoint>& orbit, const BuildingPoint& x0) {
  if (orbit.empty()) throw std::invalid_argument("orbit_bound of an empty orbit");
  OrbitBound b{orbit, GroupValue(cc.space().group_rank())};
  for (const auto& p : orbit) b.g0 = max(b.g0, cc.distance(x0, p));
  return b;
}

Point archimedean_fixed_point(const ModelSpace& space, const std::vector<Point>& points) {
  return space.centroid(points);
}

namespace {

std::size_t common_chart(const ChartComplex& cc, const BuildingPoint& p, const BuildingPoint& q) {
  for (std::size_t g = 0; g < cc.charts().size(); ++g) {
    if (cc.try_transport(p, g) && cc.try_transport(q, g)) return g;
  }
  fail("NoCommonChart", "no chart contains both points",
       {{p.chart, q.chart}, {{p.chart, p.coords.coords}, {q.chart, q.coords.coords}}, {}});
}

}  // namespace

BuildingPoint tree_circumcenter(const ChartComplex& cc, const std::vector<BuildingPoint>& points) {
  if (points.empty()) throw std::invalid_argument("circumcenter of an empty set");
  if (cc.space().dim() != 1) throw std::invalid_argument("tree circumcenter needs a rank-one complex");
  std::size_t bi = 0, bj = 0;
  GroupValue best(cc.space().group_rank());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      GroupValue d = cc.distance(points[i], points[j]);
      if (d > best) {
        best = std::move(d);
        bi = i;
        bj = j;
      }
    }
  const auto c = common_chart(cc, points[bi], points[bj]);
  const Point a = *cc.try_transport(points[bi], c);
  const Point b = *cc.try_transport(points[bj], c);
  return cc.canonical({cc.charts()[c], (a + b) * Rational(1, 2)});
}

FixedPointResult fixed_point(const ChartComplex& cc, const std::vector<Isometry>& gens, const BuildingPoint& x0,
                             std::size_t cap) {
  const auto& space = cc.space();
  const bool affine = cc.charts().size() == 1;
  const bool tree = space.roots().type() == RootType::A && space.dim() == 1;
  if (!affine && !tree) {
    fail("UnsupportedComplexClass",
         "fixed points are computed for single-apartment complexes and rank-one trees only");
  }
  for (const auto& g : gens) check_isometry(cc, g);
  enumerate_group(cc, gens, cap);

  FixedPointResult result{cc.canonical(x0), {}};
  BuildingPoint& x = result.point;
  for (;;) {
    const auto orb = orbit(cc, gens, x, cap);
    const auto bound = orbit_bound(cc, orb, x);
    if (bound.g0.is_zero()) break;
    const std::size_t level = leading_index(bound.g0);
    if (affine) {
      // Shift the level-ℓ entries to the centroid of the orbit's level-ℓ entries.
      for (std::size_t j = 0; j < space.dim(); ++j) {
        Rational sum = 0;
        for (const auto& p : orb) sum += standard_part(p.coords.coords[j] - x.coords.coords[j], bound.g0);
        x.coords.coords[j].at(level) += sum / static_cast<long>(orb.size());
      }
    } else {
      // Midpoint of a diameter pair of the orbit in the level-ℓ tree.
      std::size_t bi = 0, bj = 0;
      Rational best = -1;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (std::size_t j = i + 1; j < orb.size(); ++j) {
          const Rational s = standard_part(cc.distance(orb[i], orb[j]), bound.g0);
          if (s > best) {
            best = s;
            bi = i;
            bj = j;
          }
        }
      const auto c = common_chart(cc, orb[bi], orb[bj]);
      Point m = *cc.try_transport(orb[bi], c);
      const Point b = *cc.try_transport(orb[bj], c);
      m.coords[0].at(level) = (m.coords[0].at(level) + b.coords[0].at(level)) / 2;
      x = cc.canonical({cc.charts()[c], m});
    }
    result.trace.push_back({level, bound.g0, x});
    if (result.trace.size() > space.group_rank()) throw std::logic_error("fixed-point layers failed to descend");
  }
  return result;
}

}  // namespace lb
