#include "lambda/chart_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lb {

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& message, Witness w = {}) {
  throw BuildingError(code, message, std::move(w));
}

Witness at(std::vector<std::string> charts, std::vector<std::pair<std::string, Point>> points = {},
           std::string detail = {}) {
  Witness w;
  w.charts = std::move(charts);
  for (auto& [c, p] : points) w.points.emplace_back(c, p.coords);
  w.detail = std::move(detail);
  return w;
}

ConvexSet convert_piece(const ModelSpace& space, const std::vector<RawHalfApartment>& piece, const std::string& f,
                        const std::string& g) {
  ConvexSet k;
  for (const auto& h : piece) {
    if (h.root.size() != space.dim()) {
      fail("InvalidInput", "region root has wrong length in gluing " + f + "-" + g, at({f, g}));
    }
    const auto idx = space.roots().root_index(h.root);
    if (!idx) {
      std::string r;
      for (auto c : h.root) r += (r.empty() ? "" : ",") + std::to_string(c);
      fail("ConvexityViolation", "region of gluing " + f + "-" + g + " uses [" + r + "], which is not a root",
           at({f, g}, {}, "non-root normal [" + r + "]"));
    }
    if (h.offset && h.offset->rank() != space.group_rank()) {
      fail("InvalidInput", "region offset has wrong group rank in gluing " + f + "-" + g, at({f, g}));
    }
    k.constraints.push_back({*idx, h.offset});
  }
  return k;
}

// A point of `base` outside every piece, chosen by picking one violated
// constraint per piece.
std::optional<Point> outside_union(const ModelSpace& space, const LinearSystem& base,
                                   const std::vector<ConvexSet>& pieces, std::size_t i) {
  if (i == pieces.size()) return space.find_point(base);
  for (const auto& h : pieces[i].constraints) {
    if (!h.offset) continue;
    LinearSystem s = base;
    s.add_greater(space.functional(space.roots().negative(h.root)), -*h.offset);
    if (!s.solve()) continue;
    if (auto p = outside_union(space, s, pieces, i + 1)) return p;
  }
  return std::nullopt;
}

ConvexSet resolve_region(const ModelSpace& space, const RegionSpec& region, const std::string& f,
                         const std::string& g) {
  std::vector<ConvexSet> pieces;
  for (const auto& piece : region.pieces) {
    ConvexSet k = convert_piece(space, piece, f, g);
    if (!space.is_empty(k)) pieces.push_back(std::move(k));
  }
  if (pieces.empty()) fail("EmptyRegion", "gluing region " + f + "-" + g + " is empty", at({f, g}));
  if (pieces.size() == 1) return pieces[0];

  ConvexSet hull;
  for (std::size_t r = 0; r < space.roots().roots().size(); ++r) {
    std::optional<GroupValue> lo;
    bool bounded = true;
    for (const auto& k : pieces) {
      const auto res = space.system(k).minimize(space.functional(r));
      if (res.status != LinearSystem::MinStatus::Attained) {
        bounded = false;
        break;
      }
      if (!lo || res.minimum->value < *lo) lo = res.minimum->value;
    }
    if (bounded) hull.constraints.push_back({r, *lo});
  }
  if (auto p = outside_union(space, space.system(hull), pieces, 0)) {
    fail("ConvexityViolation", "gluing region " + f + "-" + g + " is not convex",
         at({f, g}, {{f, *p}}, "point of the convex hull outside the region"));
  }
  return hull;
}

AffineMap resolve_transition(const ModelSpace& space, const TransitionSpec& t, const std::string& f,
                             const std::string& g) {
  const auto& rs = space.roots();
  AffineMap m;
  if (t.word.has_value() == t.matrix.has_value()) {
    fail("InvalidInput", "transition " + f + "-" + g + " needs exactly one of word or matrix", at({f, g}));
  }
  if (t.word) {
    for (auto i : *t.word) {
      if (i >= rs.rank()) fail("InvalidInput", "transition word index out of range in " + f + "-" + g, at({f, g}));
    }
    m.linear = rs.element_from_word(*t.word);
  } else {
    if (t.matrix->n != rs.rank() || t.matrix->entries.size() != rs.rank() * rs.rank()) {
      fail("InvalidInput", "transition matrix has wrong size in " + f + "-" + g, at({f, g}));
    }
    const auto idx = rs.index_of(*t.matrix);
    if (!idx) {
      fail("InconsistentTransition", "transition matrix of " + f + "-" + g + " is not a Weyl group element",
           at({f, g}, {}, "matrix outside the spherical Weyl group"));
    }
    m.linear = *idx;
  }
  m.translation = Point(t.translation);
  try {
    space.check(m.translation);
  } catch (const std::invalid_argument& e) {
    fail("InvalidInput", "transition translation of " + f + "-" + g + ": " + e.what(), at({f, g}));
  }
  return m;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool AxiomReport::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second.passed(); });
}

ChartComplex ChartComplex::validate(const AtlasSpec& spec) {
  std::shared_ptr<const RootSystem> rs;
  try {
    rs = std::make_shared<const RootSystem>(spec.type, spec.rank);
  } catch (const std::invalid_argument& e) {
    fail("InvalidInput", e.what());
  }
  if (spec.charts.empty()) fail("InvalidInput", "atlas has no charts");
  std::vector<std::string> charts = spec.charts;
  std::sort(charts.begin(), charts.end());
  for (std::size_t i = 1; i < charts.size(); ++i) {
    if (charts[i] == charts[i - 1]) fail("DuplicateChart", "chart '" + charts[i] + "' is declared twice", at({charts[i]}));
  }
  ChartComplex cc(ModelSpace(rs, spec.group_rank), std::move(charts));
  const ModelSpace& space = cc.space_;

  std::set<std::pair<std::size_t, std::size_t>> explicit_pairs;
  for (const auto& gs : spec.gluings) {
    for (const auto* id : {&gs.from, &gs.to}) {
      if (!std::binary_search(cc.charts_.begin(), cc.charts_.end(), *id)) {
        fail("UnknownChart", "gluing " + gs.from + "-" + gs.to + " refers to undeclared chart '" + *id + "'",
             at({*id}, {}, "dangling chart reference"));
      }
    }
    if (gs.from == gs.to) fail("InvalidInput", "chart '" + gs.from + "' is glued to itself", at({gs.from}));
    const auto f = cc.chart_index(gs.from), g = cc.chart_index(gs.to);
    if (!explicit_pairs.insert({f, g}).second) {
      fail("InvalidInput", "gluing " + gs.from + "-" + gs.to + " is given twice", at({gs.from, gs.to}));
    }
    Gluing fg{resolve_region(space, gs.region, gs.from, gs.to), resolve_transition(space, gs.transition, gs.from, gs.to)};
    Gluing gf{space.image(fg.map, fg.region), space.inverse(fg.map)};

    if (const auto it = cc.gluings_.find({f, g}); it != cc.gluings_.end()) {
      // The reverse entry was given already; this one must be its exact inverse.
      const Gluing& known = it->second;
      if (auto p = space.point_outside(fg.region, known.region)) {
        fail("InverseMismatch", "gluing " + gs.from + "-" + gs.to + " is not the inverse of " + gs.to + "-" + gs.from,
             at({gs.from, gs.to}, {{gs.from, *p}}, "point in one region but not the inverse image of the other"));
      }
      if (auto p = space.point_outside(known.region, fg.region)) {
        fail("InverseMismatch", "gluing " + gs.from + "-" + gs.to + " is not the inverse of " + gs.to + "-" + gs.from,
             at({gs.from, gs.to}, {{gs.from, *p}}, "point in one region but not the inverse image of the other"));
      }
      if (auto p = space.disagreement(fg.map, known.map, fg.region)) {
        fail("InverseMismatch",
             "transition " + gs.from + "-" + gs.to + " is not the inverse of " + gs.to + "-" + gs.from,
             at({gs.from, gs.to}, {{gs.from, *p}}, "transitions disagree at this point"));
      }
      continue;
    }
    cc.gluings_.emplace(std::make_pair(f, g), std::move(fg));
    cc.gluings_.emplace(std::make_pair(g, f), std::move(gf));
  }
  cc.check_cocycles();
  return cc;
}

void ChartComplex::check_cocycles() const {
  const std::size_t n = charts_.size();
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        if (f == g || g == h || f == h) continue;
        const Gluing* fg = gluing(f, g);
        const Gluing* gh = gluing(g, h);
        if (!fg || !gh) continue;
        const ConvexSet d = intersect(fg->region, space_.preimage(fg->map, gh->region));
        const auto p = space_.find_point(d);
        if (!p) continue;
        const std::vector<std::string> ids{charts_[f], charts_[g], charts_[h]};
        const Gluing* fh = gluing(f, h);
        if (!fh) {
          fail("CocycleViolation", "charts " + charts_[f] + " and " + charts_[h] + " share points through " +
                                       charts_[g] + " but are not glued",
               at(ids, {{charts_[f], *p}}, "point reaching " + charts_[h] + " through " + charts_[g]));
        }
        if (auto q = space_.point_outside(d, fh->region)) {
          fail("CocycleViolation", "triple " + charts_[f] + "," + charts_[g] + "," + charts_[h] + " is inconsistent",
               at(ids, {{charts_[f], *q}}, "point glued through " + charts_[g] + " but outside Z_" + charts_[f] + charts_[h]));
        }
        if (auto q = space_.disagreement(space_.compose(gh->map, fg->map), fh->map, d)) {
          fail("CocycleViolation", "triple " + charts_[f] + "," + charts_[g] + "," + charts_[h] + " is inconsistent",
               at(ids, {{charts_[f], *q}}, "composed transition disagrees with the direct one"));
        }
      }
}

std::size_t ChartComplex::chart_index(const std::string& id) const {
  const auto it = std::lower_bound(charts_.begin(), charts_.end(), id);
  if (it == charts_.end() || *it != id) fail("UnknownChart", "unknown chart '" + id + "'", at({id}));
  return static_cast<std::size_t>(it - charts_.begin());
}

const Gluing* ChartComplex::gluing(std::size_t f, std::size_t g) const {
  const auto it = gluings_.find({f, g});
  return it == gluings_.end() ? nullptr : &it->second;
}

AtlasSpec ChartComplex::to_spec() const {
  const auto& rs = space_.roots();
  AtlasSpec spec;
  spec.type = rs.type();
  spec.rank = rs.rank();
  spec.group_rank = space_.group_rank();
  spec.charts = charts_;
  for (const auto& [key, gl] : gluings_) {
    if (key.first > key.second) continue;
    GluingSpec gs;
    gs.from = charts_[key.first];
    gs.to = charts_[key.second];
    std::vector<RawHalfApartment> piece;
    for (const auto& h : gl.region.constraints) piece.push_back({rs.roots()[h.root], h.offset});
    gs.region.pieces.push_back(std::move(piece));
    gs.transition.word = rs.element(gl.map.linear).word;
    gs.transition.translation = gl.map.translation.coords;
    spec.gluings.push_back(std::move(gs));
  }
  return spec;
}

void ChartComplex::check(const BuildingPoint& p) const {
  chart_index(p.chart);
  try {
    space_.check(p.coords);
  } catch (const std::invalid_argument& e) {
    fail("InvalidInput", std::string("point in chart ") + p.chart + ": " + e.what(), at({p.chart}));
  }
}

std::optional<Point> ChartComplex::try_transport(const BuildingPoint& p, std::size_t g) const {
  const auto f = chart_index(p.chart);
  if (f == g) return p.coords;
  const Gluing* gl = gluing(f, g);
  if (!gl || !space_.contains(gl->region, p.coords)) return std::nullopt;
  return space_.apply(gl->map, p.coords);
}

Point ChartComplex::transport(const BuildingPoint& p, const std::string& chart) const {
  check(p);
  auto r = try_transport(p, chart_index(chart));
  if (!r) {
    fail("NotInChart", "point of chart " + p.chart + " does not lie in chart " + chart,
         at({p.chart, chart}, {{p.chart, p.coords}}));
  }
  return *r;
}

bool ChartComplex::equal(const BuildingPoint& p, const BuildingPoint& q) const {
  check(p);
  check(q);
  const auto r = try_transport(p, chart_index(q.chart));
  return r && *r == q.coords;
}

std::vector<std::size_t> ChartComplex::charts_containing(const BuildingPoint& p) const {
  check(p);
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < charts_.size(); ++g) {
    if (try_transport(p, g)) out.push_back(g);
  }
  return out;
}

BuildingPoint ChartComplex::canonical(const BuildingPoint& p) const {
  const auto g = charts_containing(p).front();
  return {charts_[g], *try_transport(p, g)};
}

GroupValue ChartComplex::distance(const BuildingPoint& p, const BuildingPoint& q) const {
  check(p);
  check(q);
  for (std::size_t g = 0; g < charts_.size(); ++g) {
    const auto a = try_transport(p, g);
    if (!a) continue;
    const auto b = try_transport(q, g);
    if (!b) continue;
    return space_.distance(*a, *b);
  }
  fail("NoCommonChart", "no chart contains both points",
       at({p.chart, q.chart}, {{p.chart, p.coords}, {q.chart, q.coords}}));
}

bool ChartComplex::germ_in_chart(std::size_t f, const Germ& mu, std::size_t g) const {
  if (f == g) return true;
  const Gluing* gl = gluing(f, g);
  return gl && space_.contains(gl->region, mu.base) && space_.germ_in_convex(mu, gl->region);
}

BuildingPoint ChartComplex::retract(const std::string& a, const Germ& mu, const BuildingPoint& p) const {
  const auto ai = chart_index(a);
  check(p);
  space_.check(mu.base);
  for (std::size_t g = 0; g < charts_.size(); ++g) {
    if (!germ_in_chart(ai, mu, g)) continue;
    const auto pg = try_transport(p, g);
    if (!pg) continue;
    if (g == ai) return {a, *pg};
    return {a, space_.apply(gluing(g, ai)->map, *pg)};
  }
  fail("NoChartContainingGermAndPoint", "no chart contains both the germ and the point",
       at({a, p.chart}, {{a, mu.base}, {p.chart, p.coords}}));
}

ChamberClasses ChartComplex::classify(std::vector<std::pair<std::size_t, std::size_t>> raw,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& identified) const {
  ChamberClasses out;
  UnionFind uf(raw.size());
  for (const auto& [i, j] : identified) uf.unite(i, j);
  std::map<std::size_t, std::size_t> ids;
  out.class_of.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto root = uf.find(i);
    auto it = ids.find(root);
    if (it == ids.end()) it = ids.emplace(root, ids.size()).first;
    out.class_of[i] = it->second;
  }
  out.count = ids.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
  for (std::size_t i = 0; i < raw.size(); ++i) lookup[raw[i]] = i;
  const auto& rs = space_.roots();
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t s = 0; s < rs.rank(); ++s) {
      const auto it = lookup.find({raw[i].first, rs.multiply(raw[i].second, rs.simple_reflection(s))});
      if (it == lookup.end()) continue;
      const auto a = out.class_of[i], b = out.class_of[it->second];
      if (a != b) out.adjacency.insert({std::min(a, b), std::max(a, b)});
    }
  out.raw = std::move(raw);
  return out;
}

ChamberClasses ChartComplex::residue(const BuildingPoint& p) const {
  const auto& rs = space_.roots();
  const auto group = rs.weyl_group().size();
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> lookup;
  std::map<std::size_t, Point> local;
  for (const auto g : charts_containing(p)) {
    local[g] = *try_transport(p, g);
    for (std::size_t w = 0; w < group; ++w) {
      lookup[{g, w}] = raw.size();
      raw.emplace_back(g, w);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> identified;
  for (const auto& [g, pg] : local)
    for (const auto& [h, ph] : local) {
      if (g >= h) continue;
      const Gluing* gl = gluing(g, h);
      for (std::size_t w = 0; w < group; ++w) {
        if (!space_.germ_in_convex({pg, {w, space_.chamber_face()}}, gl->region)) continue;
        identified.emplace_back(lookup.at({g, w}), lookup.at({h, rs.multiply(gl->map.linear, w)}));
      }
    }
  return classify(std::move(raw), identified);
}

ChamberClasses ChartComplex::boundary() const {
  const auto& rs = space_.roots();
  const auto group = rs.weyl_group().size();
  std::vector<std::pair<std::size_t, std::size_t>> raw;
  for (std::size_t g = 0; g < charts_.size(); ++g)
    for (std::size_t w = 0; w < group; ++w) raw.emplace_back(g, w);
  std::vector<std::pair<std::size_t, std::size_t>> identified;
  for (const auto& [key, gl] : gluings_) {
    if (key.first > key.second) continue;
    for (std::size_t w = 0; w < group; ++w) {
      if (!space_.direction_in_recession(w, gl.region)) continue;
      identified.emplace_back(key.first * group + w, key.second * group + rs.multiply(gl.map.linear, w));
    }
  }
  return classify(std::move(raw), identified);
}

namespace {

bool is_half_apartment(const ModelSpace& space, const ConvexSet& z) {
  for (const auto& h : z.constraints) {
    if (h.offset && space.same_set(z, ConvexSet{{h}})) return true;
  }
  return false;
}

}  // namespace

AxiomReport ChartComplex::check_axioms(const std::vector<BuildingPoint>& witnesses) const {
  for (const auto& p : witnesses) check(p);
  AxiomReport report;
  report.verdicts["A1"] = {"pass", {}};
  report.verdicts["A2"] = {"pass", {}};

  AxiomVerdict a3{"pass(witnesses)", {}};
  for (std::size_t i = 0; i < witnesses.size() && a3.passed(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      const auto& p = witnesses[i];
      const auto& q = witnesses[j];
      bool shared = false;
      for (std::size_t g = 0; g < charts_.size() && !shared; ++g) shared = try_transport(p, g) && try_transport(q, g);
      if (!shared) {
        a3 = {"fail", at({p.chart, q.chart}, {{p.chart, p.coords}, {q.chart, q.coords}}, "no chart contains both points")};
        break;
      }
    }
  report.verdicts["A3"] = a3;

  AxiomVerdict a4{"pass(witnesses)", {}};
  {
    const auto b = boundary();
    std::vector<std::set<std::size_t>> charts_of(b.count);
    for (std::size_t i = 0; i < b.raw.size(); ++i) charts_of[b.class_of[i]].insert(b.raw[i].first);
    for (std::size_t x = 0; x < b.count && a4.passed(); ++x)
      for (std::size_t y = x + 1; y < b.count; ++y) {
        std::vector<std::size_t> common;
        std::set_intersection(charts_of[x].begin(), charts_of[x].end(), charts_of[y].begin(), charts_of[y].end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
        std::vector<std::string> ids;
        for (auto c : charts_of[x]) ids.push_back(charts_[c]);
        for (auto c : charts_of[y]) ids.push_back(charts_[c]);
        a4 = {"fail", at(ids, {}, "boundary chambers " + std::to_string(x) + " and " + std::to_string(y) +
                                      " lie in no common chart")};
        break;
      }
  }
  report.verdicts["A4"] = a4;

  AxiomVerdict a5{"pass(witnesses)", {}};
  const auto group = space_.roots().weyl_group().size();
  for (const auto& x : witnesses) {
    if (!a5.passed()) break;
    for (const auto a : charts_containing(x)) {
      if (!a5.passed()) break;
      const Point base = *try_transport(x, a);
      for (std::size_t w = 0; w < group && a5.passed(); ++w) {
        const Germ mu{base, {w, space_.chamber_face()}};
        for (std::size_t i = 0; i < witnesses.size() && a5.passed(); ++i)
          for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
            const auto& p = witnesses[i];
            const auto& q = witnesses[j];
            std::optional<GroupValue> d;
            try {
              d = distance(p, q);
            } catch (const BuildingError&) {
              continue;
            }
            try {
              const auto rp = retract(charts_[a], mu, p);
              const auto rq = retract(charts_[a], mu, q);
              if (space_.distance(rp.coords, rq.coords) > *d) {
                a5 = {"fail", at({charts_[a]}, {{charts_[a], base}, {p.chart, p.coords}, {q.chart, q.coords}},
                                 "retraction increases the distance")};
                break;
              }
            } catch (const BuildingError& e) {
              a5 = {"fail", e.witness()};
              a5.witness.detail = "retraction undefined: no chart contains the germ and the point";
              break;
            }
          }
      }
    }
  }
  report.verdicts["A5"] = a5;

  AxiomVerdict a6{"pass", {}};
  const std::size_t n = charts_.size();
  for (std::size_t f = 0; f < n && a6.passed(); ++f)
    for (std::size_t g = f + 1; g < n && a6.passed(); ++g)
      for (std::size_t h = g + 1; h < n; ++h) {
        const Gluing* fg = gluing(f, g);
        const Gluing* fh = gluing(f, h);
        const Gluing* gh = gluing(g, h);
        if (!fg || !fh || !gh) continue;
        if (!is_half_apartment(space_, fg->region) || !is_half_apartment(space_, fh->region) ||
            !is_half_apartment(space_, gh->region)) {
          continue;
        }
        const ConvexSet common = intersect(intersect(fg->region, fh->region), space_.preimage(fg->map, gh->region));
        if (space_.is_empty(common)) {
          a6 = {"fail", at({charts_[f], charts_[g], charts_[h]}, {},
                           "pairwise half-apartment intersections with empty triple intersection")};
          break;
        }
      }
  report.verdicts["A6"] = a6;
  return report;
}

}  // namespace lb
