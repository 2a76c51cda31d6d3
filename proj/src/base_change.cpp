#include "lambda/base_change.hpp"

#include <algorithm>
#include <stdexcept>

namespace lb {

GroupValue map_value(const GroupMorphism& e, const GroupValue& v) { return e.apply(v); }

Point map_point(const GroupMorphism& e, const Point& x) {
  Point out;
  for (const auto& c : x.coords) out.coords.push_back(e.apply(c));
  return out;
}

HalfApartment map_half_apartment(const GroupMorphism& e, const HalfApartment& h) {
  if (!h.offset) return h;
  return {h.root, e.apply(*h.offset)};
}

ConvexSet map_convex(const GroupMorphism& e, const ConvexSet& k) {
  ConvexSet out;
  for (const auto& h : k.constraints) out.constraints.push_back(map_half_apartment(e, h));
  return out;
}

AffineMap map_affine(const GroupMorphism& e, const AffineMap& m) { return {m.linear, map_point(e, m.translation)}; }

BuildingPoint map_point(const GroupMorphism& e, const BuildingPoint& p) { return {p.chart, map_point(e, p.coords)}; }

MetricCheck metric_check(const ModelSpace& source, const GroupMorphism& e, const Point& x, const Point& y) {
  const ModelSpace target(source.root_system(), e.target_rank());
  MetricCheck r{source.distance(x, y), target.distance(map_point(e, x), map_point(e, y)), {}};
  r.e_d = e.apply(r.d);
  if (!r.holds()) throw std::logic_error("base change does not transform the metric by e");
  return r;
}

namespace {

ChartComplex map_complex(const GroupMorphism& e, const ChartComplex& cc) {
  if (e.source_rank() != cc.space().group_rank()) {
    throw std::invalid_argument("morphism source rank does not match the complex");
  }
  AtlasSpec spec = cc.to_spec();
  spec.group_rank = e.target_rank();
  for (auto& g : spec.gluings) {
    for (auto& piece : g.region.pieces)
      for (auto& h : piece) {
        if (h.offset) h.offset = e.apply(*h.offset);
      }
    for (auto& t : g.transition.translation) t = e.apply(t);
  }
  return ChartComplex::validate(spec);
}

}  // namespace

ChartComplex epi_complex(const GroupMorphism& e, const ChartComplex& cc) {
  if (!e.is_epi()) throw std::invalid_argument("epi_complex needs an epimorphism");
  return map_complex(e, cc);
}

ChartComplex mono_complex(const GroupMorphism& e, const ChartComplex& cc) {
  if (!e.is_mono()) throw std::invalid_argument("mono_complex needs a monomorphism");
  return map_complex(e, cc);
}

ChartComplex compose_functors(const GroupMorphism& m, const ChartComplex& cc) {
  const auto [epi, mono] = decompose(m);
  return mono_complex(mono, epi_complex(epi, cc));
}

bool boundary_preserved(const ChartComplex& a, const ChartComplex& b) {
  if (a.charts() != b.charts()) return false;
  const auto ba = a.boundary();
  const auto bb = b.boundary();
  return ba.count == bb.count && ba.raw == bb.raw && ba.class_of == bb.class_of && ba.adjacency == bb.adjacency;
}

namespace {

struct FiberBuilder {
  const ChartComplex& cc;
  std::size_t keep;
  ModelSpace kernel_space;

  Point significant(const Point& p) const {
    Point out = p;
    for (auto& c : out.coords)
      for (std::size_t i = keep + 1; i <= c.rank(); ++i) c.at(i) = 0;
    return out;
  }
  Point kernel(const Point& p) const {
    Point out;
    for (const auto& c : p.coords) out.coords.push_back(kernel_part(c, keep));
    return out;
  }
  Point embed(const Point& z) const {
    Point out;
    for (const auto& c : z.coords) out.coords.push_back(embed_kernel(c, cc.space().group_rank()));
    return out;
  }

  // {z : c + z ∈ region} over the kernel, or nullopt when empty.
  std::optional<ConvexSet> restrict_to_kernel(const Point& c, const ConvexSet& region) const {
    ConvexSet out;
    for (const auto& h : region.constraints) {
      if (!h.offset) continue;
      const GroupValue r = *h.offset - cc.space().pairing(c, h.root);
      GroupValue head(keep);
      for (std::size_t i = 1; i <= keep; ++i) head.at(i) = r.at(i);
      const int s = head.signum();
      if (s > 0) return std::nullopt;
      if (s < 0) continue;
      out.constraints.push_back({h.root, kernel_part(r, keep)});
    }
    if (kernel_space.is_empty(out)) return std::nullopt;
    return out;
  }
};

}  // namespace

FiberComplex fiber(const GroupMorphism& e, const ChartComplex& cc, const BuildingPoint& x) {
  if (!e.is_epi()) throw std::invalid_argument("fiber needs an epimorphism");
  if (e.source_rank() != cc.space().group_rank()) {
    throw std::invalid_argument("morphism source rank does not match the complex");
  }
  cc.check(x);
  const auto& space = cc.space();
  const auto& rs = space.roots();
  const std::size_t keep = e.keep();
  FiberBuilder b{cc, keep, ModelSpace(space.root_system(), space.group_rank() - keep)};
  const auto f0 = cc.chart_index(x.chart);
  const std::size_t n = cc.charts().size();

  std::map<std::size_t, Point> offset;
  offset[f0] = b.significant(x.coords);
  for (std::size_t g = 0; g < n; ++g) {
    if (g == f0) continue;
    const Gluing* gl = cc.gluing(f0, g);
    if (!gl) continue;
    const auto r = b.restrict_to_kernel(x.coords, gl->region);
    if (!r) continue;
    const Point q = x.coords + b.embed(*b.kernel_space.find_point(*r));
    offset[g] = b.significant(space.apply(gl->map, q));
  }

  std::map<std::pair<std::size_t, std::size_t>, Gluing> glued;
  for (const auto& [f, cf] : offset)
    for (const auto& [g, cg] : offset) {
      if (f == g) continue;
      const Gluing* gl = cc.gluing(f, g);
      if (!gl) continue;
      auto r = b.restrict_to_kernel(cf, gl->region);
      if (!r) continue;
      const Point t = space.apply(gl->map, cf) - cg;
      if (b.significant(t) != space.origin()) throw std::logic_error("fiber transition leaves the kernel");
      glued[{f, g}] = Gluing{std::move(*r), AffineMap{gl->map.linear, b.kernel(t)}};
    }

  // Charts whose fiber apartment coincides with a kept one add nothing.
  std::vector<std::size_t> kept;
  std::map<std::size_t, std::size_t> replaced_by;
  for (const auto& [g, cg] : offset) {
    bool duplicate = false;
    for (const auto f : kept) {
      const auto it = glued.find({f, g});
      if (it != glued.end() && b.kernel_space.subset(ConvexSet{}, it->second.region)) {
        replaced_by[g] = f;
        duplicate = true;
        break;
      }
    }
    if (!duplicate) kept.push_back(g);
  }

  AtlasSpec spec;
  spec.type = rs.type();
  spec.rank = rs.rank();
  spec.group_rank = space.group_rank() - keep;
  for (const auto f : kept) spec.charts.push_back(cc.charts()[f]);
  for (const auto f : kept)
    for (const auto g : kept) {
      if (f >= g) continue;
      const auto it = glued.find({f, g});
      if (it == glued.end()) continue;
      GluingSpec gs;
      gs.from = cc.charts()[f];
      gs.to = cc.charts()[g];
      std::vector<RawHalfApartment> piece;
      for (const auto& h : it->second.region.constraints) piece.push_back({rs.roots()[h.root], h.offset});
      gs.region.pieces.push_back(std::move(piece));
      gs.transition.word = rs.element(it->second.map.linear).word;
      gs.transition.translation = it->second.map.translation.coords;
      spec.gluings.push_back(std::move(gs));
    }

  FiberComplex out{ChartComplex::validate(spec), {}, {}, keep};
  for (const auto f : kept) out.offsets[cc.charts()[f]] = offset[f];
  Point z = b.kernel(x.coords);
  std::size_t home = f0;
  if (const auto it = replaced_by.find(f0); it != replaced_by.end()) {
    home = it->second;
    z = b.kernel_space.apply(glued.at({f0, home}).map, z);
  }
  out.anchor = {cc.charts()[home], z};
  return out;
}

BuildingPoint fiber_to_source(const FiberComplex& fb, const BuildingPoint& z) {
  const auto& c = fb.offsets.at(z.chart);
  Point p = c;
  for (std::size_t j = 0; j < p.dim(); ++j) p.coords[j] += embed_kernel(z.coords.coords[j], c.coords[j].rank());
  return {z.chart, p};
}

ResidueFiberReport residue_fiber_iso(const GroupMorphism& e, const ChartComplex& cc, const BuildingPoint& x) {
  const FiberComplex fb = fiber(e, cc, x);
  const ChamberClasses ends = fb.complex.boundary();
  const ChartComplex image = epi_complex(e, cc);
  const ChamberClasses res = image.residue(map_point(e, x));

  std::map<std::pair<std::string, std::size_t>, std::size_t> residue_class;
  for (std::size_t i = 0; i < res.raw.size(); ++i) {
    residue_class[{image.charts()[res.raw[i].first], res.raw[i].second}] = res.class_of[i];
  }
  ResidueFiberReport report;
  report.fiber_classes = ends.count;
  report.residue_classes = res.count;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  report.matching.assign(ends.count, unset);
  bool well_defined = true;
  for (std::size_t i = 0; i < ends.raw.size(); ++i) {
    const auto it = residue_class.find({fb.complex.charts()[ends.raw[i].first], ends.raw[i].second});
    if (it == residue_class.end()) {
      well_defined = false;
      continue;
    }
    auto& m = report.matching[ends.class_of[i]];
    if (m == unset) m = it->second;
    else if (m != it->second) well_defined = false;
  }
  std::vector<std::size_t> sorted = report.matching;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> all(res.count);
  for (std::size_t i = 0; i < res.count; ++i) all[i] = i;
  report.bijection = well_defined && ends.count == res.count && sorted == all;
  if (report.bijection) {
    std::set<std::pair<std::size_t, std::size_t>> mapped;
    for (const auto& [a, c] : ends.adjacency) {
      const auto u = report.matching[a], v = report.matching[c];
      mapped.insert({std::min(u, v), std::max(u, v)});
    }
    report.adjacency_preserved = mapped == res.adjacency;
  }
  return report;
}

}  // namespace lb
