#include "lambda/io.hpp"

#include <fstream>
#include <sstream>

namespace lb::io {

namespace {

[[noreturn]] void bad(const std::string& message) { throw BuildingError("InvalidInput", message); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("expected a rational string \"p/q\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t unsigned_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> word_from_json(const Json& j) {
  if (!j.is_array()) bad("word must be an array of simple reflection indices");
  std::vector<std::size_t> word;
  for (const auto& i : j) {
    const auto v = unsigned_from_json(i, "simple reflection index");
    if (v == 0) bad("simple reflection indices start at 1");
    word.push_back(v - 1);
  }
  return word;
}

Json word_to_json(const std::vector<std::size_t>& word) {
  Json out = Json::array();
  for (auto i : word) out.push_back(i + 1);
  return out;
}

std::vector<GroupValue> values_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) bad("expected an array of group values");
  std::vector<GroupValue> out;
  for (const auto& v : j) out.push_back(group_value_from_json(v, rank));
  return out;
}

Json values_to_json(const std::vector<GroupValue>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

RawHalfApartment raw_half_from_json(const Json& j, std::size_t rank) {
  RawHalfApartment h;
  const Json& root = field(j, "root");
  if (!root.is_array()) bad("root must be an integer array");
  for (const auto& c : root) {
    if (!c.is_number_integer()) bad("root must be an integer array");
    h.root.push_back(c.get<int>());
  }
  const Json& off = field(j, "offset");
  if (!(off.is_string() && off.get<std::string>() == "-inf")) h.offset = group_value_from_json(off, rank);
  return h;
}

Json raw_half_to_json(const RawHalfApartment& h) {
  Json out;
  out["root"] = h.root;
  out["offset"] = h.offset ? to_json(*h.offset) : Json("-inf");
  return out;
}

std::vector<RawHalfApartment> raw_piece_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) bad("region must be an array of half-apartments");
  std::vector<RawHalfApartment> piece;
  for (const auto& h : j) piece.push_back(raw_half_from_json(h, rank));
  return piece;
}

}  // namespace

Json to_json(const GroupValue& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(format_rational(c));
  return out;
}

GroupValue group_value_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) bad("group value must be an array of rationals, got " + j.dump());
  if (j.size() != rank) {
    bad("group value " + j.dump() + " has rank " + std::to_string(j.size()) + ", expected " + std::to_string(rank));
  }
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return GroupValue(std::move(coords));
}

Json to_json(const Point& p) { return values_to_json(p.coords); }

Point point_from_json(const Json& j, const ModelSpace& space) {
  const Json& coords = j.is_object() ? field(j, "coords") : j;
  Point p(values_from_json(coords, space.group_rank()));
  if (p.dim() != space.dim()) {
    bad("point has " + std::to_string(p.dim()) + " coordinates, expected " + std::to_string(space.dim()));
  }
  return p;
}

Json to_json(const BuildingPoint& p) {
  Json out;
  out["chart"] = p.chart;
  out["coords"] = to_json(p.coords);
  return out;
}

BuildingPoint building_point_from_json(const Json& j, const ModelSpace& space) {
  if (j.is_string()) return parse_point_literal(j.get<std::string>(), space);
  const Json& chart = field(j, "chart");
  if (!chart.is_string()) bad("chart must be a string");
  return {chart.get<std::string>(), point_from_json(field(j, "coords"), space)};
}

BuildingPoint parse_point_literal(const std::string& text, const ModelSpace& space) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) bad("point literal must look like CHART:[[...]], got '" + text + "'");
  Json coords;
  try {
    coords = Json::parse(text.substr(colon + 1));
  } catch (const nlohmann::json::parse_error&) {
    bad("point literal '" + text + "' has malformed coordinates");
  }
  return {text.substr(0, colon), point_from_json(coords, space)};
}

Json to_json(const HalfApartment& h, const RootSystem& rs) {
  return raw_half_to_json({rs.roots()[h.root], h.offset});
}

Json to_json(const ConvexSet& k, const RootSystem& rs) {
  Json out = Json::array();
  for (const auto& h : k.constraints) out.push_back(to_json(h, rs));
  return out;
}

HalfApartment half_apartment_from_json(const Json& j, const ModelSpace& space) {
  const auto raw = raw_half_from_json(j, space.group_rank());
  const auto idx = raw.root.size() == space.dim() ? space.roots().root_index(raw.root) : std::nullopt;
  if (!idx) bad("half-apartment normal " + Json(raw.root).dump() + " is not a root");
  return {*idx, raw.offset};
}

ConvexSet convex_set_from_json(const Json& j, const ModelSpace& space) {
  if (!j.is_array()) bad("convex set must be an array of half-apartments");
  ConvexSet k;
  for (const auto& h : j) k.constraints.push_back(half_apartment_from_json(h, space));
  return k;
}

Json to_json(const AffineMap& m, const RootSystem& rs) {
  Json out;
  out["word"] = word_to_json(rs.element(m.linear).word);
  out["translation"] = to_json(m.translation);
  return out;
}

AffineMap affine_map_from_json(const Json& j, const ModelSpace& space) {
  const auto& rs = space.roots();
  AffineMap m;
  if (j.is_object() && j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    IntMatrix mat{rs.rank(), {}};
    if (!rows.is_array() || rows.size() != rs.rank()) bad("matrix has the wrong shape");
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != rs.rank()) bad("matrix has the wrong shape");
      for (const auto& v : row) {
        if (!v.is_number_integer()) bad("matrix entries must be integers");
        mat.entries.push_back(v.get<long>());
      }
    }
    const auto idx = rs.index_of(mat);
    if (!idx) throw BuildingError("InconsistentTransition", "matrix is not a Weyl group element");
    m.linear = *idx;
  } else {
    const auto word = word_from_json(field(j, "word"));
    for (auto i : word) {
      if (i >= rs.rank()) bad("simple reflection index out of range");
    }
    m.linear = rs.element_from_word(word);
  }
  m.translation = j.contains("translation") ? point_from_json(j.at("translation"), space) : space.origin();
  return m;
}

Json to_json(const AtlasSpec& spec) {
  Json out;
  out["root_system"] = {{"type", to_string(spec.type)}, {"rank", spec.rank}};
  out["group_rank"] = spec.group_rank;
  out["charts"] = spec.charts;
  out["gluings"] = Json::array();
  for (const auto& g : spec.gluings) {
    Json gj;
    gj["pair"] = {g.from, g.to};
    if (g.region.pieces.size() == 1) {
      gj["region"] = Json::array();
      for (const auto& h : g.region.pieces[0]) gj["region"].push_back(raw_half_to_json(h));
    } else {
      Json pieces = Json::array();
      for (const auto& piece : g.region.pieces) {
        Json pj = Json::array();
        for (const auto& h : piece) pj.push_back(raw_half_to_json(h));
        pieces.push_back(std::move(pj));
      }
      gj["region"] = {{"union", std::move(pieces)}};
    }
    Json wj;
    if (g.transition.word) {
      wj["word"] = word_to_json(*g.transition.word);
    } else if (g.transition.matrix) {
      const auto& m = *g.transition.matrix;
      Json rows = Json::array();
      for (std::size_t r = 0; r < m.n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.n; ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
      }
      wj["matrix"] = std::move(rows);
    }
    wj["translation"] = values_to_json(g.transition.translation);
    gj["weyl"] = std::move(wj);
    out["gluings"].push_back(std::move(gj));
  }
  return out;
}

AtlasSpec atlas_from_json(const Json& j) {
  AtlasSpec spec;
  const Json& rs = field(j, "root_system");
  const Json& type = field(rs, "type");
  if (!type.is_string()) bad("root_system.type must be a string");
  try {
    spec.type = parse_root_type(type.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  spec.rank = unsigned_from_json(field(rs, "rank"), "root_system.rank");
  spec.group_rank = unsigned_from_json(field(j, "group_rank"), "group_rank");
  const Json& charts = field(j, "charts");
  if (!charts.is_array()) bad("charts must be an array of ids");
  for (const auto& c : charts) {
    if (!c.is_string()) bad("chart ids must be strings");
    spec.charts.push_back(c.get<std::string>());
  }
  const Json gluings = j.contains("gluings") ? j.at("gluings") : Json::array();
  if (!gluings.is_array()) bad("gluings must be an array");
  for (const auto& gj : gluings) {
    GluingSpec g;
    const Json& pair = field(gj, "pair");
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      bad("gluing pair must be two chart ids");
    }
    g.from = pair[0].get<std::string>();
    g.to = pair[1].get<std::string>();
    const Json& region = field(gj, "region");
    if (region.is_object()) {
      const Json& pieces = field(region, "union");
      if (!pieces.is_array() || pieces.empty()) bad("union region needs a nonempty list of pieces");
      for (const auto& piece : pieces) g.region.pieces.push_back(raw_piece_from_json(piece, spec.group_rank));
    } else {
      g.region.pieces.push_back(raw_piece_from_json(region, spec.group_rank));
    }
    const Json& w = field(gj, "weyl");
    if (w.contains("word")) g.transition.word = word_from_json(w.at("word"));
    if (w.contains("matrix")) {
      const Json& rows = w.at("matrix");
      if (!rows.is_array()) bad("matrix must be an array of rows");
      IntMatrix m{rows.size(), {}};
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size()) bad("matrix must be square");
        for (const auto& v : row) {
          if (!v.is_number_integer()) bad("matrix entries must be integers");
          m.entries.push_back(v.get<long>());
        }
      }
      g.transition.matrix = std::move(m);
    }
    if (w.contains("translation")) {
      g.transition.translation = values_from_json(w.at("translation"), spec.group_rank);
    } else {
      g.transition.translation.assign(spec.rank, GroupValue(spec.group_rank));
    }
    spec.gluings.push_back(std::move(g));
  }
  return spec;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

AtlasSpec read_atlas(const std::string& path) { return atlas_from_json(read_json(path)); }

Json to_json(const Witness& w) {
  Json out;
  out["charts"] = w.charts;
  out["points"] = Json::array();
  for (const auto& [chart, coords] : w.points) {
    out["points"].push_back({{"chart", chart}, {"coords", values_to_json(coords)}});
  }
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

Json to_json(const ChamberClasses& c, const ChartComplex& cc) {
  const auto& rs = cc.space().roots();
  Json out;
  out["classes"] = c.count;
  Json chambers = Json::array();
  for (std::size_t i = 0; i < c.raw.size(); ++i) {
    chambers.push_back({{"chart", cc.charts()[c.raw[i].first]},
                        {"word", word_to_json(rs.element(c.raw[i].second).word)},
                        {"class", c.class_of[i]}});
  }
  out["chambers"] = std::move(chambers);
  Json adj = Json::array();
  for (const auto& [a, b] : c.adjacency) adj.push_back({a, b});
  out["adjacency"] = std::move(adj);
  return out;
}

Json to_json(const AxiomReport& r) {
  Json out;
  for (const auto& [axiom, v] : r.verdicts) out[axiom] = v.status;
  Json witnesses;
  for (const auto& [axiom, v] : r.verdicts) {
    if (!v.passed()) witnesses[axiom] = to_json(v.witness);
  }
  if (!witnesses.is_null()) out["witnesses"] = std::move(witnesses);
  return out;
}

std::vector<Isometry> generators_from_json(const Json& j, const ChartComplex& cc) {
  const Json& list = j.is_object() ? field(j, "generators") : j;
  if (!list.is_array()) bad("generators must be an array");
  std::vector<Isometry> out;
  for (const auto& g : list) {
    if (g.is_object() && g.contains("chart_map")) {
      Isometry iso;
      const Json& cm = g.at("chart_map");
      if (!cm.is_object()) bad("chart_map must be an object");
      for (const auto& [k, v] : cm.items()) {
        if (!v.is_string()) bad("chart_map values must be chart ids");
        iso.chart_map[k] = v.get<std::string>();
      }
      const Json& maps = field(g, "maps");
      if (!maps.is_object()) bad("maps must be an object");
      for (const auto& [k, v] : maps.items()) iso.maps[k] = affine_map_from_json(v, cc.space());
      out.push_back(std::move(iso));
    } else {
      if (cc.charts().size() != 1) bad("plain affine generators need a single-chart atlas");
      out.push_back(single_chart_isometry(cc, affine_map_from_json(g, cc.space())));
    }
  }
  return out;
}

std::vector<BuildingPoint> witnesses_from_json(const Json& j, const ModelSpace& space) {
  const Json& list = j.is_object() ? field(j, "points") : j;
  if (!list.is_array()) bad("witness points must be an array");
  std::vector<BuildingPoint> out;
  for (const auto& p : list) out.push_back(building_point_from_json(p, space));
  return out;
}

}  // namespace lb::io
