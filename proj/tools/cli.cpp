#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lambda/base_change.hpp"
#include "lambda/group_actions.hpp"
#include "lambda/io.hpp"

namespace lb::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kFailed = 2;
constexpr int kUsage = 64;

// A BuildingError raised while checking an atlas rather than while using one.
class ValidationFailed : public BuildingError {
 public:
  explicit ValidationFailed(const BuildingError& e) : BuildingError(e.code(), e.what(), e.witness()) {}
};

ChartComplex load(const std::string& path) {
  const AtlasSpec spec = io::read_atlas(path);
  try {
    return ChartComplex::validate(spec);
  } catch (const BuildingError& e) {
    throw ValidationFailed(e);
  }
}

Json error_json(const std::string& code, const std::string& message, const Witness& w = {}) {
  Json out;
  out["error"] = code;
  out["message"] = message;
  out["witness"] = w.empty() ? Json(nullptr) : io::to_json(w);
  return out;
}

struct Options {
  std::string atlas;
  std::string p, q;
  std::vector<std::string> points;
  std::string witnesses;
  std::string germ;
  std::string germ_word = "[]";
  std::optional<std::size_t> epi_keep;
  std::vector<std::size_t> mono_positions;
  std::vector<std::string> mono_scales;
  std::optional<std::size_t> mono_target_rank;
  std::string generators;
  std::string x0;
};

GroupMorphism morphism_from(const Options& o, std::size_t source_rank) {
  const std::size_t keep = o.epi_keep.value_or(source_rank);
  std::vector<std::size_t> positions = o.mono_positions;
  if (positions.empty()) {
    for (std::size_t i = 1; i <= keep; ++i) positions.push_back(i);
  }
  std::vector<Rational> scales;
  for (const auto& s : o.mono_scales) {
    try {
      scales.push_back(parse_rational(s));
    } catch (const std::invalid_argument& e) {
      throw BuildingError("InvalidInput", e.what());
    }
  }
  if (scales.empty()) scales.assign(positions.size(), Rational(1));
  std::size_t target = keep;
  if (!o.mono_positions.empty()) target = *std::max_element(positions.begin(), positions.end());
  if (o.mono_target_rank) target = *o.mono_target_rank;
  try {
    return GroupMorphism::general(source_rank, keep, target, positions, scales);
  } catch (const std::invalid_argument& e) {
    throw BuildingError("InvalidInput", e.what());
  }
}

std::vector<std::size_t> parse_word(const std::string& text, const RootSystem& rs) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw BuildingError("InvalidInput", "germ word must be a JSON array such as [1,2]");
  }
  std::vector<std::size_t> word;
  if (!j.is_array()) throw BuildingError("InvalidInput", "germ word must be a JSON array such as [1,2]");
  for (const auto& i : j) {
    if (!i.is_number_integer() || i.get<long long>() < 1 || i.get<std::size_t>() > rs.rank()) {
      throw BuildingError("InvalidInput", "germ word index out of range");
    }
    word.push_back(i.get<std::size_t>() - 1);
  }
  return word;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto p = io::parse_point_literal(o.p, cc.space());
  const auto q = io::parse_point_literal(o.q, cc.space());
  Json j;
  j["distance"] = Json::array({io::to_json(cc.distance(p, q))});
  out << j.dump() << "\n";
  return kOk;
}

int cmd_hull(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  if (o.points.empty()) throw BuildingError("InvalidInput", "hull needs at least one point");
  std::vector<BuildingPoint> bps;
  for (const auto& s : o.points) bps.push_back(io::parse_point_literal(s, cc.space()));
  const std::string chart = bps.front().chart;
  std::vector<Point> pts;
  for (const auto& b : bps) pts.push_back(cc.transport(b, chart));
  Json j;
  j["chart"] = chart;
  j["hull"] = io::to_json(cc.space().convex_hull(pts), cc.space().roots());
  out << j.dump() << "\n";
  return kOk;
}

int cmd_check_axioms(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  std::vector<BuildingPoint> w;
  if (!o.witnesses.empty()) w = io::witnesses_from_json(io::read_json(o.witnesses), cc.space());
  const auto report = cc.check_axioms(w);
  out << io::to_json(report).dump() << "\n";
  return report.passed() ? kOk : kFailed;
}

int cmd_retract(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto base = io::parse_point_literal(o.germ, cc.space());
  const auto w = cc.space().roots().element_from_word(parse_word(o.germ_word, cc.space().roots()));
  const Germ mu{base.coords, {w, cc.space().chamber_face()}};
  const auto p = io::parse_point_literal(o.p, cc.space());
  Json j;
  j["point"] = io::to_json(cc.retract(base.chart, mu, p));
  out << j.dump() << "\n";
  return kOk;
}

int cmd_residue(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto p = io::parse_point_literal(o.p, cc.space());
  out << io::to_json(cc.residue(p), cc).dump() << "\n";
  return kOk;
}

int cmd_boundary(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  out << io::to_json(cc.boundary(), cc).dump() << "\n";
  return kOk;
}

int cmd_basechange(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto m = morphism_from(o, cc.space().group_rank());
  const auto image = compose_functors(m, cc);
  Json j;
  j["atlas"] = io::to_json(image.to_spec());
  j["boundary_classes"] = image.boundary().count;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  if (!o.epi_keep) throw BuildingError("InvalidInput", "fiber needs --epi-keep");
  const auto e = GroupMorphism::quotient_epi(*o.epi_keep, cc.space().group_rank());
  const auto x = io::parse_point_literal(o.p, cc.space());
  const auto fb = fiber(e, cc, x);
  const auto iso = residue_fiber_iso(e, cc, x);
  Json j;
  j["atlas"] = io::to_json(fb.complex.to_spec());
  j["anchor"] = io::to_json(fb.anchor);
  j["boundary_classes"] = iso.fiber_classes;
  j["residue_classes"] = iso.residue_classes;
  j["matching"] = iso.matching;
  j["bijection"] = iso.bijection;
  j["adjacency_preserved"] = iso.adjacency_preserved;
  out << j.dump() << "\n";
  return kOk;
}

int cmd_fixed_point(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto gens = io::generators_from_json(io::read_json(o.generators), cc);
  const BuildingPoint x0 = o.x0.empty() ? BuildingPoint{cc.charts().front(), cc.space().origin()}
                                        : io::parse_point_literal(o.x0, cc.space());
  const auto r = fixed_point(cc, gens, x0, default_orbit_cap());
  Json j;
  j["point"] = io::to_json(r.point);
  j["layers"] = Json::array();
  for (const auto& l : r.trace) {
    j["layers"].push_back({{"level", l.level}, {"g0", io::to_json(l.g0)}, {"point", io::to_json(l.point)}});
  }
  out << j.dump() << "\n";
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto cc = load(o.atlas);
  const auto spec = cc.to_spec();
  Json j;
  j["valid"] = true;
  j["charts"] = spec.charts.size();
  j["gluings"] = spec.gluings.size();
  out << j.dump() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in affine buildings over ordered abelian groups", "lambda-buildings"};
  app.require_subcommand(1);
  Options o;

  auto atlas = [&](CLI::App* sub) { sub->add_option("--atlas", o.atlas, "atlas JSON file")->required(); };
  auto point = [&](CLI::App* sub, const char* flag, std::string& target, const char* help) {
    return sub->add_option(flag, target, help);
  };

  auto* distance = app.add_subcommand("distance", "Λ-valued distance between two building points");
  atlas(distance);
  point(distance, "--p", o.p, "point CHART:[[...]]")->required();
  point(distance, "--q", o.q, "point CHART:[[...]]")->required();

  auto* hull = app.add_subcommand("hull", "convex hull of points of one apartment");
  atlas(hull);
  hull->add_option("--points", o.points, "points CHART:[[...]]")->required();

  auto* axioms = app.add_subcommand("check-axioms", "check the building axioms on witness points");
  atlas(axioms);
  axioms->add_option("--witnesses", o.witnesses, "witness points JSON file");

  auto* retract = app.add_subcommand("retract", "retraction onto an apartment centered at a chamber germ");
  atlas(retract);
  point(retract, "--germ", o.germ, "germ base point CHART:[[...]]; the chart is the target apartment")->required();
  retract->add_option("--germ-word", o.germ_word, "Weyl word of the germ's chamber, e.g. [1]");
  point(retract, "--p", o.p, "point to retract")->required();

  auto* residue = app.add_subcommand("residue", "chamber classes of the residue at a point");
  atlas(residue);
  point(residue, "--p", o.p, "point CHART:[[...]]")->required();

  auto* boundary = app.add_subcommand("boundary", "chamber classes of the building at infinity");
  atlas(boundary);

  auto* basechange = app.add_subcommand("basechange", "image of the atlas under a morphism of Λ");
  atlas(basechange);
  basechange->add_option("--epi-keep", o.epi_keep, "number of significant positions kept");
  basechange->add_option("--mono-positions", o.mono_positions, "target positions, e.g. 1,3")->delimiter(',');
  basechange->add_option("--mono-scales", o.mono_scales, "positive scales, e.g. 1/1,2/1")->delimiter(',');
  basechange->add_option("--mono-target-rank", o.mono_target_rank, "rank of the target group");

  auto* fib = app.add_subcommand("fiber", "fiber building of the truncation at a point");
  atlas(fib);
  fib->add_option("--epi-keep", o.epi_keep, "number of significant positions kept")->required();
  point(fib, "--p", o.p, "point CHART:[[...]]")->required();

  auto* fixed = app.add_subcommand("fixed-point", "fixed point of a finite isometry group");
  atlas(fixed);
  fixed->add_option("--generators", o.generators, "generators JSON file")->required();
  point(fixed, "--x0", o.x0, "start point (default: origin of the first chart)");

  auto* validate = app.add_subcommand("validate", "check an atlas");
  atlas(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    out << error_json("UsageError", e.what()).dump() << "\n";
    return kUsage;
  }

  try {
    if (distance->parsed()) return cmd_distance(o, out);
    if (hull->parsed()) return cmd_hull(o, out);
    if (axioms->parsed()) return cmd_check_axioms(o, out);
    if (retract->parsed()) return cmd_retract(o, out);
    if (residue->parsed()) return cmd_residue(o, out);
    if (boundary->parsed()) return cmd_boundary(o, out);
    if (basechange->parsed()) return cmd_basechange(o, out);
    if (fib->parsed()) return cmd_fiber(o, out);
    if (fixed->parsed()) return cmd_fixed_point(o, out);
    if (validate->parsed()) return cmd_validate(o, out);
  } catch (const ValidationFailed& e) {
    out << error_json(e.code(), e.what(), e.witness()).dump() << "\n";
    return kFailed;
  } catch (const BuildingError& e) {
    out << error_json(e.code(), e.what(), e.witness()).dump() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    out << error_json("InvalidInput", e.what()).dump() << "\n";
    return kDomainError;
  }
  return kUsage;
}

}  // namespace lb::cli
