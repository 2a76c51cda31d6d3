#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lambda/io.hpp"
#include "support.hpp"

using lb::io::Json;

namespace {

const std::string kTripod = LB_SOURCE_DIR "/data/tripod.json";
const std::string kWitnesses = LB_SOURCE_DIR "/data/tripod-witnesses.json";

struct Result {
  int code;
  Json json;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lambda-buildings");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Json j;
  if (!out.str().empty() && out.str().front() == '{') j = Json::parse(out.str());
  return {code, j};
}

std::string temp_file(const std::string& name, const Json& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lb-cli-" + name + ".json");
  std::ofstream(path) << content.dump(2);
  return path.string();
}

}  // namespace

TEST_CASE("distance") {
  const auto r = run({"distance", "--atlas", kTripod, "--p", "A:[[\"-1/1\",\"0/1\"]]", "--q", "A:[[\"2/1\",\"0/1\"]]"});
  CHECK(r.code == 0);
  CHECK(r.json.dump() == R"({"distance":[["6/1","0/1"]]})");

  const auto across = run({"distance", "--atlas", kTripod, "--p", "A:[[\"0/1\",\"-1/1\"]]", "--q", "C:[[\"1/1\",\"0/1\"]]"});
  CHECK(across.json["distance"][0] == Json::array({"2/1", "2/1"}));
}

TEST_CASE("check-axioms") {
  const auto r = run({"check-axioms", "--atlas", kTripod, "--witnesses", kWitnesses});
  CHECK(r.code == 0);
  CHECK(r.json.dump() ==
        R"j({"A1":"pass","A2":"pass","A3":"pass(witnesses)","A4":"pass(witnesses)","A5":"pass(witnesses)","A6":"pass"})j");
}

TEST_CASE("basechange") {
  const auto r = run({"basechange", "--atlas", kTripod, "--epi-keep", "1"});
  CHECK(r.code == 0);
  CHECK(r.json["boundary_classes"] == 3);
  CHECK(r.json["atlas"]["group_rank"] == 1);
  CHECK(r.json["atlas"]["gluings"].size() == 3);

  const auto m = run({"basechange", "--atlas", kTripod, "--mono-positions", "1,3", "--mono-scales", "1/1,2/1"});
  CHECK(m.code == 0);
  CHECK(m.json["atlas"]["group_rank"] == 3);
  CHECK(m.json["boundary_classes"] == 3);

  // The image atlas is itself a valid input.
  const auto again = run({"validate", "--atlas", temp_file("image", r.json["atlas"])});
  CHECK(again.code == 0);
  CHECK(again.json["charts"] == 3);
}

TEST_CASE("residue, boundary and retract") {
  const auto res = run({"residue", "--atlas", kTripod, "--p", "B:[[\"0/1\",\"0/1\"]]"});
  CHECK(res.code == 0);
  CHECK(res.json["classes"] == 3);
  CHECK(res.json["chambers"].size() == 6);

  const auto b = run({"boundary", "--atlas", kTripod});
  CHECK(b.json["classes"] == 3);
  CHECK(b.json["adjacency"].size() == 3);

  const auto r = run({"retract", "--atlas", kTripod, "--germ", "A:[[\"0/1\",\"0/1\"]]", "--germ-word", "[1]", "--p",
                      "C:[[\"4/1\",\"1/1\"]]"});
  CHECK(r.code == 0);
  CHECK(r.json["point"]["chart"] == "A");
  CHECK(r.json["point"]["coords"][0] == Json::array({"4/1", "1/1"}));
}

TEST_CASE("hull") {
  const auto r = run({"hull", "--atlas", kTripod, "--points", "A:[[\"0/1\",\"0/1\"]]", "--points", "A:[[\"2/1\",\"0/1\"]]"});
  CHECK(r.code == 0);
  CHECK(r.json["chart"] == "A");
  CHECK(r.json["hull"].size() == 2);
}

TEST_CASE("fiber") {
  const auto c = run({"fiber", "--atlas", kTripod, "--epi-keep", "1", "--p", "A:[[\"0/1\",\"0/1\"]]"});
  CHECK(c.code == 0);
  CHECK(c.json["atlas"]["charts"].size() == 3);
  CHECK(c.json["boundary_classes"] == 3);
  CHECK(c.json["residue_classes"] == 3);
  CHECK(c.json["bijection"] == true);
  CHECK(c.json["adjacency_preserved"] == true);

  const auto leg = run({"fiber", "--atlas", kTripod, "--epi-keep", "1", "--p", "A:[[\"-1/1\",\"0/1\"]]"});
  CHECK(leg.json["atlas"]["charts"].size() == 1);
  CHECK(leg.json["boundary_classes"] == 2);
  CHECK(leg.json["residue_classes"] == 2);
}

namespace {

Json value(const char* a, const char* b) { return Json::array({a, b}); }
Json affine(Json word, Json translation) { return Json{{"word", std::move(word)}, {"translation", Json::array({std::move(translation)})}}; }

Json line_atlas(Json charts) {
  return Json{{"root_system", {{"type", "A"}, {"rank", 1}}}, {"group_rank", 2}, {"charts", std::move(charts)},
              {"gluings", Json::array()}};
}

}  // namespace

TEST_CASE("fixed-point") {
  const auto line = temp_file("line", line_atlas(Json::array({"A"})));
  const Json gens = Json::array({affine(Json::array({1}), value("1/1", "0/1"))});
  const auto r = run({"fixed-point", "--atlas", line, "--generators", temp_file("refl", gens)});
  CHECK(r.code == 0);
  CHECK(r.json["point"]["coords"][0] == value("1/2", "0/1"));
  CHECK(r.json["layers"].size() == 1);
  CHECK(r.json["layers"][0]["level"] == 1);

  const Json shift = Json::array({affine(Json::array(), value("1/1", "0/1"))});
  ::setenv("LAMBDA_BUILDINGS_ORBIT_CAP", "30", 1);
  const auto inf = run({"fixed-point", "--atlas", line, "--generators", temp_file("shift", shift)});
  ::unsetenv("LAMBDA_BUILDINGS_ORBIT_CAP");
  CHECK(inf.code == 1);
  CHECK(inf.json["error"] == "NotFiniteGroup");

  Json rotation;
  rotation["chart_map"] = {{"A", "C"}, {"B", "A"}, {"C", "B"}};
  rotation["maps"]["A"] = affine(Json::array(), value("0/1", "0/1"));
  rotation["maps"]["B"] = affine(Json::array({1}), value("0/1", "0/1"));
  rotation["maps"]["C"] = affine(Json::array({1}), value("0/1", "0/1"));
  const auto t = run({"fixed-point", "--atlas", kTripod, "--generators", temp_file("rot", Json::array({rotation})),
                      "--x0", "B:[[\"3/1\",\"1/1\"]]"});
  CHECK(t.code == 0);
  CHECK(t.json["point"]["coords"][0] == value("0/1", "0/1"));
}

TEST_CASE("errors and exit codes") {
  const auto usage = run({"distance", "--atlas", kTripod});
  CHECK(usage.code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);

  const auto apart = temp_file("apart", line_atlas(Json::array({"A", "B"})));
  const auto no_chart = run({"distance", "--atlas", apart, "--p", "A:[[\"1/1\",\"0/1\"]]", "--q", "B:[[\"1/1\",\"0/1\"]]"});
  CHECK(no_chart.code == 1);
  CHECK(no_chart.json["error"] == "NoCommonChart");
  CHECK(no_chart.json["witness"]["charts"].size() == 2);

  const auto bad_literal = run({"distance", "--atlas", kTripod, "--p", "A:[[1.5,0]]", "--q", "A:[[\"0/1\",\"0/1\"]]"});
  CHECK(bad_literal.code == 1);
  CHECK(bad_literal.json["error"] == "InvalidInput");

  CHECK(run({"validate", "--atlas", "/nonexistent/atlas.json"}).code == 1);

  Json broken = lb::io::read_json(kTripod);
  broken["gluings"][1]["weyl"]["word"] = Json::array();
  const auto v = run({"validate", "--atlas", temp_file("broken", broken)});
  CHECK(v.code == 2);
  CHECK(v.json["error"] == "CocycleViolation");
  CHECK_FALSE(v.json["witness"].is_null());

  Json shrunk = lb::io::read_json(kTripod);
  shrunk["gluings"][2]["region"].push_back({{"root", {-1}}, {"offset", {"-2/1", "0/1"}}});
  const auto a = run({"check-axioms", "--atlas", temp_file("shrunk", shrunk), "--witnesses", kWitnesses});
  CHECK(a.code == 2);
  CHECK(a.json["A4"] == "fail");
  CHECK(a.json.contains("witnesses"));
}
