#include "support.hpp"

#include <algorithm>

namespace lb::test {

GroupValue gv(std::initializer_list<long> coords) {
  std::vector<Rational> v;
  for (auto c : coords) v.emplace_back(c);
  return GroupValue(std::move(v));
}

GroupValue gv(std::initializer_list<Rational> coords) { return GroupValue(std::vector<Rational>(coords)); }

Point pt(std::initializer_list<GroupValue> coords) { return Point(std::vector<GroupValue>(coords)); }

std::shared_ptr<const RootSystem> root_system(RootType t, std::size_t rank) {
  return std::make_shared<const RootSystem>(t, rank);
}

ModelSpace model(RootType t, std::size_t rank, std::size_t group_rank) {
  return ModelSpace(root_system(t, rank), group_rank);
}

namespace {

// Group value of the given rank whose leading entries are `lead`.
GroupValue padded(std::size_t rank, std::initializer_list<Rational> lead) {
  GroupValue v(rank);
  std::size_t i = 1;
  for (const auto& c : lead) {
    if (i > rank) break;
    v.at(i++) = c;
  }
  return v;
}

GluingSpec glue(const std::string& f, const std::string& g, std::vector<RawHalfApartment> region,
                std::vector<std::size_t> word, GroupValue translation) {
  GluingSpec s;
  s.from = f;
  s.to = g;
  s.region.pieces.push_back(std::move(region));
  s.transition.word = std::move(word);
  s.transition.translation = {std::move(translation)};
  return s;
}

}  // namespace

AtlasSpec tripod_spec(std::size_t group_rank) {
  AtlasSpec s;
  s.type = RootType::A;
  s.rank = 1;
  s.group_rank = group_rank;
  s.charts = {"A", "B", "C"};
  const GroupValue zero(group_rank);
  s.gluings.push_back(glue("A", "B", {{{-1}, zero}}, {}, zero));
  s.gluings.push_back(glue("A", "C", {{{1}, zero}}, {0}, zero));
  s.gluings.push_back(glue("B", "C", {{{1}, zero}}, {}, zero));
  return s;
}

AtlasSpec single_chart_spec(RootType t, std::size_t rank, std::size_t group_rank) {
  AtlasSpec s;
  s.type = t;
  s.rank = rank;
  s.group_rank = group_rank;
  s.charts = {"A"};
  return s;
}

AtlasSpec disjoint_spec(std::size_t group_rank) {
  AtlasSpec s = single_chart_spec(RootType::A, 1, group_rank);
  s.charts = {"A", "B"};
  return s;
}

BuildingPoint leg_point(int leg, const GroupValue& s) {
  switch (leg) {
    case 1: return {"A", Point({-s})};
    case 2: return {"A", Point({s})};
    default: return {"B", Point({s})};
  }
}

std::vector<Mutant> tripod_mutants() {
  const std::size_t r = 2;
  const GroupValue zero(r);
  std::vector<Mutant> out;

  {
    AtlasSpec s = tripod_spec(r);
    s.gluings[0].region.pieces = {{{{-1}, padded(r, {1})}}, {{{1}, zero}}};
    out.push_back({"non-convex gluing", s, "ConvexityViolation", ""});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings[1].transition.word = std::vector<std::size_t>{};
    out.push_back({"broken cocycle", s, "CocycleViolation", ""});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings.push_back(glue("B", "A", {{{-1}, padded(r, {1})}}, {}, zero));
    out.push_back({"missing inverse", s, "InverseMismatch", ""});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings[1].transition.word.reset();
    s.gluings[1].transition.matrix = IntMatrix{1, {2}};
    out.push_back({"inconsistent transition", s, "InconsistentTransition", ""});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings[2].to = "D";
    out.push_back({"dangling chart", s, "UnknownChart", ""});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings.pop_back();
    out.push_back({"dropped gluing", s, "CocycleViolation", ""});
  }
  {
    // A and C overlap away from B: the three pairwise half-apartments miss each other.
    AtlasSpec s = tripod_spec(r);
    const GroupValue two = padded(r, {2});
    s.gluings[1] = glue("A", "C", {{{1}, two}}, {0}, padded(r, {1}));
    s.gluings[2] = glue("B", "C", {{{1}, two}}, {}, zero);
    out.push_back({"triple without common point", s, "", "A6"});
  }
  {
    AtlasSpec s = tripod_spec(r);
    s.gluings[2].region.pieces[0].push_back({{-1}, padded(r, {-2})});
    out.push_back({"shrunk gluing region", s, "", "A4"});
  }
  return out;
}

std::vector<BuildingPoint> tripod_witnesses(std::size_t r) {
  return {
      {"A", Point({padded(r, {0})})},
      {"A", Point({padded(r, {-1})})},
      {"A", Point({padded(r, {2})})},
      {"B", Point({padded(r, {1})})},
      {"C", Point({padded(r, {0, Rational(3, 2)})})},
      {"A", Point({padded(r, {0, -1})})},
      {"B", Point({padded(r, {Rational(5, 2), -7})})},
      {"C", Point({padded(r, {3})})},
  };
}

long Random::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

Rational Random::rational(long range, long den) {
  const long q = integer(1, den);
  Rational v(integer(-range * q, range * q), q);
  v.canonicalize();
  return v;
}

GroupValue Random::value(std::size_t rank, long range, long den) {
  GroupValue v(rank);
  for (std::size_t i = 1; i <= rank; ++i) {
    // Zero entries are common so that ties in leading positions occur.
    v.at(i) = integer(0, 3) == 0 ? Rational(0) : rational(range, den);
  }
  return v;
}

Point Random::point(const ModelSpace& space, long range, long den) {
  Point p = space.origin();
  for (auto& c : p.coords) c = value(space.group_rank(), range, den);
  return p;
}

AffineMap Random::affine(const ModelSpace& space, long range) {
  const auto size = static_cast<long>(space.roots().weyl_group().size());
  return {static_cast<std::size_t>(integer(0, size - 1)), point(space, range)};
}

BuildingPoint Random::tripod_point(std::size_t group_rank, long range) {
  const int leg = static_cast<int>(integer(1, 3));
  const GroupValue s = abs(value(group_rank, range));
  const bool alternate = integer(0, 1) == 1;
  switch (leg) {
    case 1: return {alternate ? "B" : "A", Point({-s})};
    case 2: return alternate ? BuildingPoint{"C", Point({-s})} : BuildingPoint{"A", Point({s})};
    default: return {alternate ? "C" : "B", Point({s})};
  }
}

std::optional<Point> grid_search(const ModelSpace& a2q, const ConvexSet& k, long bound, long den) {
  for (long i = -bound * den; i <= bound * den; ++i)
    for (long j = -bound * den; j <= bound * den; ++j) {
      Point p({GroupValue{Rational(i, den)}, GroupValue{Rational(j, den)}});
      for (auto& c : p.coords) c.at(1).canonicalize();
      if (a2q.contains(k, p)) return p;
    }
  return std::nullopt;
}

bool ray_oracle(const ModelSpace& space, const Germ& g, const ConvexSet& k) {
  Rational t(1);
  for (int i = 0; i < 40; ++i) t /= 2;
  std::vector<Point> rays;
  Point sum = space.origin();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (!(g.direction.face & (1u << i))) continue;
    const auto w = space.weight_image(g.direction.weyl, i);
    Point v = space.origin();
    for (std::size_t j = 0; j < space.dim(); ++j) v.coords[j] = GroupValue{w[j]};
    sum += v;
    rays.push_back(std::move(v));
  }
  rays.push_back(sum);
  return std::all_of(rays.begin(), rays.end(), [&](const Point& v) { return space.contains(k, g.base + v * t); });
}

Point direct_centroid(const ModelSpace& space, const std::vector<AffineMap>& gens, const Point& x0) {
  std::vector<AffineMap> elems{space.identity()};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      AffineMap next = space.compose(g, elems[head]);
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(std::move(next));
    }
  Point s = space.origin();
  for (const auto& e : elems) s += space.apply(e, x0);
  return s * (Rational(1) / static_cast<long>(elems.size()));
}

AffineMap about(const ModelSpace& space, std::size_t w, const Point& c) {
  return {w, c - space.apply_linear(w, c)};
}

std::vector<AffineGroupCase> affine_group_cases() {
  std::vector<AffineGroupCase> out;
  auto add = [&](std::string name, RootType t, std::size_t rank, auto make_gens, Point x0, std::size_t order) {
    const auto s = model(t, rank, 2);
    out.push_back({std::move(name), t, rank, make_gens(s), std::move(x0), order});
  };
  const Rational h(1, 2), third(1, 3);
  const auto word = [](const ModelSpace& s, std::vector<std::size_t> w) { return s.roots().element_from_word(w); };

  add("A1 reflection at (1,0)", RootType::A, 1,
      [&](const ModelSpace& s) { return std::vector{s.affine_reflection(0, gv({1, 0}))}; }, pt({gv({0, 0})}), 2);
  add("A1 reflection at (0,-7/2)", RootType::A, 1,
      [&](const ModelSpace& s) { return std::vector{s.affine_reflection(0, gv({Rational(0), Rational(-7, 2)}))}; },
      pt({gv({0, 1})}), 2);
  add("A1 reflection at (3,1/5)", RootType::A, 1,
      [&](const ModelSpace& s) { return std::vector{s.affine_reflection(0, gv({Rational(3), Rational(1, 5)}))}; },
      pt({gv({-4, 9})}), 2);
  add("A2 Weyl group", RootType::A, 2,
      [&](const ModelSpace& s) {
        return std::vector{AffineMap{word(s, {0}), s.origin()}, AffineMap{word(s, {1}), s.origin()}};
      },
      pt({gv({1, 2}), gv({0, -1})}), 6);
  add("A2 rotation", RootType::A, 2,
      [&](const ModelSpace& s) { return std::vector{about(s, word(s, {0, 1}), pt({gv({1, 2}), gv({0, -1})}))}; },
      pt({gv({h, 0}), gv({2, third})}), 3);
  add("A2 reflection in the highest root", RootType::A, 2,
      [&](const ModelSpace& s) { return std::vector{s.affine_reflection(2, gv({2, -1}))}; },
      pt({gv({0, 3}), gv({-1, 1})}), 2);
  add("A2 Weyl group about a lex center", RootType::A, 2,
      [&](const ModelSpace& s) {
        const Point c = pt({gv({3, -1}), gv({Rational(-2), h})});
        return std::vector{about(s, word(s, {0}), c), about(s, word(s, {1}), c)};
      },
      pt({gv({0, 0}), gv({0, 0})}), 6);
  add("A2 two affine reflections", RootType::A, 2,
      [&](const ModelSpace& s) {
        return std::vector{s.affine_reflection(0, gv({1, 0})), s.affine_reflection(1, gv({Rational(0), third}))};
      },
      pt({gv({5, 1}), gv({0, -2})}), 6);
  add("B2 quarter turn", RootType::B, 2,
      [&](const ModelSpace& s) { return std::vector{about(s, word(s, {0, 1}), pt({gv({0, 1}), gv({1, 0})}))}; },
      pt({gv({2, 2}), gv({-1, 0})}), 4);
  add("B2 Weyl group about a lex center", RootType::B, 2,
      [&](const ModelSpace& s) {
        const Point c = pt({gv({1, 0}), gv({Rational(0), Rational(-5, 4)})});
        return std::vector{about(s, word(s, {0}), c), about(s, word(s, {1}), c)};
      },
      pt({gv({0, 1}), gv({1, 1})}), 8);
  add("G2 sixth turn", RootType::G, 2,
      [&](const ModelSpace& s) { return std::vector{about(s, word(s, {0, 1}), pt({gv({0, 3}), gv({2, 0})}))}; },
      pt({gv({1, 1}), gv({0, 1})}), 6);
  add("G2 Weyl group about a lex center", RootType::G, 2,
      [&](const ModelSpace& s) {
        const Point c = pt({gv({-1, 2}), gv({h, third})});
        return std::vector{about(s, word(s, {0}), c), about(s, word(s, {1}), c)};
      },
      pt({gv({4, 0}), gv({0, 7})}), 12);
  return out;
}

Isometry tripod_rotation(std::size_t r) {
  const Point o{{GroupValue(r)}};
  return {{{"A", "C"}, {"B", "A"}, {"C", "B"}}, {{"A", {0, o}}, {"B", {1, o}}, {"C", {1, o}}}};
}

Isometry tripod_swap(std::size_t r) {
  const Point o{{GroupValue(r)}};
  return {{{"A", "A"}, {"B", "C"}, {"C", "B"}}, {{"A", {1, o}}, {"B", {0, o}}, {"C", {0, o}}}};
}

}  // namespace lb::test
