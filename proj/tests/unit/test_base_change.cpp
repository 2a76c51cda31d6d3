#include <doctest.h>

#include "support.hpp"

using namespace lb;
using lb::test::gv;
using lb::test::pt;

namespace {

const GroupMorphism kTruncate = quotient_epi(1, 2);
const GroupMorphism kEmbed = GroupMorphism::mono(1, 2, {1}, {Rational(1)});

// Same ids and, for every ordered pair, semantically equal regions and equal maps.
void check_same_gluings(const ChartComplex& a, const ChartComplex& b) {
  REQUIRE(a.charts() == b.charts());
  for (std::size_t f = 0; f < a.charts().size(); ++f)
    for (std::size_t g = 0; g < a.charts().size(); ++g) {
      if (f == g) continue;
      const auto* ga = a.gluing(f, g);
      const auto* gb = b.gluing(f, g);
      REQUIRE((ga == nullptr) == (gb == nullptr));
      if (!ga) continue;
      CHECK(a.space().same_set(ga->region, gb->region));
      CHECK(ga->map == gb->map);
    }
}

}  // namespace

TEST_CASE("pointwise maps") {
  const auto a1 = test::model(RootType::A, 1, 2);
  CHECK(map_point(kTruncate, pt({gv({1, 5})})) == pt({gv({1})}));
  CHECK(map_point(kTruncate, a1.origin()) == pt({gv({0})}));
  CHECK(map_point(kTruncate, pt({gv({1, 2}), gv({3, 4})})) == pt({gv({1}), gv({3})}));
  CHECK(map_point(kEmbed, pt({gv({2})})) == pt({gv({2, 0})}));

  const auto a1q = test::model(RootType::A, 1, 1);
  const HalfApartment h{0, gv({1})};
  CHECK(map_half_apartment(kEmbed, h) == HalfApartment{0, gv({1, 0})});
  CHECK(map_half_apartment(kEmbed, {0, std::nullopt}) == HalfApartment{0, std::nullopt});
  test::Random rnd(3);
  const auto a1l = test::model(RootType::A, 1, 2);
  for (int i = 0; i < 200; ++i) {
    const auto x = rnd.point(a1q);
    const ConvexSet k{{{0, rnd.value(1)}, {1, rnd.value(1)}}};
    CHECK(a1q.contains(k, x) == a1l.contains(map_convex(kEmbed, k), map_point(kEmbed, x)));
  }
}

TEST_CASE("metric checks") {
  const auto a1 = test::model(RootType::A, 1, 2);
  const auto r = metric_check(a1, kTruncate, pt({gv({1, 0})}), pt({gv({3, 9})}));
  CHECK(r.d == gv({4, 18}));
  CHECK(r.e_d == gv({4}));
  CHECK(r.d_image == gv({4}));

  const auto same = metric_check(a1, kTruncate, pt({gv({2, 2})}), pt({gv({2, 2})}));
  CHECK(same.d.is_zero());
  CHECK(same.d_image.is_zero());

  const auto kernel = metric_check(a1, kTruncate, pt({gv({1, 5})}), pt({gv({1, 7})}));
  CHECK(kernel.d == gv({0, 4}));
  CHECK(kernel.d_image.is_zero());

  const auto a1q = test::model(RootType::A, 1, 1);
  const auto m = metric_check(a1q, kEmbed, a1q.origin(), pt({gv({3})}));
  CHECK(m.d == gv({6}));
  CHECK(m.d_image == gv({6, 0}));
}

TEST_CASE("epimorphic base change") {
  const auto single = ChartComplex::validate(test::single_chart_spec(RootType::A, 2, 2));
  const auto image = epi_complex(kTruncate, single);
  CHECK(image.space().group_rank() == 1);
  CHECK(image.charts().size() == 1);
  CHECK_THROWS_AS(epi_complex(kEmbed, ChartComplex::validate(test::tripod_spec(1))), std::invalid_argument);

  const auto tripod = ChartComplex::validate(test::tripod_spec(2));
  const auto t1 = epi_complex(kTruncate, tripod);
  CHECK(t1.boundary().count == 3);
  CHECK(boundary_preserved(tripod, t1));
  CHECK(t1.check_axioms(test::tripod_witnesses(1)).passed());

  const auto p = test::leg_point(1, gv({0, 1})), q = test::leg_point(2, gv({1, 0}));
  CHECK(tripod.distance(p, q) == gv({2, 2}));
  CHECK(t1.distance(map_point(kTruncate, p), map_point(kTruncate, q)) == gv({2}));
}

TEST_CASE("epimorphic base change identifies points at kernel distance") {
  const std::vector<ChartComplex> sources{ChartComplex::validate(test::tripod_spec(2)),
                                          ChartComplex::validate(test::single_chart_spec(RootType::A, 2, 2))};
  test::Random rnd(55);
  for (const auto& cc : sources) {
    const auto image = epi_complex(kTruncate, cc);
    CHECK(image.check_axioms({}).passed());
    CHECK(boundary_preserved(cc, image));
    auto draw = [&] {
      return cc.charts().size() == 1 ? BuildingPoint{"A", rnd.point(cc.space(), 1, 1)} : rnd.tripod_point(2, 1);
    };
    int collapsed = 0;
    for (int i = 0; i < 500; ++i) {
      const auto p = draw(), q = draw();
      const auto d = cc.distance(p, q);
      const auto fp = map_point(kTruncate, p), fq = map_point(kTruncate, q);
      CHECK(image.equal(fp, fq) == kTruncate.kernel().contains(d));
      CHECK(image.distance(fp, fq) == kTruncate.apply(d));
      collapsed += image.equal(fp, fq);
    }
    CHECK(collapsed > 10);
  }
}

TEST_CASE("fibers of the truncation") {
  const auto single = ChartComplex::validate(test::single_chart_spec(RootType::A, 2, 2));
  const auto fs = fiber(kTruncate, single, {"A", single.space().origin()});
  CHECK(fs.complex.charts().size() == 1);
  CHECK(fs.complex.space().group_rank() == 1);

  const auto tripod = ChartComplex::validate(test::tripod_spec(2));
  const auto center = fiber(kTruncate, tripod, test::leg_point(1, gv({0, 0})));
  CHECK(center.complex.charts().size() == 3);
  CHECK(center.complex.boundary().count == 3);
  CHECK(center.complex.check_axioms({}).passed());

  const auto deep = fiber(kTruncate, tripod, test::leg_point(1, gv({1, 0})));
  CHECK(deep.complex.charts().size() == 1);
  CHECK(deep.complex.boundary().count == 2);

  // A fiber point off the center still sees the infinitesimal tripod.
  const auto near = fiber(kTruncate, tripod, test::leg_point(2, gv({0, 5})));
  CHECK(near.complex.boundary().count == 3);
}

TEST_CASE("fiber distances are inherited from the source") {
  const auto tripod = ChartComplex::validate(test::tripod_spec(3));
  const auto e = quotient_epi(1, 3);
  test::Random rnd(61);
  for (const auto& base : {test::leg_point(1, gv({0, 0, 0})), test::leg_point(3, gv({2, 1, 0})),
                           test::leg_point(2, gv({0, 3, -1}))}) {
    const auto fb = fiber(e, tripod, base);
    CHECK(tripod.equal(fiber_to_source(fb, fb.anchor), base));
    const auto& ks = fb.complex.space();
    for (int i = 0; i < 100; ++i) {
      const auto& c1 = fb.complex.charts()[rnd.integer(0, fb.complex.charts().size() - 1)];
      const auto& c2 = fb.complex.charts()[rnd.integer(0, fb.complex.charts().size() - 1)];
      const BuildingPoint z1{c1, rnd.point(ks, 3)}, z2{c2, rnd.point(ks, 3)};
      const auto x1 = fiber_to_source(fb, z1), x2 = fiber_to_source(fb, z2);
      CHECK(epi_complex(e, tripod).equal(map_point(e, x1), map_point(e, base)));
      CHECK(embed_kernel(fb.complex.distance(z1, z2), 3) == tripod.distance(x1, x2));
    }
  }
}

TEST_CASE("fiber boundary matches the residue of the image") {
  const auto tripod = ChartComplex::validate(test::tripod_spec(2));
  const auto center = residue_fiber_iso(kTruncate, tripod, test::leg_point(1, gv({0, 0})));
  CHECK(center.fiber_classes == 3);
  CHECK(center.residue_classes == 3);
  CHECK(center.perfect());

  const auto leg = residue_fiber_iso(kTruncate, tripod, test::leg_point(1, gv({1, 0})));
  CHECK(leg.fiber_classes == 2);
  CHECK(leg.residue_classes == 2);
  CHECK(leg.perfect());

  const auto single = ChartComplex::validate(test::single_chart_spec(RootType::A, 2, 2));
  const auto a2 = residue_fiber_iso(kTruncate, single, {"A", pt({gv({1, 4}), gv({-2, 0})})});
  CHECK(a2.fiber_classes == 6);
  CHECK(a2.residue_classes == 6);
  CHECK(a2.perfect());
}

TEST_CASE("monomorphic base change") {
  const auto single = ChartComplex::validate(test::single_chart_spec(RootType::A, 1, 1));
  const auto big = mono_complex(kEmbed, single);
  CHECK(big.space().group_rank() == 2);
  CHECK_THROWS_AS(mono_complex(kTruncate, ChartComplex::validate(test::tripod_spec(2))), std::invalid_argument);

  const auto tripod = ChartComplex::validate(test::tripod_spec(1));
  const auto t2 = mono_complex(kEmbed, tripod);
  CHECK(t2.distance(map_point(kEmbed, test::leg_point(1, gv({1}))), map_point(kEmbed, test::leg_point(2, gv({2})))) ==
        gv({6, 0}));
  CHECK(t2.boundary().count == 3);
  CHECK(boundary_preserved(tripod, t2));
  CHECK(t2.check_axioms(test::tripod_witnesses(2)).passed());

  for (std::size_t f = 0; f < 3; ++f)
    for (std::size_t g = 0; g < 3; ++g) {
      if (f == g) continue;
      const auto* src = tripod.gluing(f, g);
      const auto* dst = t2.gluing(f, g);
      REQUIRE(src);
      REQUIRE(dst);
      CHECK(t2.space().same_set(dst->region, map_convex(kEmbed, src->region)));
      CHECK(dst->map == map_affine(kEmbed, src->map));
    }

  test::Random rnd(71);
  for (int i = 0; i < 500; ++i) {
    const auto p = rnd.tripod_point(1, 2), q = rnd.tripod_point(1, 2);
    const auto fp = map_point(kEmbed, p), fq = map_point(kEmbed, q);
    CHECK(t2.equal(fp, fq) == tripod.equal(p, q));
    CHECK(t2.distance(fp, fq) == kEmbed.apply(tripod.distance(p, q)));
  }
}

TEST_CASE("composite base change") {
  const auto tripod = ChartComplex::validate(test::tripod_spec(3));
  const auto m = GroupMorphism::general(3, 2, 3, {1, 3}, {Rational(1), Rational(2)});
  const auto composite = compose_functors(m, tripod);
  const auto [epi, mono] = decompose(m);
  check_same_gluings(composite, mono_complex(mono, epi_complex(epi, tripod)));
  CHECK(boundary_preserved(tripod, composite));

  check_same_gluings(compose_functors(GroupMorphism::identity(3), tripod), tripod);
  check_same_gluings(compose_functors(quotient_epi(2, 3), tripod), epi_complex(quotient_epi(2, 3), tripod));

  test::Random rnd(73);
  for (int i = 0; i < 100; ++i) {
    const auto p = rnd.tripod_point(3), q = rnd.tripod_point(3);
    CHECK(composite.distance(map_point(m, p), map_point(m, q)) == m.apply(tripod.distance(p, q)));
    CHECK(map_point(m, p).coords == map_point(mono, map_point(epi, p)).coords);
  }
}
