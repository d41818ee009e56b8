#include <doctest.h>

#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/oracle.hpp"
#include "covgpd/topos.hpp"

using namespace covgpd;

TEST_CASE("omega and true") {
  auto c4 = fixtures::c4();
  const Covering om = omega(c4);
  CHECK(om.total().num_objects() == 2);
  CHECK(om.total().object_name(ObjId(0)) == "true.*");
  CHECK(om.total().object_name(ObjId(1)) == "false.*");
  const GroupoidMorphism t = omega_true(om);
  CHECK(is_functorial(t));
  CHECK(compose(om.morphism(), t).same_maps(identity_morphism(c4)));
}

TEST_CASE("characteristic morphisms of a three-component cover") {
  auto c4 = fixtures::c4();
  const Covering h = covering_sum(covering_sum(identity_covering(c4), identity_covering(c4)), universal_cover(c4, ObjId(0)));
  const Covering om = omega(c4);
  const SubobjectLattice lat = subobjects(h);
  CHECK(lat.components == 3);
  CHECK(lat.masks.size() == 8);
  CHECK(lat.boolean);
  for (std::uint64_t mask : lat.masks) {
    const Subcovering s = restrict_to_components(h, mask);
    const GroupoidMorphism phi = characteristic_morphism(h, s.covering, s.inclusion, om);
    const auto all = classifying_morphisms(h, s.inclusion, om);
    REQUIRE(all.size() == 1);
    CHECK(all[0].same_maps(phi));
  }
}

TEST_CASE("characteristic morphism rejects non-monic maps") {
  auto t1 = fixtures::t1();
  const Covering h = fixtures::points(1);
  const Covering two = fixtures::points(2);
  const GroupoidMorphism fold2{two.total_ptr(), h.total_ptr(), {ObjId(0), ObjId(0)}, {ArrId(0), ArrId(0)}};
  CHECK_THROWS_AS(characteristic_morphism(h, two, fold2, omega(t1)), InputError);
}

TEST_CASE("exponential fibers and the loop action") {
  auto c4 = fixtures::c4();
  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  const Covering u = universal_cover(c4, ObjId(0));
  const Exponential e = exponential(half, u);
  CHECK(e.covering.over(ObjId(0)).size() == 16);
  CHECK(oracle::star_bijective(e.covering.morphism()));
  for (ObjId x : e.covering.over(ObjId(0))) {
    const auto& alpha = e.values[x.index()];
    REQUIRE(e.find(ObjId(0), alpha) == x);
    for (std::size_t g = 0; g < 4; ++g) {
      const auto moved = group_action_on_exponential(half, u, ArrId(g), alpha);
      const auto y = e.find(ObjId(0), moved);
      REQUIRE(y.has_value());
      CHECK(e.covering.total().dom(e.covering.lift(ArrId(g), x)) == *y);
    }
  }
  CHECK_THROWS_AS(exponential(u, u, 10), BoundExceeded);
  CHECK_THROWS_AS(exponential(half, fixtures::points(1)), InputError);
}

TEST_CASE("exponentials against the empty and terminal covers") {
  auto s3 = fixtures::s3();
  const Covering t = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  CHECK(exponential(t, empty_covering(s3)).covering.over(ObjId(0)).size() == 1);
  CHECK(exponential(empty_covering(s3), t).covering.over(ObjId(0)).empty());
  CHECK(exponential(identity_covering(s3), t).covering.over(ObjId(0)).size() == 1);
}

TEST_CASE("adjunction on a few coverings") {
  const AdjunctionReport r = adjunction_check(fixtures::points(2), fixtures::points(3), fixtures::points(2));
  CHECK(r.left == 64);
  CHECK(r.right == 64);
  CHECK(r.bijective);
  CHECK(r.natural);
  auto s3 = fixtures::s3();
  const Covering t = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  const AdjunctionReport s = adjunction_check(t, t, t);
  CHECK(s.left == s.right);
  CHECK(s.bijective);
  CHECK(s.natural);
}

TEST_CASE("presheaves") {
  auto s3 = fixtures::s3();
  const Covering t = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  const Presheaf f = covering_to_presheaf(t);
  CHECK(presheaf_problems(f).empty());
  CHECK(f.sizes == std::vector<std::size_t>{3});

  Presheaf bad = f;
  std::swap(bad.maps[1][0], bad.maps[2][0]);
  CHECK_FALSE(presheaf_problems(bad).empty());
  CHECK_THROWS_AS(presheaf_to_covering(bad), InputError);

  Presheaf ragged = f;
  ragged.maps[1].pop_back();
  CHECK_FALSE(presheaf_problems(ragged).empty());
}

TEST_CASE("empty and identity coverings") {
  auto i2 = fixtures::i2();
  const Covering e = empty_covering(i2);
  CHECK(e.total().num_objects() == 0);
  CHECK(subobjects(e).masks.size() == 1);
  CHECK(subobjects(identity_covering(i2)).masks.size() == 2);
}
