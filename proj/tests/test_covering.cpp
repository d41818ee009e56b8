#include <doctest.h>

#include "covgpd/construct.hpp"
#include "covgpd/covering.hpp"
#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/oracle.hpp"
#include "covgpd/topos.hpp"

using namespace covgpd;

TEST_CASE("collapse of I2 is not a covering") {
  auto i2 = fixtures::i2();
  auto t1 = fixtures::t1();
  GroupoidMorphism collapse{i2, t1, {ObjId(0), ObjId(0)}, {ArrId(0), ArrId(0), ArrId(0), ArrId(0)}};
  const CoverCheck c = is_covering(collapse);
  CHECK_FALSE(c.covering.has_value());
  REQUIRE(c.defects.size() == 2);
  CHECK(c.defects[0].object == ObjId(0));
  CHECK(c.defects[0].total_star == 2);
  CHECK(c.defects[0].base_star == 1);
  CHECK_FALSE(c.defects[0].injective);
  CHECK(c.defects[0].surjective);
  CHECK_THROWS_AS(make_covering(collapse, "collapse"), VerificationFailure);
}

TEST_CASE("identity is a covering of fold one") {
  for (auto& [name, g] : fixtures::bases()) {
    const Covering p = make_covering(identity_morphism(g), name);
    CHECK(fold(p) == 1);
    CHECK(oracle::star_bijective(p.morphism()));
  }
}

TEST_CASE("coset covers") {
  auto s3 = fixtures::s3();
  const Covering p = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  CHECK(fold(p) == 3);
  CHECK(p.total().num_objects() == 3);
  CHECK(p.total().object_name(*p.marked()) == "[e]");
  CHECK(pushforward_vertex(p, *p.marked()) == fixtures::s3_transposition());
  CHECK(is_connected(p.total()));

  const Covering u = universal_cover(s3, ObjId(0));
  CHECK(fold(u) == 6);
  for (std::size_t x = 0; x < u.total().num_objects(); ++x)
    CHECK(vertex_group(u.total(), ObjId(x)).group.order() == 1);
  CHECK_THROWS_AS(covering_from_subgroup(s3, ObjId(0), Subgroup{{1}}), InputError);
}

TEST_CASE("coset cover over a groupoid with several objects") {
  auto i2 = fixtures::i2();
  const Covering u = universal_cover(i2, ObjId(0));
  CHECK(fold(u) == 1);
  CHECK(is_weak_equivalence(u.morphism()));
}

TEST_CASE("lifting arrows") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const ObjId home = *u.marked();
  for (std::size_t a = 0; a < 4; ++a) {
    const ArrId lifted = u.lift(ArrId(a), home);
    CHECK(u.total().cod(lifted) == home);
    CHECK(u.project(lifted) == ArrId(a));
    CHECK(lift_arrow(u, ArrId(a), home) == lifted);
  }
  auto i2 = fixtures::i2();
  const Covering id = make_covering(identity_morphism(i2), "id");
  CHECK_THROWS_AS(id.lift(ArrId(2), ObjId(0)), InputError);  // f: x -> y cannot end at x
}

TEST_CASE("fibers and transport") {
  auto c4 = fixtures::c4();
  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  const Fiber f = fiber(half, ObjId(0));
  CHECK(f.objects.size() == 2);
  CHECK(f.groupoid->num_arrows() == 2);
  const FiberTransport t = fiber_transport(half, ArrId(1));
  CHECK(is_isomorphism(t.map));
  const auto moved = transport_objects(half, ArrId(1));
  CHECK(moved[0] != half.over(ObjId(0))[0]);
  CHECK(fiber_position(half, half.over(ObjId(0))[1]) == 1);
}

TEST_CASE("monodromy is a right action") {
  auto s3 = fixtures::s3();
  const Covering p = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  const MonodromyAction m = monodromy(p, ObjId(0));
  const FiniteGroup& g = m.group.group;
  for (std::size_t i = 0; i < m.carrier.size(); ++i)
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) CHECK(m.act(i, g.mul(a, b)) == m.act(m.act(i, a), b));
  CHECK(m.is_transitive());
  CHECK(m.orbit(0).size() == 3);
}

TEST_CASE("lifting morphisms") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  // u lifts through half, half does not lift through u.
  CHECK(lifting_criterion(half, u.morphism(), ObjId(0), half.over(ObjId(0))[0]));
  const auto up = lift_morphism(half, u.morphism(), ObjId(0), half.over(ObjId(0))[1]);
  REQUIRE(up.has_value());
  CHECK(compose(half.morphism(), *up).same_maps(u.morphism()));
  CHECK_FALSE(lift_morphism(u, half.morphism(), ObjId(0), ObjId(0)).has_value());

  auto two = share(disjoint_union(*c4, *c4));
  GroupoidMorphism fold2{two, c4, {ObjId(0), ObjId(0)}, {}};
  for (std::size_t a = 0; a < 8; ++a) fold2.arr_map.push_back(ArrId(a % 4));
  CHECK_THROWS_AS(lift_morphism(u, fold2, ObjId(0), ObjId(0)), InputError);
}

TEST_CASE("fold needs a connected base") {
  auto two = share(disjoint_union(*fixtures::c2(), *fixtures::c2()));
  const Covering id = make_covering(identity_morphism(two), "id");
  CHECK_THROWS_AS(fold(id), InputError);
}

TEST_CASE("restricting to components") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const std::vector<ObjId> one{ObjId(0)};
  CHECK_THROWS_AS(restrict_covering(u, one), InputError);
  const Covering uu = covering_sum(u, u);
  const std::vector<ObjId> first = component_of(uu.total(), ObjId(0));
  const RestrictedCovering r = restrict_covering(uu, first, ObjId(0));
  CHECK(fold(r.covering) == 4);
  CHECK(is_functorial(r.inclusion));
  CHECK(r.covering.marked() == ObjId(0));
  CHECK(component_of(u.total(), ObjId(0)).size() == 4);
}

TEST_CASE("composite of coverings") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  const auto up = *lift_morphism(half, u.morphism(), ObjId(0), half.over(ObjId(0))[0]);
  const Covering top = make_covering(up, "u over half");
  CHECK(fold(top) == 2);
  CHECK(compose_coverings(half, top).morphism().same_maps(u.morphism()));
}
