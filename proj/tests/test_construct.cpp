#include <doctest.h>

#include "covgpd/construct.hpp"
#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/transform.hpp"

using namespace covgpd;

namespace {

/// Z2 acting on I2 by swapping x and y.
GroupAction swap_action() {
  auto i2 = fixtures::i2();
  GroupAction a{FiniteGroup::cyclic(2), i2, {identity_morphism(i2)}};
  // Arrows of I2: 1_x, 1_y, x->y, y->x in id order y*2+x.
  GroupoidMorphism s{i2, i2, {ObjId(1), ObjId(0)}, {}};
  for (std::size_t a_id = 0; a_id < 4; ++a_id) {
    const ArrId arr(a_id);
    const ObjId d = s(i2->dom(arr));
    const ObjId c = s(i2->cod(arr));
    s.arr_map.push_back(i2->hom(d, c)[0]);
  }
  a.act.push_back(s);
  return a;
}

}  // namespace

TEST_CASE("free action on I2") {
  const GroupAction a = swap_action();
  CHECK(action_problems(a).empty());
  CHECK_FALSE(fixed_point(a).has_value());
  const OrbitGroupoid o = orbit_groupoid(a);
  CHECK(o.quotient->num_objects() == 1);
  CHECK(o.quotient->num_arrows() == 2);
  CHECK(validate(*o.quotient).ok());
  CHECK(is_functorial(o.projection));
  const Covering oc = orbit_covering(o);
  CHECK(fold(oc) == 2);
  for (std::uint64_t seed = 0; seed < 4; ++seed) CHECK(orbit_groupoid(a, seed).quotient->same_structure(*o.quotient));
}

TEST_CASE("non-free and non-actions are rejected") {
  auto c4 = fixtures::c4();
  // Z2 acting trivially fixes the only object.
  GroupAction trivial{FiniteGroup::cyclic(2), c4, {identity_morphism(c4), identity_morphism(c4)}};
  CHECK(action_problems(trivial).empty());
  const auto fp = fixed_point(trivial);
  REQUIRE(fp.has_value());
  CHECK(fp->element == 1);
  CHECK_THROWS_AS(orbit_groupoid(trivial), InputError);

  GroupAction broken = swap_action();
  broken.act[0] = broken.act[1];
  CHECK_FALSE(action_problems(broken).empty());
  CHECK_THROWS_AS(orbit_groupoid(broken), InputError);
}

TEST_CASE("orbits of Cov on the universal cover of S3") {
  const Covering u = universal_cover(fixtures::s3(), ObjId(0));
  const CovGroup cov = covering_transformations(u);
  for (const Subgroup& pi : subgroups(cov.group)) {
    const OrbitGroupoid o = orbit_groupoid(as_action(cov, pi));
    CHECK(o.orbits.size() * pi.size() == 6);
    CHECK(vertex_group(*o.quotient, ObjId(0)).group.order() == pi.size());
  }
}

TEST_CASE("quotient comparison needs a regular cover") {
  auto s3 = fixtures::s3();
  const Covering t = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  CHECK_THROWS_AS(quotient_comparison(t), InputError);
  const Covering r = covering_from_subgroup(s3, ObjId(0), fixtures::s3_rotation());
  const QuotientComparison q = quotient_comparison(r);
  CHECK(is_isomorphism(q.phi));
  CHECK(compose(q.phi, r.morphism()).same_maps(q.orbits.projection));
}
