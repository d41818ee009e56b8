#include <doctest.h>

#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/oracle.hpp"
#include "covgpd/transform.hpp"

using namespace covgpd;

TEST_CASE("Cov of the universal cover of S3") {
  const Covering u = universal_cover(fixtures::s3(), ObjId(0));
  const CovGroup cov = covering_transformations(u);
  CHECK(cov.group.order() == 6);
  CHECK(cov.elements[0].same_maps(identity_morphism(u.total_ptr())));
  CHECK_FALSE(cov.group.is_abelian());
  for (std::size_t e = 0; e < cov.elements.size(); ++e) {
    CHECK(cov.element_sending(cov.image_of_base[e]) == Elem(e));
    CHECK(cov.find(cov.elements[e]) == Elem(e));
  }
  CHECK(oracle::automorphisms_over(u).size() == 6);
  CHECK(is_regular(u));
  CHECK(principal_action_check(u));
}

TEST_CASE("Cov of a non-regular cover") {
  const Covering t = covering_from_subgroup(fixtures::s3(), ObjId(0), fixtures::s3_transposition());
  CHECK(covering_transformations(t).group.order() == 1);
  CHECK_FALSE(is_regular(t));
  CHECK_THROWS_AS(principal_action_check(t), InputError);
}

TEST_CASE("Cov needs a connected total groupoid") {
  auto c2 = fixtures::c2();
  auto two = share(disjoint_union(*c2, *c2));
  GroupoidMorphism m{two, c2, {ObjId(0), ObjId(0)}, {ArrId(0), ArrId(1), ArrId(0), ArrId(1)}};
  CHECK_THROWS_AS(covering_transformations(make_covering(m, "two copies")), InputError);
}

TEST_CASE("normalizer quotient and Cov") {
  for (const auto& [name, p] : fixtures::subgroup_covers()) {
    INFO(name);
    const NormalizerIso iso = cov_normalizer_iso(p);
    const FiniteGroup& q = iso.quotient.group;
    const FiniteGroup& c = iso.cov.group;
    CHECK(q.order() == c.order());
    CHECK(is_isomorphism(q, c, iso.map));
    // The reverse assignment multiplies in the opposite order.
    for (Elem a = 0; a < q.order(); ++a) {
      CHECK(iso.reverse[a] == c.inv(iso.map[a]));
      for (Elem b = 0; b < q.order(); ++b)
        CHECK(iso.reverse[q.mul(a, b)] == c.mul(iso.reverse[b], iso.reverse[a]));
    }
  }
}

TEST_CASE("f sharp for C2 into C4") {
  auto c2 = fixtures::c2();
  auto c4 = fixtures::c4();
  const GroupoidMorphism f{c2, c4, {ObjId(0)}, {ArrId(0), ArrId(2)}};
  REQUIRE(is_functorial(f));
  const Covering u2 = universal_cover(c2, ObjId(0));
  const Covering u4 = universal_cover(c4, ObjId(0));
  const auto f_tilde = lift_morphism(u4, compose(f, u2.morphism()), *u2.marked(), *u4.marked());
  REQUIRE(f_tilde.has_value());
  const CovGroup cov2 = covering_transformations(u2);
  const CovGroup cov4 = covering_transformations(u4);
  const auto sharp = induced_f_sharp(cov2, cov4, f, *f_tilde);
  REQUIRE(sharp.size() == 2);
  CHECK(sharp[0] == cov4.group.identity());
  CHECK(cov4.group.element_order(sharp[1]) == 2);

  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  CHECK_THROWS_AS(induced_f_sharp(cov2, covering_transformations(half), f, *f_tilde), InputError);
}

TEST_CASE("action of Cov on the total groupoid") {
  const Covering u = universal_cover(fixtures::c4(), ObjId(0));
  const CovGroup cov = covering_transformations(u);
  const GroupAction all = as_action(cov);
  CHECK(action_problems(all).empty());
  CHECK_FALSE(fixed_point(all).has_value());
  const GroupAction half = as_action(cov, subgroups(cov.group)[1]);
  CHECK(half.group.order() == 2);
  CHECK(action_problems(half).empty());
}
