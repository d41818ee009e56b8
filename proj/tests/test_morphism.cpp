#include <doctest.h>

#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/morphism.hpp"

using namespace covgpd;

TEST_CASE("morphism counts between small groupoids") {
  auto count = [](const GroupoidPtr& a, const GroupoidPtr& b) { return enumerate_morphisms(a, b).size(); };
  CHECK(count(fixtures::c4(), fixtures::c4()) == 4);
  CHECK(count(fixtures::s3(), fixtures::s3()) == 10);
  CHECK(count(fixtures::c2(), fixtures::s3()) == 4);
  CHECK(count(fixtures::i2(), fixtures::s3()) == 6);
  CHECK(count(fixtures::i2(), fixtures::i2()) == 4);
  auto k3 = share(codiscrete({"a", "b", "c"}));
  auto k2 = share(codiscrete({"x", "y"}));
  CHECK(count(k3, k2) == 8);
  CHECK(count(k2, k3) == 9);
  CHECK(count(share(FiniteGroupoid{}), k2) == 1);
  CHECK(count(k2, share(FiniteGroupoid{})) == 0);
  CHECK_THROWS_AS(enumerate_morphisms(k3, k3, 5), BoundExceeded);
}

TEST_CASE("every enumerated morphism is functorial") {
  for (const auto& m : enumerate_morphisms(fixtures::i2(), fixtures::s3())) CHECK(is_functorial(m));
}

TEST_CASE("composition, identities and inverses") {
  auto s3 = fixtures::s3();
  const auto all = enumerate_morphisms(s3, s3);
  std::size_t isos = 0;
  for (const auto& m : all) {
    CHECK(compose(m, identity_morphism(s3)).same_maps(m));
    if (is_isomorphism(m)) {
      ++isos;
      CHECK(compose(inverse_morphism(m), m).same_maps(identity_morphism(s3)));
    }
  }
  CHECK(isos == 6);
  CHECK_THROWS_AS(compose(all[0], enumerate_morphisms(fixtures::c4(), fixtures::c4())[0]), InputError);
}

TEST_CASE("non-functorial maps are reported") {
  auto c4 = fixtures::c4();
  GroupoidMorphism m = identity_morphism(c4);
  std::swap(m.arr_map[1], m.arr_map[2]);
  CHECK_FALSE(is_functorial(m));
  CHECK_FALSE(functoriality_problems(m).empty());
  CHECK_THROWS_AS(require_functorial(m, "swap"), InputError);
}

TEST_CASE("factor_through recovers the second leg") {
  auto c4 = fixtures::c4();
  auto c2 = fixtures::c2();
  GroupoidMorphism mod2{c4, c2, {ObjId(0)}, {ArrId(0), ArrId(1), ArrId(0), ArrId(1)}};
  REQUIRE(is_functorial(mod2));
  const GroupoidMorphism neg{c2, c2, {ObjId(0)}, {ArrId(0), ArrId(1)}};
  const auto s = factor_through(mod2, compose(neg, mod2));
  REQUIRE(s.has_value());
  CHECK(s->same_maps(neg));
  // The identity of C4 does not factor through C4 -> C2.
  CHECK_FALSE(factor_through(mod2, identity_morphism(c4)).has_value());
}

TEST_CASE("quotient groupoid by a normal subgroup") {
  auto c4 = fixtures::c4();
  const auto q = quotient_groupoid(c4, {0}, {0, 1, 0, 1});
  CHECK(q.quotient->num_arrows() == 2);
  CHECK(validate(*q.quotient).ok());
  CHECK(is_functorial(q.projection));
  // Classes {0,1},{2,3} are not compatible with addition mod 4.
  CHECK_THROWS_AS(quotient_groupoid(c4, {0}, {0, 0, 1, 1}), VerificationFailure);
}

TEST_CASE("coproduct injections") {
  auto a = fixtures::i2();
  auto b = fixtures::c2();
  auto sum = share(disjoint_union(*a, *b));
  const auto [l, r] = coproduct_injections(a, b, sum);
  CHECK(is_functorial(l));
  CHECK(is_functorial(r));
  CHECK(r(ObjId(0)) == ObjId(2));
}
