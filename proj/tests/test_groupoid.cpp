#include <doctest.h>

#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/groupoid.hpp"
#include "covgpd/oracle.hpp"

using namespace covgpd;

namespace {

bool has_law(const ValidationReport& r, const std::string& law) {
  for (const auto& v : r.violations)
    if (v.law == law) return true;
  return false;
}

}  // namespace

TEST_CASE("fixture groupoids are valid") {
  for (auto& [name, g] : fixtures::bases()) {
    INFO(name);
    CHECK(validate(*g).ok());
    CHECK(is_connected(*g));
  }
}

TEST_CASE("codiscrete groupoid") {
  const FiniteGroupoid g = codiscrete({"a", "b", "c"});
  CHECK(validate(g).ok());
  CHECK(g.num_arrows() == 9);
  const ObjId a(0), c(2);
  CHECK(g.hom(a, c).size() == 1);
  CHECK(g.star(c).size() == 3);
  const ArrId ac = g.hom(a, c)[0];
  CHECK(g.compose(g.inverse(ac), ac) == g.identity(a));
  CHECK(vertex_group(g, a).group.order() == 1);
}

TEST_CASE("validation reports broken tables") {
  // Two loops at one object where the table makes a·a undefined.
  std::vector<FiniteGroupoid::ArrowSpec> arrows{{ObjId(0), ObjId(0), "1"}, {ObjId(0), ObjId(0), "a"}};
  std::vector<std::int32_t> table{0, 1, 1, FiniteGroupoid::kUndefined};
  const FiniteGroupoid partial({"*"}, arrows, table);
  CHECK_FALSE(validate(partial).ok());
  CHECK_THROWS_AS(require_valid(partial, "partial"), InputError);

  // a·a = a makes a an extra idempotent with no inverse.
  const FiniteGroupoid idem({"*"}, arrows, {0, 1, 1, 1});
  const ValidationReport r = validate(idem);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.summary().empty());
  CHECK(has_law(r, "invertibility"));

  CHECK_THROWS_AS(FiniteGroupoid({"*"}, {{ObjId(3), ObjId(0), "x"}}, {0}), InputError);
}

TEST_CASE("components and vertex groups") {
  const FiniteGroupoid g = disjoint_union(*fixtures::i2(), *fixtures::c4(), "l", "r");
  CHECK(validate(g).ok());
  const Components c = components(g);
  CHECK(c.size() == 2);
  CHECK(oracle::component_count(g) == 2);
  CHECK(c.blocks[0].size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK_FALSE(is_connected(FiniteGroupoid{}));
  const VertexGroup vg = vertex_group(g, c.blocks[1][0]);
  CHECK(vg.group.order() == 4);
  CHECK(vg.group.is_abelian());
}

TEST_CASE("disjoint union tags only clashing names") {
  const FiniteGroupoid g = disjoint_union(*fixtures::c2(), *fixtures::c2(), "true", "false");
  CHECK(g.object_name(ObjId(0)) == "true.*");
  CHECK(g.object_name(ObjId(1)) == "false.*");
  const FiniteGroupoid h = disjoint_union(*fixtures::i2(), *fixtures::c2());
  CHECK(h.find_object("x").has_value());
  CHECK(h.find_object("*").has_value());
}

TEST_CASE("opposite and subgroupoids") {
  const auto s3 = fixtures::s3();
  const FiniteGroupoid op = opposite(*s3);
  CHECK(validate(op).ok());
  CHECK(vertex_group(op, ObjId(0)).group.order() == 6);

  const FiniteGroupoid g = codiscrete({"a", "b", "c"});
  const std::vector<ObjId> two{ObjId(0), ObjId(2)};
  const Subgroupoid sub = full_subgroupoid(g, two);
  CHECK(sub.groupoid.num_objects() == 2);
  CHECK(sub.groupoid.num_arrows() == 4);
  CHECK(validate(sub.groupoid).ok());
}

TEST_CASE("sieves in a groupoid are maximal") {
  const auto s3 = fixtures::s3();
  const auto sv = sieves(*s3, ObjId(0));
  REQUIRE(sv.size() == 1);
  CHECK(sv[0].size() == 6);
  const FiniteGroupoid g = codiscrete({"a", "b"});
  CHECK(sieves(g, ObjId(1)).size() == 1);
}
