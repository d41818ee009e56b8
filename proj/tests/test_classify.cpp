#include <doctest.h>

#include <algorithm>

#include "covgpd/classify.hpp"
#include "covgpd/error.hpp"
#include "covgpd/fixtures.hpp"
#include "covgpd/oracle.hpp"

using namespace covgpd;

TEST_CASE("conjugate subgroups give equivalent covers") {
  auto s3 = fixtures::s3();
  const FiniteGroup g = FiniteGroup::symmetric(3);
  const Subgroup t12 = fixtures::s3_transposition();
  const Subgroup t13 = conjugate(g, t12, *g.find("(23)"));
  const Covering a = covering_from_subgroup(s3, ObjId(0), t12);
  const Covering b = covering_from_subgroup(s3, ObjId(0), t13);
  const auto e = equivalent_coverings(a, b);
  REQUIRE(e.has_value());
  CHECK(is_isomorphism(e->phi));
  CHECK(compose(b.morphism(), e->phi).same_maps(a.morphism()));
  CHECK_FALSE(equivalent_coverings(a, b, {true, true}).has_value());
  CHECK(equivalent_coverings(a, a, {true, true}).has_value());
  const Covering r = covering_from_subgroup(s3, ObjId(0), fixtures::s3_rotation());
  CHECK_FALSE(equivalent_coverings(a, r).has_value());
}

TEST_CASE("equivalence over a base automorphism") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const Covering id = make_covering(identity_morphism(c4), "id");
  CHECK(equivalent_coverings(u, u, {false, false}).has_value());
  CHECK_FALSE(equivalent_coverings(u, id, {false, false}).has_value());
}

TEST_CASE("covering morphisms") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const Covering half = covering_from_subgroup(c4, ObjId(0), make_subgroup(FiniteGroup::cyclic(4), {0, 2}));
  CHECK(covering_morphisms(u, half).size() == 2);
  CHECK(covering_morphisms(half, u).empty());
  CHECK(covering_morphisms(u, u).size() == 4);
}

TEST_CASE("pullbacks") {
  auto c4 = fixtures::c4();
  const Covering u = universal_cover(c4, ObjId(0));
  const Pullback pb = pullback_covering(u, u.morphism());
  CHECK(pb.covering.total().num_objects() == 16);
  CHECK(oracle::component_count(pb.covering.total()) == 4);
  CHECK(compose(u.morphism(), pb.to_total).same_maps(compose(u.morphism(), pb.covering.morphism())));
  CHECK(pb.covering.total().object_name(ObjId(0)).front() == '(');

  // Pulling back along C2 -> C4 as {0, 2}.
  auto c2 = fixtures::c2();
  const GroupoidMorphism f{c2, c4, {ObjId(0)}, {ArrId(0), ArrId(2)}};
  const Pullback small = pullback_covering(u, f);
  CHECK(fold(make_covering(small.covering.morphism(), "pb")) == 4);
  CHECK(oracle::component_count(small.covering.total()) == 2);
}

TEST_CASE("fibered product and meet") {
  auto s3 = fixtures::s3();
  const Covering a = covering_from_subgroup(s3, ObjId(0), fixtures::s3_transposition());
  const Covering r = covering_from_subgroup(s3, ObjId(0), fixtures::s3_rotation());
  const FiberedProduct fp = fibered_product(a, r);
  CHECK(fp.covering.total().num_objects() == 6);
  CHECK(fp.pair(*a.marked(), *r.marked()).has_value());
  const Covering m = meet_covering(a, r);
  CHECK(fold(m) == 6);
}

TEST_CASE("lattice of C4 is a chain") {
  const GaloisLattice lat = build_lattice(fixtures::c4(), ObjId(0));
  REQUIRE(lat.nodes.size() == 3);
  CHECK(lat.nodes[0].fold == 4);
  CHECK(lat.nodes[1].fold == 2);
  CHECK(lat.nodes[2].fold == 1);
  CHECK(std::all_of(lat.nodes.begin(), lat.nodes.end(), [](const LatticeNode& n) { return n.regular; }));
  // Larger subgroups give smaller covers, lower in the order.
  CHECK(lat.below[1][0]);
  CHECK(lat.below[2][1]);
  CHECK(lat.below[2][0]);
  CHECK_FALSE(lat.below[0][2]);
  CHECK(lat.findings.r_splits == 0);
}

TEST_CASE("lattice of S3") {
  const GaloisLattice lat = build_lattice(fixtures::s3(), ObjId(0));
  REQUIRE(lat.nodes.size() == 6);
  std::size_t irregular = 0;
  for (const auto& n : lat.nodes) irregular += !n.regular;
  CHECK(irregular == 3);
  // Choosing the lift differently can move a non-regular cover to a
  // conjugate subgroup, never further.
  CHECK(lat.findings.r_conjugate);
  CHECK(lat.findings.r_splits == 3);

  const std::string dot = lattice_to_dot(lat);
  CHECK(dot.rfind("digraph lattice {\n  rankdir=BT;\n", 0) == 0);
  CHECK(dot.find("n0 [label=\"fold=6, regular=+\"];") != std::string::npos);
  CHECK(dot.find("n1 [label=\"fold=3, regular=-\"];") != std::string::npos);
  CHECK(dot.find("n0 -> n4;") != std::string::npos);
  CHECK(dot.find("n4 -> n5;") != std::string::npos);
  CHECK(dot.find("n0 -> n5;") == std::string::npos);
  CHECK(dot.back() == '\n');
}

TEST_CASE("lattice of the trivial groupoid") {
  const GaloisLattice lat = build_lattice(fixtures::t1(), ObjId(0));
  CHECK(lat.nodes.size() == 1);
  CHECK(lattice_to_dot(lat).find("n0 [label=\"fold=1, regular=+\"];") != std::string::npos);
}

TEST_CASE("pushout of two orbit covers") {
  const GaloisLattice lat = build_lattice(fixtures::s3(), ObjId(0));
  const Pushout po = pushout_covering(lat.universal, lat.nodes[1].upper, lat.nodes[4].upper);
  CHECK(fold(po.covering) == 1);
  CHECK(is_functorial(po.glue));
}
