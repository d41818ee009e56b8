#include <doctest.h>

#include "covgpd/error.hpp"
#include "covgpd/group.hpp"
#include "covgpd/oracle.hpp"

using namespace covgpd;

TEST_CASE("cyclic and symmetric groups") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  CHECK(z4.element_order(1) == 4);
  CHECK(z4.inv(1) == 3);

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.name(s3.identity()) == "e");
  const Elem t = *s3.find("(12)");
  const Elem r = *s3.find("(123)");
  CHECK(s3.element_order(t) == 2);
  CHECK(s3.element_order(r) == 3);
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), InputError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}), InputError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 0}, {"a"}), InputError);
}

TEST_CASE("subgroup enumeration matches subset closure") {
  for (const FiniteGroup& g : {FiniteGroup(), FiniteGroup::cyclic(4), FiniteGroup::cyclic(6),
                               FiniteGroup::symmetric(3), FiniteGroup::cyclic(12)}) {
    const auto subs = subgroups(g);
    const auto brute = oracle::subgroups_by_subsets(g);
    REQUIRE(subs.size() == brute.size());
    for (std::size_t i = 0; i < subs.size(); ++i) CHECK(subs[i].elements == brute[i]);
  }
  CHECK(subgroups(FiniteGroup::symmetric(4)).size() == 30);
  CHECK_THROWS_AS(subgroups(FiniteGroup::symmetric(4), 10), BoundExceeded);
}

TEST_CASE("normality, normalizers and quotients") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Subgroup t = make_subgroup(s3, {s3.identity(), *s3.find("(12)")});
  const Subgroup a3 = generated_subgroup(s3, std::vector<Elem>{*s3.find("(123)")});
  CHECK_FALSE(is_normal(s3, t));
  CHECK(is_normal(s3, a3));
  CHECK(normalizer(s3, t) == t);
  CHECK(index(s3, t) == 3);
  CHECK(right_cosets(s3, t).size() == 3);
  CHECK_THROWS_AS(quotient(s3, t), InputError);
  const Quotient q = quotient(s3, a3);
  CHECK(q.group.order() == 2);
  CHECK(find_isomorphism(q.group, FiniteGroup::cyclic(2)).has_value());
  CHECK(is_homomorphism(s3, q.group, q.coset_of));
}

TEST_CASE("intersection, join and conjugates") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const Subgroup a = make_subgroup(s3, {s3.identity(), *s3.find("(12)")});
  const Subgroup b = make_subgroup(s3, {s3.identity(), *s3.find("(13)")});
  CHECK(intersection(a, b) == trivial_subgroup(s3));
  CHECK(join(s3, a, b) == whole_group(s3));
  CHECK(conjugate(s3, a, *s3.find("(23)")) == b);
  CHECK_THROWS_AS(make_subgroup(s3, {*s3.find("(12)")}), InputError);
}

TEST_CASE("homomorphisms and isomorphisms") {
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(homomorphisms(z4, z4).size() == 4);
  CHECK(homomorphisms(s3, s3).size() == 10);
  CHECK(homomorphisms(z4, s3).size() == 4);
  CHECK_FALSE(find_isomorphism(z4, FiniteGroup::cyclic(2)).has_value());
  const SubgroupGroup sub = as_group(s3, generated_subgroup(s3, std::vector<Elem>{*s3.find("(123)")}));
  CHECK(find_isomorphism(sub.group, FiniteGroup::cyclic(3)).has_value());
}
