#include "covgpd/fixtures.hpp"

#include "covgpd/construct.hpp"

namespace covgpd::fixtures {

GroupoidPtr t1() { return share(group_groupoid(FiniteGroup{}, "*")); }
GroupoidPtr i2() { return share(codiscrete({"x", "y"})); }
GroupoidPtr c2() { return share(group_groupoid(FiniteGroup::cyclic(2), "*")); }
GroupoidPtr c4() { return share(group_groupoid(FiniteGroup::cyclic(4), "*")); }
GroupoidPtr s3() { return share(group_groupoid(FiniteGroup::symmetric(3), "*")); }

std::vector<NamedGroupoid> bases() { return {{"T1", t1()}, {"I2", i2()}, {"C4", c4()}, {"S3", s3()}}; }

std::vector<NamedCovering> subgroup_covers() {
  std::vector<NamedCovering> out;
  for (const auto& [name, g] : bases()) {
    const FiniteGroup pi = vertex_group(*g, ObjId(0)).group;
    for (const Subgroup& s : subgroups(pi)) {
      std::string label = name + "/{";
      for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + pi.name(s.elements[i]);
      out.push_back({label + "}", covering_from_subgroup(g, ObjId(0), s)});
    }
  }
  return out;
}

Subgroup s3_transposition() {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  return make_subgroup(g, {g.identity(), *g.find("(12)")});
}

Subgroup s3_rotation() {
  const FiniteGroup g = FiniteGroup::symmetric(3);
  return make_subgroup(g, {g.identity(), *g.find("(123)"), *g.find("(132)")});
}

Covering points(std::size_t n) {
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return covering_from_transport(t1(), {n}, {id});
}

}  // namespace covgpd::fixtures
