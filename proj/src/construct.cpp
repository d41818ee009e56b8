#include "covgpd/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "covgpd/error.hpp"
#include "covgpd/transform.hpp"

namespace covgpd {

Covering covering_from_subgroup(const GroupoidPtr& base_ptr, ObjId g0, const Subgroup& gamma) {
  const auto& base = *base_ptr;
  base.require_object(g0);
  if (!is_connected(base)) throw InputError("covering_from_subgroup: base groupoid is not connected");
  const VertexGroup pi = vertex_group(base, g0);
  for (Elem e : gamma.elements)
    if (e >= pi.group.order()) throw InputError("covering_from_subgroup: element outside the vertex group");
  if (!is_subgroup(pi.group, gamma.elements))
    throw InputError("covering_from_subgroup: not a subgroup of the vertex group");

  // Over each X the arrows X -> G0 fall into right cosets Γa; coset_of[a]
  // is the index of Γa among the cosets over dom(a), ordered by least arrow.
  const std::size_t n = base.num_objects();
  std::vector<std::size_t> sizes(n, 0);
  std::vector<std::vector<std::string>> names(n);
  std::vector<std::size_t> coset_of(base.num_arrows(), 0);
  std::vector<ArrId> marked_arrow;
  for (std::size_t x = 0; x < n; ++x) {
    const auto arrows = base.hom(ObjId(x), g0);
    std::vector<bool> placed(arrows.size(), false);
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (placed[i]) continue;
      const std::size_t c = sizes[x]++;
      names[x].push_back("[" + base.arrow_name(arrows[i]) + "]");
      for (std::size_t j = i; j < arrows.size(); ++j) {
        const ArrId loop = base.compose(arrows[j], base.inverse(arrows[i]));
        if (gamma.contains(pi.element(loop))) {
          placed[j] = true;
          coset_of[arrows[j].index()] = c;
        }
      }
    }
  }
  // Representatives: the least arrow in each coset.
  std::vector<std::vector<ArrId>> rep(n);
  for (std::size_t x = 0; x < n; ++x) rep[x].resize(sizes[x]);
  for (std::size_t x = 0; x < n; ++x) {
    const auto arrows = base.hom(ObjId(x), g0);
    std::vector<bool> seen(sizes[x], false);
    for (ArrId a : arrows) {
      if (!seen[coset_of[a.index()]]) {
        seen[coset_of[a.index()]] = true;
        rep[x][coset_of[a.index()]] = a;
      }
    }
  }

  std::vector<std::vector<std::size_t>> transport(base.num_arrows());
  for (std::size_t g = 0; g < base.num_arrows(); ++g) {
    const ObjId c = base.cod(ArrId(g));
    for (std::size_t i = 0; i < sizes[c.index()]; ++i)
      transport[g].push_back(coset_of[base.compose(rep[c.index()][i], ArrId(g)).index()]);
  }
  Covering p = covering_from_transport(base_ptr, sizes, transport, names);
  const std::size_t marked = coset_of[base.identity(g0).index()];
  return p.with_marked(p.over(g0)[marked]);
}

Covering universal_cover(const GroupoidPtr& base, ObjId g0) {
  base->require_object(g0);
  return covering_from_subgroup(base, g0, Subgroup{{vertex_group(*base, g0).group.identity()}});
}

std::vector<std::string> action_problems(const GroupAction& a) {
  std::vector<std::string> out;
  const auto& g = a.group;
  if (a.act.size() != g.order()) {
    out.push_back("action has " + std::to_string(a.act.size()) + " automorphisms for a group of order " +
                  std::to_string(g.order()));
    return out;
  }
  for (Elem e = 0; e < g.order(); ++e) {
    const auto& m = a.act[e];
    if (m.obj_map.size() != a.space->num_objects() || m.arr_map.size() != a.space->num_arrows()) {
      out.push_back("element " + g.name(e) + " has maps of the wrong size");
      return out;
    }
    if (!is_functorial(m)) out.push_back("element " + g.name(e) + " is not a morphism");
    else if (!is_isomorphism(m)) out.push_back("element " + g.name(e) + " is not an automorphism");
  }
  if (!out.empty()) return out;
  if (!a.act[g.identity()].same_maps(identity_morphism(a.space))) out.push_back("identity does not act trivially");
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (!compose(a.act[x], a.act[y]).same_maps(a.act[g.mul(x, y)]))
        out.push_back("(" + g.name(x) + g.name(y) + ")* differs from " + g.name(x) + "*" + g.name(y) + "*");
  return out;
}

std::optional<FixedPoint> fixed_point(const GroupAction& a) {
  for (Elem e = 0; e < a.group.order(); ++e) {
    if (e == a.group.identity()) continue;
    for (std::size_t x = 0; x < a.space->num_objects(); ++x)
      if (a.act[e](ObjId(x)) == ObjId(x)) return FixedPoint{e, ObjId(x)};
  }
  return std::nullopt;
}

namespace {

// Orbit numbering by least member; members listed in element order.
template <typename Image>
void orbit_partition(std::size_t count, std::size_t order, Image image, std::vector<std::size_t>& orbit_of,
                     std::vector<std::vector<std::size_t>>& members) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  orbit_of.assign(count, kUnset);
  for (std::size_t i = 0; i < count; ++i) {
    if (orbit_of[i] != kUnset) continue;
    const std::size_t o = members.size();
    members.emplace_back();
    for (Elem e = 0; e < order; ++e) {
      const std::size_t j = image(e, i);
      if (orbit_of[j] == kUnset) {
        orbit_of[j] = o;
        members.back().push_back(j);
      }
    }
    std::sort(members.back().begin(), members.back().end());
  }
}

}  // namespace

OrbitGroupoid orbit_groupoid(const GroupAction& a, std::optional<std::uint64_t> shuffle_seed) {
  if (auto problems = action_problems(a); !problems.empty())
    throw InputError("not a group action: " + problems.front());
  if (auto fp = fixed_point(a))
    throw InputError("action is not free: " + a.group.name(fp->element) + " fixes object " +
                     a.space->object_name(fp->object));
  const auto& space = *a.space;
  const std::size_t order = a.group.order();

  OrbitGroupoid o;
  std::vector<std::vector<std::size_t>> object_members;
  std::vector<std::vector<std::size_t>> arrow_members;
  orbit_partition(space.num_objects(), order, [&](Elem e, std::size_t x) { return a.act[e](ObjId(x)).index(); },
                  o.object_orbit, object_members);
  orbit_partition(space.num_arrows(), order, [&](Elem e, std::size_t f) { return a.act[e](ArrId(f)).index(); },
                  o.arrow_orbit, arrow_members);
  for (const auto& m : object_members) {
    o.orbits.emplace_back();
    for (std::size_t x : m) o.orbits.back().push_back(ObjId(x));
  }

  std::vector<std::size_t> rep(arrow_members.size());
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  for (std::size_t c = 0; c < arrow_members.size(); ++c) {
    if (shuffle_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, arrow_members[c].size() - 1);
      rep[c] = arrow_members[c][pick(rng)];
    } else {
      rep[c] = arrow_members[c].front();
    }
  }

  std::vector<std::string> obj_names;
  for (const auto& m : object_members) obj_names.push_back("o(" + space.object_name(ObjId(m.front())) + ")");
  std::vector<FiniteGroupoid::ArrowSpec> specs;
  for (std::size_t c = 0; c < arrow_members.size(); ++c) {
    const ArrId r(arrow_members[c].front());
    specs.push_back({ObjId(o.object_orbit[space.dom(r).index()]), ObjId(o.object_orbit[space.cod(r).index()]),
                     "o(" + space.arrow_name(r) + ")"});
  }

  // γ with γ(x) = y, unique by freeness.
  auto aligning = [&](ObjId x, ObjId y) {
    for (Elem e = 0; e < order; ++e)
      if (a.act[e](x) == y) return e;
    throw VerificationFailure("orbit composition found no aligning element");
  };
  auto quotient = share(make_groupoid(obj_names, specs, [&](ArrId f, ArrId h) {
    const ArrId x(rep[f.index()]);
    const ArrId y(rep[h.index()]);
    const Elem g = aligning(space.dom(x), space.cod(y));
    return ArrId(o.arrow_orbit[space.compose(a.act[g](x), y).index()]);
  }));
  if (auto report = validate(*quotient); !report.ok())
    throw VerificationFailure("orbit groupoid is not a groupoid: " + report.summary());

  o.quotient = quotient;
  o.projection = GroupoidMorphism{a.space, quotient, {}, {}};
  for (std::size_t x : o.object_orbit) o.projection.obj_map.push_back(ObjId(x));
  for (std::size_t f : o.arrow_orbit) o.projection.arr_map.push_back(ArrId(f));
  if (!is_functorial(o.projection)) throw VerificationFailure("orbit morphism is not functorial");
  return o;
}

Covering orbit_covering(const OrbitGroupoid& o, std::optional<ObjId> marked) {
  Covering c = make_covering(o.projection, "orbit morphism");
  return marked ? c.with_marked(*marked) : c;
}

QuotientComparison quotient_comparison(const Covering& p) {
  if (!is_regular(p)) throw InputError("quotient_comparison: covering is not regular");
  const CovGroup cov = covering_transformations(p);
  OrbitGroupoid orbits = orbit_groupoid(as_action(cov));
  auto phi = factor_through(p.morphism(), orbits.projection);
  if (!phi || !is_isomorphism(*phi))
    throw VerificationFailure("base is not isomorphic to total/Cov through p");
  Covering cover = orbit_covering(orbits, p.marked_or_first());
  return QuotientComparison{std::move(orbits), std::move(*phi), std::move(cover)};
}

}  // namespace covgpd
