#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covgpd/covering.hpp"
#include "covgpd/group.hpp"
#include "covgpd/morphism.hpp"

namespace covgpd {

/// Covering with one object per right coset Γa, a ranging over the arrows
/// X -> G0, lying over X = dom(a). For g: X -> Y the arrow over g into Γb
/// comes from Γ(b∘g). The marked object is Γ·1 and p_*π there is Γ.
///
/// `gamma` holds elements of vertex_group(base, g0). Throws InputError when
/// the base is disconnected or gamma is not a subgroup.
Covering covering_from_subgroup(const GroupoidPtr& base, ObjId g0, const Subgroup& gamma);

/// covering_from_subgroup with the trivial subgroup.
Covering universal_cover(const GroupoidPtr& base, ObjId g0);

/// A group acting on a groupoid by automorphisms, act[e] for element e.
struct GroupAction {
  FiniteGroup group;
  GroupoidPtr space;
  std::vector<GroupoidMorphism> act;
};

/// Violations of the action laws: automorphisms, 1 acts trivially,
/// (γτ)* = γ*τ*. Empty when A is an action.
std::vector<std::string> action_problems(const GroupAction& a);

struct FixedPoint {
  Elem element;
  ObjId object;
};
/// A non-identity element fixing an object, if any.
std::optional<FixedPoint> fixed_point(const GroupAction& a);

/// G/Γ for a free action. Orbits are numbered by their least member.
struct OrbitGroupoid {
  GroupoidPtr quotient;
  GroupoidMorphism projection;           // o
  std::vector<std::size_t> object_orbit;  // space object -> quotient object
  std::vector<std::size_t> arrow_orbit;   // space arrow -> quotient arrow
  std::vector<std::vector<ObjId>> orbits;
};

/// Composes o(a)o(b) as o(γ(a)b) with γ(dom a) = cod b. When `shuffle_seed`
/// is set the representatives a and b are drawn at random from their orbits
/// instead of taking the least member. Throws InputError on a non-action or a
/// non-free action.
OrbitGroupoid orbit_groupoid(const GroupAction& a, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// The orbit morphism as a covering. `marked` is a space object.
Covering orbit_covering(const OrbitGroupoid& o, std::optional<ObjId> marked = std::nullopt);

struct QuotientComparison {
  OrbitGroupoid orbits;     // total / Cov
  GroupoidMorphism phi;     // base -> total/Cov, phi∘p = o
  Covering orbit_cover;     // (total, o)
};
/// Throws InputError unless p is connected and regular.
QuotientComparison quotient_comparison(const Covering& p);

}  // namespace covgpd
