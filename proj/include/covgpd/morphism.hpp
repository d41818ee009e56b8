#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "covgpd/groupoid.hpp"

namespace covgpd {

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

inline GroupoidPtr share(FiniteGroupoid g) {
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

/// Object and arrow maps between two shared groupoids.
struct GroupoidMorphism {
  GroupoidPtr source;
  GroupoidPtr target;
  std::vector<ObjId> obj_map;
  std::vector<ArrId> arr_map;

  ObjId operator()(ObjId x) const { return obj_map[x.index()]; }
  ArrId operator()(ArrId a) const { return arr_map[a.index()]; }

  /// Equal maps; the endpoint groupoids are not compared.
  bool same_maps(const GroupoidMorphism& other) const {
    return obj_map == other.obj_map && arr_map == other.arr_map;
  }
};

/// Pointer-equal or structurally equal.
bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b);

/// Problems with dom, cod, identities and composition; empty when functorial.
std::vector<std::string> functoriality_problems(const GroupoidMorphism& m);
bool is_functorial(const GroupoidMorphism& m);
/// Throws InputError when not functorial.
void require_functorial(const GroupoidMorphism& m, const std::string& what);

GroupoidMorphism identity_morphism(const GroupoidPtr& g);
/// second∘first. Throws InputError when the middle groupoids differ.
GroupoidMorphism compose(const GroupoidMorphism& second, const GroupoidMorphism& first);

bool is_isomorphism(const GroupoidMorphism& m);
/// Throws InputError unless m is bijective on objects and arrows.
GroupoidMorphism inverse_morphism(const GroupoidMorphism& m);

/// Inclusion of a subgroupoid into its parent.
GroupoidMorphism inclusion(const Subgroupoid& sub, const GroupoidPtr& sub_ptr, const GroupoidPtr& parent);

/// Injections of disjoint_union(g, h).
std::pair<GroupoidMorphism, GroupoidMorphism> coproduct_injections(const GroupoidPtr& g,
                                                                   const GroupoidPtr& h,
                                                                   const GroupoidPtr& sum);

/// The iso g -> opposite(g) that fixes objects and inverts arrows.
GroupoidMorphism opposite_iso(const GroupoidPtr& g, const GroupoidPtr& op);

/// The unique s with s∘q = f, when it exists. q must be surjective on objects
/// and arrows for a result to be found.
std::optional<GroupoidMorphism> factor_through(const GroupoidMorphism& q, const GroupoidMorphism& f);

/// Calls `visit` on every morphism source -> target until it returns false.
///
/// Each component is handled through a spanning tree at its least object and
/// a homomorphism out of the vertex group there, so the walk is complete and
/// duplicate-free. Intended for brute-force cross-checks on small inputs.
void for_each_morphism(const GroupoidPtr& source, const GroupoidPtr& target,
                       const std::function<bool(const GroupoidMorphism&)>& visit);

/// All morphisms, or BoundExceeded past `limit`.
std::vector<GroupoidMorphism> enumerate_morphisms(const GroupoidPtr& source, const GroupoidPtr& target,
                                                  std::size_t limit = 200000);

/// Object and arrow classes of an equivalence on a groupoid, composed through
/// any composable pair of representatives.
struct QuotientGroupoid {
  GroupoidPtr quotient;
  GroupoidMorphism projection;
};
/// Throws VerificationFailure when composition is not independent of the
/// chosen representatives.
QuotientGroupoid quotient_groupoid(const GroupoidPtr& g, const std::vector<std::size_t>& object_class,
                                   const std::vector<std::size_t>& arrow_class);

}  // namespace covgpd
