#pragma once

#include <vector>

#include "covgpd/covering.hpp"
#include "covgpd/group.hpp"

/// Brute-force cross-checks that avoid the cached stars, lifting tables and
/// propagation used by the main code paths.
namespace covgpd::oracle {

/// Bijectivity of star(x) -> star(p x) for every x, found by scanning arrows.
bool star_bijective(const GroupoidMorphism& p);

/// p_* of the loops at x as vertex-group elements at p(x), where element i
/// is the i-th loop in id order.
std::vector<Elem> loop_images(const GroupoidMorphism& p, ObjId x);

/// Union-find over arrows.
std::size_t component_count(const FiniteGroupoid& g);

/// Every subset of the group closed under product, sorted by (size, elements).
/// Only for groups of order at most 20.
std::vector<std::vector<Elem>> subgroups_by_subsets(const FiniteGroup& g);

/// Automorphisms h of p.total with p∘h = p, from the full morphism set.
std::vector<GroupoidMorphism> automorphisms_over(const Covering& p);

/// Morphisms g: F -> p.total with p∘g = f, from the full morphism set.
std::vector<GroupoidMorphism> lifts_by_search(const Covering& p, const GroupoidMorphism& f);

}  // namespace covgpd::oracle
