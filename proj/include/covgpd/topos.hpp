#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "covgpd/classify.hpp"
#include "covgpd/covering.hpp"

namespace covgpd {

/// A set-valued contravariant functor on a groupoid. For g: D -> C,
/// maps[g][i] is F(g) applied to element i of F(C), an element of F(D).
struct Presheaf {
  GroupoidPtr base;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::string>> names;  // optional element names per object
  std::vector<std::vector<std::size_t>> maps;
};

/// Shape errors, non-bijective maps, F(1) != 1 and F(fh) != F(h)F(f).
std::vector<std::string> presheaf_problems(const Presheaf& f);

/// Fibers and the object part of fiber transport.
Presheaf covering_to_presheaf(const Covering& p);
/// One object per element, arrows oriented so the star condition holds.
/// Throws InputError when F is not functorial.
Covering presheaf_to_covering(const Presheaf& f);

/// Ω = G ⊔ G over G by the codiagonal. Objects "true.x" come first.
Covering omega(const GroupoidPtr& base);
/// The first injection G -> Ω.
GroupoidMorphism omega_true(const Covering& omega);

/// Union of components of H, with its inclusion into H.total.
struct Subcovering {
  Covering covering;
  GroupoidMorphism inclusion;
};
/// `mask` bit k selects component k of H.total.
Subcovering restrict_to_components(const Covering& h, std::uint64_t mask);

/// φ: H.total -> Ω.total over G, sending the image of s through true and the
/// rest through false. s: S.total -> H.total must be a monic morphism of
/// coverings; throws InputError otherwise.
GroupoidMorphism characteristic_morphism(const Covering& h, const Covering& s_cover, const GroupoidMorphism& s,
                                         const Covering& omega);

/// Objects and arrows of H pulled back along true through φ.
std::vector<bool> pulled_back_objects(const Covering& h, const GroupoidMorphism& phi, const Covering& omega);

/// Brute force over every morphism H.total -> Ω.total over G; returns the
/// ones whose pullback of true is the image of s.
std::vector<GroupoidMorphism> classifying_morphisms(const Covering& h, const GroupoidMorphism& s,
                                                    const Covering& omega);

struct SubobjectLattice {
  std::size_t components = 0;
  std::vector<std::uint64_t> masks;  // all subsets of components
  bool boolean = false;              // axioms checked on the object sets
};
/// Throws BoundExceeded past 16 components.
SubobjectLattice subobjects(const Covering& h);

/// H^K: over C the maps α: Ob(K_C) -> Ob(H_C); the arrow over g: D -> C into
/// α comes from H_g∘α∘K_g⁻¹. Throws InputError on a base mismatch and
/// BoundExceeded past `limit` objects.
struct Exponential {
  Covering covering;
  /// values[x] is α for total object x, as fiber positions of H.
  std::vector<std::vector<std::size_t>> values;
  std::optional<ObjId> find(ObjId base_object, const std::vector<std::size_t>& alpha) const;
};
Exponential exponential(const Covering& h, const Covering& k, std::size_t limit = 100000);

/// (α·g)(x) = α(x·g⁻¹)·g for a loop g at C, positions in the fibers over C.
std::vector<std::size_t> group_action_on_exponential(const Covering& h, const Covering& k, ArrId g,
                                                     const std::vector<std::size_t>& alpha);

/// Hom_COV(R ×_G P, Q) ≅ Hom_COV(R, Q^P) by currying.
struct AdjunctionReport {
  std::size_t left = 0;   // |Hom(R × P, Q)|
  std::size_t right = 0;  // |Hom(R, Q^P)|
  bool bijective = false;
  bool natural = false;   // for every endomorphism k of R
};
AdjunctionReport adjunction_check(const Covering& r, const Covering& p, const Covering& q,
                                  std::size_t limit = 100000);

/// Coproduct in COV(G): the disjoint union of the totals.
Covering covering_sum(const Covering& p, const Covering& q);

/// Empty covering over G.
Covering empty_covering(const GroupoidPtr& base);
/// Identity covering of G, the terminal object of COV(G).
Covering identity_covering(const GroupoidPtr& base);

}  // namespace covgpd
