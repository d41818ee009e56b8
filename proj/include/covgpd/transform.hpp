#pragma once

#include <optional>
#include <vector>

#include "covgpd/construct.hpp"
#include "covgpd/covering.hpp"
#include "covgpd/group.hpp"

namespace covgpd {

/// Cov(G̃/G): automorphisms h of the total groupoid with p∘h = p.
///
/// Element 0 is the identity; the rest follow the fiber order of their
/// image of the base point. mul(i, j) is elements[i]∘elements[j].
struct CovGroup {
  Covering covering;
  ObjId base_point;
  std::vector<GroupoidMorphism> elements;
  std::vector<ObjId> image_of_base;
  FiniteGroup group;

  /// The element with h(base_point) = target.
  std::optional<Elem> element_sending(ObjId target) const;
  /// The element with h(from) = to.
  std::optional<Elem> element_mapping(ObjId from, ObjId to) const;
  /// Index of a transformation given by its maps, if it is one.
  std::optional<Elem> find(const GroupoidMorphism& h) const;
};

/// Each candidate is the lift of p through p sending the base point to a
/// fiber object. Throws InputError when the total groupoid is disconnected.
CovGroup covering_transformations(const Covering& p, std::optional<ObjId> base_point = std::nullopt);

/// Cov acting on the total groupoid, or the subgroup `sub` of it.
GroupAction as_action(const CovGroup& cov, const std::optional<Subgroup>& sub = std::nullopt);

/// Normality of p_*π decided against transitivity of Cov on the fiber. Throws
/// VerificationFailure when the two disagree.
bool is_regular(const Covering& p);

/// N(p_*π)/p_*π -> Cov(G̃/G), [a] ↦ the h with h(x̃) = dom(ã), ã the lift of
/// a at x̃. `reverse` holds the map sending [a] to the h with h(dom ã) = x̃.
struct NormalizerIso {
  ObjId at;
  Subgroup pushforward;
  Subgroup normalizer;
  SubgroupGroup normalizer_group;
  Quotient quotient;  // normalizer_group.group / pushforward
  CovGroup cov;
  std::vector<Elem> map;      // quotient element -> cov element
  std::vector<Elem> reverse;  // quotient element -> cov element
};
/// Throws VerificationFailure unless `map` is a well-defined isomorphism.
NormalizerIso cov_normalizer_iso(const Covering& p, std::optional<ObjId> at = std::nullopt);

/// Cov acts freely and transitively on every fiber and Cov ≅ π/p_*π. Throws
/// InputError when p is not regular.
bool principal_action_check(const Covering& p);

/// f_#: Cov(H̃/H) -> Cov(G̃/G) for universal covers, with f_#(g)∘f̃ = f̃∘g.
/// Also checked against ψ_G∘f_*∘ψ_H⁻¹ where ψ(a)(x̃) = x̃·a.
/// Throws InputError unless both covers are universal and f̃ covers f.
std::vector<Elem> induced_f_sharp(const CovGroup& cov_h, const CovGroup& cov_g, const GroupoidMorphism& f,
                                  const GroupoidMorphism& f_tilde);

}  // namespace covgpd
