#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covgpd/group.hpp"
#include "covgpd/morphism.hpp"

namespace covgpd {

struct CoverCheck;

/// A groupoid morphism that restricts to a bijection star(x̃) -> star(p x̃) at
/// every object of the total groupoid. Only is_covering() creates one, so the
/// lifting table is always a verified witness.
class Covering {
 public:
  const GroupoidMorphism& morphism() const { return map_; }
  const FiniteGroupoid& total() const { return *map_.source; }
  const FiniteGroupoid& base() const { return *map_.target; }
  const GroupoidPtr& total_ptr() const { return map_.source; }
  const GroupoidPtr& base_ptr() const { return map_.target; }

  ObjId project(ObjId x) const { return map_(x); }
  ArrId project(ArrId a) const { return map_(a); }

  /// The unique arrow into `at` lying over `a`. Throws InputError unless
  /// cod(a) = p(at).
  ArrId lift(ArrId a, ObjId at) const;

  /// Total objects over a base object, ascending.
  const std::vector<ObjId>& over(ObjId base_object) const { return over_[base_object.index()]; }

  /// Distinguished total object carried by constructed coverings.
  std::optional<ObjId> marked() const { return marked_; }
  Covering with_marked(ObjId x) const;
  ObjId marked_or_first() const;

 private:
  friend CoverCheck is_covering(GroupoidMorphism f);
  Covering() = default;

  GroupoidMorphism map_;
  std::vector<std::vector<ArrId>> lifts_;  // [total object][star position of base arrow]
  std::vector<std::vector<ObjId>> over_;
  std::optional<ObjId> marked_;
};

struct StarDefect {
  ObjId object;            // in the total groupoid
  std::size_t total_star;  // |star(x̃)|
  std::size_t base_star;   // |star(p x̃)|
  bool injective;
  bool surjective;
};

struct CoverCheck {
  std::optional<Covering> covering;
  std::vector<StarDefect> defects;
};

/// Checks the star condition object by object. Throws InputError when f is
/// not functorial.
CoverCheck is_covering(GroupoidMorphism f);
/// For builders: a failed star check here is a bug, reported as
/// VerificationFailure.
Covering make_covering(GroupoidMorphism f, const std::string& what);

/// Total groupoid with objects (C, i), i < sizes[C], and one arrow into (C, i)
/// over each base arrow g: D -> C, with domain (D, transport[g][i]). This is
/// the covering attached to a set-valued contravariant functor; the transport
/// tables must be functorial for the result to be a groupoid.
Covering covering_from_transport(const GroupoidPtr& base, const std::vector<std::size_t>& sizes,
                                 const std::vector<std::vector<std::size_t>>& transport,
                                 const std::vector<std::vector<std::string>>& element_names = {});

struct Fiber {
  ObjId over;
  GroupoidPtr groupoid;
  std::vector<ObjId> objects;  // local -> total
  std::vector<ArrId> arrows;   // local -> total
};
/// Full subgroupoid over G: objects over G, arrows over identity(G).
Fiber fiber(const Covering& p, ObjId base_object);

/// H_f for f: D -> C, an isomorphism Fiber(C) -> Fiber(D).
struct FiberTransport {
  Fiber from;
  Fiber to;
  GroupoidMorphism map;
};
FiberTransport fiber_transport(const Covering& p, ArrId f);
/// Object part of H_f as total ids: result[i] is the image of over(C)[i].
std::vector<ObjId> transport_objects(const Covering& p, ArrId f);

/// Index of x in over(p(x)).
std::size_t fiber_position(const Covering& p, ObjId x);

ArrId lift_arrow(const Covering& p, ArrId a, ObjId at);

/// p_* π(total, x̃) as a subgroup of vertex_group(base, p x̃). Throws
/// VerificationFailure if p_* is not injective on the loop group.
Subgroup pushforward_vertex(const Covering& p, ObjId x);

/// The unique f̃ with p∘f̃ = f and f̃(seed) = at, or nullopt when none exists.
/// Throws InputError when f's source is disconnected or p(at) != f(seed).
std::optional<GroupoidMorphism> lift_morphism(const Covering& p, const GroupoidMorphism& f, ObjId seed,
                                              ObjId at);
/// Same propagation restricted to the component of `seed`; other objects keep
/// whatever `partial` holds. Returns false on a conflict.
bool lift_component(const Covering& p, const GroupoidMorphism& f, ObjId seed, ObjId at,
                    GroupoidMorphism& partial);

/// f_* π(F, seed) ⊆ p_* π(total, at), decided on vertex groups alone.
bool lifting_criterion(const Covering& p, const GroupoidMorphism& f, ObjId seed, ObjId at);

/// Right action of π(base, G) on the objects over G: x̃·f = dom(lift of f at x̃).
struct MonodromyAction {
  ObjId over;
  VertexGroup group;
  std::vector<ObjId> carrier;
  std::vector<std::vector<std::size_t>> table;  // [carrier index][element] -> carrier index

  std::size_t act(std::size_t point, Elem e) const { return table[point][e]; }
  std::vector<std::size_t> orbit(std::size_t point) const;
  Subgroup stabilizer(std::size_t point) const;
  bool is_transitive() const;
  std::size_t position(ObjId x) const;
};
/// Throws InputError on an empty fiber.
MonodromyAction monodromy(const Covering& p, ObjId base_object);

/// Number of objects in each fiber. Throws InputError unless the base is
/// connected and the fibers are nonempty.
std::size_t fold(const Covering& p);

/// π0-bijection with isomorphisms on every vertex group.
bool is_weak_equivalence(const GroupoidMorphism& f);

/// The covering restricted to a full subgroupoid of the total groupoid. The
/// objects must form a union of components. `marked` is a total object id.
struct RestrictedCovering;
RestrictedCovering restrict_covering(const Covering& p, std::span<const ObjId> objects,
                                     std::optional<ObjId> marked = std::nullopt);
/// Objects of the component containing x, ascending.
std::vector<ObjId> component_of(const FiniteGroupoid& g, ObjId x);

/// A covering followed by a covering.
Covering compose_coverings(const Covering& second, const Covering& first);

struct RestrictedCovering {
  Covering covering;
  GroupoidMorphism inclusion;  // into p.total()
};

}  // namespace covgpd
