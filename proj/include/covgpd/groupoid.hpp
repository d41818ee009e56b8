#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covgpd/group.hpp"
#include "covgpd/ids.hpp"

namespace covgpd {

/// A finite groupoid stored extensionally.
///
/// Composition reads right to left: compose(f, h) = f∘h is defined exactly
/// when cod(h) = dom(f), and runs from dom(h) to cod(f). Juxtaposition "fh"
/// in the mathematical literature means the same arrow.
///
/// The tables are taken as given. Identities and inverses are derived from
/// the composition table; use validate() to check the category and groupoid
/// laws before trusting the value.
class FiniteGroupoid {
 public:
  struct ArrowSpec {
    ObjId dom;
    ObjId cod;
    std::string name;
  };

  static constexpr std::int32_t kUndefined = -1;

  /// The empty groupoid.
  FiniteGroupoid() = default;

  /// `compose_table` is dense, indexed [f * arrows + h], kUndefined where the
  /// composite is absent. Throws InputError on size or range errors only.
  FiniteGroupoid(std::vector<std::string> object_names, std::vector<ArrowSpec> arrows,
                 std::vector<std::int32_t> compose_table);

  std::size_t num_objects() const { return object_names_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  bool empty() const { return object_names_.empty(); }

  ObjId dom(ArrId a) const { return arrows_[a.index()].dom; }
  ObjId cod(ArrId a) const { return arrows_[a.index()].cod; }

  /// Throws InputError when the table has no identity at x.
  ArrId identity(ObjId x) const;
  std::optional<ArrId> try_identity(ObjId x) const;
  /// Throws InputError when the table has no inverse for a.
  ArrId inverse(ArrId a) const;
  std::optional<ArrId> try_inverse(ArrId a) const;

  /// f∘h; throws InputError when undefined.
  ArrId compose(ArrId f, ArrId h) const;
  std::optional<ArrId> try_compose(ArrId f, ArrId h) const;
  std::int32_t raw_compose(std::size_t f, std::size_t h) const {
    return compose_[f * arrows_.size() + h];
  }

  /// Arrows with codomain x, ordered by id.
  std::span<const ArrId> star(ObjId x) const { return stars_[x.index()]; }
  /// Position of a inside star(cod(a)).
  std::size_t star_position(ArrId a) const { return star_pos_[a.index()]; }
  /// Arrows x -> y, ordered by id.
  std::vector<ArrId> hom(ObjId x, ObjId y) const;
  /// Arrows with domain x, ordered by id.
  std::span<const ArrId> costar(ObjId x) const { return costars_[x.index()]; }

  const std::string& object_name(ObjId x) const { return object_names_[x.index()]; }
  const std::string& arrow_name(ArrId a) const { return arrows_[a.index()].name; }
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<ArrowSpec>& arrows() const { return arrows_; }
  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<ArrId> find_arrow(const std::string& name) const;

  bool has_object(ObjId x) const { return x.index() < num_objects(); }
  bool has_arrow(ArrId a) const { return a.index() < num_arrows(); }
  ObjId require_object(ObjId x) const;

  /// Same objects, arrows and tables (names ignored).
  bool same_structure(const FiniteGroupoid& other) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<ArrowSpec> arrows_;
  std::vector<std::int32_t> compose_;
  std::vector<std::int32_t> identity_;
  std::vector<std::int32_t> inverse_;
  std::vector<std::vector<ArrId>> stars_;
  std::vector<std::vector<ArrId>> costars_;
  std::vector<std::size_t> star_pos_;
};

/// Builds a groupoid from a total composition function on composable pairs.
template <typename ComposeFn>
FiniteGroupoid make_groupoid(std::vector<std::string> object_names,
                             std::vector<FiniteGroupoid::ArrowSpec> arrows, ComposeFn&& compose) {
  const std::size_t n = arrows.size();
  std::vector<std::int32_t> table(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h)
      if (arrows[h].cod == arrows[f].dom)
        table[f * n + h] = static_cast<std::int32_t>(compose(ArrId(f), ArrId(h)).index());
  return FiniteGroupoid(std::move(object_names), std::move(arrows), std::move(table));
}

struct Violation {
  std::string law;
  std::vector<std::uint32_t> ids;  // arrow ids, or object ids for per-object laws
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary(std::size_t max_items = 5) const;
};

/// Lists every violated category or groupoid law.
ValidationReport validate(const FiniteGroupoid& g);
/// Throws InputError naming the first violations.
void require_valid(const FiniteGroupoid& g, const std::string& what);

struct Star {
  ObjId at;
  std::vector<ArrId> arrows;
};
Star star(const FiniteGroupoid& g, ObjId x);

/// Every nonempty set of arrows into x closed under precomposition, found by
/// brute force over subsets of the star. Small stars only.
std::vector<std::vector<ArrId>> sieves(const FiniteGroupoid& g, ObjId x);

struct Components {
  std::vector<std::vector<ObjId>> blocks;  // ordered by least object id
  std::vector<std::size_t> block_of;       // object -> block
  std::size_t size() const { return blocks.size(); }
};
Components components(const FiniteGroupoid& g);
bool is_connected(const FiniteGroupoid& g);  // false for the empty groupoid

/// π(g, x) with element i the i-th loop at x in id order.
struct VertexGroup {
  ObjId at;
  std::vector<ArrId> loops;
  std::vector<std::optional<Elem>> element_of;  // arrow -> element
  FiniteGroup group;

  ArrId arrow(Elem e) const { return loops[e]; }
  Elem element(ArrId a) const;
};
VertexGroup vertex_group(const FiniteGroupoid& g, ObjId x);

/// Objects and arrows of `g` first, then those of `h`. Clashing names get a
/// tag prefix.
FiniteGroupoid disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h,
                              const std::string& left_tag = "0", const std::string& right_tag = "1");

/// Same ids, dom and cod swapped, composition reversed.
FiniteGroupoid opposite(const FiniteGroupoid& g);

/// Full subgroupoid on `objects` (ascending), with the id maps back.
struct Subgroupoid {
  FiniteGroupoid groupoid;
  std::vector<ObjId> objects;  // local -> parent
  std::vector<ArrId> arrows;   // local -> parent
};
Subgroupoid full_subgroupoid(const FiniteGroupoid& g, std::span<const ObjId> objects);
/// Subgroupoid on the given objects and arrows; the arrow set must be closed.
Subgroupoid subgroupoid(const FiniteGroupoid& g, std::span<const ObjId> objects,
                        std::span<const ArrId> arrows);

/// One-object groupoid of a group; arrow i is element i.
FiniteGroupoid group_groupoid(const FiniteGroup& group, const std::string& object_name = "*");
/// Codiscrete groupoid: exactly one arrow between any two objects.
FiniteGroupoid codiscrete(std::vector<std::string> object_names);

}  // namespace covgpd
