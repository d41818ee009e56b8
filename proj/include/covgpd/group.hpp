#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace covgpd {

using Elem = std::uint32_t;

/// Finite group given by its full multiplication table.
///
/// mul(a, b) is the product "ab". When the group is a vertex group of a
/// groupoid this is composition a∘b, so the group inherits the groupoid's
/// right-to-left reading.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Checks closure, associativity, identity and inverses. Throws InputError.
  FiniteGroup(std::size_t order, std::vector<Elem> table, std::vector<std::string> names = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Permutations of {1..n} in lexicographic order of their image lists,
  /// product (στ)(i) = σ(τ(i)), names in cycle notation.
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem h) const { return mul(mul(inv(g), h), g); }  // g⁻¹hg
  const std::string& name(Elem e) const { return names_[e]; }
  std::optional<Elem> find(const std::string& name) const;
  std::size_t element_order(Elem e) const;
  std::span<const Elem> table() const { return table_; }
  bool is_abelian() const;

 private:
  std::size_t order_ = 1;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> names_;
  Elem identity_ = 0;
};

/// A subgroup as a sorted element list of some parent group.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem e) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.elements <=> b.elements;
  }
};

/// True when `elements` is closed under product and inverse and contains 1.
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements);
/// Validates and canonicalizes; throws InputError on a non-subgroup.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<Elem> elements);

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> generators);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
bool is_contained(const Subgroup& a, const Subgroup& b);

inline constexpr std::size_t kDefaultSubgroupBound = 64;

/// All subgroups sorted by (order, elements). Throws BoundExceeded past `bound`.
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Elem by);

/// Right cosets Hg, each sorted, ordered by least element.
std::vector<std::vector<Elem>> right_cosets(const FiniteGroup& g, const Subgroup& h);
std::size_t index(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  std::vector<std::vector<Elem>> cosets;  // element i of `group` is cosets[i]
  std::vector<Elem> coset_of;             // parent element -> quotient element
};

/// G/H on right cosets. Throws InputError when H is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& h);

/// A subgroup repackaged as a group of its own.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;  // local element -> parent element
  std::vector<std::optional<Elem>> local;  // parent element -> local element
};
SubgroupGroup as_group(const FiniteGroup& g, const Subgroup& h);

/// Greedy generating set in element order.
std::vector<Elem> generating_set(const FiniteGroup& g);

bool is_homomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> map);
bool is_isomorphism(const FiniteGroup& from, const FiniteGroup& to, std::span<const Elem> map);

/// Every homomorphism from -> to, in lexicographic order of generator images.
std::vector<std::vector<Elem>> homomorphisms(const FiniteGroup& from, const FiniteGroup& to);

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace covgpd
