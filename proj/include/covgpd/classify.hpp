#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covgpd/construct.hpp"
#include "covgpd/covering.hpp"
#include "covgpd/transform.hpp"

namespace covgpd {

/// phi: p.total -> q.total and psi: p.base -> q.base, both isomorphisms,
/// with q∘phi = psi∘p.
struct Equivalence {
  GroupoidMorphism phi;
  GroupoidMorphism psi;
};

struct EquivalenceOptions {
  bool fixed_base = true;  // psi = identity, bases must agree
  bool pointed = false;    // phi sends p's marked object to q's
};

/// Candidates are fixed by one object per component of p.total and found by
/// lifting. Without a fixed base every base isomorphism is tried.
std::optional<Equivalence> equivalent_coverings(const Covering& p, const Covering& q,
                                                const EquivalenceOptions& options = {});

/// Every covering morphism over a fixed base: phi with q∘phi = p.
std::vector<GroupoidMorphism> covering_morphisms(const Covering& p, const Covering& q,
                                                 std::size_t limit = 200000);

/// f^*p over H with the map back to p.total. Objects are pairs (Y, x̃) with
/// f(Y) = p(x̃), ordered by Y then by the fiber order of x̃.
struct Pullback {
  Covering covering;
  GroupoidMorphism to_total;
};
Pullback pullback_covering(const Covering& p, const GroupoidMorphism& f);

/// left ×_G right with both projections. The covering is over the common base.
struct FiberedProduct {
  Covering covering;
  GroupoidMorphism to_left;
  GroupoidMorphism to_right;
  /// Product object over (x̃, ỹ), if they lie over the same base object.
  std::optional<ObjId> pair(ObjId left, ObjId right) const;
};
FiberedProduct fibered_product(const Covering& left, const Covering& right);

/// The component of left ×_G right through (marked left, marked right).
Covering meet_covering(const Covering& left, const Covering& right);

/// Pushout of two coverings out of one total groupoid, glued by union-find on
/// objects and arrows. `universal` supplies the map to the base.
struct Pushout {
  Covering covering;       // pushout -> base
  GroupoidMorphism from_left;
  GroupoidMorphism from_right;
  GroupoidMorphism glue;   // universal.total -> pushout
};
Pushout pushout_covering(const Covering& universal, const Covering& left, const Covering& right);

/// δ(Π) = (G̃/Π, υ, p′) for a subgroup Π of Γ = Cov(G̃/G).
struct LatticeNode {
  Subgroup pi;
  OrbitGroupoid orbit;
  Covering upper;  // p′: G̃ -> G̃/Π, marked o(G̃0)
  Covering lower;  // υ: G̃/Π -> G, marked o(G̃0)
  std::size_t fold = 0;
  bool regular = false;
};

struct LatticeFindings {
  std::size_t coverings_classified = 0;  // connected coverings pushed through γ then δ
  std::size_t r_choices = 0;             // (covering, r) pairs tried
  std::size_t r_splits = 0;              // coverings whose Π depends on r
  bool r_conjugate = true;               // the Π found for one covering are always conjugate
};

struct GaloisLattice {
  Covering universal;
  CovGroup cov;
  std::vector<Subgroup> subgroups;
  std::vector<LatticeNode> nodes;
  std::vector<std::vector<bool>> below;         // below[i][j]: node i ⪯ node j
  std::vector<std::vector<std::size_t>> meet;   // pullback component, as a node index
  std::vector<std::vector<std::size_t>> join;   // pushout, as a node index
  LatticeFindings findings;

  std::size_t node_of(const Subgroup& pi) const;
};

/// Γ-subgroup of a pointed connected covering: Cov(G̃/H̃) via the lift r of
/// the universal cover through q sending G̃0 to `at` (q's marked object by
/// default), identified inside Γ by the image of G̃0.
Subgroup galois_subgroup(const Covering& universal, const CovGroup& cov, const Covering& q,
                         std::optional<ObjId> at = std::nullopt);

/// Builds the lattice and verifies it; throws VerificationFailure naming the
/// failing check, BoundExceeded when Γ is too large.
GaloisLattice build_lattice(const GroupoidPtr& base, ObjId g0);

/// Hasse diagram, rankdir=BT, identity covering on top.
std::string lattice_to_dot(const GaloisLattice& lattice);

}  // namespace covgpd
