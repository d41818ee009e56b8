#include "covgpd/transform.hpp"

#include <algorithm>

#include "covgpd/error.hpp"

namespace covgpd {

std::optional<Elem> CovGroup::element_sending(ObjId target) const {
  return element_mapping(base_point, target);
}

std::optional<Elem> CovGroup::element_mapping(ObjId from, ObjId to) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i](from) == to) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<Elem> CovGroup::find(const GroupoidMorphism& h) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].same_maps(h)) return static_cast<Elem>(i);
  return std::nullopt;
}

CovGroup covering_transformations(const Covering& p, std::optional<ObjId> base_point) {
  if (!is_connected(p.total())) throw InputError("covering_transformations: total groupoid is not connected");
  const ObjId x0 = base_point ? p.total().require_object(*base_point) : p.marked_or_first();

  std::vector<ObjId> candidates{x0};
  for (ObjId y : p.over(p.project(x0)))
    if (y != x0) candidates.push_back(y);

  CovGroup cov{p, x0, {}, {}, FiniteGroup{}};
  for (ObjId y : candidates) {
    auto h = lift_morphism(p, p.morphism(), x0, y);
    if (!h) continue;
    if (!is_isomorphism(*h)) throw VerificationFailure("lift of p between equal stabilizers is not invertible");
    cov.elements.push_back(std::move(*h));
    cov.image_of_base.push_back(y);
  }

  const std::size_t n = cov.elements.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("h" + p.total().object_name(cov.image_of_base[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const GroupoidMorphism prod = compose(cov.elements[i], cov.elements[j]);
      auto k = cov.element_sending(prod(x0));
      if (!k || !cov.elements[*k].same_maps(prod))
        throw VerificationFailure("covering transformations are not closed under composition");
      table[i * n + j] = *k;
    }
  }
  cov.group = FiniteGroup(n, std::move(table), std::move(names));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t x = 0; x < p.total().num_objects(); ++x)
      if (cov.elements[i](ObjId(x)) == ObjId(x))
        throw VerificationFailure("non-identity covering transformation has a fixed object");
  return cov;
}

GroupAction as_action(const CovGroup& cov, const std::optional<Subgroup>& sub) {
  if (!sub) return GroupAction{cov.group, cov.covering.total_ptr(), cov.elements};
  SubgroupGroup sg = as_group(cov.group, *sub);
  GroupAction a{sg.group, cov.covering.total_ptr(), {}};
  for (Elem e : sg.embedding) a.act.push_back(cov.elements[e]);
  return a;
}

bool is_regular(const Covering& p) {
  const ObjId x0 = p.marked_or_first();
  const VertexGroup pi = vertex_group(p.base(), p.project(x0));
  const bool normal = is_normal(pi.group, pushforward_vertex(p, x0));
  const CovGroup cov = covering_transformations(p, x0);
  const bool transitive = cov.elements.size() == p.over(p.project(x0)).size();
  if (normal != transitive)
    throw VerificationFailure("regularity by normality and by transitivity disagree");
  return normal;
}

NormalizerIso cov_normalizer_iso(const Covering& p, std::optional<ObjId> at) {
  const ObjId x = at ? p.total().require_object(*at) : p.marked_or_first();
  const VertexGroup pi = vertex_group(p.base(), p.project(x));
  const Subgroup push = pushforward_vertex(p, x);
  const Subgroup norm = normalizer(pi.group, push);
  SubgroupGroup ng = as_group(pi.group, norm);
  std::vector<Elem> local_push;
  for (Elem e : push.elements) local_push.push_back(*ng.local[e]);
  Quotient q = quotient(ng.group, make_subgroup(ng.group, local_push));
  NormalizerIso iso{x, push, norm, std::move(ng), std::move(q), covering_transformations(p, x), {}, {}};

  const auto& total = p.total();
  for (const auto& coset : iso.quotient.cosets) {
    std::optional<Elem> image;
    for (Elem local : coset) {
      const ArrId lifted = p.lift(pi.arrow(iso.normalizer_group.embedding[local]), x);
      auto h = iso.cov.element_sending(total.dom(lifted));
      if (!h) throw VerificationFailure("normalizer element has no covering transformation");
      if (image && *image != *h) throw VerificationFailure("normalizer map depends on the coset representative");
      image = h;
    }
    iso.map.push_back(*image);
    iso.reverse.push_back(iso.cov.group.inv(*image));
  }
  if (!is_isomorphism(iso.quotient.group, iso.cov.group, iso.map))
    throw VerificationFailure("normalizer quotient is not isomorphic to Cov via the lift map");
  return iso;
}

bool principal_action_check(const Covering& p) {
  if (!is_regular(p)) throw InputError("principal_action_check: covering is not regular");
  const CovGroup cov = covering_transformations(p);
  for (std::size_t c = 0; c < p.base().num_objects(); ++c) {
    const auto& fiber_objects = p.over(ObjId(c));
    if (fiber_objects.empty()) return false;
    for (ObjId y : fiber_objects) {
      std::vector<ObjId> images;
      for (const auto& h : cov.elements) images.push_back(h(fiber_objects.front()));
      if (std::find(images.begin(), images.end(), y) == images.end()) return false;
    }
    for (std::size_t i = 1; i < cov.elements.size(); ++i)
      for (ObjId y : fiber_objects)
        if (cov.elements[i](y) == y) return false;
  }
  const NormalizerIso iso = cov_normalizer_iso(p);
  const FiniteGroup pi = vertex_group(p.base(), p.project(iso.at)).group;
  if (iso.normalizer != whole_group(pi)) return false;
  return find_isomorphism(quotient(pi, iso.pushforward).group, cov.group).has_value();
}

std::vector<Elem> induced_f_sharp(const CovGroup& cov_h, const CovGroup& cov_g, const GroupoidMorphism& f,
                                  const GroupoidMorphism& f_tilde) {
  const Covering& ph = cov_h.covering;
  const Covering& pg = cov_g.covering;
  for (const Covering* c : {&ph, &pg})
    for (std::size_t x = 0; x < c->total().num_objects(); ++x)
      if (c->total().hom(ObjId(x), ObjId(x)).size() != 1)
        throw InputError("induced_f_sharp: covering is not universal");
  if (!same_groupoid(f.source, ph.base_ptr()) || !same_groupoid(f.target, pg.base_ptr()))
    throw InputError("induced_f_sharp: f does not run between the bases");
  if (!compose(pg.morphism(), f_tilde).same_maps(compose(f, ph.morphism())))
    throw InputError("induced_f_sharp: f~ does not cover f");

  const ObjId h0 = cov_h.base_point;
  const ObjId g0 = f_tilde(h0);
  std::vector<Elem> sharp;
  for (std::size_t i = 0; i < cov_h.elements.size(); ++i) {
    const auto& g = cov_h.elements[i];
    auto k = cov_g.element_mapping(g0, f_tilde(g(h0)));
    if (!k) throw VerificationFailure("no covering transformation matches f~ g");
    if (!compose(cov_g.elements[*k], f_tilde).same_maps(compose(f_tilde, g)))
      throw VerificationFailure("f#(g) f~ differs from f~ g");
    sharp.push_back(*k);
  }

  // Route through the vertex groups: ψ_H(a)(h0) = h0·a and ψ_G(b)(g0) = g0·b.
  const VertexGroup pi_h = vertex_group(ph.base(), ph.project(h0));
  const VertexGroup pi_g = vertex_group(pg.base(), pg.project(g0));
  for (Elem a = 0; a < pi_h.group.order(); ++a) {
    const ObjId moved = ph.total().dom(ph.lift(pi_h.arrow(a), h0));
    auto psi_h = cov_h.element_sending(moved);
    const Elem b = pi_g.element(f(pi_h.arrow(a)));
    auto psi_g = cov_g.element_mapping(g0, pg.total().dom(pg.lift(pi_g.arrow(b), g0)));
    if (!psi_h || !psi_g) throw VerificationFailure("vertex group element has no covering transformation");
    if (sharp[*psi_h] != *psi_g) throw VerificationFailure("f# disagrees with the vertex group route");
  }
  if (!is_homomorphism(cov_h.group, cov_g.group, sharp)) throw VerificationFailure("f# is not a homomorphism");
  return sharp;
}

}  // namespace covgpd
