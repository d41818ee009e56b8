#include "covgpd/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "covgpd/error.hpp"

namespace covgpd {

namespace {

// Every phi: f.source -> q.total with q∘phi = f, one seed per component.
void for_each_lift(const Covering& q, const GroupoidMorphism& f, std::optional<std::pair<ObjId, ObjId>> anchor,
                   const std::function<bool(const GroupoidMorphism&)>& visit) {
  const Components comps = components(*f.source);
  GroupoidMorphism partial{f.source, q.total_ptr(), std::vector<ObjId>(f.source->num_objects()),
                           std::vector<ArrId>(f.source->num_arrows())};
  bool stop = false;
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (stop) return;
    if (k == comps.size()) {
      if (!visit(partial)) stop = true;
      return;
    }
    ObjId seed = comps.blocks[k].front();
    std::vector<ObjId> candidates = q.over(f(seed));
    if (anchor && comps.block_of[anchor->first.index()] == k) {
      seed = anchor->first;
      candidates = {anchor->second};
      if (q.project(anchor->second) != f(seed)) return;
    }
    for (ObjId y : candidates) {
      if (lift_component(q, f, seed, y, partial)) step(k + 1);
      if (stop) return;
    }
  };
  step(0);
}

std::optional<GroupoidMorphism> find_lift_iso(const Covering& p, const Covering& q, const GroupoidMorphism& f,
                                              bool pointed) {
  if (p.total().num_objects() != q.total().num_objects() || p.total().num_arrows() != q.total().num_arrows())
    return std::nullopt;
  std::optional<std::pair<ObjId, ObjId>> anchor;
  if (pointed) anchor = std::make_pair(p.marked_or_first(), q.marked_or_first());
  std::optional<GroupoidMorphism> found;
  for_each_lift(q, f, anchor, [&](const GroupoidMorphism& phi) {
    if (is_functorial(phi) && is_isomorphism(phi)) {
      found = phi;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::optional<Equivalence> equivalent_coverings(const Covering& p, const Covering& q,
                                                const EquivalenceOptions& options) {
  if (options.fixed_base) {
    if (!same_groupoid(p.base_ptr(), q.base_ptr()))
      throw InputError("equivalent_coverings: bases differ under a fixed base");
    auto phi = find_lift_iso(p, q, p.morphism(), options.pointed);
    if (!phi) return std::nullopt;
    GroupoidMorphism psi = identity_morphism(p.base_ptr());
    psi.target = q.base_ptr();
    return Equivalence{std::move(*phi), std::move(psi)};
  }
  std::optional<Equivalence> found;
  for_each_morphism(p.base_ptr(), q.base_ptr(), [&](const GroupoidMorphism& psi) {
    if (!is_isomorphism(psi)) return true;
    if (options.pointed && psi(p.project(p.marked_or_first())) != q.project(q.marked_or_first())) return true;
    auto phi = find_lift_iso(p, q, compose(psi, p.morphism()), options.pointed);
    if (!phi) return true;
    found = Equivalence{std::move(*phi), psi};
    return false;
  });
  return found;
}

std::vector<GroupoidMorphism> covering_morphisms(const Covering& p, const Covering& q, std::size_t limit) {
  if (!same_groupoid(p.base_ptr(), q.base_ptr())) throw InputError("covering_morphisms: bases differ");
  std::vector<GroupoidMorphism> out;
  for_each_lift(q, p.morphism(), std::nullopt, [&](const GroupoidMorphism& phi) {
    if (!is_functorial(phi)) throw VerificationFailure("consistent lift is not functorial");
    out.push_back(phi);
    if (out.size() > limit) throw BoundExceeded("more than " + std::to_string(limit) + " covering morphisms");
    return true;
  });
  return out;
}

Pullback pullback_covering(const Covering& p, const GroupoidMorphism& f) {
  if (!same_groupoid(f.target, p.base_ptr())) throw InputError("pullback_covering: f does not land in the base");
  const auto& h = *f.source;
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::string>> names(h.num_objects());
  for (std::size_t y = 0; y < h.num_objects(); ++y) {
    const auto& over = p.over(f(ObjId(y)));
    sizes.push_back(over.size());
    for (ObjId x : over) names[y].push_back("(" + h.object_name(ObjId(y)) + "," + p.total().object_name(x) + ")");
  }
  std::vector<std::vector<std::size_t>> transport(h.num_arrows());
  for (std::size_t u = 0; u < h.num_arrows(); ++u) {
    const ObjId y = h.cod(ArrId(u));
    for (ObjId x : p.over(f(y)))
      transport[u].push_back(fiber_position(p, p.total().dom(p.lift(f(ArrId(u)), x))));
  }
  Covering c = covering_from_transport(f.source, sizes, transport, names);

  GroupoidMorphism back{c.total_ptr(), p.total_ptr(), {}, {}};
  for (std::size_t y = 0; y < h.num_objects(); ++y)
    for (ObjId x : p.over(f(ObjId(y)))) back.obj_map.push_back(x);
  for (std::size_t a = 0; a < c.total().num_arrows(); ++a) {
    const ObjId x = back(c.total().cod(ArrId(a)));
    back.arr_map.push_back(p.lift(f(c.project(ArrId(a))), x));
  }
  if (!is_functorial(back) || !compose(p.morphism(), back).same_maps(compose(f, c.morphism())))
    throw VerificationFailure("pullback square does not commute");
  return Pullback{std::move(c), std::move(back)};
}

std::optional<ObjId> FiberedProduct::pair(ObjId left, ObjId right) const {
  for (std::size_t x = 0; x < covering.total().num_objects(); ++x)
    if (to_left(ObjId(x)) == left && to_right(ObjId(x)) == right) return ObjId(x);
  return std::nullopt;
}

FiberedProduct fibered_product(const Covering& left, const Covering& right) {
  if (!same_groupoid(left.base_ptr(), right.base_ptr())) throw InputError("fibered_product: bases differ");
  Pullback pb = pullback_covering(right, left.morphism());
  Covering c = compose_coverings(left, pb.covering);
  return FiberedProduct{std::move(c), pb.covering.morphism(), std::move(pb.to_total)};
}

Covering meet_covering(const Covering& left, const Covering& right) {
  const FiberedProduct fp = fibered_product(left, right);
  auto m = fp.pair(left.marked_or_first(), right.marked_or_first());
  if (!m) throw InputError("meet_covering: marked objects lie over different base objects");
  const auto comp = component_of(fp.covering.total(), *m);
  return restrict_covering(fp.covering, comp, *m).covering;
}

Pushout pushout_covering(const Covering& universal, const Covering& left, const Covering& right) {
  if (!same_groupoid(left.total_ptr(), universal.total_ptr()) ||
      !same_groupoid(right.total_ptr(), universal.total_ptr()))
    throw InputError("pushout_covering: coverings do not share the universal total groupoid");
  const auto& g = universal.total();

  auto classes = [](std::size_t n, auto image_left, auto image_right) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = root(parent[i]);
    };
    for (const std::function<std::size_t(std::size_t)>& image :
         {std::function<std::size_t(std::size_t)>(image_left), std::function<std::size_t(std::size_t)>(image_right)}) {
      std::vector<std::size_t> first(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = image(i);
        if (first[k] == n) first[k] = i;
        else parent[root(i)] = root(first[k]);
      }
    }
    std::vector<std::size_t> label(n, n);
    std::vector<std::size_t> out(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t r = root(i);
      if (label[r] == n) label[r] = next++;
      out[i] = label[r];
    }
    return out;
  };
  const auto obj_class = classes(
      g.num_objects(), [&](std::size_t x) { return left.project(ObjId(x)).index(); },
      [&](std::size_t x) { return right.project(ObjId(x)).index(); });
  const auto arr_class = classes(
      g.num_arrows(), [&](std::size_t a) { return left.project(ArrId(a)).index(); },
      [&](std::size_t a) { return right.project(ArrId(a)).index(); });

  QuotientGroupoid q = quotient_groupoid(universal.total_ptr(), obj_class, arr_class);
  auto down = factor_through(q.projection, universal.morphism());
  auto from_left = factor_through(left.morphism(), q.projection);
  auto from_right = factor_through(right.morphism(), q.projection);
  if (!down || !from_left || !from_right) throw VerificationFailure("pushout maps do not factor");
  Covering c = make_covering(std::move(*down), "pushout").with_marked(q.projection(universal.marked_or_first()));
  return Pushout{std::move(c), std::move(*from_left), std::move(*from_right), std::move(q.projection)};
}

Subgroup galois_subgroup(const Covering& universal, const CovGroup& cov, const Covering& q,
                         std::optional<ObjId> at) {
  const ObjId target = at ? *at : q.marked_or_first();
  auto r = lift_morphism(q, universal.morphism(), cov.base_point, target);
  if (!r) throw VerificationFailure("universal cover does not lift through a covering");
  const Covering rc = make_covering(std::move(*r), "lift of the universal cover");
  const CovGroup upstairs = covering_transformations(rc, cov.base_point);
  std::vector<Elem> elements;
  for (const auto& h : upstairs.elements) {
    auto e = cov.find(h);
    if (!e) throw VerificationFailure("transformation over a covering is not in Cov of the universal cover");
    elements.push_back(*e);
  }
  return make_subgroup(cov.group, std::move(elements));
}

std::size_t GaloisLattice::node_of(const Subgroup& pi) const {
  auto it = std::find(subgroups.begin(), subgroups.end(), pi);
  if (it == subgroups.end()) throw InputError("subgroup is not in the lattice");
  return static_cast<std::size_t>(it - subgroups.begin());
}

namespace {

bool pointed_equivalent(const Covering& a, const Covering& b) {
  return equivalent_coverings(a, b, {.fixed_base = true, .pointed = true}).has_value();
}

[[noreturn]] void check_failure(const std::string& check, const std::string& detail) {
  throw VerificationFailure("lattice " + check + " check: " + detail);
}

std::string show(const FiniteGroup& g, const Subgroup& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.elements.size(); ++i) out += (i ? "," : "") + g.name(s.elements[i]);
  return out + "}";
}

}  // namespace

GaloisLattice build_lattice(const GroupoidPtr& base, ObjId g0) {
  Covering universal = universal_cover(base, g0);
  CovGroup cov = covering_transformations(universal);
  std::vector<Subgroup> subs = subgroups(cov.group);
  GaloisLattice lat{universal, std::move(cov), std::move(subs), {}, {}, {}, {}, {}};
  const FiniteGroup& gamma = lat.cov.group;
  const ObjId top = lat.cov.base_point;
  const std::size_t n = lat.subgroups.size();

  for (const Subgroup& pi : lat.subgroups) {
    OrbitGroupoid orbit = orbit_groupoid(as_action(lat.cov, pi));
    Covering upper = orbit_covering(orbit, top);
    auto upsilon = factor_through(upper.morphism(), universal.morphism());
    if (!upsilon) check_failure("factorization", "p does not factor through the orbit morphism of " + show(gamma, pi));
    Covering lower = make_covering(std::move(*upsilon), "orbit factor").with_marked(upper.project(top));
    const std::size_t k = fold(lower);
    const bool regular = is_regular(lower);
    lat.nodes.push_back(LatticeNode{pi, std::move(orbit), std::move(upper), std::move(lower), k, regular});
  }

  // γδ = id, and π(G̃/Π, o(G̃0)) ≅ Π.
  for (const auto& node : lat.nodes) {
    const Subgroup back = galois_subgroup(universal, lat.cov, node.lower);
    if (back != node.pi) check_failure("inverse", "Cov of the orbit cover of " + show(gamma, node.pi) + " is " + show(gamma, back));
    const ObjId star = node.upper.project(top);
    const VertexGroup loops = vertex_group(*node.orbit.quotient, star);
    const SubgroupGroup pi_group = as_group(gamma, node.pi);
    std::vector<Elem> map;
    for (ArrId loop : loops.loops) {
      std::optional<Elem> theta;
      for (std::size_t a = 0; a < universal.total().num_arrows(); ++a) {
        if (node.upper.project(ArrId(a)) != loop || universal.total().cod(ArrId(a)) != top) continue;
        theta = lat.cov.element_sending(universal.total().dom(ArrId(a)));
      }
      if (!theta || !pi_group.local[*theta]) check_failure("vertex group", "loop has no element of Π");
      map.push_back(*pi_group.local[*theta]);
    }
    if (!is_isomorphism(loops.group, pi_group.group, map))
      check_failure("vertex group", "π(G̃/Π) is not isomorphic to " + show(gamma, node.pi));
  }

  // δγ = id on every connected covering built from a vertex subgroup, for each choice of r.
  const VertexGroup pi_base = vertex_group(*base, g0);
  for (const Subgroup& s : subgroups(pi_base.group)) {
    const Covering h = covering_from_subgroup(base, g0, s);
    std::vector<Subgroup> found;
    for (ObjId y : h.over(g0)) {
      const Subgroup pi = galois_subgroup(universal, lat.cov, h, y);
      const auto& node = lat.nodes[lat.node_of(pi)];
      if (!pointed_equivalent(node.lower, h.with_marked(y)))
        check_failure("inverse", "covering from " + show(pi_base.group, s) + " is not equivalent to δγ of itself");
      ++lat.findings.r_choices;
      if (std::find(found.begin(), found.end(), pi) == found.end()) found.push_back(pi);
    }
    ++lat.findings.coverings_classified;
    if (found.size() > 1) ++lat.findings.r_splits;
    for (const auto& pi : found) {
      bool conj = false;
      for (Elem e = 0; e < gamma.order() && !conj; ++e) conj = conjugate(gamma, found.front(), e) == pi;
      if (!conj) lat.findings.r_conjugate = false;
      if (!equivalent_coverings(lat.nodes[lat.node_of(found.front())].lower, lat.nodes[lat.node_of(pi)].lower))
        check_failure("inverse", "r choices give inequivalent coverings");
    }
  }

  // δ is injective on pointed classes and γ reverses ⪯.
  lat.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && pointed_equivalent(lat.nodes[i].lower, lat.nodes[j].lower))
        check_failure("injectivity", "distinct subgroups give equivalent coverings");
      auto s = factor_through(lat.nodes[j].upper.morphism(), lat.nodes[i].upper.morphism());
      if (s && !is_covering(*s).covering) check_failure("order", "comparison map is not a covering");
      lat.below[i][j] = s.has_value();
      if (lat.below[i][j] != is_contained(lat.subgroups[j], lat.subgroups[i]))
        check_failure("order", "order is not reversed between " + show(gamma, lat.subgroups[i]) + " and " +
                                  show(gamma, lat.subgroups[j]));
    }
  }

  // pullback component = δ(Π∩Φ), pushout = δ(⟨Π∪Φ⟩), with Cov computed geometrically.
  lat.meet.assign(n, std::vector<std::size_t>(n, 0));
  lat.join.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup cap = intersection(lat.subgroups[i], lat.subgroups[j]);
      const Subgroup cup = covgpd::join(gamma, lat.subgroups[i], lat.subgroups[j]);
      const Covering pb = meet_covering(lat.nodes[i].lower, lat.nodes[j].lower);
      const std::size_t m = lat.node_of(cap);
      if (galois_subgroup(universal, lat.cov, pb) != cap || !pointed_equivalent(pb, lat.nodes[m].lower))
        check_failure("meet", "pullback component differs from δ(" + show(gamma, cap) + ")");
      lat.meet[i][j] = m;
      const Pushout po = pushout_covering(universal, lat.nodes[i].upper, lat.nodes[j].upper);
      const std::size_t k = lat.node_of(cup);
      if (galois_subgroup(universal, lat.cov, po.covering) != cup || !pointed_equivalent(po.covering, lat.nodes[k].lower))
        check_failure("join", "pushout differs from δ(" + show(gamma, cup) + ")");
      lat.join[i][j] = k;
    }
  }

  // fold = index, regular iff normal.
  for (const auto& node : lat.nodes) {
    if (node.fold != index(gamma, node.pi)) check_failure("fold", "fold differs from the index of " + show(gamma, node.pi));
    if (node.regular != is_normal(gamma, node.pi))
      check_failure("regularity", "regularity differs from normality for " + show(gamma, node.pi));
  }
  return lat;
}

std::string lattice_to_dot(const GaloisLattice& lattice) {
  const auto& subs = lattice.subgroups;
  const std::size_t n = subs.size();
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i)
    out << "  n" << i << " [label=\"fold=" << lattice.nodes[i].fold
        << ", regular=" << (lattice.nodes[i].regular ? "+" : "-") << "\"];\n";
  auto strictly = [&](std::size_t a, std::size_t b) { return a != b && is_contained(subs[a], subs[b]); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictly(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (strictly(i, k) && strictly(k, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace covgpd
