#include "covgpd/topos.hpp"

#include <algorithm>
#include <functional>

#include "covgpd/error.hpp"

namespace covgpd {

std::vector<std::string> presheaf_problems(const Presheaf& f) {
  std::vector<std::string> out;
  const auto& g = *f.base;
  if (f.sizes.size() != g.num_objects()) return {"presheaf has " + std::to_string(f.sizes.size()) + " sets for " +
                                                 std::to_string(g.num_objects()) + " objects"};
  if (f.maps.size() != g.num_arrows()) return {"presheaf has " + std::to_string(f.maps.size()) + " maps for " +
                                               std::to_string(g.num_arrows()) + " arrows"};
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t from = f.sizes[g.cod(ArrId(a)).index()];
    const std::size_t to = f.sizes[g.dom(ArrId(a)).index()];
    const auto& m = f.maps[a];
    if (m.size() != from) {
      out.push_back("map of " + g.arrow_name(ArrId(a)) + " has the wrong length");
      continue;
    }
    std::vector<bool> hit(to, false);
    for (std::size_t v : m) {
      if (v >= to) {
        out.push_back("map of " + g.arrow_name(ArrId(a)) + " leaves its codomain");
        break;
      }
      hit[v] = true;
    }
    if (from != to || std::find(hit.begin(), hit.end(), false) != hit.end())
      out.push_back("map of " + g.arrow_name(ArrId(a)) + " is not a bijection");
  }
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    const auto& m = f.maps[g.identity(ObjId(x)).index()];
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != i) {
        out.push_back("identity at " + g.object_name(ObjId(x)) + " does not act trivially");
        break;
      }
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    for (std::size_t b = 0; b < g.num_arrows(); ++b) {
      auto ab = g.try_compose(ArrId(a), ArrId(b));
      if (!ab) continue;
      const auto& fa = f.maps[a];
      for (std::size_t i = 0; i < fa.size(); ++i)
        if (f.maps[ab->index()][i] != f.maps[b][fa[i]]) {
          out.push_back("F(" + g.arrow_name(ArrId(a)) + g.arrow_name(ArrId(b)) + ") is not F(" +
                        g.arrow_name(ArrId(b)) + ")F(" + g.arrow_name(ArrId(a)) + ")");
          break;
        }
    }
  }
  return out;
}

Presheaf covering_to_presheaf(const Covering& p) {
  const auto& g = p.base();
  Presheaf f{p.base_ptr(), {}, {}, std::vector<std::vector<std::size_t>>(g.num_arrows())};
  for (std::size_t c = 0; c < g.num_objects(); ++c) {
    f.sizes.push_back(p.over(ObjId(c)).size());
    f.names.emplace_back();
    for (ObjId x : p.over(ObjId(c))) f.names.back().push_back(p.total().object_name(x));
  }
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    for (ObjId x : transport_objects(p, ArrId(a))) f.maps[a].push_back(fiber_position(p, x));
  return f;
}

Covering presheaf_to_covering(const Presheaf& f) {
  if (auto problems = presheaf_problems(f); !problems.empty())
    throw InputError("presheaf is not functorial: " + problems.front());
  return covering_from_transport(f.base, f.sizes, f.maps, f.names);
}

Covering omega(const GroupoidPtr& base) {
  auto sum = share(disjoint_union(*base, *base, "true", "false"));
  const std::size_t n = base->num_objects();
  const std::size_t m = base->num_arrows();
  GroupoidMorphism codiagonal{sum, base, {}, {}};
  for (std::size_t x = 0; x < 2 * n; ++x) codiagonal.obj_map.push_back(ObjId(x % n));
  for (std::size_t a = 0; a < 2 * m; ++a) codiagonal.arr_map.push_back(ArrId(a % m));
  return make_covering(std::move(codiagonal), "omega");
}

GroupoidMorphism omega_true(const Covering& om) {
  return coproduct_injections(om.base_ptr(), om.base_ptr(), om.total_ptr()).first;
}

Subcovering restrict_to_components(const Covering& h, std::uint64_t mask) {
  const Components comps = components(h.total());
  std::vector<ObjId> objects;
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (mask >> k & 1U) objects.insert(objects.end(), comps.blocks[k].begin(), comps.blocks[k].end());
  std::sort(objects.begin(), objects.end());
  RestrictedCovering r = restrict_covering(h, objects);
  return Subcovering{std::move(r.covering), std::move(r.inclusion)};
}

GroupoidMorphism characteristic_morphism(const Covering& h, const Covering& s_cover, const GroupoidMorphism& s,
                                         const Covering& om) {
  if (!same_groupoid(s.source, s_cover.total_ptr()) || !same_groupoid(s.target, h.total_ptr()))
    throw InputError("characteristic_morphism: s does not run from S to H");
  if (!same_groupoid(om.base_ptr(), h.base_ptr()) || !same_groupoid(s_cover.base_ptr(), h.base_ptr()))
    throw InputError("characteristic_morphism: coverings have different bases");
  require_functorial(s, "subobject map");
  if (!compose(h.morphism(), s).same_maps(s_cover.morphism()))
    throw InputError("characteristic_morphism: s is not a morphism over the base");
  std::vector<bool> image(h.total().num_objects(), false);
  for (ObjId x : s.obj_map) {
    if (image[x.index()]) throw InputError("characteristic_morphism: s is not monic");
    image[x.index()] = true;
  }
  std::vector<ArrId> arrows = s.arr_map;
  std::sort(arrows.begin(), arrows.end());
  if (std::adjacent_find(arrows.begin(), arrows.end()) != arrows.end())
    throw InputError("characteristic_morphism: s is not monic");

  const std::size_t n = h.base().num_objects();
  const std::size_t m = h.base().num_arrows();
  GroupoidMorphism phi{h.total_ptr(), om.total_ptr(), {}, {}};
  for (std::size_t x = 0; x < h.total().num_objects(); ++x)
    phi.obj_map.push_back(ObjId(h.project(ObjId(x)).index() + (image[x] ? 0 : n)));
  for (std::size_t a = 0; a < h.total().num_arrows(); ++a) {
    const bool in = image[h.total().cod(ArrId(a)).index()];
    if (in != image[h.total().dom(ArrId(a)).index()])
      throw VerificationFailure("image of a covering morphism is not a union of components");
    phi.arr_map.push_back(ArrId(h.project(ArrId(a)).index() + (in ? 0 : m)));
  }
  require_functorial(phi, "characteristic morphism");
  if (pulled_back_objects(h, phi, om) != image)
    throw VerificationFailure("pullback of true along the characteristic morphism is not S");
  return phi;
}

std::vector<bool> pulled_back_objects(const Covering& h, const GroupoidMorphism& phi, const Covering& om) {
  const GroupoidMorphism t = omega_true(om);
  std::vector<bool> in_true(om.total().num_objects(), false);
  for (ObjId y : t.obj_map) in_true[y.index()] = true;
  std::vector<bool> out;
  for (std::size_t x = 0; x < h.total().num_objects(); ++x) out.push_back(in_true[phi(ObjId(x)).index()]);
  return out;
}

std::vector<GroupoidMorphism> classifying_morphisms(const Covering& h, const GroupoidMorphism& s,
                                                    const Covering& om) {
  std::vector<bool> image(h.total().num_objects(), false);
  for (ObjId x : s.obj_map) image[x.index()] = true;
  std::vector<GroupoidMorphism> out;
  for_each_morphism(h.total_ptr(), om.total_ptr(), [&](const GroupoidMorphism& m) {
    if (compose(om.morphism(), m).same_maps(h.morphism()) && pulled_back_objects(h, m, om) == image)
      out.push_back(m);
    return true;
  });
  return out;
}

SubobjectLattice subobjects(const Covering& h) {
  const Components comps = components(h.total());
  const std::size_t k = comps.size();
  if (k > 16) throw BoundExceeded("subobjects: more than 16 components");
  SubobjectLattice lat;
  lat.components = k;
  const std::size_t count = std::size_t{1} << k;
  const std::size_t n = h.total().num_objects();

  using Set = std::vector<bool>;
  std::vector<Set> sets;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    lat.masks.push_back(mask);
    const Subcovering sub = restrict_to_components(h, mask);
    Set s(n, false);
    for (ObjId x : sub.inclusion.obj_map) s[x.index()] = true;
    sets.push_back(std::move(s));
  }
  auto lookup = [&](const Set& s) -> std::optional<std::size_t> {
    auto it = std::find(sets.begin(), sets.end(), s);
    if (it == sets.end()) return std::nullopt;
    return static_cast<std::size_t>(it - sets.begin());
  };
  auto combine = [&](std::size_t a, std::size_t b, bool both) {
    Set s(n);
    for (std::size_t x = 0; x < n; ++x) s[x] = both ? (sets[a][x] && sets[b][x]) : (sets[a][x] || sets[b][x]);
    return lookup(s);
  };
  auto complement = [&](std::size_t a) {
    Set s(n);
    for (std::size_t x = 0; x < n; ++x) s[x] = !sets[a][x];
    return lookup(s);
  };
  const auto bottom = lookup(Set(n, false));
  const auto top = lookup(Set(n, true));
  bool ok = bottom && top;
  for (std::size_t a = 0; a < count && ok; ++a) {
    auto na = complement(a);
    if (!na || combine(a, *na, false) != top || combine(a, *na, true) != bottom) ok = false;
    for (std::size_t b = 0; b < count && ok; ++b) {
      auto cup = combine(a, b, false);
      auto cap = combine(a, b, true);
      if (!cup || !cap || cup != combine(b, a, false) || cap != combine(b, a, true)) {
        ok = false;
        break;
      }
      if (combine(a, *cap, false) != a || combine(a, *cup, true) != a) ok = false;
      for (std::size_t c = 0; c < count && ok; ++c) {
        auto bc_cup = combine(b, c, false);
        auto bc_cap = combine(b, c, true);
        auto ac_cap = combine(a, c, true);
        auto ac_cup = combine(a, c, false);
        if (combine(a, *bc_cup, true) != combine(*cap, *ac_cap, false)) ok = false;
        if (combine(a, *bc_cap, false) != combine(*cup, *ac_cup, true)) ok = false;
        if (combine(*cup, c, false) != combine(a, *bc_cup, false)) ok = false;
      }
    }
  }
  lat.boolean = ok;
  return lat;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > limit) throw BoundExceeded("exponential has more than " + std::to_string(limit) + " objects");
  }
  return out;
}

// Positions of x·g over C, for every x over C and g into C.
std::vector<std::size_t> transport_positions(const Covering& p, ArrId g) {
  std::vector<std::size_t> out;
  for (ObjId x : transport_objects(p, g)) out.push_back(fiber_position(p, x));
  return out;
}

}  // namespace

std::optional<ObjId> Exponential::find(ObjId base_object, const std::vector<std::size_t>& alpha) const {
  const auto& over = covering.over(base_object);
  for (ObjId x : over)
    if (values[x.index()] == alpha) return x;
  return std::nullopt;
}

Exponential exponential(const Covering& h, const Covering& k, std::size_t limit) {
  if (!same_groupoid(h.base_ptr(), k.base_ptr())) throw InputError("exponential: coverings have different bases");
  const auto& g = h.base();
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  for (std::size_t c = 0; c < g.num_objects(); ++c) {
    sizes.push_back(checked_power(h.over(ObjId(c)).size(), k.over(ObjId(c)).size(), limit));
    total += sizes.back();
    if (total > limit) throw BoundExceeded("exponential has more than " + std::to_string(limit) + " objects");
  }

  // α over C in mixed radix: digit x is α(x), base |H_C|.
  auto decode = [&](ObjId c, std::size_t index) {
    const std::size_t nh = h.over(c).size();
    std::vector<std::size_t> alpha(k.over(c).size());
    for (auto& v : alpha) {
      v = index % nh;
      index /= nh;
    }
    return alpha;
  };
  auto encode = [&](ObjId c, const std::vector<std::size_t>& alpha) {
    const std::size_t nh = h.over(c).size();
    std::size_t index = 0;
    for (std::size_t i = alpha.size(); i-- > 0;) index = index * nh + alpha[i];
    return index;
  };

  std::vector<std::vector<std::string>> names(g.num_objects());
  std::vector<std::vector<std::size_t>> values;
  for (std::size_t c = 0; c < g.num_objects(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) {
      const auto alpha = decode(ObjId(c), i);
      std::string name = g.object_name(ObjId(c)) + ":[";
      for (std::size_t x = 0; x < alpha.size(); ++x) name += (x ? "," : "") + std::to_string(alpha[x]);
      names[c].push_back(name + "]");
      values.push_back(alpha);
    }
  }

  std::vector<std::vector<std::size_t>> transport(g.num_arrows());
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const ObjId c = g.cod(ArrId(a));
    const ObjId d = g.dom(ArrId(a));
    const auto hg = transport_positions(h, ArrId(a));
    const auto kg = transport_positions(k, ArrId(a));
    std::vector<std::size_t> kg_inv(kg.size());
    for (std::size_t i = 0; i < kg.size(); ++i) kg_inv[kg[i]] = i;
    for (std::size_t i = 0; i < sizes[c.index()]; ++i) {
      const auto alpha = decode(c, i);
      std::vector<std::size_t> moved(k.over(d).size());
      for (std::size_t y = 0; y < moved.size(); ++y) moved[y] = hg[alpha[kg_inv[y]]];
      transport[a].push_back(encode(d, moved));
    }
  }
  Covering cov = covering_from_transport(h.base_ptr(), sizes, transport, names);
  return Exponential{std::move(cov), std::move(values)};
}

std::vector<std::size_t> group_action_on_exponential(const Covering& h, const Covering& k, ArrId g,
                                                     const std::vector<std::size_t>& alpha) {
  const auto& base = h.base();
  const ObjId c = base.cod(g);
  if (base.dom(g) != c) throw InputError("group_action_on_exponential: arrow is not a loop");
  if (alpha.size() != k.over(c).size()) throw InputError("group_action_on_exponential: α has the wrong size");
  const ArrId g_inv = base.inverse(g);
  std::vector<std::size_t> out;
  for (ObjId x : k.over(c)) {
    const ObjId x_ginv = k.total().dom(k.lift(g_inv, x));
    const std::size_t v = alpha[fiber_position(k, x_ginv)];
    if (v >= h.over(c).size()) throw InputError("group_action_on_exponential: α leaves the fiber");
    out.push_back(fiber_position(h, h.total().dom(h.lift(g, h.over(c)[v]))));
  }
  return out;
}

Covering covering_sum(const Covering& p, const Covering& q) {
  if (!same_groupoid(p.base_ptr(), q.base_ptr())) throw InputError("covering_sum: coverings have different bases");
  auto sum = share(disjoint_union(p.total(), q.total(), "0", "1"));
  GroupoidMorphism m{sum, p.base_ptr(), p.morphism().obj_map, p.morphism().arr_map};
  m.obj_map.insert(m.obj_map.end(), q.morphism().obj_map.begin(), q.morphism().obj_map.end());
  m.arr_map.insert(m.arr_map.end(), q.morphism().arr_map.begin(), q.morphism().arr_map.end());
  return make_covering(std::move(m), "sum of coverings");
}

Covering empty_covering(const GroupoidPtr& base) {
  return covering_from_transport(base, std::vector<std::size_t>(base->num_objects(), 0),
                                 std::vector<std::vector<std::size_t>>(base->num_arrows()));
}

Covering identity_covering(const GroupoidPtr& base) {
  return make_covering(identity_morphism(base), "identity covering");
}

AdjunctionReport adjunction_check(const Covering& r, const Covering& p, const Covering& q, std::size_t limit) {
  if (!same_groupoid(r.base_ptr(), p.base_ptr()) || !same_groupoid(p.base_ptr(), q.base_ptr()))
    throw InputError("adjunction_check: coverings have different bases");
  const FiberedProduct rp = fibered_product(r, p);
  const Exponential qp = exponential(q, p, limit);
  const auto left = covering_morphisms(rp.covering, q, limit);
  const auto right = covering_morphisms(r, qp.covering, limit);

  // pair_of[x][i]: the product object over (x, i-th object of P over p(x)).
  const std::size_t nr = r.total().num_objects();
  std::vector<std::vector<ObjId>> pair_of(nr);
  for (std::size_t x = 0; x < nr; ++x) pair_of[x].resize(p.over(r.project(ObjId(x))).size());
  for (std::size_t z = 0; z < rp.covering.total().num_objects(); ++z)
    pair_of[rp.to_left(ObjId(z)).index()][fiber_position(p, rp.to_right(ObjId(z)))] = ObjId(z);

  // Curried object map R -> Q^P of an object map R ×_G P -> Q.
  auto curry = [&](const std::function<ObjId(ObjId)>& phi) {
    std::vector<ObjId> out;
    for (std::size_t x = 0; x < nr; ++x) {
      std::vector<std::size_t> alpha;
      for (ObjId z : pair_of[x]) alpha.push_back(fiber_position(q, phi(z)));
      auto y = qp.find(r.project(ObjId(x)), alpha);
      if (!y) throw VerificationFailure("curried map leaves the exponential");
      out.push_back(*y);
    }
    return out;
  };

  AdjunctionReport report{left.size(), right.size(), false, true};
  std::vector<std::size_t> hit(right.size(), 0);
  bool injective = true;
  for (const auto& phi : left) {
    const auto objects = curry([&](ObjId z) { return phi(z); });
    auto it = std::find_if(right.begin(), right.end(), [&](const GroupoidMorphism& m) { return m.obj_map == objects; });
    if (it == right.end()) throw VerificationFailure("curried morphism is not a covering morphism into Q^P");
    if (hit[static_cast<std::size_t>(it - right.begin())]++) injective = false;
  }
  report.bijective = injective && std::find(hit.begin(), hit.end(), 0) == hit.end();

  for (const auto& k : covering_morphisms(r, r, limit)) {
    for (const auto& phi : left) {
      const auto base_curry = curry([&](ObjId z) { return phi(z); });
      const auto moved = curry([&](ObjId z) {
        const ObjId x = rp.to_left(z);
        return phi(pair_of[k(x).index()][fiber_position(p, rp.to_right(z))]);
      });
      for (std::size_t x = 0; x < nr; ++x)
        if (moved[x] != base_curry[k(ObjId(x)).index()]) report.natural = false;
    }
  }
  return report;
}

}  // namespace covgpd
