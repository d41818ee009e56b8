#include "covgpd/morphism.hpp"

#include <algorithm>
#include <map>

#include "covgpd/error.hpp"

namespace covgpd {

bool same_groupoid(const GroupoidPtr& a, const GroupoidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_structure(*b);
}

std::vector<std::string> functoriality_problems(const GroupoidMorphism& m) {
  std::vector<std::string> out;
  if (!m.source || !m.target) return {"morphism has no source or target"};
  const auto& s = *m.source;
  const auto& t = *m.target;
  if (m.obj_map.size() != s.num_objects()) out.push_back("object map has wrong size");
  if (m.arr_map.size() != s.num_arrows()) out.push_back("arrow map has wrong size");
  if (!out.empty()) return out;
  for (ObjId y : m.obj_map)
    if (!t.has_object(y)) return {"object map leaves the target"};
  for (ArrId b : m.arr_map)
    if (!t.has_arrow(b)) return {"arrow map leaves the target"};

  for (std::size_t i = 0; i < s.num_arrows(); ++i) {
    const ArrId a(i);
    if (t.dom(m(a)) != m(s.dom(a)) || t.cod(m(a)) != m(s.cod(a)))
      out.push_back("arrow " + s.arrow_name(a) + " does not preserve domain/codomain");
  }
  if (!out.empty()) return out;
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    auto e = s.try_identity(ObjId(x));
    auto te = t.try_identity(m(ObjId(x)));
    if (e && te && m(*e) != *te) out.push_back("identity at " + s.object_name(ObjId(x)) + " not preserved");
  }
  for (std::size_t h = 0; h < s.num_arrows(); ++h) {
    for (ArrId f : s.costar(s.cod(ArrId(h)))) {
      const ArrId fh(static_cast<std::size_t>(s.raw_compose(f.index(), h)));
      auto image = t.try_compose(m(f), m(ArrId(h)));
      if (!image || *image != m(fh)) {
        out.push_back("composite " + s.arrow_name(f) + "∘" + s.arrow_name(ArrId(h)) + " not preserved");
        if (out.size() > 8) return out;
      }
    }
  }
  return out;
}

bool is_functorial(const GroupoidMorphism& m) { return functoriality_problems(m).empty(); }

void require_functorial(const GroupoidMorphism& m, const std::string& what) {
  auto problems = functoriality_problems(m);
  if (!problems.empty()) throw InputError(what + " is not a groupoid morphism: " + problems.front());
}

GroupoidMorphism identity_morphism(const GroupoidPtr& g) {
  GroupoidMorphism m{g, g, {}, {}};
  for (std::size_t x = 0; x < g->num_objects(); ++x) m.obj_map.push_back(ObjId(x));
  for (std::size_t a = 0; a < g->num_arrows(); ++a) m.arr_map.push_back(ArrId(a));
  return m;
}

GroupoidMorphism compose(const GroupoidMorphism& second, const GroupoidMorphism& first) {
  if (!same_groupoid(first.target, second.source))
    throw InputError("cannot compose morphisms: middle groupoids differ");
  GroupoidMorphism m{first.source, second.target, {}, {}};
  for (ObjId x : first.obj_map) m.obj_map.push_back(second(x));
  for (ArrId a : first.arr_map) m.arr_map.push_back(second(a));
  return m;
}

bool is_isomorphism(const GroupoidMorphism& m) {
  if (m.obj_map.size() != m.target->num_objects() || m.arr_map.size() != m.target->num_arrows())
    return false;
  std::vector<bool> hit_o(m.target->num_objects(), false);
  std::vector<bool> hit_a(m.target->num_arrows(), false);
  for (ObjId y : m.obj_map) {
    if (hit_o[y.index()]) return false;
    hit_o[y.index()] = true;
  }
  for (ArrId b : m.arr_map) {
    if (hit_a[b.index()]) return false;
    hit_a[b.index()] = true;
  }
  return true;
}

GroupoidMorphism inverse_morphism(const GroupoidMorphism& m) {
  if (!is_isomorphism(m)) throw InputError("morphism is not bijective");
  GroupoidMorphism inv{m.target, m.source, std::vector<ObjId>(m.obj_map.size()),
                       std::vector<ArrId>(m.arr_map.size())};
  for (std::size_t x = 0; x < m.obj_map.size(); ++x) inv.obj_map[m.obj_map[x].index()] = ObjId(x);
  for (std::size_t a = 0; a < m.arr_map.size(); ++a) inv.arr_map[m.arr_map[a].index()] = ArrId(a);
  return inv;
}

GroupoidMorphism inclusion(const Subgroupoid& sub, const GroupoidPtr& sub_ptr, const GroupoidPtr& parent) {
  return GroupoidMorphism{sub_ptr, parent, sub.objects, sub.arrows};
}

std::pair<GroupoidMorphism, GroupoidMorphism> coproduct_injections(const GroupoidPtr& g,
                                                                   const GroupoidPtr& h,
                                                                   const GroupoidPtr& sum) {
  GroupoidMorphism left{g, sum, {}, {}};
  GroupoidMorphism right{h, sum, {}, {}};
  for (std::size_t x = 0; x < g->num_objects(); ++x) left.obj_map.push_back(ObjId(x));
  for (std::size_t a = 0; a < g->num_arrows(); ++a) left.arr_map.push_back(ArrId(a));
  for (std::size_t x = 0; x < h->num_objects(); ++x) right.obj_map.push_back(ObjId(x + g->num_objects()));
  for (std::size_t a = 0; a < h->num_arrows(); ++a) right.arr_map.push_back(ArrId(a + g->num_arrows()));
  return {std::move(left), std::move(right)};
}

GroupoidMorphism opposite_iso(const GroupoidPtr& g, const GroupoidPtr& op) {
  GroupoidMorphism m = identity_morphism(g);
  m.target = op;
  for (std::size_t a = 0; a < g->num_arrows(); ++a) m.arr_map[a] = g->inverse(ArrId(a));
  return m;
}

std::optional<GroupoidMorphism> factor_through(const GroupoidMorphism& q, const GroupoidMorphism& f) {
  if (!same_groupoid(q.source, f.source)) throw InputError("factor_through: sources differ");
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  GroupoidMorphism s{q.target, f.target, std::vector<ObjId>(q.target->num_objects()),
                     std::vector<ArrId>(q.target->num_arrows())};
  for (auto& x : s.obj_map) x.value = kUnset;
  for (auto& a : s.arr_map) a.value = kUnset;
  for (std::size_t x = 0; x < q.obj_map.size(); ++x) {
    auto& slot = s.obj_map[q.obj_map[x].index()];
    if (slot.value == kUnset) slot = f.obj_map[x];
    else if (slot != f.obj_map[x]) return std::nullopt;
  }
  for (std::size_t a = 0; a < q.arr_map.size(); ++a) {
    auto& slot = s.arr_map[q.arr_map[a].index()];
    if (slot.value == kUnset) slot = f.arr_map[a];
    else if (slot != f.arr_map[a]) return std::nullopt;
  }
  for (auto x : s.obj_map)
    if (x.value == kUnset) return std::nullopt;
  for (auto a : s.arr_map)
    if (a.value == kUnset) return std::nullopt;
  if (!is_functorial(s)) return std::nullopt;
  return s;
}

namespace {

struct ComponentPlan {
  ObjId root;
  std::vector<ObjId> others;          // non-root objects
  std::vector<ArrId> tree;            // tree[x]: root -> x (indexed by object id)
  VertexGroup loops;
  std::vector<ArrId> arrows;          // arrows of the component
  std::vector<Elem> normal_form;      // per arrow: tree[cod]⁻¹∘u∘tree[dom]
};

ComponentPlan plan_component(const FiniteGroupoid& s, const std::vector<ObjId>& block) {
  ComponentPlan p;
  p.root = block.front();
  p.tree.assign(s.num_objects(), ArrId());
  std::vector<bool> seen(s.num_objects(), false);
  seen[p.root.index()] = true;
  p.tree[p.root.index()] = s.identity(p.root);
  std::vector<ObjId> order{p.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ObjId y = order[i];
    for (ArrId a : s.costar(y)) {
      const ObjId z = s.cod(a);
      if (seen[z.index()]) continue;
      seen[z.index()] = true;
      p.tree[z.index()] = s.compose(a, p.tree[y.index()]);
      order.push_back(z);
      p.others.push_back(z);
    }
  }
  p.loops = vertex_group(s, p.root);
  for (ObjId x : block) {
    for (ArrId u : s.star(x)) {
      p.arrows.push_back(u);
      const ArrId back = s.inverse(p.tree[s.cod(u).index()]);
      p.normal_form.push_back(p.loops.element(s.compose(back, s.compose(u, p.tree[s.dom(u).index()]))));
    }
  }
  return p;
}

}  // namespace

void for_each_morphism(const GroupoidPtr& source, const GroupoidPtr& target,
                       const std::function<bool(const GroupoidMorphism&)>& visit) {
  const auto& s = *source;
  const auto& t = *target;
  const Components comps = components(s);
  std::vector<ComponentPlan> plans;
  for (const auto& block : comps.blocks) plans.push_back(plan_component(s, block));

  std::vector<VertexGroup> target_loops;
  for (std::size_t y = 0; y < t.num_objects(); ++y) target_loops.push_back(vertex_group(t, ObjId(y)));
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Elem>>> homs;

  GroupoidMorphism m{source, target, std::vector<ObjId>(s.num_objects()), std::vector<ArrId>(s.num_arrows())};
  std::vector<ArrId> tree_image(s.num_objects());
  bool keep_going = true;

  auto component = [&](auto&& self, std::size_t c) -> void {
    if (!keep_going) return;
    if (c == plans.size()) {
      keep_going = visit(m);
      return;
    }
    const ComponentPlan& p = plans[c];
    for (std::size_t yi = 0; yi < t.num_objects() && keep_going; ++yi) {
      const ObjId y(yi);
      const auto& w = target_loops[yi];
      auto key = std::make_pair(c, yi);
      auto it = homs.find(key);
      if (it == homs.end()) it = homs.emplace(key, homomorphisms(p.loops.group, w.group)).first;
      const auto outs = t.costar(y);
      for (const auto& phi : it->second) {
        if (!keep_going) return;
        tree_image[p.root.index()] = t.identity(y);
        m.obj_map[p.root.index()] = y;
        auto objects = [&](auto&& inner, std::size_t k) -> void {
          if (!keep_going) return;
          if (k == p.others.size()) {
            for (std::size_t i = 0; i < p.arrows.size(); ++i) {
              const ArrId u = p.arrows[i];
              const ArrId up = tree_image[s.cod(u).index()];
              const ArrId down = t.inverse(tree_image[s.dom(u).index()]);
              m.arr_map[u.index()] = t.compose(up, t.compose(w.arrow(phi[p.normal_form[i]]), down));
            }
            self(self, c + 1);
            return;
          }
          const ObjId x = p.others[k];
          for (ArrId b : outs) {
            tree_image[x.index()] = b;
            m.obj_map[x.index()] = t.cod(b);
            inner(inner, k + 1);
            if (!keep_going) return;
          }
        };
        objects(objects, 0);
      }
    }
  };
  component(component, 0);
}

std::vector<GroupoidMorphism> enumerate_morphisms(const GroupoidPtr& source, const GroupoidPtr& target,
                                                  std::size_t limit) {
  std::vector<GroupoidMorphism> out;
  for_each_morphism(source, target, [&](const GroupoidMorphism& m) {
    if (out.size() >= limit) throw BoundExceeded("more than " + std::to_string(limit) + " morphisms");
    out.push_back(m);
    return true;
  });
  return out;
}

QuotientGroupoid quotient_groupoid(const GroupoidPtr& gp, const std::vector<std::size_t>& object_class,
                                   const std::vector<std::size_t>& arrow_class) {
  const auto& g = *gp;
  const std::size_t no = object_class.empty() ? 0 : *std::max_element(object_class.begin(), object_class.end()) + 1;
  const std::size_t na = arrow_class.empty() ? 0 : *std::max_element(arrow_class.begin(), arrow_class.end()) + 1;
  std::vector<std::vector<ArrId>> members(na);
  for (std::size_t a = 0; a < g.num_arrows(); ++a) members[arrow_class[a]].push_back(ArrId(a));
  std::vector<std::string> obj_names(no);
  std::vector<bool> named(no, false);
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    if (!named[object_class[x]]) {
      obj_names[object_class[x]] = "o(" + g.object_name(ObjId(x)) + ")";
      named[object_class[x]] = true;
    }
  }
  std::vector<FiniteGroupoid::ArrowSpec> specs;
  for (std::size_t c = 0; c < na; ++c) {
    if (members[c].empty()) throw InputError("empty arrow class");
    const ArrId rep = members[c].front();
    const std::size_t d = object_class[g.dom(rep).index()];
    const std::size_t k = object_class[g.cod(rep).index()];
    for (ArrId a : members[c])
      if (object_class[g.dom(a).index()] != d || object_class[g.cod(a).index()] != k)
        throw VerificationFailure("arrow class does not respect object classes");
    specs.push_back({ObjId(d), ObjId(k), "o(" + g.arrow_name(rep) + ")"});
  }
  std::vector<std::int32_t> table(na * na, FiniteGroupoid::kUndefined);
  for (std::size_t f = 0; f < na; ++f) {
    for (std::size_t h = 0; h < na; ++h) {
      if (specs[h].cod != specs[f].dom) continue;
      std::int32_t result = FiniteGroupoid::kUndefined;
      for (ArrId a : members[f]) {
        for (ArrId b : members[h]) {
          if (g.cod(b) != g.dom(a)) continue;
          const auto c = static_cast<std::int32_t>(arrow_class[g.compose(a, b).index()]);
          if (result == FiniteGroupoid::kUndefined) result = c;
          else if (result != c) throw VerificationFailure("quotient composition depends on representatives");
        }
      }
      if (result == FiniteGroupoid::kUndefined)
        throw VerificationFailure("quotient classes have no composable representatives");
      table[f * na + h] = result;
    }
  }
  QuotientGroupoid q;
  q.quotient = share(FiniteGroupoid(std::move(obj_names), std::move(specs), std::move(table)));
  q.projection = GroupoidMorphism{gp, q.quotient, {}, {}};
  for (std::size_t x : object_class) q.projection.obj_map.push_back(ObjId(x));
  for (std::size_t a : arrow_class) q.projection.arr_map.push_back(ArrId(a));
  return q;
}

}  // namespace covgpd
