#include "covgpd/covering.hpp"

#include <algorithm>

#include "covgpd/error.hpp"

namespace covgpd {

ArrId Covering::lift(ArrId a, ObjId at) const {
  if (!base().has_arrow(a) || !total().has_object(at))
    throw InputError("lift: unknown arrow or object");
  if (base().cod(a) != project(at))
    throw InputError("lift: codomain of " + base().arrow_name(a) + " is not the image of " +
                     total().object_name(at));
  return lifts_[at.index()][base().star_position(a)];
}

Covering Covering::with_marked(ObjId x) const {
  total().require_object(x);
  Covering c = *this;
  c.marked_ = x;
  return c;
}

ObjId Covering::marked_or_first() const {
  if (marked_) return *marked_;
  if (total().empty()) throw InputError("empty covering has no base point");
  return ObjId(0);
}

CoverCheck is_covering(GroupoidMorphism f) {
  require_functorial(f, "candidate covering");
  const auto& s = *f.source;
  const auto& t = *f.target;
  CoverCheck check;
  Covering c;
  c.lifts_.assign(s.num_objects(), {});
  c.over_.assign(t.num_objects(), {});
  for (std::size_t xi = 0; xi < s.num_objects(); ++xi) {
    const ObjId x(xi);
    const ObjId px = f(x);
    c.over_[px.index()].push_back(x);
    const auto total_star = s.star(x);
    const auto base_star = t.star(px);
    std::vector<std::int64_t> hit(base_star.size(), -1);
    bool injective = true;
    for (ArrId a : total_star) {
      const std::size_t pos = t.star_position(f(a));
      if (hit[pos] != -1) injective = false;
      else hit[pos] = static_cast<std::int64_t>(a.index());
    }
    const bool surjective = std::none_of(hit.begin(), hit.end(), [](auto v) { return v == -1; });
    if (!injective || !surjective) {
      check.defects.push_back({x, total_star.size(), base_star.size(), injective, surjective});
      continue;
    }
    for (auto v : hit) c.lifts_[xi].push_back(ArrId(static_cast<std::size_t>(v)));
  }
  if (check.defects.empty()) {
    c.map_ = std::move(f);
    check.covering = std::move(c);
  }
  return check;
}

Covering make_covering(GroupoidMorphism f, const std::string& what) {
  auto check = is_covering(std::move(f));
  if (!check.covering) {
    const auto& d = check.defects.front();
    throw VerificationFailure(what + " fails the star condition at object " + std::to_string(d.object.value) +
                              " (" + std::to_string(d.total_star) + " vs " + std::to_string(d.base_star) + ")");
  }
  return std::move(*check.covering);
}

Covering covering_from_transport(const GroupoidPtr& base_ptr, const std::vector<std::size_t>& sizes,
                                 const std::vector<std::vector<std::size_t>>& transport,
                                 const std::vector<std::vector<std::string>>& element_names) {
  const auto& base = *base_ptr;
  if (sizes.size() != base.num_objects() || transport.size() != base.num_arrows())
    throw InputError("transport data does not match the base groupoid");

  std::vector<std::size_t> object_offset(base.num_objects() + 1, 0);
  for (std::size_t c = 0; c < base.num_objects(); ++c) object_offset[c + 1] = object_offset[c] + sizes[c];
  const std::size_t num_objects = object_offset.back();

  std::vector<std::string> names;
  std::vector<ObjId> projection_obj;
  std::vector<std::size_t> arrow_offset(num_objects + 1, 0);
  for (std::size_t c = 0; c < base.num_objects(); ++c) {
    for (std::size_t i = 0; i < sizes[c]; ++i) {
      const std::size_t x = object_offset[c] + i;
      if (!element_names.empty() && element_names[c].size() == sizes[c]) names.push_back(element_names[c][i]);
      else names.push_back(base.object_name(ObjId(c)) + "#" + std::to_string(i));
      projection_obj.push_back(ObjId(c));
      arrow_offset[x + 1] = arrow_offset[x] + base.star(ObjId(c)).size();
    }
  }
  for (std::size_t g = 0; g < base.num_arrows(); ++g) {
    const std::size_t c = base.cod(ArrId(g)).index();
    const std::size_t d = base.dom(ArrId(g)).index();
    if (transport[g].size() != sizes[c]) throw InputError("transport table has wrong length");
    for (std::size_t v : transport[g])
      if (v >= sizes[d]) throw InputError("transport value out of range");
  }

  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  std::vector<ArrId> projection_arr;
  for (std::size_t x = 0; x < num_objects; ++x) {
    const ObjId c = projection_obj[x];
    const std::size_t i = x - object_offset[c.index()];
    for (ArrId g : base.star(c)) {
      const ObjId d = base.dom(g);
      const std::size_t source = object_offset[d.index()] + transport[g.index()][i];
      arrows.push_back({ObjId(source), ObjId(x), base.arrow_name(g) + "@" + names[x]});
      projection_arr.push_back(g);
    }
  }
  auto total = share(make_groupoid(names, std::move(arrows), [&](ArrId f, ArrId h) {
    const std::size_t x = std::upper_bound(arrow_offset.begin(), arrow_offset.end(), f.index()) -
                          arrow_offset.begin() - 1;
    const ArrId fh = base.compose(projection_arr[f.index()], projection_arr[h.index()]);
    return ArrId(arrow_offset[x] + base.star_position(fh));
  }));
  require_valid(*total, "transport data");
  GroupoidMorphism p{total, base_ptr, std::move(projection_obj), std::move(projection_arr)};
  auto check = is_covering(std::move(p));
  if (!check.covering) throw InputError("transport data does not define a covering");
  return std::move(*check.covering);
}

Fiber fiber(const Covering& p, ObjId g) {
  p.base().require_object(g);
  const ArrId id = p.base().identity(g);
  const auto& objects = p.over(g);
  std::vector<ArrId> arrows;
  for (ObjId x : objects)
    for (ArrId a : p.total().star(x))
      if (p.project(a) == id) arrows.push_back(a);
  std::sort(arrows.begin(), arrows.end());
  auto sub = subgroupoid(p.total(), objects, arrows);
  return Fiber{g, share(std::move(sub.groupoid)), std::move(sub.objects), std::move(sub.arrows)};
}

std::vector<ObjId> transport_objects(const Covering& p, ArrId f) {
  std::vector<ObjId> out;
  for (ObjId x : p.over(p.base().cod(f))) out.push_back(p.total().dom(p.lift(f, x)));
  return out;
}

FiberTransport fiber_transport(const Covering& p, ArrId f) {
  const auto& base = p.base();
  const auto& total = p.total();
  FiberTransport t{fiber(p, base.cod(f)), fiber(p, base.dom(f)), {}};
  std::vector<std::size_t> local_obj(total.num_objects(), 0);
  std::vector<std::size_t> local_arr(total.num_arrows(), 0);
  for (std::size_t i = 0; i < t.to.objects.size(); ++i) local_obj[t.to.objects[i].index()] = i;
  for (std::size_t i = 0; i < t.to.arrows.size(); ++i) local_arr[t.to.arrows[i].index()] = i;

  t.map = GroupoidMorphism{t.from.groupoid, t.to.groupoid, {}, {}};
  for (ObjId x : t.from.objects) t.map.obj_map.push_back(ObjId(local_obj[total.dom(p.lift(f, x)).index()]));
  for (ArrId s : t.from.arrows) {
    // s: x -> x' over id; its image is f_{x'} ∘ s ∘ f_x⁻¹ where f_x is the
    // inverse of the lift of f into x.
    const ArrId into_src = p.lift(f, total.dom(s));
    const ArrId into_dst = p.lift(f, total.cod(s));
    const ArrId image = total.compose(total.inverse(into_dst), total.compose(s, into_src));
    t.map.arr_map.push_back(ArrId(local_arr[image.index()]));
  }
  return t;
}

std::size_t fiber_position(const Covering& p, ObjId x) {
  const auto& objects = p.over(p.project(x));
  return static_cast<std::size_t>(std::lower_bound(objects.begin(), objects.end(), x) - objects.begin());
}

ArrId lift_arrow(const Covering& p, ArrId a, ObjId at) { return p.lift(a, at); }

Subgroup pushforward_vertex(const Covering& p, ObjId x) {
  const auto loops = p.total().hom(x, x);
  const VertexGroup pi = vertex_group(p.base(), p.project(x));
  std::vector<Elem> image;
  for (ArrId a : loops) image.push_back(pi.element(p.project(a)));
  std::vector<Elem> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw VerificationFailure("p_* is not injective on the vertex group at " + p.total().object_name(x));
  return make_subgroup(pi.group, std::move(sorted));
}

bool lift_component(const Covering& p, const GroupoidMorphism& f, ObjId seed, ObjId at,
                    GroupoidMorphism& partial) {
  const auto& src = *f.source;
  const auto& total = p.total();
  std::vector<bool> assigned(src.num_objects(), false);
  assigned[seed.index()] = true;
  partial.obj_map[seed.index()] = at;
  std::vector<ObjId> frontier{seed};
  while (!frontier.empty()) {
    const ObjId x = frontier.back();
    frontier.pop_back();
    const ObjId image = partial.obj_map[x.index()];
    for (ArrId u : src.star(x)) {
      const ArrId lifted = p.lift(f(u), image);
      partial.arr_map[u.index()] = lifted;
      const ObjId y = src.dom(u);
      if (!assigned[y.index()]) {
        assigned[y.index()] = true;
        partial.obj_map[y.index()] = total.dom(lifted);
        frontier.push_back(y);
      } else if (partial.obj_map[y.index()] != total.dom(lifted)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<GroupoidMorphism> lift_morphism(const Covering& p, const GroupoidMorphism& f, ObjId seed,
                                              ObjId at) {
  if (!same_groupoid(f.target, p.base_ptr())) throw InputError("lift_morphism: f does not land in the base");
  if (!is_connected(*f.source)) throw InputError("lift_morphism: source groupoid is not connected");
  f.source->require_object(seed);
  p.total().require_object(at);
  if (f(seed) != p.project(at)) throw InputError("lift_morphism: seed images disagree");
  GroupoidMorphism lifted{f.source, p.total_ptr(), std::vector<ObjId>(f.source->num_objects()),
                          std::vector<ArrId>(f.source->num_arrows())};
  if (!lift_component(p, f, seed, at, lifted)) return std::nullopt;
  if (!is_functorial(lifted))
    throw VerificationFailure("consistent lift is not functorial");
  return lifted;
}

bool lifting_criterion(const Covering& p, const GroupoidMorphism& f, ObjId seed, ObjId at) {
  const VertexGroup base_pi = vertex_group(p.base(), f(seed));
  std::vector<Elem> image;
  for (ArrId a : f.source->hom(seed, seed)) image.push_back(base_pi.element(f(a)));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return is_contained(Subgroup{image}, pushforward_vertex(p, at));
}

std::size_t MonodromyAction::position(ObjId x) const {
  auto it = std::find(carrier.begin(), carrier.end(), x);
  if (it == carrier.end()) throw InputError("object is not in the fiber");
  return static_cast<std::size_t>(it - carrier.begin());
}

std::vector<std::size_t> MonodromyAction::orbit(std::size_t point) const {
  std::vector<std::size_t> out;
  for (Elem e = 0; e < group.group.order(); ++e) out.push_back(act(point, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Subgroup MonodromyAction::stabilizer(std::size_t point) const {
  Subgroup s;
  for (Elem e = 0; e < group.group.order(); ++e)
    if (act(point, e) == point) s.elements.push_back(e);
  return s;
}

bool MonodromyAction::is_transitive() const { return carrier.empty() || orbit(0).size() == carrier.size(); }

MonodromyAction monodromy(const Covering& p, ObjId g) {
  p.base().require_object(g);
  MonodromyAction m{g, vertex_group(p.base(), g), p.over(g), {}};
  if (m.carrier.empty()) throw InputError("monodromy: empty fiber over " + p.base().object_name(g));
  for (ObjId x : m.carrier) {
    std::vector<std::size_t> row;
    for (ArrId loop : m.group.loops) row.push_back(m.position(p.total().dom(p.lift(loop, x))));
    m.table.push_back(std::move(row));
  }
  return m;
}

std::size_t fold(const Covering& p) {
  if (!is_connected(p.base())) throw InputError("fold: base groupoid is not connected");
  const std::size_t n = p.over(ObjId(0)).size();
  if (n == 0) throw InputError("fold: empty covering");
  for (std::size_t g = 1; g < p.base().num_objects(); ++g)
    if (p.over(ObjId(g)).size() != n) throw VerificationFailure("fibers over a connected base differ in size");
  return n;
}

bool is_weak_equivalence(const GroupoidMorphism& f) {
  const Components s = components(*f.source);
  const Components t = components(*f.target);
  if (s.size() != t.size()) return false;
  std::vector<bool> hit(t.size(), false);
  for (const auto& block : s.blocks) {
    const std::size_t image = t.block_of[f(block.front()).index()];
    if (hit[image]) return false;
    hit[image] = true;
  }
  for (std::size_t x = 0; x < f.source->num_objects(); ++x) {
    const auto loops = f.source->hom(ObjId(x), ObjId(x));
    const auto target_loops = f.target->hom(f(ObjId(x)), f(ObjId(x)));
    if (loops.size() != target_loops.size()) return false;
    std::vector<ArrId> images;
    for (ArrId a : loops) images.push_back(f(a));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  return true;
}

std::vector<ObjId> component_of(const FiniteGroupoid& g, ObjId x) {
  const Components c = components(g);
  return c.blocks[c.block_of[g.require_object(x).index()]];
}

RestrictedCovering restrict_covering(const Covering& p, std::span<const ObjId> objects,
                                     std::optional<ObjId> marked) {
  const Components c = components(p.total());
  std::vector<bool> keep(p.total().num_objects(), false);
  for (ObjId x : objects) keep[p.total().require_object(x).index()] = true;
  for (const auto& block : c.blocks)
    for (ObjId x : block)
      if (keep[x.index()] != keep[block.front().index()])
        throw InputError("restriction is not a union of components");
  auto sub = full_subgroupoid(p.total(), objects);
  auto sub_ptr = share(std::move(sub.groupoid));
  GroupoidMorphism incl = inclusion(sub, sub_ptr, p.total_ptr());
  Covering q = make_covering(compose(p.morphism(), incl), "restricted covering");
  if (marked) {
    auto it = std::find(sub.objects.begin(), sub.objects.end(), *marked);
    if (it == sub.objects.end()) throw InputError("marked object outside the restriction");
    q = q.with_marked(ObjId(static_cast<std::size_t>(it - sub.objects.begin())));
  }
  return RestrictedCovering{std::move(q), std::move(incl)};
}

Covering compose_coverings(const Covering& second, const Covering& first) {
  return make_covering(compose(second.morphism(), first.morphism()), "composite covering");
}

}  // namespace covgpd
