#include "covgpd/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "covgpd/error.hpp"

namespace covgpd {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> object_names, std::vector<ArrowSpec> arrows,
                               std::vector<std::int32_t> compose_table)
    : object_names_(std::move(object_names)),
      arrows_(std::move(arrows)),
      compose_(std::move(compose_table)) {
  const std::size_t n = arrows_.size();
  const std::size_t m = object_names_.size();
  if (compose_.size() != n * n) throw InputError("composition table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (arrows_[i].dom.index() >= m || arrows_[i].cod.index() >= m)
      throw InputError("arrow " + std::to_string(i) + " has an endpoint out of range");
    if (arrows_[i].name.empty()) arrows_[i].name = "a" + std::to_string(i);
  }
  for (std::int32_t v : compose_)
    if (v < kUndefined || v >= static_cast<std::int32_t>(n))
      throw InputError("composition table entry out of range");

  stars_.assign(m, {});
  costars_.assign(m, {});
  star_pos_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = stars_[arrows_[i].cod.index()];
    star_pos_[i] = s.size();
    s.push_back(ArrId(i));
    costars_[arrows_[i].dom.index()].push_back(ArrId(i));
  }

  identity_.assign(m, kUndefined);
  for (std::size_t x = 0; x < m; ++x) {
    for (ArrId e : stars_[x]) {
      if (dom(e) != ObjId(x)) continue;
      bool neutral = true;
      for (ArrId h : stars_[x]) neutral = neutral && raw_compose(e.index(), h.index()) == static_cast<std::int32_t>(h.index());
      for (ArrId k : costars_[x]) neutral = neutral && raw_compose(k.index(), e.index()) == static_cast<std::int32_t>(k.index());
      if (neutral) {
        identity_[x] = static_cast<std::int32_t>(e.index());
        break;
      }
    }
  }
  inverse_.assign(n, kUndefined);
  for (std::size_t a = 0; a < n; ++a) {
    const std::int32_t id_cod = identity_[arrows_[a].cod.index()];
    const std::int32_t id_dom = identity_[arrows_[a].dom.index()];
    if (id_cod == kUndefined || id_dom == kUndefined) continue;
    for (ArrId h : stars_[arrows_[a].dom.index()]) {
      if (cod(h) != arrows_[a].dom || dom(h) != arrows_[a].cod) continue;
      if (raw_compose(a, h.index()) == id_cod && raw_compose(h.index(), a) == id_dom) {
        inverse_[a] = static_cast<std::int32_t>(h.index());
        break;
      }
    }
  }
}

std::optional<ArrId> FiniteGroupoid::try_identity(ObjId x) const {
  if (!has_object(x) || identity_[x.index()] == kUndefined) return std::nullopt;
  return ArrId(static_cast<std::size_t>(identity_[x.index()]));
}

ArrId FiniteGroupoid::identity(ObjId x) const {
  auto e = try_identity(x);
  if (!e) throw InputError("no identity arrow at object " + std::to_string(x.value));
  return *e;
}

std::optional<ArrId> FiniteGroupoid::try_inverse(ArrId a) const {
  if (!has_arrow(a) || inverse_[a.index()] == kUndefined) return std::nullopt;
  return ArrId(static_cast<std::size_t>(inverse_[a.index()]));
}

ArrId FiniteGroupoid::inverse(ArrId a) const {
  auto h = try_inverse(a);
  if (!h) throw InputError("arrow " + std::to_string(a.value) + " has no inverse");
  return *h;
}

std::optional<ArrId> FiniteGroupoid::try_compose(ArrId f, ArrId h) const {
  if (!has_arrow(f) || !has_arrow(h)) return std::nullopt;
  const std::int32_t v = raw_compose(f.index(), h.index());
  if (v == kUndefined) return std::nullopt;
  return ArrId(static_cast<std::size_t>(v));
}

ArrId FiniteGroupoid::compose(ArrId f, ArrId h) const {
  auto r = try_compose(f, h);
  if (!r) {
    throw InputError("composite " + std::to_string(f.value) + "∘" + std::to_string(h.value) +
                     " is undefined");
  }
  return *r;
}

std::vector<ArrId> FiniteGroupoid::hom(ObjId x, ObjId y) const {
  std::vector<ArrId> out;
  for (ArrId a : star(y))
    if (dom(a) == x) out.push_back(a);
  return out;
}

std::optional<ObjId> FiniteGroupoid::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < object_names_.size(); ++i)
    if (object_names_[i] == name) return ObjId(i);
  return std::nullopt;
}

std::optional<ArrId> FiniteGroupoid::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].name == name) return ArrId(i);
  return std::nullopt;
}

ObjId FiniteGroupoid::require_object(ObjId x) const {
  if (!has_object(x)) throw InputError("unknown object id " + std::to_string(x.value));
  return x;
}

bool FiniteGroupoid::same_structure(const FiniteGroupoid& other) const {
  if (num_objects() != other.num_objects() || num_arrows() != other.num_arrows()) return false;
  for (std::size_t i = 0; i < num_arrows(); ++i)
    if (arrows_[i].dom != other.arrows_[i].dom || arrows_[i].cod != other.arrows_[i].cod)
      return false;
  return compose_ == other.compose_;
}

std::string ValidationReport::summary(std::size_t max_items) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    if (i) os << "; ";
    os << violations[i].law << ": " << violations[i].detail;
  }
  if (violations.size() > max_items) os << "; ... (" << violations.size() << " total)";
  return os.str();
}

ValidationReport validate(const FiniteGroupoid& g) {
  ValidationReport r;
  const std::size_t n = g.num_arrows();
  auto u = [](std::size_t v) { return static_cast<std::uint32_t>(v); };
  auto name = [&](std::size_t a) { return g.arrow_name(ArrId(a)); };

  bool composition_ok = true;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      const bool composable = g.cod(ArrId(h)) == g.dom(ArrId(f));
      const std::int32_t v = g.raw_compose(f, h);
      if (composable && v == FiniteGroupoid::kUndefined) {
        r.violations.push_back({"composition-defined", {u(f), u(h)},
                                name(f) + "∘" + name(h) + " is composable but undefined"});
        composition_ok = false;
      } else if (!composable && v != FiniteGroupoid::kUndefined) {
        r.violations.push_back({"composition-defined", {u(f), u(h)},
                                name(f) + "∘" + name(h) + " is defined but not composable"});
        composition_ok = false;
      } else if (composable) {
        const ArrId fh(static_cast<std::size_t>(v));
        if (g.dom(fh) != g.dom(ArrId(h)) || g.cod(fh) != g.cod(ArrId(f))) {
          r.violations.push_back({"composite-endpoints", {u(f), u(h)},
                                  name(f) + "∘" + name(h) + " has wrong domain or codomain"});
          composition_ok = false;
        }
      }
    }
  }
  if (composition_ok) {
    for (std::size_t h = 0; h < n; ++h) {
      for (ArrId f : g.costar(g.cod(ArrId(h)))) {
        const ArrId fh(static_cast<std::size_t>(g.raw_compose(f.index(), h)));
        for (ArrId k : g.costar(g.cod(f))) {
          const auto left = g.raw_compose(g.raw_compose(k.index(), f.index()), h);
          const auto right = g.raw_compose(k.index(), fh.index());
          if (left != right) {
            r.violations.push_back({"associativity", {k.value, f.value, u(h)},
                                    "(" + name(k.index()) + "∘" + name(f.index()) + ")∘" + name(h) +
                                        " != " + name(k.index()) + "∘(" + name(f.index()) + "∘" +
                                        name(h) + ")"});
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    if (!g.try_identity(ObjId(x)))
      r.violations.push_back({"identity", {u(x)}, "no identity at object " + g.object_name(ObjId(x))});
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!g.try_inverse(ArrId(a)))
      r.violations.push_back({"invertibility", {u(a)}, "arrow " + name(a) + " has no inverse"});
  }
  return r;
}

void require_valid(const FiniteGroupoid& g, const std::string& what) {
  auto report = validate(g);
  if (!report.ok()) throw InputError(what + " is not a groupoid: " + report.summary());
}

Star star(const FiniteGroupoid& g, ObjId x) {
  g.require_object(x);
  auto s = g.star(x);
  return Star{x, std::vector<ArrId>(s.begin(), s.end())};
}

std::vector<std::vector<ArrId>> sieves(const FiniteGroupoid& g, ObjId x) {
  auto s = g.star(g.require_object(x));
  if (s.size() > 20) throw BoundExceeded("star too large for sieve enumeration");
  std::vector<std::vector<ArrId>> out;
  for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
    std::vector<bool> in(g.num_arrows(), false);
    std::vector<ArrId> members;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask & (1u << i)) {
        in[s[i].index()] = true;
        members.push_back(s[i]);
      }
    }
    bool closed = true;
    for (ArrId f : members)
      for (ArrId h : g.star(g.dom(f)))
        closed = closed && in[g.compose(f, h).index()];
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

Components components(const FiniteGroupoid& g) {
  Components c;
  c.block_of.assign(g.num_objects(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < g.num_objects(); ++x) {
    if (c.block_of[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t b = c.blocks.size();
    std::vector<ObjId> block;
    std::vector<ObjId> frontier{ObjId(x)};
    c.block_of[x] = b;
    while (!frontier.empty()) {
      ObjId y = frontier.back();
      frontier.pop_back();
      block.push_back(y);
      auto visit = [&](ObjId z) {
        if (c.block_of[z.index()] == static_cast<std::size_t>(-1)) {
          c.block_of[z.index()] = b;
          frontier.push_back(z);
        }
      };
      for (ArrId a : g.star(y)) visit(g.dom(a));
      for (ArrId a : g.costar(y)) visit(g.cod(a));
    }
    std::sort(block.begin(), block.end());
    c.blocks.push_back(std::move(block));
  }
  return c;
}

bool is_connected(const FiniteGroupoid& g) { return !g.empty() && components(g).size() == 1; }

Elem VertexGroup::element(ArrId a) const {
  if (a.index() >= element_of.size() || !element_of[a.index()])
    throw InputError("arrow is not a loop at the base object");
  return *element_of[a.index()];
}

VertexGroup vertex_group(const FiniteGroupoid& g, ObjId x) {
  g.require_object(x);
  VertexGroup v;
  v.at = x;
  v.loops = g.hom(x, x);
  v.element_of.assign(g.num_arrows(), std::nullopt);
  for (std::size_t i = 0; i < v.loops.size(); ++i) v.element_of[v.loops[i].index()] = static_cast<Elem>(i);
  const std::size_t k = v.loops.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(g.arrow_name(v.loops[i]));
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] = *v.element_of[g.compose(v.loops[i], v.loops[j]).index()];
  }
  v.group = FiniteGroup(k, std::move(table), std::move(names));
  return v;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h,
                              const std::string& left_tag, const std::string& right_tag) {
  const std::size_t gm = g.num_objects();
  const std::size_t gn = g.num_arrows();
  std::set<std::string> gnames(g.object_names().begin(), g.object_names().end());
  std::set<std::string> hnames(h.object_names().begin(), h.object_names().end());
  std::set<std::string> garrows;
  std::set<std::string> harrows;
  for (const auto& a : g.arrows()) garrows.insert(a.name);
  for (const auto& a : h.arrows()) harrows.insert(a.name);
  const bool obj_clash = std::any_of(hnames.begin(), hnames.end(), [&](auto& s) { return gnames.count(s); });
  const bool arr_clash = std::any_of(harrows.begin(), harrows.end(), [&](auto& s) { return garrows.count(s); });
  auto tag = [](bool clash, const std::string& t, const std::string& s) {
    return clash ? t + "." + s : s;
  };

  std::vector<std::string> objects;
  for (const auto& s : g.object_names()) objects.push_back(tag(obj_clash, left_tag, s));
  for (const auto& s : h.object_names()) objects.push_back(tag(obj_clash, right_tag, s));
  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  for (const auto& a : g.arrows()) arrows.push_back({a.dom, a.cod, tag(arr_clash, left_tag, a.name)});
  for (const auto& a : h.arrows())
    arrows.push_back({ObjId(a.dom.index() + gm), ObjId(a.cod.index() + gm), tag(arr_clash, right_tag, a.name)});

  const std::size_t n = arrows.size();
  std::vector<std::int32_t> table(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t f = 0; f < gn; ++f)
    for (std::size_t k = 0; k < gn; ++k) table[f * n + k] = g.raw_compose(f, k);
  for (std::size_t f = 0; f < h.num_arrows(); ++f) {
    for (std::size_t k = 0; k < h.num_arrows(); ++k) {
      const auto v = h.raw_compose(f, k);
      table[(f + gn) * n + (k + gn)] =
          v == FiniteGroupoid::kUndefined ? v : v + static_cast<std::int32_t>(gn);
    }
  }
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(table));
}

FiniteGroupoid opposite(const FiniteGroupoid& g) {
  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  for (const auto& a : g.arrows()) arrows.push_back({a.cod, a.dom, a.name});
  const std::size_t n = g.num_arrows();
  std::vector<std::int32_t> table(n * n);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h) table[f * n + h] = g.raw_compose(h, f);
  return FiniteGroupoid(g.object_names(), std::move(arrows), std::move(table));
}

Subgroupoid subgroupoid(const FiniteGroupoid& g, std::span<const ObjId> objects,
                        std::span<const ArrId> arrows) {
  Subgroupoid s;
  s.objects.assign(objects.begin(), objects.end());
  s.arrows.assign(arrows.begin(), arrows.end());
  std::vector<std::int32_t> obj_local(g.num_objects(), -1);
  std::vector<std::int32_t> arr_local(g.num_arrows(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    obj_local[s.objects[i].index()] = static_cast<std::int32_t>(i);
    names.push_back(g.object_name(s.objects[i]));
  }
  std::vector<FiniteGroupoid::ArrowSpec> specs;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    const ArrId a = s.arrows[i];
    arr_local[a.index()] = static_cast<std::int32_t>(i);
    const auto d = obj_local[g.dom(a).index()];
    const auto c = obj_local[g.cod(a).index()];
    if (d < 0 || c < 0) throw InputError("subgroupoid arrow leaves the object set");
    specs.push_back({ObjId(static_cast<std::size_t>(d)), ObjId(static_cast<std::size_t>(c)), g.arrow_name(a)});
  }
  const std::size_t n = s.arrows.size();
  std::vector<std::int32_t> table(n * n, FiniteGroupoid::kUndefined);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      const auto v = g.raw_compose(s.arrows[f].index(), s.arrows[h].index());
      if (v == FiniteGroupoid::kUndefined) continue;
      const auto local = arr_local[static_cast<std::size_t>(v)];
      if (local < 0) throw InputError("subgroupoid arrow set is not closed under composition");
      table[f * n + h] = local;
    }
  }
  s.groupoid = FiniteGroupoid(std::move(names), std::move(specs), std::move(table));
  return s;
}

Subgroupoid full_subgroupoid(const FiniteGroupoid& g, std::span<const ObjId> objects) {
  std::vector<bool> in(g.num_objects(), false);
  for (ObjId x : objects) in[g.require_object(x).index()] = true;
  std::vector<ArrId> arrows;
  for (std::size_t a = 0; a < g.num_arrows(); ++a)
    if (in[g.dom(ArrId(a)).index()] && in[g.cod(ArrId(a)).index()]) arrows.push_back(ArrId(a));
  return subgroupoid(g, objects, arrows);
}

FiniteGroupoid group_groupoid(const FiniteGroup& group, const std::string& object_name) {
  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  for (Elem e = 0; e < group.order(); ++e) arrows.push_back({ObjId(0), ObjId(0), group.name(e)});
  const std::size_t n = group.order();
  std::vector<std::int32_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::int32_t>(group.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
  return FiniteGroupoid({object_name}, std::move(arrows), std::move(table));
}

FiniteGroupoid codiscrete(std::vector<std::string> object_names) {
  const std::size_t m = object_names.size();
  // Arrow x -> y has id y * m + x, so stars are contiguous.
  std::vector<FiniteGroupoid::ArrowSpec> arrows;
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t x = 0; x < m; ++x)
      arrows.push_back({ObjId(x), ObjId(y),
                        x == y ? "1_" + object_names[x] : object_names[x] + "->" + object_names[y]});
  return make_groupoid(std::move(object_names), std::move(arrows), [m](ArrId f, ArrId h) {
    const std::size_t target = f.index() / m;
    const std::size_t source = h.index() % m;
    return ArrId(target * m + source);
  });
}

}  // namespace covgpd
