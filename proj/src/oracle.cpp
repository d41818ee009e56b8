#include "covgpd/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "covgpd/error.hpp"

namespace covgpd::oracle {

bool star_bijective(const GroupoidMorphism& p) {
  const auto& s = *p.source;
  const auto& t = *p.target;
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    std::vector<std::size_t> into_x;
    for (std::size_t a = 0; a < s.num_arrows(); ++a)
      if (s.cod(ArrId(a)) == ObjId(x)) into_x.push_back(p(ArrId(a)).index());
    std::vector<std::size_t> into_px;
    for (std::size_t b = 0; b < t.num_arrows(); ++b)
      if (t.cod(ArrId(b)) == p(ObjId(x))) into_px.push_back(b);
    std::sort(into_x.begin(), into_x.end());
    if (into_x != into_px) return false;
  }
  return true;
}

std::vector<Elem> loop_images(const GroupoidMorphism& p, ObjId x) {
  const auto& s = *p.source;
  const auto& t = *p.target;
  const ObjId px = p(x);
  std::vector<std::size_t> base_loops;
  for (std::size_t b = 0; b < t.num_arrows(); ++b)
    if (t.dom(ArrId(b)) == px && t.cod(ArrId(b)) == px) base_loops.push_back(b);
  std::vector<Elem> out;
  for (std::size_t a = 0; a < s.num_arrows(); ++a) {
    if (s.dom(ArrId(a)) != x || s.cod(ArrId(a)) != x) continue;
    const auto it = std::find(base_loops.begin(), base_loops.end(), p(ArrId(a)).index());
    out.push_back(static_cast<Elem>(it - base_loops.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t component_count(const FiniteGroupoid& g) {
  std::vector<std::size_t> parent(g.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t count = g.num_objects();
  for (std::size_t a = 0; a < g.num_arrows(); ++a) {
    const std::size_t u = root(g.dom(ArrId(a)).index());
    const std::size_t v = root(g.cod(ArrId(a)).index());
    if (u != v) {
      parent[u] = v;
      --count;
    }
  }
  return count;
}

std::vector<std::vector<Elem>> subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 20) throw BoundExceeded("subset oracle is limited to order 20");
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (!(mask >> g.identity() & 1U)) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a)
      for (Elem b = 0; b < n && closed; ++b)
        if ((mask >> a & 1U) && (mask >> b & 1U) && !(mask >> g.mul(a, b) & 1U)) closed = false;
    if (!closed) continue;
    std::vector<Elem> s;
    for (Elem a = 0; a < n; ++a)
      if (mask >> a & 1U) s.push_back(a);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<GroupoidMorphism> automorphisms_over(const Covering& p) {
  std::vector<GroupoidMorphism> out;
  for_each_morphism(p.total_ptr(), p.total_ptr(), [&](const GroupoidMorphism& h) {
    if (compose(p.morphism(), h).same_maps(p.morphism()) && is_isomorphism(h)) out.push_back(h);
    return true;
  });
  return out;
}

std::vector<GroupoidMorphism> lifts_by_search(const Covering& p, const GroupoidMorphism& f) {
  std::vector<GroupoidMorphism> out;
  for_each_morphism(f.source, p.total_ptr(), [&](const GroupoidMorphism& g) {
    if (compose(p.morphism(), g).same_maps(f)) out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace covgpd::oracle
